/**
 * Minimal SVG panel plotting: log or linear axes, polylines, dotted
 * reference lines, per-panel autoscaling, and an m-by-n grid composer.
 */

export interface Series {
  xs: number[];
  ys: number[];
  color: string;
  dashed?: boolean;
  label?: string;
}

export interface PanelSpec {
  title: string;
  series: Series[];
  /** dotted horizontal reference lines, drawn in data coordinates */
  hlines?: number[];
  logX?: boolean;
  logY?: boolean;
}

export const PANEL_WIDTH = 360;
export const PANEL_HEIGHT = 240;
const MARGIN = { left: 56, right: 12, top: 26, bottom: 34 };

interface Scale {
  toPixel(v: number): number;
}

function makeScale(lo: number, hi: number, p0: number, p1: number, log: boolean): Scale {
  if (log) {
    const llo = Math.log10(lo);
    const lhi = Math.log10(hi);
    const span = lhi - llo || 1;
    return { toPixel: (v) => p0 + ((Math.log10(v) - llo) / span) * (p1 - p0) };
  }
  const span = hi - lo || 1;
  return { toPixel: (v) => p0 + ((v - lo) / span) * (p1 - p0) };
}

function finiteValues(panel: PanelSpec, axis: "x" | "y"): number[] {
  const out: number[] = [];
  const log = axis === "x" ? panel.logX : panel.logY;
  for (const s of panel.series) {
    for (const v of axis === "x" ? s.xs : s.ys) {
      if (Number.isFinite(v) && (!log || v > 0)) out.push(v);
    }
  }
  if (axis === "y" && panel.hlines) {
    for (const v of panel.hlines) {
      if (Number.isFinite(v) && (!log || v > 0)) out.push(v);
    }
  }
  return out;
}

function bounds(values: number[], log: boolean): [number, number] {
  if (values.length === 0) return log ? [1e-1, 1e1] : [0, 1];
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (log) {
    if (lo === hi) return [lo / 10, hi * 10];
    return [lo / 1.3, hi * 1.3];
  }
  if (lo === hi) return [lo - 1, hi + 1];
  const pad = 0.06 * (hi - lo);
  return [lo - pad, hi + pad];
}

function fmtTick(v: number, log: boolean): string {
  if (log) {
    const e = Math.round(Math.log10(v));
    return `1e${e}`;
  }
  return v.toPrecision(3);
}

function ticks(lo: number, hi: number, log: boolean): number[] {
  if (log) {
    const e0 = Math.ceil(Math.log10(lo));
    const e1 = Math.floor(Math.log10(hi));
    const step = Math.max(1, Math.ceil((e1 - e0) / 5));
    const out: number[] = [];
    for (let e = e0; e <= e1; e += step) out.push(10 ** e);
    return out;
  }
  const out: number[] = [];
  for (let i = 0; i <= 4; i++) out.push(lo + ((hi - lo) * i) / 4);
  return out;
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Render one panel as a translated <g> element. */
export function renderPanel(panel: PanelSpec, ox: number, oy: number): string {
  const x0 = MARGIN.left;
  const x1 = PANEL_WIDTH - MARGIN.right;
  const y0 = PANEL_HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  const [xlo, xhi] = bounds(finiteValues(panel, "x"), !!panel.logX);
  const [ylo, yhi] = bounds(finiteValues(panel, "y"), !!panel.logY);
  const sx = makeScale(xlo, xhi, x0, x1, !!panel.logX);
  const sy = makeScale(ylo, yhi, y0, y1, !!panel.logY);

  const parts: string[] = [];
  parts.push(`<g class="panel" transform="translate(${ox},${oy})">`);
  parts.push(
    `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" ` +
      `fill="none" stroke="#444" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${y1 - 8}" text-anchor="middle" ` +
      `font-size="12" font-family="sans-serif">${esc(panel.title)}</text>`,
  );
  for (const t of ticks(xlo, xhi, !!panel.logX)) {
    const px = sx.toPixel(t);
    parts.push(`<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 4}" stroke="#444"/>`);
    parts.push(
      `<text x="${px}" y="${y0 + 16}" text-anchor="middle" font-size="9" ` +
        `font-family="sans-serif">${fmtTick(t, !!panel.logX)}</text>`,
    );
  }
  for (const t of ticks(ylo, yhi, !!panel.logY)) {
    const py = sy.toPixel(t);
    parts.push(`<line x1="${x0 - 4}" y1="${py}" x2="${x0}" y2="${py}" stroke="#444"/>`);
    parts.push(
      `<text x="${x0 - 6}" y="${py + 3}" text-anchor="end" font-size="9" ` +
        `font-family="sans-serif">${fmtTick(t, !!panel.logY)}</text>`,
    );
  }
  for (const ref of panel.hlines ?? []) {
    if (!Number.isFinite(ref) || (panel.logY && ref <= 0)) continue;
    const py = sy.toPixel(ref);
    parts.push(
      `<line class="refline" x1="${x0}" y1="${py}" x2="${x1}" y2="${py}" ` +
        `stroke="#222" stroke-width="1" stroke-dasharray="2,3"/>`,
    );
  }
  for (const s of panel.series) {
    const pts: string[] = [];
    for (let i = 0; i < s.xs.length; i++) {
      const vx = s.xs[i];
      const vy = s.ys[i];
      const okX = Number.isFinite(vx) && (!panel.logX || vx > 0);
      const okY = Number.isFinite(vy) && (!panel.logY || vy > 0);
      if (okX && okY) {
        pts.push(`${sx.toPixel(vx).toFixed(2)},${sy.toPixel(vy).toFixed(2)}`);
      }
    }
    if (pts.length === 0) continue;
    const dash = s.dashed ? ` stroke-dasharray="4,3"` : "";
    parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${s.color}" ` +
        `stroke-width="1.5"${dash}${s.label ? ` data-label="${esc(s.label)}"` : ""}/>`,
    );
  }
  parts.push("</g>");
  return parts.join("\n");
}

/** Compose panels into a grid document, row-major. */
export function renderGrid(panels: PanelSpec[], columns: number): string {
  const rows = Math.ceil(panels.length / columns);
  const width = columns * PANEL_WIDTH;
  const height = rows * PANEL_HEIGHT;
  const body = panels
    .map((panel, i) =>
      renderPanel(panel, (i % columns) * PANEL_WIDTH, Math.floor(i / columns) * PANEL_HEIGHT),
    )
    .join("\n");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">\n<rect width="${width}" height="${height}" ` +
    `fill="white"/>\n${body}\n</svg>\n`
  );
}
