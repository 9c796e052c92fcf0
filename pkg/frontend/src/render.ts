/**
 * Figure composition: benchmark CSVs in, SVG documents out.  Nothing here
 * recomputes a quadrature value; the CSVs are the single source of truth.
 */

import { readFileSync } from "node:fs";
import { basename } from "node:path";

import { parseConverge, parseSweep, SweepRow } from "./csv.js";
import { PanelSpec, renderGrid } from "./svg.js";

export const BLUE = "#1f4fbf";
export const RED = "#c0392b";
const GRAY = "#777777";

const NONLINEAR_RULES = new Set(["exp-q1", "exp-q2", "gauss-like"]);
const LINEAR_RULES = new Set(["trapezoid", "simpson", "boole", "weddle"]);

export function ruleColor(ruleId: string): string {
  if (NONLINEAR_RULES.has(ruleId)) return BLUE;
  if (LINEAR_RULES.has(ruleId)) return RED;
  return GRAY;
}

function stem(path: string): string {
  return basename(path).replace(/\.csv$/i, "");
}

/** Error curves (left, blue vs red) and error ratios (right) per integrand. */
export function renderSweepGrid(csvPaths: string[]): string {
  const panels: PanelSpec[] = [];
  for (const path of csvPaths) {
    const rows: SweepRow[] = parseSweep(readFileSync(path, "utf8"), path);
    const hs = rows.map((r) => r.h);
    const name = stem(path);
    panels.push({
      title: `${name}: error vs h`,
      logX: true,
      logY: true,
      series: [
        { xs: hs, ys: rows.map((r) => r.e_nl), color: BLUE, label: "nonlinear" },
        { xs: hs, ys: rows.map((r) => r.e_lin), color: RED, label: "linear" },
      ],
    });
    panels.push({
      title: `${name}: error ratio`,
      logX: true,
      logY: true,
      series: [{ xs: hs, ys: rows.map((r) => r.ratio), color: BLUE, label: "ratio" }],
      hlines: [1],
    });
  }
  return renderGrid(panels, 2);
}

/** Estimate-vs-N panels with the exact value as a dotted horizontal line. */
export function renderConvergeGrid(csvPaths: string[]): string {
  const panels: PanelSpec[] = csvPaths.map((path) => {
    const table = parseConverge(readFileSync(path, "utf8"), path);
    const ns = table.rows.map((r) => r.n);
    return {
      title: stem(path),
      logX: true,
      logY: false, // per-panel linear autoscale keeps scale differences visible
      series: table.ruleIds.map((rid, i) => ({
        xs: ns,
        ys: table.rows.map((r) => r.estimates[i]),
        color: ruleColor(rid),
        label: rid,
      })),
      hlines: [table.rows[0].exact],
    };
  });
  return renderGrid(panels, 2);
}
