/**
 * CSV readers for the benchmark outputs.
 *
 * Hand-rolled on purpose: the files are plain comma-separated numbers with a
 * fixed header, and schema violations must be reported by column name.
 */

export class SchemaError extends Error {
  constructor(readonly column: string, readonly file: string) {
    super(`${file}: schema mismatch in column '${column}'`);
    this.name = "SchemaError";
  }
}

export interface SweepRow {
  h: number;
  est_nl: number;
  est_lin: number;
  exact: number;
  e_nl: number;
  e_lin: number;
  ratio: number;
}

export const SWEEP_COLUMNS = [
  "h", "est_nl", "est_lin", "exact", "e_nl", "e_lin", "ratio",
] as const;

function parseCell(cell: string): number {
  if (cell === "inf") return Infinity;
  if (cell === "-inf") return -Infinity;
  const v = Number(cell);
  if (cell.trim() === "" || Number.isNaN(v)) return NaN;
  return v;
}

function splitLines(text: string): string[] {
  return text.split("\n").filter((line) => line.trim() !== "");
}

export function parseSweep(text: string, file: string): SweepRow[] {
  const lines = splitLines(text);
  if (lines.length === 0) throw new SchemaError(SWEEP_COLUMNS[0], file);
  const header = lines[0].split(",").map((c) => c.trim());
  for (const col of SWEEP_COLUMNS) {
    if (!header.includes(col)) throw new SchemaError(col, file);
  }
  const index = SWEEP_COLUMNS.map((col) => header.indexOf(col));
  const rows: SweepRow[] = [];
  for (const line of lines.slice(1)) {
    const cells = line.split(",");
    const record = {} as Record<(typeof SWEEP_COLUMNS)[number], number>;
    SWEEP_COLUMNS.forEach((col, i) => {
      const cell = cells[index[i]];
      if (cell === undefined) throw new SchemaError(col, file);
      const v = parseCell(cell);
      if (Number.isNaN(v)) throw new SchemaError(col, file);
      record[col] = v;
    });
    rows.push(record);
  }
  if (rows.length === 0) throw new SchemaError("h", file);
  return rows;
}

export interface ConvergeTable {
  ruleIds: string[];
  rows: { n: number; estimates: number[]; exact: number }[];
}

export function parseConverge(text: string, file: string): ConvergeTable {
  const lines = splitLines(text);
  if (lines.length === 0) throw new SchemaError("N", file);
  const header = lines[0].split(",").map((c) => c.trim());
  if (header[0] !== "N") throw new SchemaError("N", file);
  if (header[header.length - 1] !== "exact") throw new SchemaError("exact", file);
  const ruleIds = header.slice(1, -1).map((name) => {
    if (!name.startsWith("estimate_")) throw new SchemaError(name, file);
    return name.slice("estimate_".length);
  });
  if (ruleIds.length === 0) throw new SchemaError("estimate_*", file);
  const rows = lines.slice(1).map((line) => {
    const cells = line.split(",");
    if (cells.length !== header.length) throw new SchemaError(header[cells.length] ?? "N", file);
    const n = parseCell(cells[0]);
    const estimates = cells.slice(1, -1).map(parseCell);
    const exact = parseCell(cells[cells.length - 1]);
    if (Number.isNaN(n)) throw new SchemaError("N", file);
    estimates.forEach((v, i) => {
      if (Number.isNaN(v)) throw new SchemaError(`estimate_${ruleIds[i]}`, file);
    });
    if (Number.isNaN(exact)) throw new SchemaError("exact", file);
    return { n, estimates, exact };
  });
  if (rows.length === 0) throw new SchemaError("N", file);
  return { ruleIds, rows };
}
