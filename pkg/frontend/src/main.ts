#!/usr/bin/env node
/**
 * figplots: render benchmark figure grids from nlquad CSV output.
 *
 *   figplots --sweep-dir DIR [--converge-dir DIR] --out DIR
 *
 * Writes sweep.svg (error curves + ratios, 2 panels per integrand) and, when
 * a convergence directory is given, converge.svg.  Schema problems exit
 * nonzero and name the offending column.
 */

import { mkdirSync, readdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { SchemaError } from "./csv.js";
import { renderConvergeGrid, renderSweepGrid } from "./render.js";

interface Args {
  sweepDir?: string;
  convergeDir?: string;
  out?: string;
}

function parseArgs(argv: string[]): Args {
  const args: Args = {};
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const value = argv[i + 1];
    switch (flag) {
      case "--sweep-dir":
        args.sweepDir = value;
        i++;
        break;
      case "--converge-dir":
        args.convergeDir = value;
        i++;
        break;
      case "--out":
        args.out = value;
        i++;
        break;
      default:
        throw new Error(`unknown argument ${flag}`);
    }
    if (value === undefined) throw new Error(`missing value for ${flag}`);
  }
  if (!args.out) throw new Error("--out is required");
  if (!args.sweepDir && !args.convergeDir) {
    throw new Error("need at least one of --sweep-dir / --converge-dir");
  }
  return args;
}

function csvFiles(dir: string): string[] {
  const names = readdirSync(dir)
    .filter((f) => f.endsWith(".csv"))
    .sort();
  if (names.length === 0) throw new Error(`no CSV files in ${dir}`);
  return names.map((f) => join(dir, f));
}

export function run(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`usage error: ${(err as Error).message}`);
    return 2;
  }
  try {
    mkdirSync(args.out!, { recursive: true });
    if (args.sweepDir) {
      writeFileSync(join(args.out!, "sweep.svg"), renderSweepGrid(csvFiles(args.sweepDir)));
    }
    if (args.convergeDir) {
      writeFileSync(
        join(args.out!, "converge.svg"),
        renderConvergeGrid(csvFiles(args.convergeDir)),
      );
    }
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
    } else {
      console.error(`error: ${(err as Error).message}`);
    }
    return 1;
  }
  return 0;
}

import { fileURLToPath } from "node:url";

if (process.argv[1] && fileURLToPath(import.meta.url) === process.argv[1]) {
  process.exit(run(process.argv.slice(2)));
}
