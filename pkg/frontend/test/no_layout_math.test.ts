// The backend is the single source of truth for positions, classes and
// strengths. Guard against layout or statistics math creeping into the
// client by scanning the shipped sources for the telltale operations.

import { readFileSync, readdirSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

const SRC = path.join(path.dirname(fileURLToPath(import.meta.url)), "..", "src");

const FORBIDDEN = [
  "Math.atan",
  "Math.log",
  "Math.exp",
  "Math.pow",
  "Math.sqrt",
  "forceSimulation",
  "forceLink",
];

describe("client sources", () => {
  it("contain no layout or frequency math", () => {
    const files = readdirSync(SRC).filter((f) => f.endsWith(".ts"));
    expect(files.length).toBeGreaterThan(0);
    for (const file of files) {
      const text = readFileSync(path.join(SRC, file), "utf-8");
      for (const token of FORBIDDEN) {
        expect(text, `${file} must not use ${token}`).not.toContain(token);
      }
    }
  });
});
