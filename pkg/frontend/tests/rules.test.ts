/* The client-side legality mirror must agree with the server verdict
 * on every entry of the scripted corpus (tools/make_fixtures.py records
 * the server's accept/reject for each move). */

import { describe, expect, it } from "vitest";
import corpus from "./fixtures/moves_corpus.json";
import {
  checkMoveG1,
  checkMoveG2,
  hasMovesG2,
  legalTakesG1,
  removalBound,
  targetMoveG2,
  totalWeight,
} from "../src/rules.js";
import type { G1Pos, G2Pos, MoveG1, MoveG2 } from "../src/api.js";

type CorpusEntry = {
  game: "g1" | "g2";
  f?: string;
  fk?: number;
  position: G1Pos | G2Pos;
  move: MoveG1 | MoveG2;
  legal: boolean;
  constraint: string | null;
};

const entries = corpus as CorpusEntry[];

describe("scripted move corpus", () => {
  it("has the full 200 moves with both verdicts present", () => {
    expect(entries).toHaveLength(200);
    expect(entries.some((e) => e.legal)).toBe(true);
    expect(entries.some((e) => !e.legal)).toBe(true);
    expect(entries.some((e) => e.game === "g1")).toBe(true);
    expect(entries.some((e) => e.game === "g2")).toBe(true);
  });

  it("client legality agrees with the server on every entry", () => {
    for (const entry of entries) {
      const reason =
        entry.game === "g1"
          ? checkMoveG1(entry.position as G1Pos, entry.fk!, entry.move as MoveG1)
          : checkMoveG2(entry.position as G2Pos, entry.move as MoveG2);
      const agree = (reason === null) === entry.legal;
      expect(
        agree,
        `${entry.game} ${JSON.stringify(entry.position)} ` +
          `${JSON.stringify(entry.move)}: server said ` +
          `${entry.legal ? "legal" : `illegal (${entry.constraint})`}, ` +
          `client said ${reason ?? "legal"}`,
      ).toBe(true);
    }
  });

  it("every server rejection comes with a violated constraint", () => {
    for (const entry of entries) {
      if (!entry.legal) {
        expect(entry.constraint, JSON.stringify(entry)).toBeTruthy();
      }
    }
  });
});

describe("weight arithmetic", () => {
  it("weight and cap", () => {
    expect(totalWeight({ x: 9, y: 5 })).toBe(23);
    expect(removalBound({ x: 9, y: 5 })).toBe(11);
    expect(removalBound({ x: 1, y: 0 })).toBe(1);
  });

  it("stuck positions", () => {
    expect(hasMovesG2({ x: 0, y: 0 })).toBe(false);
    expect(hasMovesG2({ x: 1, y: 0 })).toBe(false);
    expect(hasMovesG2({ x: 0, y: 1 })).toBe(false);
    expect(hasMovesG2({ x: 2, y: 0 })).toBe(true);
    expect(hasMovesG2({ x: 0, y: 2 })).toBe(true);
    expect(hasMovesG2({ x: 1, y: 1 })).toBe(true);
  });
});

describe("target-cell derivation", () => {
  const from: G2Pos = { x: 2, y: 2 };

  it("the four reachable targets from (2,2)", () => {
    expect(targetMoveG2(from, { x: 2, y: 1 })).toEqual({ takeHeavy: 0, takeLight: 1 });
    expect(targetMoveG2(from, { x: 2, y: 0 })).toEqual({ takeHeavy: 0, takeLight: 2 });
    expect(targetMoveG2(from, { x: 1, y: 2 })).toEqual({ takeHeavy: 1, takeLight: 0 });
    expect(targetMoveG2(from, { x: 1, y: 1 })).toEqual({ takeHeavy: 1, takeLight: 1 });
  });

  it("cells outside the removal window or dominance are not targets", () => {
    // dropping both heavies weighs 4, over the cap of 3
    expect(targetMoveG2(from, { x: 0, y: 2 })).toBeNull();
    expect(targetMoveG2(from, { x: 0, y: 1 })).toBeNull();
    expect(targetMoveG2(from, { x: 0, y: 0 })).toBeNull();
    expect(targetMoveG2(from, { x: 1, y: 0 })).toBeNull();
    // standing still is not a move
    expect(targetMoveG2(from, { x: 2, y: 2 })).toBeNull();
    // gaining stones is not a move
    expect(targetMoveG2(from, { x: 3, y: 0 })).toBeNull();
    expect(targetMoveG2(from, { x: 1, y: 3 })).toBeNull();
  });

  it("take picker range", () => {
    expect(legalTakesG1({ u: 5, k: 3 }, 7)).toBe(5);
    expect(legalTakesG1({ u: 20, k: 3 }, 7)).toBe(7);
    expect(legalTakesG1({ u: 0, k: 3 }, 7)).toBe(0);
  });
});
