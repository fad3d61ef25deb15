/* Client-side legality, mirroring the server's move validation so the
 * board can gray out impossible choices before any request is made.
 * The server stays authoritative; these functions exist for
 * affordances, and the test suite pins them against a corpus of
 * server-validated moves. */

import type { G1Pos, G2Pos, MoveG1, MoveG2 } from "./api.js";

export function totalWeight(pos: G2Pos): number {
  return 2 * pos.x + pos.y;
}

/* Removal weight cap: half the remaining weight, rounded down. */
export function removalBound(pos: G2Pos): number {
  return Math.floor(totalWeight(pos) / 2);
}

/* A position is stuck when no single stone fits under the cap. */
export function hasMovesG2(pos: G2Pos): boolean {
  return totalWeight(pos) >= 2 && (pos.y >= 1 || pos.x >= 2);
}

/* null = legal; otherwise the violated constraint, phrased like the
 * server's 422 bodies. */
export function checkMoveG2(pos: G2Pos, move: MoveG2): string | null {
  if (
    !Number.isInteger(move.takeHeavy) ||
    !Number.isInteger(move.takeLight) ||
    move.takeHeavy < 0 ||
    move.takeLight < 0
  ) {
    return "removal counts must be non-negative integers";
  }
  const weight = 2 * move.takeHeavy + move.takeLight;
  if (weight < 1) {
    return "removal weight >= 1";
  }
  if (move.takeHeavy > pos.x) {
    return `take_heavy <= heavy (${pos.x})`;
  }
  if (move.takeLight > pos.y) {
    return `take_light <= light (${pos.y})`;
  }
  const bound = removalBound(pos);
  if (weight > bound) {
    return `removal weight <= floor(w/2) (${bound})`;
  }
  return null;
}

/* Dominated cell within the weight window; the move is the
 * coordinate difference. */
export function targetMoveG2(pos: G2Pos, target: G2Pos): MoveG2 | null {
  if (target.x > pos.x || target.y > pos.y) {
    return null;
  }
  const move = { takeHeavy: pos.x - target.x, takeLight: pos.y - target.y };
  return checkMoveG2(pos, move) === null ? move : null;
}

export function legalTakesG1(pos: G1Pos, fk: number): number {
  return Math.max(0, Math.min(pos.u, fk));
}

export function checkMoveG1(pos: G1Pos, fk: number, move: MoveG1): string | null {
  if (!Number.isInteger(move.take) || move.take < 1) {
    return "take >= 1";
  }
  if (move.take > fk) {
    return `take <= f(turn) (${fk})`;
  }
  if (move.take > pos.u) {
    return `take <= stones (${pos.u})`;
  }
  return null;
}
