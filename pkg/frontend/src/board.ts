/* Board panel rendering: status banner, position readout, the game-1
 * take picker, and the move history.  All render functions are pure in
 * the session payload. */

import type { G1Pos, G2Pos, HistoryEntry, MoveG1, MoveG2, Session } from "./api.js";
import { legalTakesG1, removalBound, totalWeight } from "./rules.js";

export function isG1(session: Session): boolean {
  return session.game === "g1";
}

export function describePosition(session: Session): string {
  if (session.game === "g1") {
    const pos = session.state as G1Pos;
    return `${pos.u} stones, turn ${pos.k}`;
  }
  const pos = session.state as G2Pos;
  return `${pos.x} heavy + ${pos.y} light (weight ${totalWeight(pos)}, removal cap ${removalBound(pos)})`;
}

export function describeMove(game: Session["game"], move: MoveG1 | MoveG2): string {
  if (game === "g1") {
    return `takes ${(move as MoveG1).take}`;
  }
  const m = move as MoveG2;
  return `removes (${m.takeHeavy} heavy, ${m.takeLight} light)`;
}

function describeEntryPosition(game: Session["game"], pos: G1Pos | G2Pos): string {
  if (game === "g1") {
    const p = pos as G1Pos;
    return `${p.u} @ turn ${p.k}`;
  }
  const p = pos as G2Pos;
  return `(${p.x}, ${p.y})`;
}

export function statusLine(session: Session): string {
  switch (session.status) {
    case "human-won":
      return "Game over: you win. The engine had no move left.";
    case "engine-won":
      return "Game over: the engine wins. You have no move left.";
    default:
      return session.toMove === "human"
        ? "Your move."
        : "Engine is thinking...";
  }
}

export function renderStatus(session: Session): HTMLElement {
  const el = document.createElement("div");
  el.className = `status ${session.status}`;
  el.textContent = statusLine(session);
  return el;
}

export function renderPosition(session: Session): HTMLElement {
  const el = document.createElement("div");
  el.className = "position";
  el.textContent = describePosition(session);
  if (session.game === "g1" && session.upcomingBounds) {
    const pos = session.state as G1Pos;
    const bounds = document.createElement("div");
    bounds.className = "bounds";
    bounds.textContent = session.upcomingBounds
      .map((v, i) => `f(${pos.k + i}) = ${v}`)
      .join(", ");
    el.appendChild(bounds);
  }
  return el;
}

/* Game 1 move entry: one button per legal take. */
export function renderTakePicker(
  session: Session,
  onTake: (take: number) => void,
): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "take-picker";
  const pos = session.state as G1Pos;
  const fk = session.upcomingBounds ? session.upcomingBounds[0] : 0;
  const takes = legalTakesG1(pos, fk);
  const label = document.createElement("span");
  label.textContent = takes > 0 ? "take:" : "no legal take";
  wrap.appendChild(label);
  const active = session.status === "in-progress" && session.toMove === "human";
  for (let take = 1; take <= takes; take++) {
    const btn = document.createElement("button");
    btn.textContent = String(take);
    btn.disabled = !active;
    btn.addEventListener("click", () => onTake(take));
    wrap.appendChild(btn);
  }
  return wrap;
}

export function renderHistory(session: Session): HTMLElement {
  const wrap = document.createElement("ol");
  wrap.className = "history";
  session.history.forEach((entry: HistoryEntry) => {
    const li = document.createElement("li");
    const actor = entry.actor === "human" ? "you" : "engine";
    li.textContent =
      `${actor} ${describeMove(session.game, entry.move)} -> ` +
      describeEntryPosition(session.game, entry.position);
    li.className = entry.actor;
    wrap.appendChild(li);
  });
  return wrap;
}
