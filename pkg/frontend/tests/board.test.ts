/* Board panel rendering: status wording, take picker sizing, history
 * replay, and the render-latency budget for an engine reply at the
 * largest supported interactive weight. */

import { describe, expect, it } from "vitest";
import rawGrid from "./fixtures/grid_127.json";
import { validateGrid } from "../src/api.js";
import type { HistoryEntry, Session } from "../src/api.js";
import {
  describeMove,
  describePosition,
  renderHistory,
  renderPosition,
  renderStatus,
  renderTakePicker,
  statusLine,
} from "../src/board.js";
import { renderGrid, updateGridAffordances } from "../src/grid.js";

const cells = validateGrid(rawGrid);

function g2Session(overrides: Partial<Session> = {}): Session {
  return {
    id: "s1",
    game: "g2",
    state: { x: 9, y: 5 },
    status: "in-progress",
    toMove: "human",
    humanFirst: true,
    history: [],
    ...overrides,
  };
}

function g1Session(overrides: Partial<Session> = {}): Session {
  return {
    id: "s2",
    game: "g1",
    state: { u: 5, k: 3 },
    status: "in-progress",
    toMove: "human",
    humanFirst: true,
    history: [],
    f: "affine:2,1",
    upcomingBounds: [7, 9, 11],
    ...overrides,
  };
}

describe("status and position text", () => {
  it("status wording tracks toMove and outcome", () => {
    expect(statusLine(g2Session())).toBe("Your move.");
    expect(statusLine(g2Session({ toMove: "engine" }))).toBe(
      "Engine is thinking...",
    );
    expect(statusLine(g2Session({ status: "human-won", toMove: null }))).toBe(
      "Game over: you win. The engine had no move left.",
    );
    expect(statusLine(g2Session({ status: "engine-won", toMove: null }))).toBe(
      "Game over: the engine wins. You have no move left.",
    );
    expect(renderStatus(g2Session()).className).toBe("status in-progress");
  });

  it("position readout names weights and the removal cap", () => {
    expect(describePosition(g2Session())).toBe(
      "9 heavy + 5 light (weight 23, removal cap 11)",
    );
    expect(describePosition(g1Session())).toBe("5 stones, turn 3");
  });

  it("upcoming bounds render for the turn-bounded game", () => {
    const el = renderPosition(g1Session());
    expect(el.querySelector(".bounds")!.textContent).toBe(
      "f(3) = 7, f(4) = 9, f(5) = 11",
    );
    expect(renderPosition(g2Session()).querySelector(".bounds")).toBeNull();
  });

  it("moves are described per game", () => {
    expect(describeMove("g1", { take: 3 })).toBe("takes 3");
    expect(describeMove("g2", { takeHeavy: 2, takeLight: 0 })).toBe(
      "removes (2 heavy, 0 light)",
    );
  });
});

describe("take picker", () => {
  it("offers min(stones, f(turn)) buttons", () => {
    // u=5 < f(3)=7: the pile bounds the take
    expect(renderTakePicker(g1Session(), () => {}).querySelectorAll("button"))
      .toHaveLength(5);
    // u=20 > f(3)=7: the turn bound wins
    const big = g1Session({ state: { u: 20, k: 3 } });
    expect(renderTakePicker(big, () => {}).querySelectorAll("button"))
      .toHaveLength(7);
  });

  it("buttons report their take and disable when it is not our turn", () => {
    const takes: number[] = [];
    const picker = renderTakePicker(g1Session(), (t) => takes.push(t));
    const buttons = picker.querySelectorAll("button");
    buttons[2].dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(takes).toEqual([3]);

    const waiting = renderTakePicker(g1Session({ toMove: "engine" }), () => {});
    for (const btn of waiting.querySelectorAll("button")) {
      expect(btn.disabled).toBe(true);
    }
  });

  it("an empty pile shows no buttons", () => {
    const stuck = g1Session({ state: { u: 0, k: 9 }, upcomingBounds: [15, 17, 19] });
    const picker = renderTakePicker(stuck, () => {});
    expect(picker.querySelectorAll("button")).toHaveLength(0);
    expect(picker.textContent).toContain("no legal take");
  });
});

describe("history", () => {
  it("renders one line per move with actor and landing position", () => {
    const history: HistoryEntry[] = [
      { actor: "human", move: { takeHeavy: 1, takeLight: 0 }, position: { x: 8, y: 5 } },
      { actor: "engine", move: { takeHeavy: 0, takeLight: 2 }, position: { x: 8, y: 3 } },
    ];
    const el = renderHistory(g2Session({ state: { x: 8, y: 3 }, history }));
    const items = el.querySelectorAll("li");
    expect(items).toHaveLength(2);
    expect(items[0].textContent).toBe("you removes (1 heavy, 0 light) -> (8, 5)");
    expect(items[1].textContent).toBe("engine removes (0 heavy, 2 light) -> (8, 3)");
    expect(items[1].className).toBe("engine");
  });
});

describe("engine reply render budget", () => {
  it("board + grid re-render stays under 200 ms at weight 512", () => {
    // session shaped like a reply arriving mid-game at the weight cap
    const history: HistoryEntry[] = [];
    let x = 200;
    let y = 112;
    for (let i = 0; i < 30; i++) {
      const actor: HistoryEntry["actor"] = i % 2 === 0 ? "human" : "engine";
      const takeHeavy = i % 3 === 0 ? 1 : 0;
      const takeLight = takeHeavy ? 0 : 1;
      x -= takeHeavy;
      y -= takeLight;
      history.push({ actor, move: { takeHeavy, takeLight }, position: { x, y } });
    }
    const session = g2Session({ state: { x, y }, history });

    // the page builds the lattice once at startup; a reply re-renders
    // the board panel and repaints grid markers on the existing tree
    const gridRoot = renderGrid(cells, { x: 200, y: 112 });

    const start = performance.now();
    renderStatus(session);
    renderPosition(session);
    renderHistory(session);
    updateGridAffordances(gridRoot, cells, session.state as { x: number; y: number });
    const elapsed = performance.now() - start;
    expect(elapsed).toBeLessThan(200);
  });
});
