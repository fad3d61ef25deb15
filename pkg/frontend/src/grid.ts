/* Lattice rendering for the two-weight game.  renderGrid is pure in
 * its inputs: the same payload and origin always produce the same DOM
 * tree, cell colors come only from the payload verdicts/families, and
 * interactivity is limited to marking reachable targets when an origin
 * position is supplied.  Engine replies only move the origin, so
 * updateGridAffordances patches the marker classes in place; the result
 * must match a fresh render, and the test suite holds it to that. */

import type { G2Pos, GridCell } from "./api.js";
import { targetMoveG2 } from "./rules.js";

export type GridHandlers = {
  onPick?: (cell: GridCell) => void;
};

const FAMILY_CLASS: Record<string, string> = {
  P1: "fam-p1",
  P2: "fam-p2",
  P3: "fam-p3",
};

function familyKind(family: string | null): string | null {
  if (!family) {
    return null;
  }
  const kind = family.split(":", 1)[0];
  return kind in FAMILY_CLASS ? kind : null;
}

export function gridMaxWeight(cells: GridCell[]): number {
  let max = 0;
  for (const cell of cells) {
    const w = 2 * cell.x + cell.y;
    if (w > max) {
      max = w;
    }
  }
  return max;
}

function baseTitle(cell: GridCell): string {
  let title = `(${cell.x}, ${cell.y}) ${cell.verdict}`;
  if (cell.family) {
    title += ` ${cell.family}`;
  }
  return title;
}

/* One delegated listener covers every cell, so affordance updates are
 * pure class/title changes with no listener bookkeeping. */
function wirePick(root: HTMLElement, byKey: Map<string, GridCell>, handlers: GridHandlers) {
  if (!handlers.onPick) {
    return;
  }
  const onPick = handlers.onPick;
  root.addEventListener("click", (ev) => {
    const el = (ev.target as HTMLElement | null)?.closest?.(".cell.targetable");
    if (!(el instanceof HTMLElement)) {
      return;
    }
    const cell = byKey.get(`${el.dataset.x},${el.dataset.y}`);
    if (cell) {
      onPick(cell);
    }
  });
}

export function renderGrid(
  cells: GridCell[],
  origin: G2Pos | null,
  handlers: GridHandlers = {},
): HTMLElement {
  const byKey = new Map<string, GridCell>();
  for (const cell of cells) {
    byKey.set(`${cell.x},${cell.y}`, cell);
  }
  const maxW = gridMaxWeight(cells);
  const cols = Math.floor(maxW / 2) + 1;

  const root = document.createElement("div");
  root.className = "grid";
  root.style.setProperty("--grid-cols", String(cols + 1));

  for (let y = maxW; y >= 0; y--) {
    const label = document.createElement("div");
    label.className = "axis-label";
    label.textContent = y % 5 === 0 || maxW < 10 ? String(y) : "";
    root.appendChild(label);
    for (let x = 0; x < cols; x++) {
      const cell = byKey.get(`${x},${y}`);
      if (!cell) {
        const spacer = document.createElement("div");
        spacer.className = "cell void";
        root.appendChild(spacer);
        continue;
      }
      const el = document.createElement("div");
      const classes = ["cell", cell.verdict === "P" ? "p" : "n"];
      const kind = familyKind(cell.family);
      if (kind) {
        classes.push(FAMILY_CLASS[kind]);
      }
      el.className = classes.join(" ");
      el.title = baseTitle(cell);
      el.dataset.x = String(cell.x);
      el.dataset.y = String(cell.y);
      root.appendChild(el);
    }
  }

  const corner = document.createElement("div");
  corner.className = "axis-label";
  corner.textContent = "y/x";
  root.appendChild(corner);
  for (let x = 0; x < cols; x++) {
    const label = document.createElement("div");
    label.className = "axis-label";
    label.textContent = x % 5 === 0 || cols <= 10 ? String(x) : "";
    root.appendChild(label);
  }

  wirePick(root, byKey, handlers);
  updateGridAffordances(root, cells, origin);
  return root;
}

/* Per-root bookkeeping so marker updates touch only the cells involved:
 * elements keyed by "x,y" (selector lookups would rescan the tree) and
 * the set currently carrying a marker. */
type GridIndex = {
  elements: Map<string, HTMLElement>;
  marked: Set<HTMLElement>;
};

const gridIndex = new WeakMap<HTMLElement, GridIndex>();

function indexGrid(root: HTMLElement): GridIndex {
  let index = gridIndex.get(root);
  if (!index) {
    const elements = new Map<string, HTMLElement>();
    for (const el of root.querySelectorAll<HTMLElement>(".cell:not(.void)")) {
      elements.set(`${el.dataset.x},${el.dataset.y}`, el);
    }
    const marked = new Set<HTMLElement>(
      root.querySelectorAll<HTMLElement>(".cell.origin, .cell.targetable"),
    );
    index = { elements, marked };
    gridIndex.set(root, index);
  }
  return index;
}

/* Repaint only the origin/targetable markers.  After this, the tree is
 * identical to renderGrid(cells, origin) built from scratch. */
export function updateGridAffordances(
  root: HTMLElement,
  cells: GridCell[],
  origin: G2Pos | null,
): void {
  const byKey = new Map<string, GridCell>();
  for (const cell of cells) {
    byKey.set(`${cell.x},${cell.y}`, cell);
  }
  const index = indexGrid(root);
  for (const el of index.marked) {
    el.classList.remove("origin", "targetable");
    const cell = byKey.get(`${el.dataset.x},${el.dataset.y}`);
    if (cell) {
      el.title = baseTitle(cell);
    }
  }
  index.marked.clear();
  if (!origin) {
    return;
  }
  for (const cell of cells) {
    if (cell.x > origin.x || cell.y > origin.y) {
      continue;
    }
    let marker: string;
    let note: string;
    if (cell.x === origin.x && cell.y === origin.y) {
      marker = "origin";
      note = " - current position";
    } else if (targetMoveG2(origin, cell)) {
      marker = "targetable";
      note = " - click to move here";
    } else {
      continue;
    }
    const el = index.elements.get(`${cell.x},${cell.y}`);
    if (el) {
      el.classList.add(marker);
      el.title = baseTitle(cell) + note;
      index.marked.add(el);
    }
  }
}
