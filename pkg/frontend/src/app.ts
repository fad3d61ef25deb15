/* Page wiring: setup form -> session, click-to-move, engine replies,
 * and the always-on lattice.  Server interaction is strictly
 * sequential; the submit flow disables input until the reply lands. */

import {
  ApiError,
  createSession,
  getGrid,
  postMove,
  validateGrid,
  type CreateBody,
  type G2Pos,
  type GridCell,
  type MoveG1,
  type MoveG2,
  type Session,
} from "./api.js";
import { renderGrid, updateGridAffordances } from "./grid.js";
import {
  renderHistory,
  renderPosition,
  renderStatus,
  renderTakePicker,
} from "./board.js";

const GRID_WEIGHT = 127;

type Refs = {
  form: HTMLFormElement;
  status: HTMLElement;
  board: HTMLElement;
  error: HTMLElement;
  history: HTMLElement;
  grid: HTMLElement;
  latency: HTMLElement;
};

function grab(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing #${id}`);
  }
  return el;
}

class App {
  private cells: GridCell[] = [];
  private session: Session | null = null;
  private gridRoot: HTMLElement | null = null;
  private busy = false;

  constructor(private refs: Refs) {}

  async start() {
    this.refs.form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void this.newGame();
    });
    const gameSelect = this.refs.form.elements.namedItem("game") as HTMLSelectElement;
    gameSelect.addEventListener("change", () => this.toggleParams(gameSelect.value));
    this.toggleParams(gameSelect.value);
    try {
      this.cells = validateGrid(await getGrid(GRID_WEIGHT));
    } catch (err) {
      this.showError(err);
      return;
    }
    this.render();
  }

  private toggleParams(game: string) {
    grab("params-g1").hidden = game !== "g1";
    grab("params-g2").hidden = game !== "g2";
  }

  private field(name: string): string {
    const el = this.refs.form.elements.namedItem(name) as HTMLInputElement | null;
    return el ? el.value.trim() : "";
  }

  private async newGame() {
    const game = this.field("game");
    const humanFirst = (this.refs.form.elements.namedItem("humanFirst") as HTMLInputElement).checked;
    const body: CreateBody =
      game === "g1"
        ? {
            game: "g1",
            f: this.field("f") || "affine:1,0",
            u: Number(this.field("u") || "20"),
            k: Number(this.field("k") || "1"),
            humanFirst,
          }
        : {
            game: "g2",
            x: Number(this.field("x") || "9"),
            y: Number(this.field("y") || "5"),
            humanFirst,
          };
    await this.exchange(() => createSession(body));
  }

  private async submitMove(move: MoveG1 | MoveG2) {
    const session = this.session;
    if (!session || this.busy) {
      return;
    }
    await this.exchange(() => postMove(session.id, move));
  }

  /* One request/render round trip, timed; the budget for an engine
   * reply landing on screen is 200 ms. */
  private async exchange(call: () => Promise<Session>) {
    this.busy = true;
    this.clearError();
    const started = performance.now();
    try {
      this.session = await call();
      this.render();
      const elapsed = performance.now() - started;
      this.refs.latency.textContent = `reply rendered in ${elapsed.toFixed(0)} ms`;
    } catch (err) {
      this.showError(err);
    } finally {
      this.busy = false;
    }
  }

  private showError(err: unknown) {
    const el = this.refs.error;
    if (err instanceof ApiError) {
      const constraint = err.body.constraint ? ` (${err.body.constraint})` : "";
      el.textContent = `${err.body.code}: ${err.body.message}${constraint}`;
    } else {
      el.textContent = String(err);
    }
    el.hidden = false;
  }

  private clearError() {
    this.refs.error.hidden = true;
    this.refs.error.textContent = "";
  }

  private render() {
    const session = this.session;
    this.refs.status.replaceChildren();
    this.refs.board.replaceChildren();
    this.refs.history.replaceChildren();
    if (session) {
      this.refs.status.appendChild(renderStatus(session));
      this.refs.board.appendChild(renderPosition(session));
      if (session.game === "g1") {
        this.refs.board.appendChild(
          renderTakePicker(session, (take) => void this.submitMove({ take })),
        );
      } else if (session.status === "in-progress" && session.toMove === "human") {
        const hint = document.createElement("div");
        hint.className = "hint";
        hint.textContent = "Click a highlighted lattice cell to move there.";
        this.refs.board.appendChild(hint);
      }
      this.refs.history.appendChild(renderHistory(session));
    }
    const origin =
      session && session.game === "g2" && session.status === "in-progress" && session.toMove === "human"
        ? (session.state as G2Pos)
        : null;
    if (this.gridRoot) {
      // replies only move the origin; repaint markers instead of
      // rebuilding ~4k cells
      updateGridAffordances(this.gridRoot, this.cells, origin);
      return;
    }
    this.gridRoot = renderGrid(this.cells, origin, {
      onPick: (cell) => {
        const from = this.session!.state as G2Pos;
        void this.submitMove({
          takeHeavy: from.x - cell.x,
          takeLight: from.y - cell.y,
        });
      },
    });
    this.refs.grid.replaceChildren(this.gridRoot);
  }
}

export function initApp(): void {
  const app = new App({
    form: grab("setup") as HTMLFormElement,
    status: grab("status"),
    board: grab("board"),
    error: grab("error"),
    history: grab("history"),
    grid: grab("grid"),
    latency: grab("latency"),
  });
  void app.start();
}

if (typeof document !== "undefined" && document.getElementById("setup")) {
  initApp();
}
