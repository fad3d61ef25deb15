/* Typed client for the dynnim HTTP/JSON API.  Thin by design: every
 * function maps to one endpoint, errors surface as ApiError with the
 * server's {code, message, constraint?} body intact. */

export type Verdict = "P" | "N";
export type Game = "g1" | "g2";

export type G2Pos = { x: number; y: number };
export type G1Pos = { u: number; k: number };
export type MoveG2 = { takeHeavy: number; takeLight: number };
export type MoveG1 = { take: number };

export type GridCell = {
  x: number;
  y: number;
  verdict: Verdict;
  family: string | null;
};

export type HistoryEntry = {
  actor: "human" | "engine";
  move: MoveG1 | MoveG2;
  position: G1Pos | G2Pos;
};

export type Session = {
  id: string;
  game: Game;
  state: G1Pos | G2Pos;
  status: "in-progress" | "human-won" | "engine-won";
  toMove: "human" | "engine" | null;
  humanFirst: boolean;
  history: HistoryEntry[];
  f?: string;
  upcomingBounds?: number[];
  legalTakes?: number;
};

export type CreateBody =
  | { game: "g2"; x: number; y: number; humanFirst?: boolean }
  | { game: "g1"; f: string; u: number; k?: number; humanFirst?: boolean };

export type ErrorBody = { code: string; message: string; constraint?: string };

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: ErrorBody,
  ) {
    super(body.message);
    this.name = "ApiError";
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const text = await resp.text();
  let parsed: unknown = null;
  try {
    parsed = text ? JSON.parse(text) : null;
  } catch {
    throw new ApiError(resp.status, {
      code: "bad_payload",
      message: `unparseable response from ${path}`,
    });
  }
  if (!resp.ok) {
    throw new ApiError(resp.status, parsed as ErrorBody);
  }
  return parsed as T;
}

export function getGrid(maxWeight: number): Promise<GridCell[]> {
  return request(`/api/v1/grid?maxWeight=${maxWeight}`);
}

export function createSession(body: CreateBody): Promise<Session> {
  return request("/api/v1/sessions", {
    method: "POST",
    body: JSON.stringify(body),
  });
}

export function getSession(id: string): Promise<Session> {
  return request(`/api/v1/sessions/${id}`);
}

export function postMove(id: string, move: MoveG1 | MoveG2): Promise<Session> {
  return request(`/api/v1/sessions/${id}/moves`, {
    method: "POST",
    body: JSON.stringify(move),
  });
}

/* Runtime shape check for grid payloads; render code trusts cells only
 * after this passes. */
export function validateGrid(payload: unknown): GridCell[] {
  if (!Array.isArray(payload)) {
    throw new Error("grid payload is not an array");
  }
  for (const cell of payload) {
    const c = cell as GridCell;
    if (
      typeof c.x !== "number" ||
      typeof c.y !== "number" ||
      (c.verdict !== "P" && c.verdict !== "N") ||
      (c.family !== null && typeof c.family !== "string")
    ) {
      throw new Error(`malformed grid cell ${JSON.stringify(cell)}`);
    }
  }
  return payload as GridCell[];
}
