// Thin typed client for the /api/v1 service. All game legality and engine
// play live server-side; this module only moves JSON around.

import type {
  CreateGameResponse,
  GameSnapshot,
  MoveJson,
  MoveResponse,
  NimpassResponse,
  PatternResponse,
  SectionResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface NewGameOptions {
  m: number;
  n?: number;
  poison?: { i: number; j: number };
  engineFirst?: boolean;
}

export class ApiClient {
  private fetchFn: FetchLike;

  constructor(private base: string = "", fetchFn?: FetchLike) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(this.base + path, init);
    if (!res.ok) {
      let detail = res.statusText;
      try {
        const body = await res.json();
        if (body && body.detail !== undefined) {
          detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
        }
      } catch {
        // keep the status text
      }
      throw new ApiError(res.status, detail);
    }
    return res.json() as Promise<T>;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createGame(opts: NewGameOptions): Promise<CreateGameResponse> {
    return this.post("/api/v1/games", {
      m: opts.m,
      n: opts.n ?? null,
      poison: opts.poison ?? null,
      engine_first: opts.engineFirst ?? false,
    });
  }

  getGame(id: string): Promise<GameSnapshot> {
    return this.request(`/api/v1/games/${encodeURIComponent(id)}`);
  }

  postMove(id: string, move: MoveJson): Promise<MoveResponse> {
    return this.post(`/api/v1/games/${encodeURIComponent(id)}/moves`, move);
  }

  getPattern(m: number, method: string = "xor"): Promise<PatternResponse> {
    return this.request(`/api/v1/patterns/${m}?method=${method}`);
  }

  getSection(n: number, m: number, half = false): Promise<SectionResponse> {
    return this.request(`/api/v1/sierpinski/${n}/${m}?half=${half}`);
  }

  getNimpass(m: number): Promise<NimpassResponse> {
    return this.request(`/api/v1/nimpass/${m}`);
  }
}
