// Play-session controller. Holds the session id and presentation state
// only: every legal move, every engine reply, and every game-over verdict
// comes from the service. Clicking a break line posts the move and then
// shows the engine's answer as a second visible step.

import { ApiClient, ApiError, type NewGameOptions } from "./api.js";
import type {
  GameStateJson,
  HistoryEntry,
  MoveJson,
  PatternResponse,
} from "./types.js";

export type { NewGameOptions } from "./api.js";

export interface GameViewState {
  phase: "idle" | "playing" | "over";
  sessionId?: string;
  state?: GameStateJson;
  legalMoves: MoveJson[];
  history: HistoryEntry[];
  winner?: "human" | "engine";
  busy: boolean; // a move is in flight or the engine step is animating
  toast?: string;
  replayIndex?: number; // when set, the board shows history up to here
  pOverlay?: PatternResponse; // P-cells of the current square bar, if toggled
  pOverlayOn: boolean;
}

const sleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

export class GameController {
  view: GameViewState = { phase: "idle", legalMoves: [], history: [], busy: false, pOverlayOn: false };
  private inFlight = false;
  private patternCache = new Map<number, PatternResponse>();

  constructor(
    private api: ApiClient,
    private onChange: (v: GameViewState) => void,
    private engineDelayMs = 400,
  ) {}

  private emit(partial: Partial<GameViewState>): void {
    this.view = { ...this.view, ...partial };
    this.onChange(this.view);
  }

  async newGame(opts: NewGameOptions): Promise<void> {
    const res = await this.api.createGame(opts);
    this.emit({
      phase: res.state.terminal ? "over" : "playing",
      sessionId: res.id,
      state: res.state,
      legalMoves: res.legal_moves,
      history: [],
      winner: res.winner,
      busy: false,
      toast: undefined,
      replayIndex: undefined,
      pOverlay: undefined,
    });
    await this.refreshOverlay();
  }

  /** Rebuild the whole view from the server; used on page reload. */
  async resume(sessionId: string): Promise<boolean> {
    try {
      const snap = await this.api.getGame(sessionId);
      this.emit({
        phase: snap.state.terminal ? "over" : "playing",
        sessionId,
        state: snap.state,
        legalMoves: snap.legal_moves,
        history: snap.history,
        winner: snap.winner,
        busy: false,
        toast: undefined,
        replayIndex: undefined,
        pOverlay: undefined,
      });
      await this.refreshOverlay();
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        this.emit({ phase: "idle", sessionId: undefined });
        return false;
      }
      throw err;
    }
  }

  /** Post a human move; ignores clicks while one is already in flight. */
  async clickCut(move: MoveJson): Promise<void> {
    if (this.inFlight || this.view.phase !== "playing" || !this.view.sessionId) {
      return;
    }
    this.inFlight = true;
    this.emit({ busy: true, toast: undefined });
    try {
      const res = await this.api.postMove(this.view.sessionId, move);
      const history = [...this.view.history,
        { by: "human" as const, move: res.human_move, state: res.state_after_human }];
      // first visible step: the human's own cut
      this.emit({ state: res.state_after_human, legalMoves: [], history });
      if (res.engine_move) {
        await sleep(this.engineDelayMs);
        history.push({ by: "engine", move: res.engine_move, state: res.state });
      }
      this.emit({
        phase: res.state.terminal ? "over" : "playing",
        state: res.state,
        legalMoves: res.legal_moves,
        history: [...history],
        winner: res.winner,
        busy: false,
      });
      await this.refreshOverlay();
    } catch (err) {
      if (err instanceof ApiError && (err.status === 409 || err.status === 404)) {
        this.emit({ busy: false, toast: `move rejected: ${err.message}` });
      } else {
        this.emit({ busy: false, toast: "request failed" });
        throw err;
      }
    } finally {
      this.inFlight = false;
    }
  }

  /** Step the finished game's history; index -1 shows the live state. */
  setReplayIndex(index: number | undefined): void {
    this.emit({ replayIndex: index });
  }

  async togglePOverlay(on: boolean): Promise<void> {
    this.emit({ pOverlayOn: on });
    await this.refreshOverlay();
  }

  /** The winning-cell overlay only exists for square bars. */
  private async refreshOverlay(): Promise<void> {
    const s = this.view.state;
    if (!this.view.pOverlayOn || !s || s.w !== s.h) {
      this.emit({ pOverlay: undefined });
      return;
    }
    let pat = this.patternCache.get(s.w);
    if (!pat) {
      pat = await this.api.getPattern(s.w);
      this.patternCache.set(s.w, pat);
    }
    this.emit({ pOverlay: pat });
  }
}
