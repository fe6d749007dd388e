import { ApiClient, ApiError } from "./api.js";
import type { ArcJson, SessionParams, SessionState } from "./types.js";

/**
 * What the page shows. `state` is always a verbatim server response (no
 * client-side algebra, no optimistic updates); the other fields are purely
 * presentational.
 */
export interface ViewState {
  state: SessionState | null;
  notice: string | null;
  connectionLost: boolean;
  pending: boolean;
  showTau: boolean;
}

export class ExplorerController {
  private viewState: ViewState = {
    state: null,
    notice: null,
    connectionLost: false,
    pending: false,
    showTau: true,
  };
  private sessionId: string | null = null;
  private idle: Promise<void> = Promise.resolve();

  constructor(
    readonly api: ApiClient,
    private readonly onChange: (view: ViewState) => void = () => {},
  ) {}

  view(): ViewState {
    return this.viewState;
  }

  /** Resolves once no request is in flight (used by tests and by retry). */
  whenIdle(): Promise<void> {
    return this.idle;
  }

  private emit(patch: Partial<ViewState>): void {
    this.viewState = { ...this.viewState, ...patch };
    this.onChange(this.viewState);
  }

  private run(task: () => Promise<void>): Promise<void> {
    // one in-flight request at a time; inputs are disabled while pending
    const chained = this.idle.then(async () => {
      this.emit({ pending: true });
      try {
        await task();
        this.emit({ connectionLost: false });
      } catch (err) {
        if (err instanceof ApiError) {
          this.emit({ notice: err.detail ? `${err.reason}: ${err.detail}` : err.reason });
          await this.refresh(); // server state is authoritative, even on errors
        } else {
          this.emit({ connectionLost: true });
        }
      } finally {
        this.emit({ pending: false });
      }
    });
    this.idle = chained;
    return chained;
  }

  /** Re-read the authoritative state from the server. */
  private async refresh(): Promise<void> {
    if (this.sessionId === null) return;
    const state = await this.api.getState(this.sessionId);
    this.emit({ state });
  }

  open(kind: string, params: SessionParams): Promise<void> {
    return this.run(async () => {
      const { id } = await this.api.createSession(kind, params);
      this.sessionId = id;
      this.emit({ notice: null });
      await this.refresh();
    });
  }

  retry(): Promise<void> {
    return this.run(() => this.refresh());
  }

  toggleTau(): void {
    this.emit({ showTau: !this.viewState.showTau });
  }

  /** Clicking quiver vertex k (1-based label) mutates at index k-1. */
  clickVertex(label: string | number): Promise<void> {
    const state = this.viewState.state;
    if (!state || state.kind !== "seed") {
      this.emit({ notice: "this session has no vertex moves" });
      return this.idle;
    }
    const index = Number(label) - 1;
    return this.run(async () => {
      await this.api.mutate(state.id, index);
      this.emit({ notice: null });
      await this.refresh();
    });
  }

  /** Clicking an arc flips it (disc sessions). */
  clickArc(arcIndex: number): Promise<void> {
    const state = this.viewState.state;
    if (!state || state.kind !== "disc" || !state.arcs) {
      this.emit({ notice: "this session has no arc moves" });
      return this.idle;
    }
    const arc: ArcJson = state.arcs[arcIndex];
    return this.run(async () => {
      await this.api.flip(state.id, arc);
      this.emit({ notice: null });
      await this.refresh();
    });
  }

  undo(): Promise<void> {
    const state = this.viewState.state;
    if (!state) return this.idle;
    return this.run(async () => {
      await this.api.undo(state.id);
      this.emit({ notice: null });
      await this.refresh();
    });
  }
}
