import type { ArcJson, Move, SessionParams, SessionState } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly reason: string,
    readonly detail: string,
  ) {
    super(`${status} ${reason}${detail ? `: ${detail}` : ""}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    throw new ApiError(response.status, body.reason ?? "error", body.detail ?? "");
  }
  return body as T;
}

function post(body?: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  };
}

/** Thin typed wrapper over the session endpoints; carries no state. */
export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  createSession(kind: string, params: SessionParams): Promise<{ id: string }> {
    return request(this.url("/api/session"), post({ kind, params }));
  }

  getState(id: string): Promise<SessionState> {
    return request(this.url(`/api/session/${id}`));
  }

  mutate(id: string, index: number): Promise<SessionState> {
    return request(this.url(`/api/session/${id}/mutate`), post({ index }));
  }

  flip(id: string, arc: ArcJson): Promise<SessionState> {
    return request(this.url(`/api/session/${id}/flip`), post({ arc }));
  }

  undo(id: string): Promise<SessionState> {
    return request(this.url(`/api/session/${id}/undo`), post());
  }

  history(id: string): Promise<{ moves: Move[] }> {
    return request(this.url(`/api/session/${id}/history`));
  }
}
