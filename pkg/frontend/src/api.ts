/** Minimal typed client for the session API. */

import {
  AnalysisDoc,
  CycleStatus,
  GalleryDoc,
  QuiverDoc,
  SessionState,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export interface SessionApi {
  gallery(): Promise<GalleryDoc>;
  createSession(body: {
    quiver?: QuiverDoc;
    builder?: Record<string, unknown>;
  }): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  mutate(id: string, vertex: number, override?: boolean): Promise<SessionState>;
  undo(id: string): Promise<SessionState>;
  analysis(id: string): Promise<AnalysisDoc>;
  cycle(id: string): Promise<CycleStatus>;
}

async function asJson<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const message =
      typeof (body as { error?: string }).error === "string"
        ? (body as { error: string }).error
        : `HTTP ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

export class ApiClient implements SessionApi {
  constructor(private base: string = "") {}

  private url(path: string): string {
    return this.base + path;
  }

  gallery(): Promise<GalleryDoc> {
    return fetch(this.url("/api/gallery")).then((r) => asJson<GalleryDoc>(r));
  }

  createSession(body: {
    quiver?: QuiverDoc;
    builder?: Record<string, unknown>;
  }): Promise<SessionState> {
    return fetch(this.url("/api/session"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => asJson<SessionState>(r));
  }

  getSession(id: string): Promise<SessionState> {
    return fetch(this.url(`/api/session/${id}`)).then((r) =>
      asJson<SessionState>(r),
    );
  }

  mutate(id: string, vertex: number, override = false): Promise<SessionState> {
    return fetch(this.url(`/api/session/${id}/mutate`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(override ? { vertex, override } : { vertex }),
    }).then((r) => asJson<SessionState>(r));
  }

  undo(id: string): Promise<SessionState> {
    return fetch(this.url(`/api/session/${id}/undo`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: "{}",
    }).then((r) => asJson<SessionState>(r));
  }

  analysis(id: string): Promise<AnalysisDoc> {
    return fetch(this.url(`/api/session/${id}/analysis`)).then((r) =>
      asJson<AnalysisDoc>(r),
    );
  }

  cycle(id: string): Promise<CycleStatus> {
    return fetch(this.url(`/api/session/${id}/cycle`)).then((r) =>
      asJson<CycleStatus>(r),
    );
  }
}
