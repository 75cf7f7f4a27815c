/** Pure projection of API payloads into a renderable view.
 *
 * No arithmetic happens on weights here: the server's decimal strings
 * are carried verbatim (direction comes from the sign character), so
 * arbitrary-precision values can never be rounded by the client.
 */

import { AnalysisDoc, SessionState } from "./types.js";

export type Badge = "sink" | "source" | "certified-exit" | "global-descent";

export interface VertexView {
  label: number;
  x: number;
  y: number;
  badges: Badge[];
}

export interface ArrowView {
  from: number;
  to: number;
  weight: string; // verbatim decimal string, sign stripped
}

export interface ViewState {
  sessionId: string | null;
  vertices: VertexView[];
  arrows: ArrowView[];
  trail: number[];
  banner: string | null;
  notice: string | null;
  busy: boolean;
}

/** Fixed circular placement by label so successive renders are comparable. */
export function vertexPosition(
  label: number,
  n: number,
  radius = 160,
  cx = 200,
  cy = 200,
): { x: number; y: number } {
  const angle = (2 * Math.PI * (label - 1)) / n - Math.PI / 2;
  return {
    x: Math.round(cx + radius * Math.cos(angle)),
    y: Math.round(cy + radius * Math.sin(angle)),
  };
}

export function arrowsFromQuiver(b: string[][]): ArrowView[] {
  const arrows: ArrowView[] = [];
  const n = b.length;
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      const entry = b[i][j];
      if (entry === "0") continue;
      if (entry.startsWith("-")) {
        arrows.push({ from: j + 1, to: i + 1, weight: entry.slice(1) });
      } else {
        arrows.push({ from: i + 1, to: j + 1, weight: entry });
      }
    }
  }
  return arrows;
}

export function badgesFor(vertex: number, analysis: AnalysisDoc | null): Badge[] {
  if (!analysis) return [];
  const badges: Badge[] = [];
  if (analysis.sinks.includes(vertex)) badges.push("sink");
  if (analysis.sources.includes(vertex)) badges.push("source");
  if (analysis.exits[String(vertex)] === "certified") badges.push("certified-exit");
  if (analysis.global_descent === vertex) badges.push("global-descent");
  return badges;
}

export function bannerFor(session: SessionState | null): string | null {
  if (!session) return null;
  if (session.cycle.closed_at !== null) {
    return `Cycle closed at length ${session.cycle.closed_at}`;
  }
  if (session.cycle.revisit !== null) {
    return `Current quiver first appeared at step ${session.cycle.revisit}`;
  }
  return null;
}

export function buildViewState(
  session: SessionState | null,
  analysis: AnalysisDoc | null,
  busy = false,
  notice: string | null = null,
): ViewState {
  if (!session) {
    return {
      sessionId: null,
      vertices: [],
      arrows: [],
      trail: [],
      banner: null,
      notice,
      busy,
    };
  }
  const vertices: VertexView[] = [];
  for (let label = 1; label <= session.n; label++) {
    const { x, y } = vertexPosition(label, session.n);
    vertices.push({ label, x, y, badges: badgesFor(label, analysis) });
  }
  return {
    sessionId: session.id,
    vertices,
    arrows: arrowsFromQuiver(session.quiver.b),
    trail: [...session.moves],
    banner: bannerFor(session),
    notice,
    busy,
  };
}
