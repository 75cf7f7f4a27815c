/** Wire types of the session API. Weights are decimal strings end to end. */

export interface QuiverDoc {
  n: number;
  b: string[][];
}

export interface CycleStatus {
  closed_at: number | null;
  revisit: number | null;
}

export interface SessionState {
  id: string;
  n: number;
  quiver: QuiverDoc;
  moves: number[];
  steps: number;
  cycle: CycleStatus;
}

export interface VortexDoc {
  vertices: number[];
  apex: number;
}

export type ExitStatus = "certified" | "unknown";

export interface AnalysisDoc {
  n: number;
  large_weights: boolean;
  sinks: number[];
  sources: number[];
  vortices: VortexDoc[];
  global_descent: number | null;
  exits: Record<string, ExitStatus>;
}

export interface GalleryFixture {
  name: string;
  description: string;
  builder: Record<string, unknown>;
  length: number;
  sequence: number[];
}

export interface GalleryDoc {
  fixtures: GalleryFixture[];
}
