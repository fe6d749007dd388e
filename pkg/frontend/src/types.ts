// Shapes of the session service's JSON. The client never computes algebra;
// everything displayed is taken verbatim from these payloads.

export interface TermJson {
  c: number;
  e: number[];
}

export interface QuiverVertexJson {
  id: number;
  label: string | number;
}

export interface QuiverJson {
  vertices: QuiverVertexJson[];
  arrows: { src: number; dst: number }[];
  tau: Record<string, number>;
}

export type ArcJson =
  | { kind: "chord"; from: number; to: number }
  | { kind: "loop"; base: number }
  | { kind: "ray"; from: number };

export type VertexGeometry = ArcJson | { kind: "diagonal"; from: number; to: number };

export interface PolygonJson {
  vertices: { label: number; x: number; y: number }[];
  puncture: { x: number; y: number } | null;
}

export type Move =
  | { type: "mutate"; index: number }
  | { type: "flip"; arc: ArcJson };

export interface SessionState {
  id: string;
  kind: "seed" | "disc" | "gamma";
  history: Move[];
  // seed sessions
  cluster?: string[];
  cluster_terms?: TermJson[][];
  matrix?: number[][];
  quiver?: QuiverJson | null;
  // disc sessions
  disc?: { boundary_vertices: number; punctured: boolean };
  arcs?: ArcJson[];
  flippable?: boolean[];
  polygon?: PolygonJson;
  // gamma sessions
  params?: { type: string; n: number; m: number };
  vertex_geometry?: Record<string, VertexGeometry>;
}

export interface ApiErrorBody {
  reason: string;
  detail?: string;
}

export type SessionParams = Record<string, unknown>;
