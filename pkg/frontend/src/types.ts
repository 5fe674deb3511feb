// Mirrors of the JSON payloads served by the backend. The UI treats
// every field as read-only server truth; nothing here is recomputed.

export interface GraphNode {
  word: string;
  df: number;
  DF: number;
  rel_freq: number;
  class_idx: number;
  x: number;
  y: number;
}

export interface GraphEdge {
  child: string;
  parent: string;
  strength: number;
}

export interface ClassBoundary {
  df_threshold: number;
  y: number;
}

export interface GraphParamsEcho {
  n: number;
  c: number;
  l: number;
  b: number;
  mode: string;
  width: number;
  height: number;
  min_dx: number;
  c1: number;
  c2: number;
  band_height: number;
}

export interface GraphPayload {
  schema_version: number;
  query: string;
  terms: string[];
  result_count: number;
  params: GraphParamsEcho;
  nodes: GraphNode[];
  edges: GraphEdge[];
  class_boundaries: ClassBoundary[];
  spacing: number;
}

export interface SearchTitle {
  doc_id: number;
  title: string;
}

export interface SearchPayload {
  schema_version: number;
  query: string;
  terms: string[];
  result_count: number;
  titles: SearchTitle[];
}

// The subset of graph parameters the UI lets the user steer.
export interface ControlParams {
  n: number;
  c: number;
  l: number;
  b: number;
  mode: string;
}

export const DEFAULT_PARAMS: ControlParams = {
  n: 15,
  c: 3,
  l: 0.03125,
  b: 0,
  mode: "classed",
};
