// Wire types of the storynet HTTP service. The UI never computes scores:
// every number shown on screen comes from one of these response bodies.

export type NameKind = "char" | "place";

export interface AnalysisParams {
  delta_s: number;
  f_t_char: number;
  f_t_place: number;
  i_t: number;
  kernel: "linear" | "exponential";
}

export interface OpenProjectResponse {
  session_id: string;
  documents: number;
  tokens: number;
}

export interface RawWordRow {
  word: string;
  count: number;
  doc_coverage: number;
  assigned: boolean;
}

export interface RawWordsResponse {
  total: number;
  offset: number;
  limit: number;
  entries: RawWordRow[];
}

export interface RegistryEntry {
  id: string;
  type: NameKind;
  variants: string[];
}

export interface RegistryView {
  names: RegistryEntry[];
  created_id?: string;
}

export interface NetworkNode {
  id: string;
  name: string;
  type: NameKind;
  f: number;
}

export interface NetworkEdge {
  source: string;
  target: string;
  score: number;
}

export interface NetworkResponse {
  nodes: NetworkNode[];
  edges: NetworkEdge[];
  dot: string;
  all_zero_interactions: boolean;
  params: AnalysisParams;
}
