/** Wire types for scene documents served at /api/v1/scene/{domain}. */

export type ReliabilityLabel = 'controversial' | 'verified' | 'unlabeled';
export type DirectionOption = 'in' | 'both';
export type SummaryMode = 'normalized' | 'absolute';
export type RingName = 'inner' | 'outer';

export interface GraphNode {
  domain: string;
  hop: number;
  label: ReliabilityLabel;
}

export interface GraphEdge {
  src: string;
  dst: string;
}

export interface SceneGraph {
  center: string;
  center_label: ReliabilityLabel;
  nodes: GraphNode[];
  edges: GraphEdge[];
  direction: DirectionOption;
  label_filter: ReliabilityLabel[];
  max_hops: number;
  truncated: boolean;
  inbound_controversial_count: number;
}

export interface NodePlacement {
  domain: string;
  radius: number;
  angle_degrees: number;
}

export interface EdgePlacement {
  src: string;
  dst: string;
  kind: 'straight' | 'curved';
  control_point: [number, number] | null;
  animate_by_default: boolean;
}

export interface LayoutParams {
  r1: number;
  r2: number;
  iterations: number;
  repulsion_k: number;
  attraction_k: number;
  cooling: number;
  seed: number;
}

export interface SceneLayout {
  positions: NodePlacement[];
  edges: EdgePlacement[];
  params: LayoutParams;
}

export interface LabelCounts {
  controversial: number;
  verified: number;
  unlabeled: number;
  total: number;
}

export interface SummaryArc {
  ring: RingName;
  label: ReliabilityLabel;
  start_angle: number;
  sweep: number;
  count: number;
  percent_of_ring: number;
}

export interface SceneSummary {
  mode_requested: SummaryMode;
  mode_effective: SummaryMode;
  fallback: boolean;
  ring1: LabelCounts;
  ring2: LabelCounts;
  arcs: SummaryArc[];
  center_percent_controversial: number;
  statement: string;
}

export interface TwitterSummary {
  domain: string;
  mentioning_accounts: number;
  bot_accounts: number;
  bot_threshold: number;
  coshared: LabelCounts;
  percent_controversial_coshared: number;
}

export interface SceneOptions {
  direction: DirectionOption;
  hops: number;
  labels: ReliabilityLabel[];
  mode: SummaryMode;
  seed: number;
  bot_threshold: number;
  per_hop_cap: number;
}

export interface SceneDocument {
  center: string;
  center_label: ReliabilityLabel;
  graph: SceneGraph;
  layout: SceneLayout;
  summary: SceneSummary;
  twitter: TwitterSummary;
  label_sources_notice: string[];
  options_echo: SceneOptions;
}
