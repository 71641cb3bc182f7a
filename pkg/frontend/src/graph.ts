/** Graph view render model: positioned nodes and classified edge paths.
 *
 * Node colors encode reliability. With nothing hovered, the edges flagged
 * by the engine (center to 1-hop) carry the flow animation; hovering a
 * node animates exactly the edges incident to it, always in hyperlink
 * direction. Label and outer-ring toggles are applied here, client-side,
 * from the scene already held.
 */

import { CENTER_COLOR_FALLBACK, CENTER_NODE_RADIUS, LABEL_COLORS, NODE_RADIUS, VIEWPORT_FILL } from './colors.js';
import type { ViewState } from './state.js';
import type { ReliabilityLabel, SceneDocument } from './types.js';

export interface Viewport {
  width: number;
  height: number;
}

export interface NodeSpec {
  domain: string;
  hop: number; // 0 for the center
  label: ReliabilityLabel;
  x: number;
  y: number;
  r: number;
  color: string;
  isCenter: boolean;
}

export interface EdgeSpec {
  src: string;
  dst: string;
  path: string;
  curved: boolean;
  animated: boolean;
}

export interface GraphRenderModel {
  nodes: NodeSpec[];
  edges: EdgeSpec[];
  emptyNotice: string | null;
  truncated: boolean;
}

const DEG = Math.PI / 180;

function round(value: number): number {
  return Math.round(value * 100) / 100;
}

export function buildGraphModel(scene: SceneDocument, state: ViewState, viewport: Viewport): GraphRenderModel {
  const cx = viewport.width / 2;
  const cy = viewport.height / 2;
  const extent = Math.min(cx, cy) * VIEWPORT_FILL;
  const scale = extent / scene.layout.params.r2;

  const hopByDomain = new Map(scene.graph.nodes.map((n) => [n.domain, n.hop]));
  const labelByDomain = new Map(scene.graph.nodes.map((n) => [n.domain, n.label]));

  const visible = new Set<string>([scene.center]);
  for (const node of scene.graph.nodes) {
    if (!state.labelsShown.has(node.label)) continue;
    if (node.hop === 2 && !state.showOuterRing) continue;
    visible.add(node.domain);
  }

  const point = new Map<string, { x: number; y: number }>();
  const nodes: NodeSpec[] = [];
  for (const position of scene.layout.positions) {
    if (!visible.has(position.domain)) continue;
    const theta = position.angle_degrees * DEG;
    const x = round(cx + position.radius * scale * Math.cos(theta));
    const y = round(cy + position.radius * scale * Math.sin(theta));
    point.set(position.domain, { x, y });
    const isCenter = position.domain === scene.center;
    const label = isCenter ? scene.center_label : labelByDomain.get(position.domain)!;
    nodes.push({
      domain: position.domain,
      hop: isCenter ? 0 : hopByDomain.get(position.domain)!,
      label,
      x,
      y,
      r: isCenter ? CENTER_NODE_RADIUS : NODE_RADIUS,
      color: LABEL_COLORS[label] ?? CENTER_COLOR_FALLBACK,
      isCenter,
    });
  }

  const hovered = state.hoveredNode;
  const hoveredVisible = hovered !== null && visible.has(hovered);
  const edges: EdgeSpec[] = [];
  for (const edge of scene.layout.edges) {
    const from = point.get(edge.src);
    const to = point.get(edge.dst);
    if (!from || !to) continue; // an endpoint is filtered out
    let path: string;
    if (edge.kind === 'curved' && edge.control_point) {
      const qx = round(cx + edge.control_point[0] * scale);
      const qy = round(cy + edge.control_point[1] * scale);
      path = `M ${from.x} ${from.y} Q ${qx} ${qy} ${to.x} ${to.y}`;
    } else {
      path = `M ${from.x} ${from.y} L ${to.x} ${to.y}`;
    }
    const animated = hoveredVisible
      ? edge.src === hovered || edge.dst === hovered
      : edge.animate_by_default;
    edges.push({ src: edge.src, dst: edge.dst, path, curved: edge.kind === 'curved', animated });
  }

  return {
    nodes,
    edges,
    emptyNotice: nodes.length <= 1 ? 'no known connections' : null,
    truncated: scene.graph.truncated,
  };
}
