/** Summary view render model: statement, doughnut arcs, center percentage.
 *
 * The statement is the engine's alert string and is never recomputed
 * client-side, so presentation toggles cannot change its count. Arc
 * geometry, however, is recomputed from the displayed nodes so that
 * label and outer-ring toggles (and normalized/absolute switching) work
 * without refetching; requesting absolute with more than 100 displayed
 * sites in a ring falls back to normalized with a pop-up, mirroring the
 * engine's own rule.
 */

import { LABEL_COLORS } from './colors.js';
import type { ViewState } from './state.js';
import type { ReliabilityLabel, RingName, SceneDocument, SummaryMode } from './types.js';

export const SEGMENT_DEGREES = 3.6;
export const ABSOLUTE_RING_LIMIT = 100;
export const FALLBACK_MESSAGE =
  'More than 100 sites in a ring: the 100-segment limit was reached, showing the normalized view instead.';

const ARC_LABEL_ORDER: ReliabilityLabel[] = ['controversial', 'verified', 'unlabeled'];

export interface ArcSpec {
  ring: RingName;
  label: ReliabilityLabel;
  startAngle: number;
  sweep: number;
  count: number;
  percentOfRing: number;
  color: string;
  tooltip: string;
}

export interface SummaryRenderModel {
  statementHighlight: string;
  statementRest: string;
  arcs: ArcSpec[];
  centerPercentText: string;
  effectiveMode: SummaryMode;
  fallbackPopup: string | null;
  showOuterRing: boolean;
}

interface RingCounts {
  controversial: number;
  verified: number;
  unlabeled: number;
  total: number;
}

function displayedCounts(scene: SceneDocument, state: ViewState, hop: number): RingCounts {
  const counts = { controversial: 0, verified: 0, unlabeled: 0, total: 0 };
  for (const node of scene.graph.nodes) {
    if (node.hop !== hop) continue;
    if (!state.labelsShown.has(node.label)) continue;
    counts[node.label] += 1;
    counts.total += 1;
  }
  return counts;
}

export function arcTooltip(count: number, percentOfRing: number): string {
  const noun = count === 1 ? 'site' : 'sites';
  return `${count} ${noun}, ${Math.round(percentOfRing)}% of ring`;
}

function ringArcs(ring: RingName, counts: RingCounts, mode: SummaryMode): ArcSpec[] {
  if (counts.total === 0) return [];
  const arcs: ArcSpec[] = [];
  let start = 0;
  for (const label of ARC_LABEL_ORDER) {
    const count = counts[label];
    if (count === 0) continue;
    const sweep = mode === 'normalized' ? (360 * count) / counts.total : SEGMENT_DEGREES * count;
    const percentOfRing = (100 * count) / counts.total;
    arcs.push({
      ring,
      label,
      startAngle: start,
      sweep,
      count,
      percentOfRing,
      color: LABEL_COLORS[label],
      tooltip: arcTooltip(count, percentOfRing),
    });
    start += sweep;
  }
  return arcs;
}

export function splitStatement(statement: string): { highlight: string; rest: string } {
  const match = statement.match(/ (are|is) linking to /);
  if (!match || match.index === undefined) {
    return { highlight: statement, rest: '' };
  }
  return { highlight: statement.slice(0, match.index), rest: statement.slice(match.index) };
}

export function buildSummaryModel(scene: SceneDocument, state: ViewState): SummaryRenderModel {
  const ring1 = displayedCounts(scene, state, 1);
  const ring2 = state.showOuterRing
    ? displayedCounts(scene, state, 2)
    : { controversial: 0, verified: 0, unlabeled: 0, total: 0 };

  const overLimit = ring1.total > ABSOLUTE_RING_LIMIT || ring2.total > ABSOLUTE_RING_LIMIT;
  const fallback = state.mode === 'absolute' && overLimit;
  const effectiveMode: SummaryMode = fallback ? 'normalized' : state.mode;

  const arcs = [...ringArcs('inner', ring1, effectiveMode), ...ringArcs('outer', ring2, effectiveMode)];

  const displayed = ring1.total + ring2.total;
  const controversial = ring1.controversial + ring2.controversial;
  const percent = displayed === 0 ? 0 : (100 * controversial) / displayed;

  const { highlight, rest } = splitStatement(scene.summary.statement);
  return {
    statementHighlight: highlight,
    statementRest: rest,
    arcs,
    centerPercentText: `${Math.round(percent)}%`,
    effectiveMode,
    fallbackPopup: fallback ? FALLBACK_MESSAGE : null,
    showOuterRing: state.showOuterRing,
  };
}

/** SVG path for one doughnut segment; 0° at 12 o'clock, clockwise. */
export function arcPath(
  cx: number,
  cy: number,
  innerRadius: number,
  outerRadius: number,
  startAngle: number,
  sweep: number,
): string {
  const fullCircle = sweep >= 360 - 1e-9;
  const endAngle = startAngle + (fullCircle ? 359.999 : sweep);
  const point = (radius: number, degrees: number): [number, number] => {
    const theta = (degrees - 90) * (Math.PI / 180);
    return [cx + radius * Math.cos(theta), cy + radius * Math.sin(theta)];
  };
  const [ox1, oy1] = point(outerRadius, startAngle);
  const [ox2, oy2] = point(outerRadius, endAngle);
  const [ix1, iy1] = point(innerRadius, endAngle);
  const [ix2, iy2] = point(innerRadius, startAngle);
  const large = endAngle - startAngle > 180 ? 1 : 0;
  return (
    `M ${ox1} ${oy1} ` +
    `A ${outerRadius} ${outerRadius} 0 ${large} 1 ${ox2} ${oy2} ` +
    `L ${ix1} ${iy1} ` +
    `A ${innerRadius} ${innerRadius} 0 ${large} 0 ${ix2} ${iy2} Z`
  );
}
