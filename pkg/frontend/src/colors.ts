/** Style guide: the label color trio and shared drawing constants. */

import type { ReliabilityLabel } from './types.js';

export const LABEL_COLORS: Record<ReliabilityLabel, string> = {
  controversial: '#e8701a', // orange
  verified: '#7a5af8', // purple
  unlabeled: '#9aa0a6', // gray
};

export const CENTER_COLOR_FALLBACK = '#444444';

export const NODE_RADIUS = 9;
export const CENTER_NODE_RADIUS = 13;

/** Fraction of the viewport half-extent used by the outer ring. */
export const VIEWPORT_FILL = 0.85;
