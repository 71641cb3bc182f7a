/** View state for the explorer, with pure transition helpers.
 *
 * Defaults mirror the engine's: graph view, normalized doughnut, every
 * label shown, outer ring visible, outbound links hidden, Twitter window
 * closed, interstitial off.
 */

import type { ReliabilityLabel, SceneDocument, SummaryMode } from './types.js';

export type ActiveView = 'graph' | 'summary';

export interface ViewState {
  activeView: ActiveView;
  mode: SummaryMode;
  labelsShown: ReadonlySet<ReliabilityLabel>;
  showOuterRing: boolean;
  showOutbound: boolean;
  twitterOpen: boolean;
  hoveredNode: string | null;
  interstitial: boolean;
}

export const ALL_LABELS: ReliabilityLabel[] = ['controversial', 'verified', 'unlabeled'];

export function defaultViewState(): ViewState {
  return {
    activeView: 'graph',
    mode: 'normalized',
    labelsShown: new Set(ALL_LABELS),
    showOuterRing: true,
    showOutbound: false,
    twitterOpen: false,
    hoveredNode: null,
    interstitial: false,
  };
}

/** State matching a freshly fetched scene's resolved options. */
export function stateForScene(scene: SceneDocument, previous?: ViewState): ViewState {
  const base = previous ?? defaultViewState();
  return {
    ...base,
    mode: scene.options_echo.mode,
    labelsShown: new Set(scene.options_echo.labels),
    showOutbound: scene.options_echo.direction === 'both',
    hoveredNode: null,
  };
}

export function setView(state: ViewState, view: ActiveView): ViewState {
  return { ...state, activeView: view };
}

export function setMode(state: ViewState, mode: SummaryMode): ViewState {
  return { ...state, mode };
}

export function toggleLabel(state: ViewState, label: ReliabilityLabel): ViewState {
  const labelsShown = new Set(state.labelsShown);
  if (labelsShown.has(label)) {
    labelsShown.delete(label);
  } else {
    labelsShown.add(label);
  }
  return { ...state, labelsShown };
}

export function toggleOuterRing(state: ViewState): ViewState {
  return { ...state, showOuterRing: !state.showOuterRing };
}

export function toggleOutbound(state: ViewState): ViewState {
  return { ...state, showOutbound: !state.showOutbound };
}

export function toggleTwitter(state: ViewState): ViewState {
  return { ...state, twitterOpen: !state.twitterOpen };
}

export function setHoveredNode(state: ViewState, domain: string | null): ViewState {
  return { ...state, hoveredNode: domain };
}

export function setInterstitial(state: ViewState, interstitial: boolean): ViewState {
  return { ...state, interstitial };
}
