/** Settings panel: the five controls and what each change costs.
 *
 * View, mode, label, and outer-ring changes apply client-side from the
 * scene already held; showing outbound links (and re-enabling a label the
 * current scene was fetched without) needs a refetch with updated query
 * options.
 */

import {
  setMode,
  setView,
  toggleLabel,
  toggleOuterRing,
  toggleOutbound,
  type ActiveView,
  type ViewState,
} from './state.js';
import type { ReliabilityLabel, SceneDocument, SummaryMode } from './types.js';

export interface SceneQuery {
  direction?: string;
  hops?: string;
  labels?: string;
  mode?: string;
  seed?: string;
}

export type SettingsAction =
  | { kind: 'client'; state: ViewState }
  | { kind: 'refetch'; state: ViewState; query: SceneQuery };

function queryFor(scene: SceneDocument, state: ViewState): SceneQuery {
  return {
    direction: state.showOutbound ? 'both' : 'in',
    hops: String(scene.options_echo.hops),
    labels: 'controversial,verified,unlabeled',
    mode: state.mode,
    seed: String(scene.options_echo.seed),
  };
}

export function changeView(state: ViewState, view: ActiveView): SettingsAction {
  return { kind: 'client', state: setView(state, view) };
}

export function changeMode(state: ViewState, mode: SummaryMode): SettingsAction {
  return { kind: 'client', state: setMode(state, mode) };
}

export function changeLabel(scene: SceneDocument, state: ViewState, label: ReliabilityLabel): SettingsAction {
  const next = toggleLabel(state, label);
  const enabling = !state.labelsShown.has(label);
  // enabling a label the scene was never fetched with means its nodes are
  // missing from the held graph; everything else is pure presentation
  if (enabling && !scene.graph.label_filter.includes(label)) {
    return { kind: 'refetch', state: next, query: queryFor(scene, next) };
  }
  return { kind: 'client', state: next };
}

export function changeOuterRing(state: ViewState): SettingsAction {
  return { kind: 'client', state: toggleOuterRing(state) };
}

export function changeOutbound(scene: SceneDocument, state: ViewState): SettingsAction {
  const next = toggleOutbound(state);
  return { kind: 'refetch', state: next, query: queryFor(scene, next) };
}

export interface SettingsPanelModel {
  activeView: ActiveView;
  mode: SummaryMode;
  labels: { label: ReliabilityLabel; shown: boolean }[];
  showOuterRing: boolean;
  showOutbound: boolean;
}

export function buildSettingsModel(state: ViewState): SettingsPanelModel {
  const order: ReliabilityLabel[] = ['controversial', 'verified', 'unlabeled'];
  return {
    activeView: state.activeView,
    mode: state.mode,
    labels: order.map((label) => ({ label, shown: state.labelsShown.has(label) })),
    showOuterRing: state.showOuterRing,
    showOutbound: state.showOutbound,
  };
}
