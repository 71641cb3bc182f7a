import { describe, expect, it } from 'vitest';

import { defaultViewState, setMode, stateForScene, toggleLabel, toggleOuterRing } from '../src/state.js';
import { arcPath, arcTooltip, buildSummaryModel, splitStatement } from '../src/summaryView.js';
import { loadScene } from './fixtures.js';

const scene = loadScene('scene_x_default');

describe('statement', () => {
  it('highlights the controversial count phrase', () => {
    const model = buildSummaryModel(scene, defaultViewState());
    expect(model.statementHighlight).toBe('2 controversial websites');
    expect(model.statementRest).toBe(' are linking to the site you are visiting');
  });

  it('never changes when labels are toggled', () => {
    const base = buildSummaryModel(scene, defaultViewState());
    let state = defaultViewState();
    for (const label of ['controversial', 'verified', 'unlabeled'] as const) {
      state = toggleLabel(state, label);
      const model = buildSummaryModel(scene, state);
      expect(model.statementHighlight).toBe(base.statementHighlight);
      expect(model.statementRest).toBe(base.statementRest);
    }
  });

  it('splits the zero and singular phrasings too', () => {
    expect(splitStatement('No controversial websites are linking to the site you are visiting')).toEqual({
      highlight: 'No controversial websites',
      rest: ' are linking to the site you are visiting',
    });
    expect(splitStatement('1 controversial website is linking to the site you are visiting')).toEqual({
      highlight: '1 controversial website',
      rest: ' is linking to the site you are visiting',
    });
  });
});

describe('doughnut arcs', () => {
  it('matches the displayed nodes in the default state', () => {
    const model = buildSummaryModel(scene, defaultViewState());
    const inner = model.arcs.filter((a) => a.ring === 'inner');
    expect(inner.map((a) => [a.label, a.count])).toEqual([
      ['controversial', 2],
      ['verified', 1],
    ]);
    const sweepSum = inner.reduce((sum, a) => sum + a.sweep, 0);
    expect(sweepSum).toBeCloseTo(360, 9);
  });

  it('hiding the outer ring drops exactly the outer arcs', () => {
    const on = buildSummaryModel(scene, defaultViewState());
    const off = buildSummaryModel(scene, toggleOuterRing(defaultViewState()));
    expect(on.arcs.some((a) => a.ring === 'outer')).toBe(true);
    expect(off.arcs.some((a) => a.ring === 'outer')).toBe(false);
    expect(off.arcs.filter((a) => a.ring === 'inner')).toEqual(on.arcs.filter((a) => a.ring === 'inner'));
  });

  it('label toggles reshape arcs and the center percentage', () => {
    const state = toggleLabel(toggleLabel(defaultViewState(), 'verified'), 'unlabeled');
    const model = buildSummaryModel(scene, state);
    expect(model.arcs.every((a) => a.label === 'controversial')).toBe(true);
    expect(model.centerPercentText).toBe('100%');
  });

  it('rounds the center percentage to an integer', () => {
    const model = buildSummaryModel(scene, defaultViewState());
    expect(model.centerPercentText).toBe('33%');
  });

  it('absolute mode uses one 3.6 degree segment per site', () => {
    const model = buildSummaryModel(scene, setMode(defaultViewState(), 'absolute'));
    const controversial = model.arcs.find((a) => a.ring === 'inner' && a.label === 'controversial');
    expect(controversial?.sweep).toBeCloseTo(7.2, 9);
    expect(model.effectiveMode).toBe('absolute');
    expect(model.fallbackPopup).toBeNull();
  });

  it('tooltip names the count and ring share', () => {
    expect(arcTooltip(1, 50)).toBe('1 site, 50% of ring');
    expect(arcTooltip(3, 33.3333)).toBe('3 sites, 33% of ring');
  });
});

describe('fallback', () => {
  const fallbackScene = loadScene('scene_hub_absolute_fallback');

  it('pops up on the 101-site absolute scene and renders normalized', () => {
    const state = stateForScene(fallbackScene); // adopts mode=absolute
    const model = buildSummaryModel(fallbackScene, state);
    expect(state.mode).toBe('absolute');
    expect(model.fallbackPopup).not.toBeNull();
    expect(model.effectiveMode).toBe('normalized');
    const sweepSum = model.arcs.filter((a) => a.ring === 'inner').reduce((s, a) => s + a.sweep, 0);
    expect(sweepSum).toBeCloseTo(360, 9);
  });

  it('stays quiet in normalized mode', () => {
    const state = setMode(stateForScene(fallbackScene), 'normalized');
    expect(buildSummaryModel(fallbackScene, state).fallbackPopup).toBeNull();
  });

  it('switching to absolute on an over-100 ring re-triggers the popup', () => {
    const normalized = setMode(stateForScene(fallbackScene), 'normalized');
    const switched = setMode(normalized, 'absolute');
    expect(buildSummaryModel(fallbackScene, switched).fallbackPopup).not.toBeNull();
  });
});

describe('arcPath', () => {
  it('produces a closed two-arc path', () => {
    const d = arcPath(160, 160, 70, 105, 0, 120);
    expect(d.startsWith('M ')).toBe(true);
    expect((d.match(/A /g) ?? []).length).toBe(2);
    expect(d.endsWith('Z')).toBe(true);
    expect(d).not.toMatch(/NaN/);
  });

  it('survives a full-circle sweep', () => {
    const d = arcPath(160, 160, 70, 105, 0, 360);
    expect(d).not.toMatch(/NaN/);
    expect(d.endsWith('Z')).toBe(true);
  });
});
