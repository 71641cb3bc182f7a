import { describe, expect, it } from 'vitest';

import { buildGraphModel } from '../src/graph.js';
import { defaultViewState, setHoveredNode, toggleLabel, toggleOuterRing } from '../src/state.js';
import { loadScene } from './fixtures.js';

const VIEWPORT = { width: 720, height: 560 };

const scene = loadScene('scene_x_default');

function model(state = defaultViewState()) {
  return buildGraphModel(scene, state, VIEWPORT);
}

describe('node visibility', () => {
  it('draws the center plus every neighbor by default', () => {
    const nodes = model().nodes;
    expect(nodes.map((n) => n.domain).sort()).toEqual([
      'a.test',
      'b.test',
      'c.test',
      'e.test',
      'f.test',
      'g.test',
      'x.test',
    ]);
    const center = nodes.find((n) => n.isCenter);
    expect(center?.domain).toBe('x.test');
    expect(center?.hop).toBe(0);
  });

  it('hiding a label removes exactly that label s nodes', () => {
    const state = toggleLabel(defaultViewState(), 'unlabeled');
    const domains = new Set(model(state).nodes.map((n) => n.domain));
    expect(domains.has('c.test')).toBe(false);
    expect(domains.has('g.test')).toBe(false);
    expect(domains.has('a.test')).toBe(true);
    expect(domains.has('f.test')).toBe(true);
  });

  it('hiding the outer ring removes exactly the hop-2 nodes', () => {
    const before = model().nodes;
    const after = buildGraphModel(scene, toggleOuterRing(defaultViewState()), VIEWPORT).nodes;
    const removed = before
      .filter((n) => !after.some((m) => m.domain === n.domain))
      .map((n) => n.domain)
      .sort();
    const hop2 = scene.graph.nodes.filter((n) => n.hop === 2).map((n) => n.domain).sort();
    expect(removed).toEqual(hop2);
  });

  it('edges with a hidden endpoint disappear with it', () => {
    const state = toggleLabel(defaultViewState(), 'unlabeled');
    const pairs = model(state).edges.map((e) => `${e.src}>${e.dst}`);
    expect(pairs).not.toContain('c.test>a.test');
    expect(pairs).not.toContain('g.test>b.test');
    expect(pairs).toContain('a.test>x.test');
  });

  it('colors follow the reliability label', () => {
    const byDomain = new Map(model().nodes.map((n) => [n.domain, n.color]));
    expect(byDomain.get('a.test')).toBe('#e8701a');
    expect(byDomain.get('b.test')).toBe('#7a5af8');
    expect(byDomain.get('c.test')).toBe('#9aa0a6');
  });
});

describe('edge animation', () => {
  it('defaults to the center-to-1-hop links', () => {
    const animated = model()
      .edges.filter((e) => e.animated)
      .map((e) => `${e.src}>${e.dst}`)
      .sort();
    expect(animated).toEqual(['a.test>x.test', 'b.test>x.test', 'e.test>x.test']);
  });

  it('hovering a node animates exactly its incident edges', () => {
    const state = setHoveredNode(defaultViewState(), 'a.test');
    const animated = model(state)
      .edges.filter((e) => e.animated)
      .map((e) => `${e.src}>${e.dst}`)
      .sort();
    expect(animated).toEqual(['a.test>b.test', 'a.test>x.test', 'c.test>a.test', 'f.test>a.test']);
  });

  it('same-ring hyperlinks render as curves through their control point', () => {
    const curved = model().edges.filter((e) => e.curved);
    expect(curved.map((e) => `${e.src}>${e.dst}`)).toEqual(['a.test>b.test']);
    expect(curved[0]?.path).toMatch(/^M .+ Q .+$/);
  });

  it('straight edges are line segments', () => {
    const straight = model().edges.find((e) => e.src === 'c.test');
    expect(straight?.path).toMatch(/^M .+ L .+$/);
  });
});

describe('empty scene', () => {
  it('keeps the center and shows the no-connections notice', () => {
    const empty = loadScene('scene_unknown_empty');
    const rendered = buildGraphModel(empty, defaultViewState(), VIEWPORT);
    expect(rendered.nodes).toHaveLength(1);
    expect(rendered.emptyNotice).toBe('no known connections');
  });
});
