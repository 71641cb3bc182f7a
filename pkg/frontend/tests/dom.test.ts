import { describe, expect, it, vi } from 'vitest';

import { App } from '../src/main.js';
import { NOTICE_PREFIX, renderMainWindow, type UiHandlers } from '../src/dom.js';
import { buildGraphModel } from '../src/graph.js';
import { buildSettingsModel } from '../src/settings.js';
import { defaultViewState, toggleTwitter, type ViewState } from '../src/state.js';
import { buildSummaryModel } from '../src/summaryView.js';
import { buildTwitterModel } from '../src/twitterView.js';
import type { SceneDocument } from '../src/types.js';
import { loadScene } from './fixtures.js';

const VIEWPORT = { width: 720, height: 560 };
const scene = loadScene('scene_x_default');

function noopHandlers(): UiHandlers {
  return {
    onViewChange: vi.fn(),
    onModeChange: vi.fn(),
    onLabelToggle: vi.fn(),
    onOuterRingToggle: vi.fn(),
    onOutboundToggle: vi.fn(),
    onTwitterToggle: vi.fn(),
    onNodeHover: vi.fn(),
  };
}

function renderWindow(state: ViewState = defaultViewState(), errorMessage: string | null = null) {
  return renderMainWindow(
    document,
    {
      siteNameText: scene.center,
      state,
      graph: buildGraphModel(scene, state, VIEWPORT),
      summary: buildSummaryModel(scene, state),
      twitter: buildTwitterModel(scene, state),
      settings: buildSettingsModel(state),
      sources: scene.label_sources_notice,
      errorMessage,
      viewport: VIEWPORT,
    },
    noopHandlers(),
  );
}

describe('main window', () => {
  it('draws the graph view by default with animated default edges', () => {
    const root = renderWindow();
    expect(root.querySelectorAll('circle.node')).toHaveLength(7);
    expect(root.querySelectorAll('path.edge')).toHaveLength(7);
    expect(root.querySelectorAll('path.edge.animated')).toHaveLength(3);
  });

  it('switches to the summary view with the highlighted statement', () => {
    const root = renderWindow({ ...defaultViewState(), activeView: 'summary' });
    expect(root.querySelector('svg.graph-view')).toBeNull();
    expect(root.querySelector('.statement-count')?.textContent).toBe('2 controversial websites');
    expect(root.querySelector('.center-percent')?.textContent).toBe('33%');
    expect(root.querySelectorAll('path.arc').length).toBeGreaterThan(0);
  });

  it('keeps the twitter window hidden until toggled', () => {
    const closed = renderWindow();
    expect(closed.querySelector<HTMLElement>('.twitter-window')?.hidden).toBe(true);
    const open = renderWindow(toggleTwitter(defaultViewState()));
    expect(open.querySelector<HTMLElement>('.twitter-window')?.hidden).toBe(false);
  });

  it('renders the label-source notice with clickable sources', () => {
    const root = renderWindow();
    const notice = root.querySelector('.sources-notice');
    expect(notice?.textContent).toContain(NOTICE_PREFIX);
    const links = notice?.querySelectorAll('a.source-link') ?? [];
    expect([...links].map((a) => a.textContent)).toEqual(scene.label_sources_notice);
  });

  it('shows the fallback popup when the summary model calls for it', () => {
    const fallbackScene = loadScene('scene_hub_absolute_fallback');
    const state: ViewState = { ...defaultViewState(), activeView: 'summary', mode: 'absolute' };
    const root = renderMainWindow(
      document,
      {
        siteNameText: fallbackScene.center,
        state,
        graph: buildGraphModel(fallbackScene, state, VIEWPORT),
        summary: buildSummaryModel(fallbackScene, state),
        twitter: buildTwitterModel(fallbackScene, state),
        settings: buildSettingsModel(state),
        sources: fallbackScene.label_sources_notice,
        errorMessage: null,
        viewport: VIEWPORT,
      },
      noopHandlers(),
    );
    expect(root.querySelector('.fallback-popup')).not.toBeNull();
  });
});

class FakeClient {
  calls: Array<{ domain: string; query: unknown }> = [];

  constructor(private readonly responses: Array<SceneDocument | Error>) {}

  fetchScene(domain: string, query: unknown = {}): Promise<SceneDocument> {
    this.calls.push({ domain, query });
    const next = this.responses.shift();
    if (next instanceof Error) return Promise.reject(next);
    if (!next) return Promise.reject(new Error('no scripted response'));
    return Promise.resolve(next);
  }
}

async function tick(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}

describe('App', () => {
  it('renders the fetched scene into the mount point', async () => {
    const mount = document.createElement('div');
    const app = new App(document, mount, new FakeClient([scene]) as never);
    await app.start('x.test', false);
    expect(mount.querySelector('.main-window')).not.toBeNull();
    expect(mount.querySelector('.site-name')?.textContent).toBe('x.test');
  });

  it('masks the site name in interstitial mode', async () => {
    const mount = document.createElement('div');
    const app = new App(document, mount, new FakeClient([scene]) as never);
    await app.start('x.test', true);
    expect(mount.querySelector('.site-name')?.textContent).not.toContain('x.test');
  });

  it('keeps the prior scene and shows a banner when a refetch fails', async () => {
    const mount = document.createElement('div');
    const app = new App(document, mount, new FakeClient([scene, new Error('boom')]) as never);
    await app.start('x.test', false);

    const outbound = mount.querySelector<HTMLInputElement>('.control-outbound input');
    outbound?.dispatchEvent(new Event('change'));
    await tick();

    expect(mount.querySelector('.error-banner')).not.toBeNull();
    expect(mount.querySelectorAll('circle.node').length).toBeGreaterThan(0);
  });

  it('replaces the scene after a successful direction refetch', async () => {
    const both = loadScene('scene_x_both');
    const mount = document.createElement('div');
    const client = new FakeClient([scene, both]);
    const app = new App(document, mount, client as never);
    await app.start('x.test', false);

    const outbound = mount.querySelector<HTMLInputElement>('.control-outbound input');
    outbound?.dispatchEvent(new Event('change'));
    await tick();

    expect(client.calls).toHaveLength(2);
    expect((client.calls[1]?.query as { direction?: string }).direction).toBe('both');
    const domains = [...mount.querySelectorAll('circle.node')].map(
      (c) => (c as SVGCircleElement).dataset.domain,
    );
    expect(domains).toContain('d.test'); // outbound neighbor now drawn
    expect(mount.querySelector('.error-banner')).toBeNull();
  });
});
