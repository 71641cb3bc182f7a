/** Application bootstrap: fetch the scene for ?site=… and keep the view,
 * state, and server in step as the user explores. */

import { SceneClient } from './api.js';
import { renderMainWindow, type UiHandlers } from './dom.js';
import { buildGraphModel } from './graph.js';
import { applyInterstitial, buildOverlayModel } from './overlay.js';
import {
  buildSettingsModel,
  changeLabel,
  changeMode,
  changeOuterRing,
  changeOutbound,
  changeView,
  type SettingsAction,
} from './settings.js';
import { defaultViewState, setHoveredNode, setInterstitial, stateForScene, toggleTwitter, type ViewState } from './state.js';
import { buildSummaryModel } from './summaryView.js';
import { buildTwitterModel } from './twitterView.js';
import type { SceneDocument } from './types.js';

const VIEWPORT = { width: 720, height: 560 };

export class App {
  private state: ViewState = defaultViewState();
  private scene: SceneDocument | null = null;
  private errorMessage: string | null = null;

  constructor(
    private readonly doc: Document,
    private readonly mount: HTMLElement,
    private readonly client: SceneClient,
  ) {}

  async start(site: string, interstitial: boolean): Promise<void> {
    this.scene = await this.client.fetchScene(site);
    this.state = setInterstitial(stateForScene(this.scene), interstitial);
    this.render();
  }

  private handlers(): UiHandlers {
    return {
      onViewChange: (view) => this.apply(changeView(this.state, view)),
      onModeChange: (mode) => this.apply(changeMode(this.state, mode)),
      onLabelToggle: (label) => this.apply(changeLabel(this.scene!, this.state, label)),
      onOuterRingToggle: () => this.apply(changeOuterRing(this.state)),
      onOutboundToggle: () => this.apply(changeOutbound(this.scene!, this.state)),
      onTwitterToggle: () => {
        this.state = toggleTwitter(this.state);
        this.render();
      },
      onNodeHover: (domain) => {
        this.state = setHoveredNode(this.state, domain);
        this.render();
      },
    };
  }

  private apply(action: SettingsAction): void {
    this.state = action.state;
    if (action.kind === 'client') {
      this.errorMessage = null;
      this.render();
      return;
    }
    this.render(); // show the new control state immediately
    this.client
      .fetchScene(this.scene!.center, action.query)
      .then((scene) => {
        this.scene = scene;
        this.state = setInterstitial(
          { ...stateForScene(scene, this.state), activeView: this.state.activeView, twitterOpen: this.state.twitterOpen },
          this.state.interstitial,
        );
        this.errorMessage = null;
        this.render();
      })
      .catch((error: unknown) => {
        if (error instanceof DOMException && error.name === 'AbortError') return;
        // keep the previous scene; surface a non-blocking banner
        this.errorMessage = 'could not update the view; showing the previous data';
        this.render();
      });
  }

  render(): void {
    if (!this.scene) return;
    const overlay = buildOverlayModel(this.scene.center, this.state.interstitial);
    const window_ = renderMainWindow(
      this.doc,
      {
        siteNameText: overlay.siteNameText,
        state: this.state,
        graph: buildGraphModel(this.scene, this.state, VIEWPORT),
        summary: buildSummaryModel(this.scene, this.state),
        twitter: buildTwitterModel(this.scene, this.state),
        settings: buildSettingsModel(this.state),
        sources: this.scene.label_sources_notice,
        errorMessage: this.errorMessage,
        viewport: VIEWPORT,
      },
      this.handlers(),
    );
    this.mount.replaceChildren(window_);
  }
}

export function boot(doc: Document): void {
  const params = new URLSearchParams(doc.defaultView?.location.search ?? '');
  const site = params.get('site') ?? 'example.com';
  const interstitial = params.get('interstitial') === '1';

  const page = doc.getElementById('page') ?? doc.body;
  const overlayModel = buildOverlayModel(site, interstitial);
  const host = interstitial
    ? applyInterstitial(page as HTMLElement, overlayModel, doc)
    : (doc.getElementById('app') ?? doc.body);

  const app = new App(doc, host as HTMLElement, new SceneClient());
  void app.start(site, interstitial).catch((error: unknown) => {
    host.textContent = `failed to load scene: ${String(error)}`;
  });
}

if (typeof document !== 'undefined' && document.currentScript) {
  boot(document);
}
