/** DOM bindings: turn render models into SVG/HTML inside the main window. */

import { LABEL_COLORS } from './colors.js';
import type { GraphRenderModel } from './graph.js';
import type { SettingsPanelModel } from './settings.js';
import type { ViewState } from './state.js';
import { arcPath, type SummaryRenderModel } from './summaryView.js';
import type { TwitterRenderModel } from './twitterView.js';
import type { ReliabilityLabel, SummaryMode } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

export const NOTICE_PREFIX = 'Reliability labels are based on credible sources: ';

export interface UiHandlers {
  onViewChange(view: 'graph' | 'summary'): void;
  onModeChange(mode: SummaryMode): void;
  onLabelToggle(label: ReliabilityLabel): void;
  onOuterRingToggle(): void;
  onOutboundToggle(): void;
  onTwitterToggle(): void;
  onNodeHover(domain: string | null): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const element = doc.createElement(tag);
  if (className) element.className = className;
  if (text !== undefined) element.textContent = text;
  return element;
}

export function renderGraph(doc: Document, model: GraphRenderModel, viewport: { width: number; height: number }, handlers: UiHandlers): SVGSVGElement {
  const svg = doc.createElementNS(SVG_NS, 'svg') as SVGSVGElement;
  svg.setAttribute('viewBox', `0 0 ${viewport.width} ${viewport.height}`);
  svg.setAttribute('class', 'graph-view');

  for (const edge of model.edges) {
    const path = doc.createElementNS(SVG_NS, 'path');
    path.setAttribute('d', edge.path);
    path.setAttribute('fill', 'none');
    path.setAttribute('class', edge.animated ? 'edge animated' : 'edge');
    path.dataset.src = edge.src;
    path.dataset.dst = edge.dst;
    svg.appendChild(path);
  }

  for (const node of model.nodes) {
    const circle = doc.createElementNS(SVG_NS, 'circle');
    circle.setAttribute('cx', String(node.x));
    circle.setAttribute('cy', String(node.y));
    circle.setAttribute('r', String(node.r));
    circle.setAttribute('fill', node.color);
    circle.setAttribute('class', node.isCenter ? 'node center' : `node hop${node.hop}`);
    circle.dataset.domain = node.domain;
    circle.addEventListener('mouseenter', () => handlers.onNodeHover(node.domain));
    circle.addEventListener('mouseleave', () => handlers.onNodeHover(null));
    const title = doc.createElementNS(SVG_NS, 'title');
    title.textContent = `${node.domain} (${node.label})`;
    circle.appendChild(title);
    svg.appendChild(circle);
  }

  if (model.emptyNotice) {
    const text = doc.createElementNS(SVG_NS, 'text');
    text.setAttribute('x', String(viewport.width / 2));
    text.setAttribute('y', String(viewport.height / 2 + 40));
    text.setAttribute('class', 'empty-notice');
    text.textContent = model.emptyNotice;
    svg.appendChild(text);
  }
  return svg;
}

export function renderSummary(doc: Document, model: SummaryRenderModel): HTMLElement {
  const container = el(doc, 'div', 'summary-view');

  const statement = el(doc, 'p', 'statement');
  const highlight = el(doc, 'strong', 'statement-count', model.statementHighlight);
  statement.appendChild(highlight);
  statement.appendChild(doc.createTextNode(model.statementRest));
  container.appendChild(statement);

  if (model.fallbackPopup) {
    const popup = el(doc, 'div', 'fallback-popup', model.fallbackPopup);
    popup.setAttribute('role', 'alert');
    container.appendChild(popup);
  }

  const size = 320;
  const svg = doc.createElementNS(SVG_NS, 'svg') as SVGSVGElement;
  svg.setAttribute('viewBox', `0 0 ${size} ${size}`);
  svg.setAttribute('class', 'doughnut');
  const radii = { inner: [70, 105] as const, outer: [115, 150] as const };
  for (const arc of model.arcs) {
    const [rIn, rOut] = radii[arc.ring];
    const path = doc.createElementNS(SVG_NS, 'path');
    path.setAttribute('d', arcPath(size / 2, size / 2, rIn, rOut, arc.startAngle, arc.sweep));
    path.setAttribute('fill', arc.color);
    path.setAttribute('class', `arc ${arc.ring} ${arc.label}`);
    const title = doc.createElementNS(SVG_NS, 'title');
    title.textContent = arc.tooltip;
    path.appendChild(title);
    svg.appendChild(path);
  }
  const center = doc.createElementNS(SVG_NS, 'text');
  center.setAttribute('x', String(size / 2));
  center.setAttribute('y', String(size / 2));
  center.setAttribute('class', 'center-percent');
  center.setAttribute('text-anchor', 'middle');
  center.textContent = model.centerPercentText;
  svg.appendChild(center);
  container.appendChild(svg);
  return container;
}

export function renderTwitter(doc: Document, model: TwitterRenderModel): HTMLElement {
  const window_ = el(doc, 'aside', 'twitter-window');
  window_.hidden = !model.visible;
  window_.appendChild(el(doc, 'h2', undefined, 'Twitter activity'));
  if (model.emptyNotice) {
    window_.appendChild(el(doc, 'p', 'twitter-empty', model.emptyNotice));
    return window_;
  }
  window_.appendChild(el(doc, 'p', 'twitter-percent', model.percentText));
  window_.appendChild(el(doc, 'p', 'twitter-bots', model.botText));
  window_.appendChild(el(doc, 'p', 'twitter-accounts', model.accountsText));
  return window_;
}

export function renderSettings(doc: Document, model: SettingsPanelModel, handlers: UiHandlers): HTMLElement {
  const panel = el(doc, 'form', 'settings-panel');

  const addToggle = (
    className: string,
    labelText: string,
    checked: boolean,
    onChange: () => void,
  ): void => {
    const wrapper = el(doc, 'label', className);
    const box = el(doc, 'input') as HTMLInputElement;
    box.type = 'checkbox';
    box.checked = checked;
    box.addEventListener('change', onChange);
    wrapper.appendChild(box);
    wrapper.appendChild(doc.createTextNode(labelText));
    panel.appendChild(wrapper);
  };

  const viewControl = el(doc, 'label', 'control-view');
  viewControl.appendChild(doc.createTextNode('View '));
  const viewSelect = el(doc, 'select') as HTMLSelectElement;
  for (const view of ['graph', 'summary'] as const) {
    const option = el(doc, 'option', undefined, view);
    option.value = view;
    option.selected = model.activeView === view;
    viewSelect.appendChild(option);
  }
  viewSelect.addEventListener('change', () => handlers.onViewChange(viewSelect.value as 'graph' | 'summary'));
  viewControl.appendChild(viewSelect);
  panel.appendChild(viewControl);

  const modeControl = el(doc, 'label', 'control-mode');
  modeControl.appendChild(doc.createTextNode('Summary mode '));
  const modeSelect = el(doc, 'select') as HTMLSelectElement;
  for (const mode of ['normalized', 'absolute'] as const) {
    const option = el(doc, 'option', undefined, mode);
    option.value = mode;
    option.selected = model.mode === mode;
    modeSelect.appendChild(option);
  }
  modeSelect.addEventListener('change', () => handlers.onModeChange(modeSelect.value as SummaryMode));
  modeControl.appendChild(modeSelect);
  panel.appendChild(modeControl);

  for (const entry of model.labels) {
    addToggle(`control-label-${entry.label}`, entry.label, entry.shown, () =>
      handlers.onLabelToggle(entry.label),
    );
  }
  addToggle('control-outer-ring', 'show 2-hop ring', model.showOuterRing, handlers.onOuterRingToggle);
  addToggle('control-outbound', 'show sites this site links to', model.showOutbound, handlers.onOutboundToggle);
  return panel;
}

export function renderSourcesNotice(doc: Document, sources: string[]): HTMLElement {
  const notice = el(doc, 'footer', 'sources-notice');
  notice.appendChild(doc.createTextNode(NOTICE_PREFIX));
  sources.forEach((name, i) => {
    const link = el(doc, 'a', 'source-link', name) as HTMLAnchorElement;
    link.href = `https://duckduckgo.com/?q=${encodeURIComponent(name)}`;
    link.target = '_blank';
    link.rel = 'noopener';
    notice.appendChild(link);
    if (i < sources.length - 1) notice.appendChild(doc.createTextNode(', '));
  });
  notice.appendChild(doc.createTextNode('.'));
  return notice;
}

export function renderErrorBanner(doc: Document, message: string): HTMLElement {
  const banner = el(doc, 'div', 'error-banner', message);
  banner.setAttribute('role', 'status');
  return banner;
}

export interface MainWindowModels {
  siteNameText: string;
  state: ViewState;
  graph: GraphRenderModel;
  summary: SummaryRenderModel;
  twitter: TwitterRenderModel;
  settings: SettingsPanelModel;
  sources: string[];
  errorMessage: string | null;
  viewport: { width: number; height: number };
}

export function renderMainWindow(doc: Document, models: MainWindowModels, handlers: UiHandlers): HTMLElement {
  const root = el(doc, 'div', 'main-window');

  const header = el(doc, 'header', 'header');
  header.appendChild(el(doc, 'h1', 'site-name', models.siteNameText));
  const twitterButton = el(doc, 'button', 'twitter-toggle', 'social media') as HTMLButtonElement;
  twitterButton.type = 'button';
  twitterButton.addEventListener('click', handlers.onTwitterToggle);
  header.appendChild(twitterButton);
  root.appendChild(header);

  if (models.errorMessage) {
    root.appendChild(renderErrorBanner(doc, models.errorMessage));
  }

  const content = el(doc, 'div', 'content');
  if (models.state.activeView === 'graph') {
    content.appendChild(renderGraph(doc, models.graph, models.viewport, handlers));
  } else {
    content.appendChild(renderSummary(doc, models.summary));
  }
  content.appendChild(renderTwitter(doc, models.twitter));
  root.appendChild(content);

  root.appendChild(renderSettings(doc, models.settings, handlers));
  root.appendChild(renderSourcesNotice(doc, models.sources));

  const legend = el(doc, 'div', 'legend');
  for (const [label, color] of Object.entries(LABEL_COLORS)) {
    const item = el(doc, 'span', 'legend-item', label);
    item.style.borderColor = color;
    legend.appendChild(item);
  }
  root.appendChild(legend);
  return root;
}
