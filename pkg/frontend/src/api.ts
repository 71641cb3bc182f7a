/** Scene fetching with at most one request in flight: a newer query
 * aborts the older one, so the last answer always wins. */

import type { SceneQuery } from './settings.js';
import type { SceneDocument } from './types.js';

export class SceneClient {
  private inflight: AbortController | null = null;

  constructor(private readonly baseUrl: string = '/api/v1') {}

  async fetchScene(domain: string, query: SceneQuery = {}): Promise<SceneDocument> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;

    const params = new URLSearchParams();
    for (const [key, value] of Object.entries(query)) {
      if (value !== undefined) params.set(key, value);
    }
    const qs = params.toString();
    const url = `${this.baseUrl}/scene/${encodeURIComponent(domain)}${qs ? `?${qs}` : ''}`;

    const response = await fetch(url, { signal: controller.signal });
    if (!response.ok) {
      throw new Error(`scene request failed with status ${response.status}`);
    }
    return (await response.json()) as SceneDocument;
  }
}
