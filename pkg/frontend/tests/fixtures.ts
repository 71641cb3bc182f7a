/** Golden SceneDocuments produced by the engine; see tools/make_golden.py. */

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { SceneDocument } from '../src/types.js';

const here = dirname(fileURLToPath(import.meta.url));

export function loadScene(name: string): SceneDocument {
  const raw = readFileSync(join(here, 'fixtures', `${name}.json`), 'utf-8');
  return JSON.parse(raw) as SceneDocument;
}
