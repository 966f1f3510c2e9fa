import { readFileSync } from 'node:fs';

import { ApiClient } from '../src/api.js';
import { MemoryStorage, RatingStore } from '../src/store.js';
import type { StoredRating } from '../src/types.js';
import { MockServer, type FixtureItem, type FixturePassage } from './mock_server.js';

export interface WalkthroughFixture {
  session_id: string;
  raters: string[];
  items: FixtureItem[];
  passages: FixturePassage[];
  round1: StoredRating[];
  round2: StoredRating[];
  expected_queues: Record<string, { item_id: string; criterion: string; own_rating: string; others_agree_on: string | null }[]>;
  expected_verdicts: Record<
    string,
    { accepted_quality: number; matched_type: number; final_observed_type: string | null; reasoning_ok: number | null }
  >;
}

export const TOKENS: Record<string, { rater_id: string; admin?: boolean }> = {
  'tok-a': { rater_id: 'rater-a' },
  'tok-b': { rater_id: 'rater-b' },
  'tok-c': { rater_id: 'rater-c' },
  'tok-admin': { rater_id: 'admin', admin: true },
};

export const RATER_TOKENS: [string, string][] = [
  ['tok-a', 'rater-a'],
  ['tok-b', 'rater-b'],
  ['tok-c', 'rater-c'],
];

export function loadWalkthrough(): WalkthroughFixture {
  const url = new URL('../../fixtures/ui_session/walkthrough.json', import.meta.url);
  return JSON.parse(readFileSync(url, 'utf-8')) as WalkthroughFixture;
}

export function makeServer(fixture: WalkthroughFixture): MockServer {
  return new MockServer(fixture.session_id, fixture.items, fixture.passages, fixture.raters, TOKENS);
}

export function storeFor(server: MockServer, token: string): RatingStore {
  return new RatingStore(new ApiClient(server.transportFor(token)), server.sessionId, new MemoryStorage());
}

export function adminClient(server: MockServer): ApiClient {
  return new ApiClient(server.transportFor('tok-admin'));
}

/** Apply one rater's fixture round-1 answers for one item to the store's draft. */
export function applyFixtureDraft(store: RatingStore, fixture: WalkthroughFixture, rater: string, itemId: string): void {
  for (const record of fixture.round1) {
    if (record.rater_id !== rater || record.item_id !== itemId) continue;
    if (record.criterion === 'general_item_quality') {
      store.updateDraft(itemId, { quality: record.verdict, note: record.note ?? '' });
    } else if (record.criterion === 'inference_type_accuracy') {
      store.updateDraft(itemId, { observedType: record.observed_type });
    } else {
      store.updateDraft(itemId, { reasoning: record.verdict });
    }
  }
}

/** Drive one rater's full round-1 session through the UI store. */
export async function completeRound1(store: RatingStore, fixture: WalkthroughFixture, rater: string): Promise<void> {
  await store.load();
  let guard = 0;
  while (store.items.some((item) => !store.isRated(item.item_id))) {
    if (guard++ > 100) throw new Error('round 1 did not converge');
    const item = store.currentItem;
    if (!item) throw new Error('no current item');
    applyFixtureDraft(store, fixture, rater, item.item_id);
    await store.submitCurrent();
  }
}

/** Every value in a parsed JSON tree, depth first. */
export function* jsonNodes(node: unknown): Generator<unknown> {
  yield node;
  if (Array.isArray(node)) {
    for (const child of node) yield* jsonNodes(child);
  } else if (node && typeof node === 'object') {
    for (const child of Object.values(node)) yield* jsonNodes(child);
  }
}
