import { describe, expect, test } from 'vitest';

import { renderApp } from '../src/render.js';
import { completeRound1, jsonNodes, loadWalkthrough, makeServer, storeFor } from './helpers.js';

describe('round-1 blindness', () => {
  test('no response rendered during a full round-1 session contains another rater\'s verdict', async () => {
    const fixture = loadWalkthrough();
    const server = makeServer(fixture);

    // raters b and c rate everything first, planting distinctive notes on
    // deficiency verdicts so any leak is string-detectable
    for (const [token, rater] of [
      ['tok-b', 'rater-b'],
      ['tok-c', 'rater-c'],
    ] as const) {
      const store = storeFor(server, token);
      await store.load();
      for (let i = 0; i < store.items.length; i++) {
        const item = store.items[i]!;
        store.goTo(i);
        store.updateDraft(item.item_id, {
          quality: 0,
          note: `confidential-deficiency-${rater}`,
          observedType: 'factual_literal',
          reasoning: 0,
        });
        await store.submitCurrent();
        store.goTo(Math.min(i + 1, store.items.length - 1));
      }
    }

    // now rater-a's complete scripted round-1 session, traffic intercepted
    const store = storeFor(server, 'tok-a');
    await completeRound1(store, fixture, 'rater-a');
    await store.refreshQueue();
    renderApp(store);

    const traffic = server.traffic.get('tok-a') ?? [];
    expect(traffic.length).toBeGreaterThan(10);
    for (const record of traffic) {
      expect(record.body).not.toContain('confidential-deficiency-rater-b');
      expect(record.body).not.toContain('confidential-deficiency-rater-c');
      for (const node of jsonNodes(JSON.parse(record.body))) {
        if (node && typeof node === 'object' && 'rater_id' in node && 'verdict' in node) {
          expect((node as { rater_id: string }).rater_id).toBe('rater-a');
        }
      }
    }
  });

  test('round-2 queue exposes the anonymous consensus but no identities', async () => {
    const fixture = loadWalkthrough();
    const server = makeServer(fixture);
    for (const rater of fixture.raters) {
      const token = `tok-${rater.slice(-1)}`;
      const store = storeFor(server, token);
      await completeRound1(store, fixture, rater);
    }
    const { adminClient } = await import('./helpers.js');
    await adminClient(server).advance(fixture.session_id, 'open_round2');

    const store = storeFor(server, 'tok-a');
    await store.load();
    expect(store.queue).toHaveLength(1);
    const entry = store.queue[0]!;
    expect(entry.others_agree_on).not.toBeNull();
    const queueTraffic = (server.traffic.get('tok-a') ?? []).filter((r) => r.path.endsWith('/queue'));
    expect(queueTraffic.length).toBeGreaterThan(0);
    for (const record of queueTraffic) {
      expect(record.body).not.toContain('rater-b');
      expect(record.body).not.toContain('rater-c');
    }
    const html = renderApp(store);
    expect(html).toContain('the other two raters agree on');
    expect(html).not.toContain('rater-b');
    expect(html).not.toContain('rater-c');
  });
});
