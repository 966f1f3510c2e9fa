import { describe, expect, test } from 'vitest';

import { renderAdjudicateScreen, renderApp, renderReportsScreen } from '../src/render.js';
import { ProtocolViolation } from '../src/store.js';
import { RATER_TOKENS, adminClient, completeRound1, loadWalkthrough, makeServer, storeFor } from './helpers.js';

describe('scripted protocol walkthrough', () => {
  test('ten-item session: round 1, planted dissents, adjudication, and verdicts identical to the committed replay', async () => {
    const fixture = loadWalkthrough();
    const server = makeServer(fixture);
    expect(fixture.items).toHaveLength(10);

    // --- round 1: each rater completes the rating screen ---
    for (const [token, rater] of RATER_TOKENS) {
      const store = storeFor(server, token);
      await completeRound1(store, fixture, rater);
      expect(store.screen).toBe('rate');
      expect(store.session?.progress.general_item_quality).toEqual({ done: 10, total: 10 });
      expect(store.session?.progress.reasoning_quality).toEqual({ done: 10, total: 10 });
    }

    // --- admin opens round 2; the two planted lone dissents surface ---
    const admin = adminClient(server);
    await admin.advance(fixture.session_id, 'open_round2');
    const expectedSizes = Object.fromEntries(
      fixture.raters.map((rater) => [rater, (fixture.expected_queues[rater] ?? []).length]),
    );
    expect(expectedSizes).toEqual({ 'rater-a': 1, 'rater-b': 0, 'rater-c': 1 });

    // --- each rater reviews their queue through the adjudication screen ---
    for (const [token, rater] of RATER_TOKENS) {
      const store = storeFor(server, token);
      await store.load();
      expect(store.screen).toBe('adjudicate');
      const expected = fixture.expected_queues[rater] ?? [];
      expect(
        store.queue.map(({ item_id, criterion, own_rating, others_agree_on }) => ({
          item_id,
          criterion,
          own_rating,
          others_agree_on,
        })),
      ).toEqual(expected);

      if (expected.length === 0) {
        expect(renderAdjudicateScreen(store)).toContain('Nothing to review');
        continue;
      }
      const before = store.pendingQueue().length;
      for (const entry of store.pendingQueue()) {
        expect(entry.others_agree_on).not.toBeNull();
        await store.adoptConsensus(entry);
      }
      // queue shrinks monotonically to empty
      expect(store.pendingQueue().length).toBeLessThan(before);
      expect(store.pendingQueue()).toHaveLength(0);
      expect(renderAdjudicateScreen(store)).toContain('Queue complete');
    }

    // --- finalize and compare the reports screen with the committed replay ---
    await admin.advance(fixture.session_id, 'finalize');
    const store = storeFor(server, 'tok-a');
    await store.load();
    expect(store.screen).toBe('reports');
    expect(store.report?.verdicts).toEqual(fixture.expected_verdicts);

    const html = renderReportsScreen(store);
    const accepted = Object.values(fixture.expected_verdicts).filter((v) => v.accepted_quality === 1).length;
    expect(html).toContain(`${accepted} of 10 items accepted for quality`);
    for (const [itemId, verdict] of Object.entries(fixture.expected_verdicts)) {
      expect(html).toContain(itemId);
      if (verdict.final_observed_type) expect(html).toContain(verdict.final_observed_type);
    }

    // --- the UI never issued a request the server had to reject ---
    for (const [token] of RATER_TOKENS) {
      const traffic = server.traffic.get(token) ?? [];
      expect(traffic.length).toBeGreaterThan(0);
      for (const record of traffic) {
        expect(record.status, `${record.method} ${record.path}`).toBeLessThan(400);
      }
    }
  });

  test('controls outside legal states are refused locally, without traffic', async () => {
    const fixture = loadWalkthrough();
    const server = makeServer(fixture);
    const store = storeFor(server, 'tok-a');
    await store.load();
    expect(store.state).toBe('round1_open');

    const sent = () => (server.traffic.get('tok-a') ?? []).length;
    const before = sent();

    // round-2 actions during round 1 never reach the wire
    await expect(
      store.keepOwn({ item_id: 'x', criterion: 'general_item_quality', own_rating: '1', others_agree_on: '0', resolved: false }),
    ).rejects.toThrow(ProtocolViolation);
    expect(sent()).toBe(before);

    // submit without complete answers never reaches the wire
    await expect(store.submitCurrent()).rejects.toThrow(ProtocolViolation);
    expect(sent()).toBe(before);

    // queue fetch during round 1 renders the empty state instead of erroring
    await store.refreshQueue();
    expect(store.queue).toEqual([]);
    store.screen = 'adjudicate';
    expect(renderApp(store)).toContain('Round 2 has not opened yet');
  });

  test('reports screen shows a placeholder before finalization', async () => {
    const fixture = loadWalkthrough();
    const server = makeServer(fixture);
    const store = storeFor(server, 'tok-b');
    await store.load();
    await store.openReports();
    expect(store.report).toBeNull();
    expect(renderReportsScreen(store)).toContain('Results appear here once the session is finalized');
  });
});
