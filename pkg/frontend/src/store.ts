import { ApiClient } from './api.js';
import type {
  CriterionId,
  HandbookView,
  ItemPayload,
  QueueEntry,
  RatingPayload,
  ReportView,
  SessionView,
} from './types.js';

export type ScreenId = 'rate' | 'adjudicate' | 'reports';

/** Unsent answers for one item; survives tab closure via DraftStorage. */
export interface Draft {
  quality?: 0 | 1;
  note: string;
  observedType?: string;
  reasoning?: 0 | 1;
}

/** Storage interface: localStorage in the browser, a Map in tests. */
export interface DraftStorage {
  get(key: string): string | null;
  set(key: string, value: string): void;
  remove(key: string): void;
}

export class MemoryStorage implements DraftStorage {
  private map = new Map<string, string>();
  get(key: string): string | null {
    return this.map.get(key) ?? null;
  }
  set(key: string, value: string): void {
    this.map.set(key, value);
  }
  remove(key: string): void {
    this.map.delete(key);
  }
}

export class ProtocolViolation extends Error {}

const emptyDraft = (): Draft => ({ note: '' });

/**
 * Client-side protocol state machine. Every action checks the session
 * state first, so the UI cannot issue a request the server would have to
 * reject as a protocol-order violation.
 */
export class RatingStore {
  session: SessionView | null = null;
  items: ItemPayload[] = [];
  handbook: HandbookView | null = null;
  queue: QueueEntry[] = [];
  report: ReportView | null = null;
  screen: ScreenId = 'rate';
  index = 0;
  banner: string | null = null;

  constructor(
    private api: ApiClient,
    private sessionId: string,
    private storage: DraftStorage = new MemoryStorage(),
  ) {}

  async load(): Promise<void> {
    this.session = await this.api.getSession(this.sessionId);
    this.handbook = await this.api.getHandbook();
    this.items = [];
    let cursor: number | null = 0;
    while (cursor !== null) {
      const page = await this.api.getItems(this.sessionId, cursor);
      this.items.push(...page.items);
      cursor = page.next_cursor;
    }
    if (this.session.state === 'round2_open') {
      this.queue = (await this.api.getQueue(this.sessionId)).entries;
      this.screen = 'adjudicate';
    } else if (this.session.state === 'finalized') {
      this.report = await this.api.getReport(this.sessionId);
      this.screen = 'reports';
    } else {
      this.screen = 'rate';
      this.index = this.firstUnratedIndex();
    }
  }

  get state(): string {
    return this.session?.state ?? 'loading';
  }

  get currentItem(): ItemPayload | null {
    return this.items[this.index] ?? null;
  }

  // ----- round 1 -----

  applicableCriteria(item: ItemPayload): CriterionId[] {
    const criteria: CriterionId[] = ['general_item_quality', 'inference_type_accuracy'];
    if (item.reasoning_applicable) criteria.push('reasoning_quality');
    return criteria;
  }

  private draftKey(itemId: string): string {
    return `draft:${this.sessionId}:${this.session?.rater_id ?? ''}:${itemId}`;
  }

  draftFor(itemId: string): Draft {
    const raw = this.storage.get(this.draftKey(itemId));
    if (raw) return JSON.parse(raw) as Draft;
    // pre-fill from the rater's stored round-1 answers on revisit
    const draft = emptyDraft();
    for (const rating of this.session?.own_ratings.round1 ?? []) {
      if (rating.item_id !== itemId) continue;
      if (rating.criterion === 'general_item_quality') {
        draft.quality = rating.verdict;
        draft.note = rating.note ?? '';
      } else if (rating.criterion === 'inference_type_accuracy') {
        draft.observedType = rating.observed_type;
      } else {
        draft.reasoning = rating.verdict;
      }
    }
    return draft;
  }

  updateDraft(itemId: string, patch: Partial<Draft>): Draft {
    const draft = { ...this.draftFor(itemId), ...patch };
    this.storage.set(this.draftKey(itemId), JSON.stringify(draft));
    return draft;
  }

  /** Submit stays disabled until every applicable criterion is answered,
   * and a quality verdict of 0 carries an explanation note. */
  canSubmit(itemId: string): boolean {
    const item = this.items.find((i) => i.item_id === itemId);
    if (!item || this.state !== 'round1_open') return false;
    const draft = this.draftFor(itemId);
    if (draft.quality === undefined) return false;
    if (draft.quality === 0 && draft.note.trim() === '') return false;
    if (!draft.observedType) return false;
    if (item.reasoning_applicable && draft.reasoning === undefined) return false;
    return true;
  }

  isRated(itemId: string): boolean {
    const rated = new Set(
      (this.session?.own_ratings.round1 ?? [])
        .filter((r) => r.item_id === itemId)
        .map((r) => r.criterion),
    );
    const item = this.items.find((i) => i.item_id === itemId);
    if (!item) return false;
    return this.applicableCriteria(item).every((c) => rated.has(c));
  }

  firstUnratedIndex(): number {
    const index = this.items.findIndex((item) => !this.isRated(item.item_id));
    return index === -1 ? 0 : index;
  }

  /** Post the current item's ratings and auto-advance to the next unrated
   * item. Refuses locally when the submit conditions are not met. */
  async submitCurrent(): Promise<void> {
    const item = this.currentItem;
    if (!item) throw new ProtocolViolation('no item selected');
    if (this.state !== 'round1_open') throw new ProtocolViolation(`round 1 is not open (state: ${this.state})`);
    if (!this.canSubmit(item.item_id)) throw new ProtocolViolation('not all applicable criteria are answered');
    const draft = this.draftFor(item.item_id);
    const payloads: RatingPayload[] = [
      {
        item_id: item.item_id,
        criterion: 'general_item_quality',
        verdict: draft.quality as 0 | 1,
        ...(draft.quality === 0 ? { note: draft.note } : {}),
        round: 1,
      },
      {
        item_id: item.item_id,
        criterion: 'inference_type_accuracy',
        verdict: draft.observedType === item.target_type ? 1 : 0,
        observed_type: draft.observedType,
        round: 1,
      },
    ];
    if (item.reasoning_applicable) {
      payloads.push({
        item_id: item.item_id,
        criterion: 'reasoning_quality',
        verdict: draft.reasoning as 0 | 1,
        round: 1,
      });
    }
    for (const payload of payloads) {
      await this.api.postRating(this.sessionId, payload);
    }
    this.storage.remove(this.draftKey(item.item_id));
    this.session = await this.api.getSession(this.sessionId);
    this.index = this.firstUnratedIndex();
  }

  goTo(index: number): void {
    if (index >= 0 && index < this.items.length) this.index = index;
  }

  // ----- round 2 -----

  async refreshQueue(): Promise<void> {
    if (this.state === 'round1_open') {
      this.queue = [];
      return;
    }
    this.queue = (await this.api.getQueue(this.sessionId)).entries;
  }

  pendingQueue(): QueueEntry[] {
    return this.queue.filter((entry) => !entry.resolved);
  }

  private round2Payload(entry: QueueEntry, value: string): RatingPayload {
    if (entry.criterion === 'inference_type_accuracy') {
      const item = this.items.find((i) => i.item_id === entry.item_id);
      return {
        item_id: entry.item_id,
        criterion: entry.criterion,
        verdict: item && value === item.target_type ? 1 : 0,
        observed_type: value,
        round: 2,
      };
    }
    const verdict = Number(value) as 0 | 1;
    const payload: RatingPayload = { item_id: entry.item_id, criterion: entry.criterion, verdict, round: 2 };
    if (entry.criterion === 'general_item_quality' && verdict === 0) {
      payload.note = 'confirmed after review';
    }
    return payload;
  }

  private async resolveEntry(entry: QueueEntry, value: string): Promise<void> {
    if (this.state !== 'round2_open') throw new ProtocolViolation(`round 2 is not open (state: ${this.state})`);
    await this.api.postRating(this.sessionId, this.round2Payload(entry, value));
    this.queue = this.queue.map((e) =>
      e.item_id === entry.item_id && e.criterion === entry.criterion ? { ...e, resolved: true } : e,
    );
    this.session = await this.api.getSession(this.sessionId);
  }

  /** Keep the own round-1 answer (posts an unchanged round-2 record). */
  keepOwn(entry: QueueEntry): Promise<void> {
    return this.resolveEntry(entry, entry.own_rating);
  }

  /** Adopt the other two raters' consensus. */
  adoptConsensus(entry: QueueEntry): Promise<void> {
    if (entry.others_agree_on === null) {
      throw new ProtocolViolation('no consensus exists for this entry; choose a value instead');
    }
    return this.resolveEntry(entry, entry.others_agree_on);
  }

  /** Change to an explicit value (the all-labels-differ case). */
  changeTo(entry: QueueEntry, value: string): Promise<void> {
    return this.resolveEntry(entry, value);
  }

  // ----- reports -----

  async openReports(): Promise<void> {
    this.session = await this.api.getSession(this.sessionId);
    if (this.state !== 'finalized') {
      this.report = null;
      this.screen = 'reports';
      return;
    }
    this.report = await this.api.getReport(this.sessionId);
    this.screen = 'reports';
  }
}
