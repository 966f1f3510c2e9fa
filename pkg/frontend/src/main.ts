import { ApiClient, ApiRequestError, fetchTransport } from './api.js';
import { renderApp } from './render.js';
import { RatingStore, type DraftStorage } from './store.js';

const localDrafts: DraftStorage = {
  get: (key) => window.localStorage.getItem(key),
  set: (key, value) => window.localStorage.setItem(key, value),
  remove: (key) => window.localStorage.removeItem(key),
};

function credentials(): { sessionId: string; token: string } {
  const params = new URLSearchParams(window.location.search);
  const sessionId = params.get('session') ?? window.localStorage.getItem('itemforge.session') ?? '';
  const token = params.get('token') ?? window.localStorage.getItem('itemforge.token') ?? '';
  if (sessionId) window.localStorage.setItem('itemforge.session', sessionId);
  if (token) window.localStorage.setItem('itemforge.token', token);
  return { sessionId, token };
}

async function bootstrap(): Promise<void> {
  const root = document.getElementById('app');
  if (!root) return;
  const { sessionId, token } = credentials();
  if (!sessionId || !token) {
    root.innerHTML = `<main class="empty"><p>Open this page as <code>/?session=&lt;id&gt;&amp;token=&lt;rater token&gt;</code>.</p></main>`;
    return;
  }
  const store = new RatingStore(new ApiClient(fetchTransport('', token)), sessionId, localDrafts);

  const rerender = (): void => {
    root.innerHTML = renderApp(store);
  };

  const guard = async (action: () => Promise<void>): Promise<void> => {
    store.banner = null;
    try {
      await action();
    } catch (error) {
      if (error instanceof ApiRequestError && error.status === 409) {
        store.banner = `The session moved on: ${error.message}. Reloading.`;
        await store.load();
      } else if (error instanceof Error) {
        store.banner = error.message;
      }
    }
    rerender();
  };

  root.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const action = target.dataset.action;
    const screen = target.dataset.screen;
    if (screen) {
      void guard(async () => {
        if (screen === 'reports') await store.openReports();
        else if (screen === 'adjudicate') {
          await store.refreshQueue();
          store.screen = 'adjudicate';
        } else store.screen = 'rate';
      });
      return;
    }
    if (!action) return;
    const item = store.currentItem;
    if (action === 'prev') store.goTo(store.index - 1), rerender();
    else if (action === 'next') store.goTo(store.index + 1), rerender();
    else if (action === 'submit') void guard(() => store.submitCurrent());
    else if (action === 'keep' || action === 'adopt' || action === 'change') {
      const entry = store.queue.find(
        (e) => e.item_id === target.dataset.item && e.criterion === target.dataset.criterion,
      );
      if (!entry) return;
      void guard(() => {
        if (action === 'keep') return store.keepOwn(entry);
        if (action === 'adopt') return store.adoptConsensus(entry);
        return store.changeTo(entry, target.dataset.value ?? '');
      });
    } else if (action === 'submit' && !item) rerender();
  });

  root.addEventListener('change', (event) => {
    const input = event.target as HTMLInputElement;
    const item = store.currentItem;
    if (!item) return;
    if (input.name === 'quality') store.updateDraft(item.item_id, { quality: Number(input.value) as 0 | 1 });
    else if (input.name === 'observed') store.updateDraft(item.item_id, { observedType: input.value });
    else if (input.name === 'reasoning') store.updateDraft(item.item_id, { reasoning: Number(input.value) as 0 | 1 });
    rerender();
  });

  root.addEventListener('input', (event) => {
    const input = event.target as HTMLTextAreaElement;
    const item = store.currentItem;
    if (!item || input.name !== 'note') return;
    store.updateDraft(item.item_id, { note: input.value });
    const submit = root.querySelector<HTMLButtonElement>('button[data-action="submit"]');
    if (submit) submit.disabled = !store.canSubmit(item.item_id);
  });

  // keyboard shortcuts for fast rating: 1/0 quality, g/p/t/f type, r/x reasoning
  document.addEventListener('keydown', (event) => {
    if ((event.target as HTMLElement).tagName === 'TEXTAREA') return;
    if (store.screen !== 'rate') return;
    const item = store.currentItem;
    if (!item) return;
    const byKey: Record<string, () => void> = {
      '1': () => void store.updateDraft(item.item_id, { quality: 1 }),
      '0': () => void store.updateDraft(item.item_id, { quality: 0 }),
      g: () => void store.updateDraft(item.item_id, { observedType: 'gap_filling' }),
      p: () => void store.updateDraft(item.item_id, { observedType: 'pronominal_bridging' }),
      t: () => void store.updateDraft(item.item_id, { observedType: 'text_connecting' }),
      f: () => void store.updateDraft(item.item_id, { observedType: 'factual_literal' }),
      r: () => void store.updateDraft(item.item_id, { reasoning: 1 }),
      x: () => void store.updateDraft(item.item_id, { reasoning: 0 }),
      Enter: () => void guard(() => store.submitCurrent()),
      ArrowLeft: () => store.goTo(store.index - 1),
      ArrowRight: () => store.goTo(store.index + 1),
    };
    const handler = byKey[event.key];
    if (handler) {
      handler();
      if (event.key !== 'Enter') rerender();
    }
  });

  await guard(() => store.load());
}

void bootstrap();
