import type { RatingStore } from './store.js';
import type { ConditionRow, ItemPayload, QueueEntry, ReportView } from './types.js';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

const OPTION_LABELS = ['A', 'B', 'C', 'D'];

function rate(value: number | null): string {
  return value === null ? '-' : value.toFixed(3);
}

function progressBar(done: number, total: number): string {
  const pct = total === 0 ? 0 : Math.round((done / total) * 100);
  return `<div class="progress"><div class="progress-fill" style="width:${pct}%"></div><span>${done}/${total}</span></div>`;
}

export function renderHeader(store: RatingStore): string {
  const session = store.session;
  if (!session) return '<header><h1>Loading session...</h1></header>';
  const tabs = (['rate', 'adjudicate', 'reports'] as const)
    .map((screen) => {
      const active = store.screen === screen ? ' class="active"' : '';
      return `<button data-screen="${screen}"${active}>${screen}</button>`;
    })
    .join('');
  return `<header>
    <h1>Session ${escapeHtml(session.session_id)} <span class="state">${session.state}</span></h1>
    <div class="identity">rating as <strong>${escapeHtml(session.rater_id)}</strong></div>
    <nav>${tabs}</nav>
  </header>`;
}

function renderRubricHelp(store: RatingStore): string {
  if (!store.handbook) return '';
  return `<details class="rubric-help"><summary>Rubric</summary><pre>${escapeHtml(
    store.handbook.rubric_markdown,
  )}</pre></details>`;
}

function renderLabelPicker(store: RatingStore, item: ItemPayload, selected?: string): string {
  const labels = store.handbook?.evaluation_labels ?? [];
  return labels
    .map((label) => {
      const descriptor = store.handbook?.labels[label];
      const checked = selected === label ? ' checked' : '';
      return `<label class="pick" title="${escapeHtml(descriptor?.definition ?? '')}">
        <input type="radio" name="observed" value="${label}"${checked}> ${escapeHtml(descriptor?.name ?? label)}
      </label>`;
    })
    .join('\n');
}

export function renderRateScreen(store: RatingStore): string {
  const session = store.session;
  const item = store.currentItem;
  if (!session || !item) return '<main><p class="empty">No items to rate.</p></main>';
  if (session.state !== 'round1_open') {
    return '<main><p class="empty">Round 1 is closed; rating controls are disabled.</p></main>';
  }
  const draft = store.draftFor(item.item_id);
  const passage = item.passage;
  const options = (item.options ?? [])
    .map((option, i) => `<li><strong>${OPTION_LABELS[i]}.</strong> ${escapeHtml(option)}</li>`)
    .join('');
  const hintBlock = item.text_hint
    ? `<div class="cot"><p><em>Text hint:</em> ${escapeHtml(item.text_hint)}</p><p><em>Reasoning:</em> ${escapeHtml(
        item.reasoning ?? '',
      )}</p></div>`
    : '';
  const reasoningControl = item.reasoning_applicable
    ? `<fieldset data-criterion="reasoning_quality">
        <legend>Reasoning quality</legend>
        <label><input type="radio" name="reasoning" value="1"${draft.reasoning === 1 ? ' checked' : ''}> 1 (adequate)</label>
        <label><input type="radio" name="reasoning" value="0"${draft.reasoning === 0 ? ' checked' : ''}> 0 (inadequate)</label>
      </fieldset>`
    : '';
  const noteRequired = draft.quality === 0 && draft.note.trim() === '';
  const progress = (['general_item_quality', 'inference_type_accuracy', 'reasoning_quality'] as const)
    .map((criterion) => {
      const p = session.progress[criterion];
      return p.total ? `<div class="crit-progress"><span>${criterion}</span>${progressBar(p.done, p.total)}</div>` : '';
    })
    .join('');

  return `<main class="rate">
  <section class="passage">
    <h2>${escapeHtml(passage?.title ?? item.passage_id)}</h2>
    ${(passage?.body ?? '').split('\n\n').map((p) => `<p>${escapeHtml(p)}</p>`).join('')}
  </section>
  <section class="item">
    <div class="item-nav">
      <button data-action="prev" ${store.index === 0 ? 'disabled' : ''}>&#8592;</button>
      <span>item ${store.index + 1} of ${store.items.length} (${escapeHtml(item.item_id)})</span>
      <button data-action="next" ${store.index >= store.items.length - 1 ? 'disabled' : ''}>&#8594;</button>
    </div>
    ${hintBlock}
    <p class="stem">${escapeHtml(item.stem ?? '')}</p>
    <ol class="options">${options}</ol>
    <p class="key">Answer key: <strong>${escapeHtml(item.key ?? '')}</strong> &middot; requested type: <strong>${escapeHtml(
      item.target_type,
    )}</strong></p>
    <form class="rubric">
      <fieldset data-criterion="general_item_quality">
        <legend>General item quality <kbd>1</kbd>/<kbd>0</kbd></legend>
        <label><input type="radio" name="quality" value="1"${draft.quality === 1 ? ' checked' : ''}> 1 (acceptable)</label>
        <label><input type="radio" name="quality" value="0"${draft.quality === 0 ? ' checked' : ''}> 0 (deficient)</label>
        <textarea name="note" placeholder="Note (required when quality is 0)"
          class="${noteRequired ? 'missing' : ''}">${escapeHtml(draft.note)}</textarea>
        ${noteRequired ? '<p class="hint-required">Provide an explanation in the note field.</p>' : ''}
      </fieldset>
      <fieldset data-criterion="inference_type_accuracy">
        <legend>Observed inference type</legend>
        ${renderLabelPicker(store, item, draft.observedType)}
      </fieldset>
      ${reasoningControl}
      <button type="button" data-action="submit" ${store.canSubmit(item.item_id) ? '' : 'disabled'}>Submit &amp; next</button>
    </form>
    ${renderRubricHelp(store)}
    <div class="progress-block">${progress}</div>
  </section>
</main>`;
}

export function renderAdjudicateScreen(store: RatingStore): string {
  const session = store.session;
  if (!session) return '<main></main>';
  if (session.state === 'round1_open') {
    return '<main><p class="empty">Round 2 has not opened yet.</p></main>';
  }
  const pending = store.pendingQueue();
  if (store.queue.length === 0) {
    return '<main><p class="empty congrats">Nothing to review: your ratings never stood alone against the other two raters.</p></main>';
  }
  if (pending.length === 0) {
    return '<main><p class="empty congrats">Queue complete. All entries reviewed.</p></main>';
  }
  const rows = pending.map((entry) => renderQueueEntry(store, entry)).join('\n');
  return `<main class="adjudicate">
  <p class="queue-status">${pending.length} of ${store.queue.length} entries left to review.</p>
  ${rows}
</main>`;
}

function renderQueueEntry(store: RatingStore, entry: QueueEntry): string {
  const item = store.items.find((i) => i.item_id === entry.item_id);
  const consensus =
    entry.others_agree_on === null
      ? '<em>no agreement: all three answers differ</em>'
      : `the other two raters agree on <strong>${escapeHtml(entry.others_agree_on)}</strong>`;
  const changeControl =
    entry.others_agree_on === null
      ? (store.handbook?.evaluation_labels ?? [])
          .filter((label) => label !== entry.own_rating)
          .map(
            (label) =>
              `<button data-action="change" data-item="${entry.item_id}" data-criterion="${entry.criterion}" data-value="${label}">change to ${label}</button>`,
          )
          .join(' ')
      : `<button data-action="adopt" data-item="${entry.item_id}" data-criterion="${entry.criterion}">change to consensus</button>`;
  return `<article class="queue-entry" data-item="${entry.item_id}" data-criterion="${entry.criterion}">
    <h3>${escapeHtml(entry.item_id)} &middot; ${entry.criterion}</h3>
    <p class="stem">${escapeHtml(item?.stem ?? '')}</p>
    <p>Your round-1 answer: <strong>${escapeHtml(entry.own_rating)}</strong>; ${consensus}.</p>
    <div class="decide">
      <button data-action="keep" data-item="${entry.item_id}" data-criterion="${entry.criterion}">keep my rating</button>
      ${changeControl}
    </div>
  </article>`;
}

export function renderReportsScreen(store: RatingStore): string {
  const report = store.report;
  if (store.state !== 'finalized' || !report) {
    return '<main><p class="empty">Results appear here once the session is finalized.</p></main>';
  }
  return `<main class="reports">
  ${renderVerdictsBlock(report)}
  ${renderAgreementBlock(report)}
  ${renderConditionsBlock(report)}
  ${renderConfusionBlock(report)}
  ${renderCoverageBlock(report)}
</main>`;
}

function renderVerdictsBlock(report: ReportView): string {
  if (!report.verdicts) return '';
  const entries = Object.entries(report.verdicts);
  const accepted = entries.filter(([, v]) => v.accepted_quality === 1).length;
  const matched = entries.filter(([, v]) => v.matched_type === 1).length;
  const rows = entries
    .map(
      ([itemId, v]) =>
        `<tr><td>${escapeHtml(itemId)}</td><td>${v.accepted_quality}</td><td>${v.matched_type}</td><td>${
          v.final_observed_type ?? 'unresolved'
        }</td><td>${v.reasoning_ok === null ? '-' : v.reasoning_ok}</td></tr>`,
    )
    .join('');
  return `<section><h2>Final verdicts</h2>
  <p>${accepted} of ${entries.length} items accepted for quality; ${matched} matched the requested type.</p>
  <table><thead><tr><th>Item</th><th>Quality</th><th>Type match</th><th>Observed type</th><th>Reasoning</th></tr></thead>
  <tbody>${rows}</tbody></table>
</section>`;
}

function renderAgreementBlock(report: ReportView): string {
  if (!report.agreement) return '';
  const rows = Object.entries(report.agreement)
    .map(([criterion, block]) => {
      const [lo, hi] = block.percent_range;
      const fleiss = block.fleiss_kappa === null ? '-' : block.fleiss_kappa.toFixed(2);
      return `<tr><td>${criterion}</td><td>${Math.round(lo * 100)}-${Math.round(hi * 100)}</td><td>${fleiss}</td></tr>`;
    })
    .join('');
  return `<section><h2>Inter-rater agreement</h2>
  <table><thead><tr><th>Criterion</th><th>Agreement (%)</th><th>Fleiss' kappa</th></tr></thead><tbody>${rows}</tbody></table>
</section>`;
}

function conditionRow(row: ConditionRow): string {
  return `<tr><td>${escapeHtml(row.condition)}</td><td>${row.num_items}</td><td>${rate(row.quality_rate)}</td><td>${rate(
    row.inference_accuracy,
  )}</td><td>${rate(row.reasoning_rate)}</td></tr>`;
}

function renderConditionsBlock(report: ReportView): string {
  if (!report.conditions) return '';
  const rows = report.conditions.rows.map(conditionRow).join('');
  const total = conditionRow({ ...report.conditions.total, condition: 'Total' });
  return `<section><h2>Accepted items by generation method</h2>
  <table><thead><tr><th>Method</th><th>Items</th><th>Quality</th><th>Inference</th><th>Reasoning</th></tr></thead>
  <tbody>${rows}</tbody><tfoot>${total}</tfoot></table>
</section>`;
}

function renderConfusionBlock(report: ReportView): string {
  if (!report.confusion) return '';
  const requested = Object.keys(report.confusion);
  const observed = [...new Set(requested.flatMap((r) => Object.keys(report.confusion![r] ?? {})))].sort();
  const max = Math.max(1, ...requested.flatMap((r) => Object.values(report.confusion![r] ?? {})));
  const header = observed.map((o) => `<th>${o}</th>`).join('');
  const rows = requested
    .map((r) => {
      const cells = observed
        .map((o) => {
          const count = report.confusion![r]?.[o] ?? 0;
          const heat = Math.round((count / max) * 100);
          const diagonal = r === o ? ' diagonal' : '';
          return `<td class="heat${diagonal}" style="--heat:${heat}%">${count}</td>`;
        })
        .join('');
      return `<tr><th>${r}</th>${cells}</tr>`;
    })
    .join('');
  return `<section><h2>Observed type per requested type</h2>
  <table class="confusion"><thead><tr><th>requested \\ observed</th>${header}</tr></thead><tbody>${rows}</tbody></table>
</section>`;
}

function renderCoverageBlock(report: ReportView): string {
  if (!report.coverage) return '';
  const rows = Object.entries(report.coverage)
    .map(([label, { a, b }]) => {
      return `<div class="coverage-row"><span class="label">${label}</span>
      <div class="bars">
        <div class="bar bank-a" style="width:${(a * 100).toFixed(1)}%" title="operational ${rate(a)}"></div>
        <div class="bar bank-b" style="width:${(b * 100).toFixed(1)}%" title="generated ${rate(b)}"></div>
      </div></div>`;
    })
    .join('');
  const tv = report.coverage_tv_distance;
  return `<section><h2>Inference-type coverage</h2>${rows}
  ${tv === undefined ? '' : `<p>Total variation distance: ${tv.toFixed(3)}</p>`}
</section>`;
}

export function renderApp(store: RatingStore): string {
  const banner = store.banner ? `<div class="banner">${escapeHtml(store.banner)}</div>` : '';
  let body: string;
  switch (store.screen) {
    case 'rate':
      body = renderRateScreen(store);
      break;
    case 'adjudicate':
      body = renderAdjudicateScreen(store);
      break;
    case 'reports':
      body = renderReportsScreen(store);
      break;
  }
  return renderHeader(store) + banner + body;
}
