export type CriterionId = 'general_item_quality' | 'inference_type_accuracy' | 'reasoning_quality';

export type SessionStateId = 'round1_open' | 'round2_open' | 'finalized';

export interface RatingPayload {
  item_id: string;
  criterion: CriterionId;
  verdict: 0 | 1;
  observed_type?: string;
  note?: string;
  round?: 1 | 2;
}

export interface StoredRating extends RatingPayload {
  rater_id: string;
  round: 1 | 2;
}

export interface SessionView {
  schema_version: number;
  session_id: string;
  state: SessionStateId;
  rater_id: string;
  raters: string[];
  items_total: number;
  progress: Record<CriterionId, { done: number; total: number }>;
  own_ratings: { round1: StoredRating[]; round2: StoredRating[] };
  queue_size: number;
  finalized: boolean;
}

export interface PassagePayload {
  id: string;
  title: string;
  body: string;
}

export interface ItemPayload {
  item_id: string;
  passage_id: string;
  target_type: string;
  reasoning_applicable: boolean;
  stem?: string;
  options?: string[];
  key?: string;
  text_hint?: string | null;
  reasoning?: string | null;
  passage?: PassagePayload;
}

export interface ItemsPage {
  schema_version: number;
  items: ItemPayload[];
  cursor: number;
  next_cursor: number | null;
  items_total: number;
}

export interface QueueEntry {
  item_id: string;
  criterion: CriterionId;
  own_rating: string;
  others_agree_on: string | null;
  resolved: boolean;
}

export interface QueueView {
  schema_version: number;
  state: SessionStateId;
  entries: QueueEntry[];
}

export interface HandbookView {
  schema_version: number;
  rubric_markdown: string;
  labels: Record<string, { name: string; definition: string; example: string }>;
  evaluation_labels: string[];
}

export interface ItemVerdict {
  accepted_quality: number;
  matched_type: number;
  final_observed_type: string | null;
  reasoning_ok: number | null;
}

export interface ConditionRow {
  condition: string;
  num_items: number;
  quality_rate: number | null;
  inference_accuracy: number | null;
  reasoning_rate: number | null;
  unresolved_types: number;
}

export interface ReportView {
  schema_version: number;
  agreement?: Record<
    string,
    {
      pairwise_percent: Record<string, number>;
      percent_range: [number, number];
      cohen_kappa: Record<string, number | null>;
      fleiss_kappa: number | null;
    }
  >;
  conditions?: { rows: ConditionRow[]; total: ConditionRow };
  confusion?: Record<string, Record<string, number>>;
  confusion_unresolved?: Record<string, number>;
  coverage?: Record<string, { a: number; b: number }>;
  coverage_tv_distance?: number;
  verdicts?: Record<string, ItemVerdict>;
}

export interface ApiError {
  status: number;
  message: string;
}
