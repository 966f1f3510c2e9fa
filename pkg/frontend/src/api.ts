import type {
  HandbookView,
  ItemsPage,
  QueueView,
  RatingPayload,
  ReportView,
  SessionView,
  StoredRating,
} from './types.js';

export interface TransportResponse {
  status: number;
  body: string;
}

/** Minimal request function so tests can intercept and fake all traffic. */
export type Transport = (path: string, method: string, payload?: unknown) => Promise<TransportResponse>;

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

export function fetchTransport(baseUrl: string, token: string): Transport {
  return async (path, method, payload) => {
    const response = await fetch(baseUrl + path, {
      method,
      headers: {
        Authorization: `Bearer ${token}`,
        ...(payload === undefined ? {} : { 'Content-Type': 'application/json' }),
      },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
    return { status: response.status, body: await response.text() };
  };
}

export class ApiClient {
  constructor(private transport: Transport) {}

  private async request<T>(path: string, method = 'GET', payload?: unknown): Promise<T> {
    const response = await this.transport(path, method, payload);
    let doc: unknown;
    try {
      doc = JSON.parse(response.body);
    } catch {
      throw new ApiRequestError(response.status, `non-JSON response from ${path}`);
    }
    if (response.status >= 400) {
      const detail =
        (doc as { error?: string; detail?: string }).error ??
        (doc as { detail?: string }).detail ??
        response.body;
      throw new ApiRequestError(response.status, detail);
    }
    return doc as T;
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request(`/api/session/${sessionId}`);
  }

  getItems(sessionId: string, cursor = 0): Promise<ItemsPage> {
    return this.request(`/api/session/${sessionId}/items?cursor=${cursor}`);
  }

  postRating(sessionId: string, rating: RatingPayload): Promise<{ stored: StoredRating }> {
    return this.request(`/api/session/${sessionId}/ratings`, 'POST', rating);
  }

  getQueue(sessionId: string): Promise<QueueView> {
    return this.request(`/api/session/${sessionId}/queue`);
  }

  advance(sessionId: string, action: 'open_round2' | 'finalize'): Promise<{ state: string }> {
    return this.request(`/api/session/${sessionId}/advance`, 'POST', { action });
  }

  getReport(sessionId: string): Promise<ReportView> {
    return this.request(`/api/reports/${sessionId}`);
  }

  getHandbook(): Promise<HandbookView> {
    return this.request('/api/handbook');
  }
}
