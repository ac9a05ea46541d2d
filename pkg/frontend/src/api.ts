import type { ApiErrorBody, RecordFields, SearchPage } from "./types.js";

export class ApiRequestError extends Error {
  readonly status: number;
  readonly body: ApiErrorBody;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.name = "ApiRequestError";
    this.status = status;
    this.body = body;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = "", fetchImpl?: FetchLike) {
    this.base = base.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  search(
    query: string,
    page = 1,
    perPage = 10,
    signal?: AbortSignal,
  ): Promise<SearchPage> {
    const params = new URLSearchParams({
      q: query,
      page: String(page),
      per_page: String(perPage),
    });
    return this.request<SearchPage>(`/api/search?${params}`, signal);
  }

  record(id: number, signal?: AbortSignal): Promise<RecordFields> {
    return this.request<RecordFields>(`/api/records/${id}`, signal);
  }

  private async request<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchImpl(this.base + path, { signal });
    const body = (await response.json()) as unknown;
    if (!response.ok) {
      throw new ApiRequestError(response.status, body as ApiErrorBody);
    }
    return body as T;
  }
}

/**
 * Funnel for search requests: at most one is in flight, and only the
 * newest one may deliver a page.  Superseded calls resolve to null,
 * whether they were aborted in time or their response simply arrived
 * late.
 */
export class SearchCoordinator {
  private controller: AbortController | null = null;
  private generation = 0;

  constructor(private readonly client: ApiClient) {}

  async run(query: string, page = 1, perPage = 10): Promise<SearchPage | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const ticket = ++this.generation;
    try {
      const result = await this.client.search(
        query,
        page,
        perPage,
        controller.signal,
      );
      return ticket === this.generation ? result : null;
    } catch (error) {
      if (ticket !== this.generation || controller.signal.aborted) {
        return null;
      }
      throw error;
    }
  }
}
