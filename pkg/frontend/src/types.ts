/** Payload shapes served by the catalog HTTP API. */

export interface SearchHit {
  id: number;
  name: string;
  /** score already rendered to three decimals by the server */
  matching_score: string;
  matching_score_raw: number;
  application: string | null;
  first_category: string | null;
  second_categories: string[];
  availability: string | null;
  accessibility: string | null;
  scholar_citations: number | null;
  abstract_snippet: string;
  features_snippet: string;
}

export interface SearchPage {
  total_hits: number;
  page: number;
  per_page: number;
  hits: SearchHit[];
}

/**
 * One full record as returned by GET /api/records/{id}.  The server
 * omits fields without a value, so everything beyond the identity
 * triple is optional and untyped here.
 */
export type RecordFields = {
  id: number;
  name: string;
  status: string;
} & Record<string, unknown>;

export interface ApiErrorBody {
  code: string;
  message: string;
  [key: string]: unknown;
}
