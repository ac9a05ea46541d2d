import type { RecordFields, SearchHit, SearchPage } from "./types.js";
import { searchHash } from "./router.js";

export function escapeHtml(value: unknown): string {
  return String(value)
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;")
    .replaceAll("'", "&#39;");
}

/** Result-window header, mirroring the server's page description. */
export function describeWindow(page: SearchPage): string {
  if (page.hits.length === 0) {
    return `Displaying 0 of ${page.total_hits} results.`;
  }
  const first = (page.page - 1) * page.per_page + 1;
  const last = first + page.hits.length - 1;
  return `Displaying ${first}-${last} of ${page.total_hits} results.`;
}

function badge(text: string, kind: string): string {
  return `<span class="badge badge-${kind}">${escapeHtml(text)}</span>`;
}

function citationLink(hit: SearchHit): string {
  if (hit.scholar_citations === null) {
    return "";
  }
  const target = `https://scholar.google.com/scholar?q=${encodeURIComponent(
    `"${hit.name}"`,
  )}`;
  return (
    `<a class="citations" href="${escapeHtml(target)}" target="_blank" rel="noopener">` +
    `Cited ${hit.scholar_citations} times</a>`
  );
}

/**
 * One ranked result row.  Every callout field travels with the row:
 * rank, score, name (linked to the detail view), application, category
 * badges, accessibility, availability, and the citation link, followed
 * by the two snippets and the "more" link.
 */
export function renderHitRow(hit: SearchHit, rank: number): string {
  const detail = `#/records/${hit.id}`;
  const categories = [
    hit.first_category ? badge(hit.first_category, "category") : "",
    ...hit.second_categories.map((c) => badge(c, "omics")),
  ]
    .filter(Boolean)
    .join(" ");
  const facts = [
    hit.accessibility
      ? `<span class="accessibility">${escapeHtml(hit.accessibility)}</span>`
      : "",
    hit.availability
      ? `<span class="availability">${escapeHtml(hit.availability)}</span>`
      : "",
    citationLink(hit),
  ]
    .filter(Boolean)
    .join(" · ");
  const snippets = [
    hit.abstract_snippet
      ? `<p class="snippet snippet-abstract">${escapeHtml(hit.abstract_snippet)}</p>`
      : "",
    hit.features_snippet
      ? `<p class="snippet snippet-features">${escapeHtml(hit.features_snippet)}</p>`
      : "",
  ].join("");
  return `<li class="hit">
  <div class="hit-head">
    <span class="rank">${rank}.</span>
    <span class="score">${escapeHtml(hit.matching_score)}</span>
    <a class="hit-name" href="${detail}">${escapeHtml(hit.name)}</a>
  </div>
  ${hit.application ? `<p class="application">${escapeHtml(hit.application)}</p>` : ""}
  <div class="hit-badges">${categories}</div>
  <div class="hit-facts">${facts}</div>
  ${snippets}
  <a class="more" href="${detail}">more</a>
</li>`;
}

export function renderPager(page: SearchPage, query: string): string {
  const lastPage = Math.max(1, Math.ceil(page.total_hits / page.per_page));
  const parts: string[] = [];
  if (page.page > 1) {
    parts.push(
      `<a class="pager-prev" href="${escapeHtml(searchHash(query, page.page - 1))}">previous</a>`,
    );
  }
  parts.push(`<span class="pager-where">page ${page.page} of ${lastPage}</span>`);
  if (page.page < lastPage) {
    parts.push(
      `<a class="pager-next" href="${escapeHtml(searchHash(query, page.page + 1))}">next</a>`,
    );
  }
  return `<nav class="pager">${parts.join(" ")}</nav>`;
}

/** Header, ranked rows in the order the API returned them, pager. */
export function renderResults(page: SearchPage, query: string): string {
  const offset = (page.page - 1) * page.per_page;
  const rows = page.hits
    .map((hit, i) => renderHitRow(hit, offset + i + 1))
    .join("\n");
  return `<p class="result-window">${escapeHtml(describeWindow(page))}</p>
<ol class="hits" start="${offset + 1}">
${rows}
</ol>
${renderPager(page, query)}`;
}

const LINK_FIELDS = new Set(["web_link", "tutorial_link", "article_link"]);

function detailValue(field: string, value: unknown): string {
  if (LINK_FIELDS.has(field) && typeof value === "string") {
    const href = escapeHtml(value);
    return `<a href="${href}" target="_blank" rel="noopener">${href}</a>`;
  }
  if (field === "email" && typeof value === "string") {
    return `<a href="mailto:${escapeHtml(value)}">${escapeHtml(value)}</a>`;
  }
  if (Array.isArray(value)) {
    return escapeHtml(value.join(", "));
  }
  return escapeHtml(value);
}

function labelFor(field: string): string {
  return field.replaceAll("_", " ");
}

/**
 * Full field table for one record.  The server already omits fields
 * without a value, so each remaining entry becomes one row, in the
 * server's field order; homepage, tutorial and article fields render
 * as links.
 */
export function renderDetail(record: RecordFields): string {
  const rows = Object.entries(record)
    .filter(([field]) => field !== "name")
    .map(
      ([field, value]) =>
        `<tr data-field="${escapeHtml(field)}"><th>${escapeHtml(labelFor(field))}</th>` +
        `<td>${detailValue(field, value)}</td></tr>`,
    )
    .join("\n");
  return `<article class="record">
<h2>${escapeHtml(record.name)}</h2>
<table class="record-fields">
<tbody>
${rows}
</tbody>
</table>
</article>`;
}

export function renderEmptyQueryNotice(): string {
  return `<p class="notice notice-empty-query">Enter a keyword to search the catalog.</p>`;
}

export function renderNotFound(): string {
  return `<p class="notice notice-not-found">Record not found.</p>`;
}

export function renderError(message: string): string {
  return `<div class="banner banner-error" role="alert">
  <span class="banner-message">${escapeHtml(message)}</span>
  <button type="button" class="retry">Retry</button>
</div>`;
}
