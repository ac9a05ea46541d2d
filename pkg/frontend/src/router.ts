/** Hash-fragment routes, kept free of DOM access so they unit-test. */

export type Route =
  | { kind: "home" }
  | { kind: "search"; query: string; page: number }
  | { kind: "detail"; id: number }
  | { kind: "unknown" };

export function parseHash(hash: string): Route {
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  if (raw === "" || raw === "/") {
    return { kind: "home" };
  }
  if (raw.startsWith("/records/")) {
    const id = Number(raw.slice("/records/".length));
    if (Number.isInteger(id) && id > 0) {
      return { kind: "detail", id };
    }
    return { kind: "unknown" };
  }
  if (raw === "/search" || raw.startsWith("/search?")) {
    const params = new URLSearchParams(raw.slice("/search".length + 1));
    const page = Number(params.get("page") ?? "1");
    return {
      kind: "search",
      query: params.get("q") ?? "",
      page: Number.isInteger(page) && page > 0 ? page : 1,
    };
  }
  return { kind: "unknown" };
}

export function searchHash(query: string, page = 1): string {
  const params = new URLSearchParams({ q: query });
  if (page > 1) {
    params.set("page", String(page));
  }
  return `#/search?${params}`;
}

export function detailHash(id: number): string {
  return `#/records/${id}`;
}
