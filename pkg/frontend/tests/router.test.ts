import { describe, expect, it } from "vitest";

import { detailHash, parseHash, searchHash } from "../src/router.js";

describe("parseHash", () => {
  it("treats an empty or bare hash as home", () => {
    expect(parseHash("")).toEqual({ kind: "home" });
    expect(parseHash("#")).toEqual({ kind: "home" });
    expect(parseHash("#/")).toEqual({ kind: "home" });
  });

  it("parses search routes with query and page", () => {
    expect(parseHash("#/search?q=RNA")).toEqual({
      kind: "search",
      query: "RNA",
      page: 1,
    });
    expect(parseHash("#/search?q=RNA+virus&page=3")).toEqual({
      kind: "search",
      query: "RNA virus",
      page: 3,
    });
    expect(parseHash("#/search")).toEqual({ kind: "search", query: "", page: 1 });
  });

  it("falls back to page 1 on a mangled page number", () => {
    expect(parseHash("#/search?q=x&page=0")).toMatchObject({ page: 1 });
    expect(parseHash("#/search?q=x&page=abc")).toMatchObject({ page: 1 });
  });

  it("parses record detail routes", () => {
    expect(parseHash("#/records/17")).toEqual({ kind: "detail", id: 17 });
    expect(parseHash("#/records/abc")).toEqual({ kind: "unknown" });
    expect(parseHash("#/records/-3")).toEqual({ kind: "unknown" });
  });

  it("rejects anything else", () => {
    expect(parseHash("#/admin")).toEqual({ kind: "unknown" });
  });
});

describe("hash builders", () => {
  it("round-trip through parseHash", () => {
    for (const query of ["RNA", "RNA virus", "c++ toolkit", "δG & friends"]) {
      for (const page of [1, 2, 9]) {
        expect(parseHash(searchHash(query, page))).toEqual({
          kind: "search",
          query,
          page,
        });
      }
    }
  });

  it("omits page 1 from the fragment", () => {
    expect(searchHash("RNA")).toBe("#/search?q=RNA");
    expect(searchHash("RNA", 2)).toBe("#/search?q=RNA&page=2");
  });

  it("builds detail fragments", () => {
    expect(detailHash(4)).toBe("#/records/4");
  });
});
