import { describe, expect, it } from "vitest";

import {
  ApiClient,
  ApiRequestError,
  SearchCoordinator,
  type FetchLike,
} from "../src/api.js";
import type { SearchPage } from "../src/types.js";

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function emptyPage(totalHits = 0): SearchPage {
  return { total_hits: totalHits, page: 1, per_page: 10, hits: [] };
}

interface PendingCall {
  url: string;
  signal: AbortSignal | undefined;
  resolve: (response: Response) => void;
  reject: (error: unknown) => void;
}

// fetch stub whose responses are resolved by hand from the test body
function deferredFetch(options: { rejectOnAbort: boolean }) {
  const calls: PendingCall[] = [];
  const fetchImpl: FetchLike = (url, init) =>
    new Promise<Response>((resolve, reject) => {
      if (options.rejectOnAbort) {
        init?.signal?.addEventListener("abort", () => {
          reject(new DOMException("The operation was aborted.", "AbortError"));
        });
      }
      calls.push({ url, signal: init?.signal ?? undefined, resolve, reject });
    });
  return { calls, fetchImpl };
}

describe("ApiClient", () => {
  it("builds search URLs with encoded query and paging", async () => {
    const seen: string[] = [];
    const client = new ApiClient("http://api.test/", async (url) => {
      seen.push(url);
      return jsonResponse(200, emptyPage());
    });
    await client.search("RNA virus", 2, 25);
    expect(seen).toEqual([
      "http://api.test/api/search?q=RNA+virus&page=2&per_page=25",
    ]);
  });

  it("defaults to page 1 with 10 hits per page", async () => {
    const seen: string[] = [];
    const client = new ApiClient("", async (url) => {
      seen.push(url);
      return jsonResponse(200, emptyPage());
    });
    await client.search("RNA");
    expect(seen).toEqual(["/api/search?q=RNA&page=1&per_page=10"]);
  });

  it("fetches record detail by id", async () => {
    const client = new ApiClient("", async (url) => {
      expect(url).toBe("/api/records/17");
      return jsonResponse(200, { id: 17, name: "X", status: "Published" });
    });
    const record = await client.record(17);
    expect(record.name).toBe("X");
  });

  it("returns the parsed page on success", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse(200, emptyPage(282)),
    );
    const page = await client.search("RNA");
    expect(page.total_hits).toBe(282);
    expect(page.hits).toEqual([]);
  });

  it("throws ApiRequestError carrying status and body on failure", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse(400, { code: "empty_query", message: "missing query parameter q" }),
    );
    const failure = await client.search("the").catch((e: unknown) => e);
    expect(failure).toBeInstanceOf(ApiRequestError);
    const error = failure as ApiRequestError;
    expect(error.status).toBe(400);
    expect(error.body.code).toBe("empty_query");
    expect(error.message).toBe("missing query parameter q");
  });
});

describe("SearchCoordinator", () => {
  it("aborts the in-flight request when a newer one starts", async () => {
    const { calls, fetchImpl } = deferredFetch({ rejectOnAbort: true });
    const coordinator = new SearchCoordinator(new ApiClient("", fetchImpl));

    const stale = coordinator.run("first");
    expect(calls[0]?.signal?.aborted).toBe(false);

    const fresh = coordinator.run("second");
    expect(calls[0]?.signal?.aborted).toBe(true);

    calls[1]?.resolve(jsonResponse(200, emptyPage(7)));
    expect(await stale).toBeNull();
    expect((await fresh)?.total_hits).toBe(7);
  });

  it("drops a stale response that arrives after the newer one", async () => {
    // this stub never rejects on abort: the old response still lands
    const { calls, fetchImpl } = deferredFetch({ rejectOnAbort: false });
    const coordinator = new SearchCoordinator(new ApiClient("", fetchImpl));

    const stale = coordinator.run("first");
    const fresh = coordinator.run("second");
    calls[1]?.resolve(jsonResponse(200, emptyPage(2)));
    expect((await fresh)?.total_hits).toBe(2);

    calls[0]?.resolve(jsonResponse(200, emptyPage(1)));
    expect(await stale).toBeNull();
  });

  it("propagates a failure of the newest request", async () => {
    const coordinator = new SearchCoordinator(
      new ApiClient("", async () => {
        throw new TypeError("fetch failed");
      }),
    );
    await expect(coordinator.run("RNA")).rejects.toThrow("fetch failed");
  });

  it("passes results through when requests do not overlap", async () => {
    const { calls, fetchImpl } = deferredFetch({ rejectOnAbort: true });
    const coordinator = new SearchCoordinator(new ApiClient("", fetchImpl));

    const first = coordinator.run("one");
    calls[0]?.resolve(jsonResponse(200, emptyPage(1)));
    expect((await first)?.total_hits).toBe(1);

    const second = coordinator.run("two");
    calls[1]?.resolve(jsonResponse(200, emptyPage(2)));
    expect((await second)?.total_hits).toBe(2);
  });
});
