import { ApiClient, ApiRequestError, SearchCoordinator } from "./api.js";
import { parseHash, searchHash } from "./router.js";
import {
  renderDetail,
  renderEmptyQueryNotice,
  renderError,
  renderNotFound,
  renderResults,
} from "./render.js";

declare global {
  interface Window {
    RESCAT_API_BASE?: string;
  }
}

const client = new ApiClient(window.RESCAT_API_BASE ?? "");
const coordinator = new SearchCoordinator(client);

const view = document.getElementById("view") as HTMLElement;
const form = document.getElementById("search-form") as HTMLFormElement;
const box = document.getElementById("search-box") as HTMLInputElement;

function show(html: string): void {
  view.innerHTML = html;
  view.querySelector("button.retry")?.addEventListener("click", () => {
    void renderRoute();
  });
}

function showFailure(error: unknown): void {
  if (error instanceof ApiRequestError) {
    if (error.body.code === "empty_query") {
      show(renderEmptyQueryNotice());
      return;
    }
    if (error.status === 404) {
      show(renderNotFound());
      return;
    }
    show(renderError(error.body.message));
    return;
  }
  show(renderError("The catalog server could not be reached."));
}

async function renderRoute(): Promise<void> {
  const route = parseHash(location.hash);
  switch (route.kind) {
    case "home":
    case "unknown":
      show(renderEmptyQueryNotice());
      return;
    case "search": {
      box.value = route.query;
      try {
        const page = await coordinator.run(route.query, route.page);
        if (page !== null) {
          show(renderResults(page, route.query));
        }
      } catch (error) {
        showFailure(error);
      }
      return;
    }
    case "detail": {
      try {
        show(renderDetail(await client.record(route.id)));
      } catch (error) {
        showFailure(error);
      }
      return;
    }
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const query = box.value.trim();
  if (!query) {
    show(renderEmptyQueryNotice());
    return;
  }
  const target = searchHash(query);
  if (location.hash === target) {
    void renderRoute();
  } else {
    location.hash = target;
  }
});

window.addEventListener("hashchange", () => {
  void renderRoute();
});

void renderRoute();
