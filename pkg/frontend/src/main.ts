import { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { renderApp } from "./render.js";

// Bootstraps the page: a launcher bar for the stock sessions plus the
// explorer view. All clicks go through event delegation so the rendered
// HTML can be swapped wholesale after every authoritative refresh.

export function mount(root: HTMLElement, apiBase: string): ExplorerController {
  const app = document.createElement("div");
  app.id = "explorer";
  root.appendChild(app);

  const controller = new ExplorerController(new ApiClient(apiBase), (view) => {
    app.innerHTML = renderApp(view);
  });

  // delegate on the document so the launcher (outside the app root) works too
  root.ownerDocument.addEventListener("click", (event) => {
    const target = event.target as HTMLElement | null;
    if (!target) return;
    if (controller.view().pending) return; // inputs disabled while a move is in flight

    const vertex = target.closest<HTMLElement>("[data-vertex]");
    if (vertex) {
      void controller.clickVertex(vertex.dataset.vertex!);
      return;
    }
    const arc = target.closest<HTMLElement>("[data-arc-index]");
    if (arc) {
      void controller.clickArc(Number(arc.dataset.arcIndex));
      return;
    }
    const action = target.closest<HTMLElement>("[data-action]");
    if (!action) return;
    switch (action.dataset.action) {
      case "undo":
        void controller.undo();
        break;
      case "retry":
        void controller.retry();
        break;
      case "toggle-tau":
        controller.toggleTau();
        break;
      case "open-seed-a2":
        void controller.open("seed", { matrix: [[0, 1], [-1, 0]] });
        break;
      case "open-punctured-triangle":
        void controller.open("disc", {
          boundary_vertices: 3,
          punctured: true,
          arcs: [
            { kind: "loop", base: 1 },
            { kind: "ray", from: 1 },
            { kind: "chord", from: 1, to: 3 },
          ],
        });
        break;
      case "open-gamma": {
        const form = document.getElementById("gamma-form") as HTMLElement;
        const type = (form.querySelector("[name=type]") as HTMLSelectElement).value;
        const n = Number((form.querySelector("[name=n]") as HTMLInputElement).value);
        const m = Number((form.querySelector("[name=m]") as HTMLInputElement).value);
        void controller.open("gamma", { type, n, m });
        break;
      }
    }
  });

  return controller;
}

declare global {
  interface Window {
    explorer?: ExplorerController;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const params = new URLSearchParams(window.location.search);
  const apiBase = params.get("api") ?? "http://127.0.0.1:8777";
  window.explorer = mount(document.getElementById("app")!, apiBase);
}
