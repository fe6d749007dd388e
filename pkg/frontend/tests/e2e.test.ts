// End-to-end: a scripted browser session (happy-dom) driving the real HTTP
// service. The displayed state must diff clean against GET state after
// every click, per the explorer's no-client-side-algebra contract.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";

import { ApiClient } from "../src/api.js";
import { mount } from "../src/main.js";
import type { ExplorerController } from "../src/controller.js";
import type { SessionState } from "../src/types.js";

const PORT = 8900 + Math.floor(Math.random() * 500);
const BASE = `http://127.0.0.1:${PORT}`;
let service: ChildProcess;

async function waitForService(): Promise<void> {
  const deadline = Date.now() + 20_000;
  while (Date.now() < deadline) {
    try {
      const r = await fetch(`${BASE}/api/session/probe`);
      if (r.status === 404) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  service = spawn(
    "python3",
    [
      "-c",
      "import sys\nfrom clusterkit.interface.cli import main\n" +
        `sys.exit(main(['serve', '--port', '${PORT}', '--host', '127.0.0.1']))`,
    ],
    { stdio: "ignore" },
  );
  await waitForService();
});

afterAll(() => {
  service?.kill();
});

function freshApp(): { controller: ExplorerController; app: HTMLElement } {
  document.body.innerHTML = `
    <nav>
      <button data-action="open-seed-a2">A2 seed</button>
      <button data-action="open-punctured-triangle">punctured triangle</button>
      <span id="gamma-form">
        <select name="type"><option>A</option></select>
        <input name="n" value="3"/><input name="m" value="2"/>
        <button data-action="open-gamma">gamma</button>
      </span>
    </nav>
    <main id="app"></main>`;
  const app = document.getElementById("app")!;
  const controller = mount(app, BASE);
  return { controller, app };
}

function click(selector: string): void {
  const el = document.querySelector(selector);
  expect(el, `expected element ${selector}`).toBeTruthy();
  el!.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

async function displayedMatchesServer(controller: ExplorerController): Promise<SessionState> {
  const displayed = controller.view().state!;
  const server = await new ApiClient(BASE).getState(displayed.id);
  expect(displayed).toEqual(server); // clean diff against authoritative state
  const historyItems = document.querySelectorAll("#history-panel li").length;
  expect(historyItems).toBe(server.history.length);
  return server;
}

describe("A2 seed session", () => {
  it("mutate(1), mutate(2), undo, undo diff clean at every step", async () => {
    const { controller } = freshApp();
    click("[data-action=open-seed-a2]");
    await controller.whenIdle();
    const initial = await displayedMatchesServer(controller);
    expect(initial.cluster).toEqual(["x1", "x2"]);

    click('[data-vertex="1"]'); // mutate at index 0
    await controller.whenIdle();
    const afterFirst = await displayedMatchesServer(controller);
    expect(afterFirst.cluster).toEqual(["(1+x2)/x1", "x2"]);
    expect(document.querySelector("#cluster-panel")!.textContent).toContain("(1+x2)/x1");

    click('[data-vertex="2"]'); // mutate at index 1
    await controller.whenIdle();
    const afterSecond = await displayedMatchesServer(controller);
    expect(afterSecond.history).toHaveLength(2);

    click("#undo-btn");
    await controller.whenIdle();
    const afterUndo = await displayedMatchesServer(controller);
    expect(afterUndo.cluster).toEqual(afterFirst.cluster);

    click("#undo-btn");
    await controller.whenIdle();
    const back = await displayedMatchesServer(controller);
    expect(back.cluster).toEqual(["x1", "x2"]);
    expect(back.history).toHaveLength(0);
  });

  it("clicking the same vertex twice returns to the initial cluster", async () => {
    const { controller } = freshApp();
    click("[data-action=open-seed-a2]");
    await controller.whenIdle();
    click('[data-vertex="1"]');
    await controller.whenIdle();
    click('[data-vertex="1"]');
    await controller.whenIdle();
    const state = await displayedMatchesServer(controller);
    expect(state.cluster).toEqual(["x1", "x2"]);
    expect(state.history).toHaveLength(2);
  });
});

describe("punctured triangle disc session", () => {
  it("flipping the self-folded interior shows the 409 reason, state unchanged", async () => {
    const { controller } = freshApp();
    click("[data-action=open-punctured-triangle]");
    await controller.whenIdle();
    const before = await displayedMatchesServer(controller);
    const rayIndex = before.arcs!.findIndex((a) => a.kind === "ray");
    expect(before.flippable![rayIndex]).toBe(false);

    click(`[data-arc-index="${rayIndex}"]`);
    await controller.whenIdle();
    expect(document.querySelector("#notice")!.textContent).toContain("not_flippable");
    const after = await displayedMatchesServer(controller);
    expect(after.arcs).toEqual(before.arcs);
    expect(after.history).toHaveLength(0);
  });

  it("a legal flip goes through and undo restores it", async () => {
    const { controller } = freshApp();
    click("[data-action=open-punctured-triangle]");
    await controller.whenIdle();
    const before = await displayedMatchesServer(controller);
    const loopIndex = before.arcs!.findIndex((a) => a.kind === "loop");

    click(`[data-arc-index="${loopIndex}"]`);
    await controller.whenIdle();
    const flipped = await displayedMatchesServer(controller);
    expect(flipped.history).toHaveLength(1);
    expect(flipped.arcs).not.toEqual(before.arcs);
    expect(document.querySelector("#notice")).toBeNull();

    click("#undo-btn");
    await controller.whenIdle();
    const restored = await displayedMatchesServer(controller);
    expect(restored.arcs).toEqual(before.arcs);
  });
});

describe("gamma session", () => {
  it("renders the quiver and polygon and accepts no moves", async () => {
    const { controller } = freshApp();
    click("[data-action=open-gamma]");
    await controller.whenIdle();
    const state = await displayedMatchesServer(controller);
    expect(state.quiver!.vertices).toHaveLength(8);
    expect(document.querySelectorAll("svg.polygon path.arc").length).toBe(8);
  });
});
