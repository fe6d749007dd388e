import { tauOrbitLayout } from "./layout.js";
import type { ViewState } from "./controller.js";
import type {
  ArcJson,
  PolygonJson,
  QuiverJson,
  SessionState,
  VertexGeometry,
} from "./types.js";

// Rendering is a pure function of the view state; main.ts swaps the HTML in
// and wires events through delegation on data- attributes.

const SVG = 480;

function esc(text: unknown): string {
  return String(text).replace(/[&<>"']/g, (c) => `&#${c.charCodeAt(0)};`);
}

function px(unit: number): number {
  // unit circle -> svg pixels
  return SVG / 2 + unit * (SVG / 2 - 30);
}

function quiverSvg(quiver: QuiverJson, showTau: boolean, clickable: boolean): string {
  const layout = tauOrbitLayout(quiver);
  const cols = Math.max(1, ...[...layout.values()].map((p) => p.x));
  const rows = Math.max(1, ...[...layout.values()].map((p) => p.y));
  const width = Math.max(SVG, 90 * (cols + 1));
  const height = 70 * (rows + 1) + 40;
  const X = (p: { x: number; y: number }) => 50 + p.x * 90;
  const Y = (p: { x: number; y: number }) => height - 40 - p.y * 70;
  const labelOf = new Map(quiver.vertices.map((v) => [v.id, v.label]));

  const parts: string[] = [];
  parts.push(
    `<svg class="quiver" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">`,
  );
  parts.push(
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
      `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>`,
  );
  const edge = (a: number, b: number, cls: string) => {
    const pa = layout.get(a)!;
    const pb = layout.get(b)!;
    const dx = X(pb) - X(pa);
    const dy = Y(pb) - Y(pa);
    const len = Math.hypot(dx, dy) || 1;
    const trim = 22 / len;
    const x1 = X(pa) + dx * trim;
    const y1 = Y(pa) + dy * trim;
    const x2 = X(pb) - dx * trim;
    const y2 = Y(pb) - dy * trim;
    parts.push(
      `<line class="${cls}" x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" ` +
        `x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" marker-end="url(#arrow)"/>`,
    );
  };
  for (const arrow of quiver.arrows) edge(arrow.src, arrow.dst, "edge");
  if (showTau) {
    for (const [src, dst] of Object.entries(quiver.tau)) {
      edge(Number(src), dst, "edge tau");
    }
  }
  for (const vertex of quiver.vertices) {
    const p = layout.get(vertex.id)!;
    const attrs = clickable
      ? ` class="vertex clickable" data-vertex="${esc(vertex.label)}"`
      : ` class="vertex"`;
    parts.push(
      `<g${attrs}><circle cx="${X(p)}" cy="${Y(p)}" r="18"/>` +
        `<text x="${X(p)}" y="${Y(p) + 4}">${esc(labelOf.get(vertex.id))}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

function vertexPoint(polygon: PolygonJson, label: number): { x: number; y: number } {
  const v = polygon.vertices.find((u) => u.label === label)!;
  return { x: px(v.x), y: px(-v.y) }; // svg y grows downward
}

function arcPath(arc: ArcJson | VertexGeometry, polygon: PolygonJson): string {
  const n = polygon.vertices.length;
  if (arc.kind === "loop") {
    const base = vertexPoint(polygon, arc.base);
    const c = { x: px(0), y: px(0) };
    // two mirrored control points push the curve around the puncture
    const ux = (c.x - base.x) / Math.hypot(c.x - base.x, c.y - base.y || 1);
    const uy = (c.y - base.y) / Math.hypot(c.x - base.x, c.y - base.y || 1);
    const depth = 1.45;
    const spread = 0.55;
    const c1x = base.x + (c.x - base.x) * depth - uy * SVG * spread * 0.25;
    const c1y = base.y + (c.y - base.y) * depth + ux * SVG * spread * 0.25;
    const c2x = base.x + (c.x - base.x) * depth + uy * SVG * spread * 0.25;
    const c2y = base.y + (c.y - base.y) * depth - ux * SVG * spread * 0.25;
    return `M ${base.x} ${base.y} C ${c1x} ${c1y} ${c2x} ${c2y} ${base.x} ${base.y}`;
  }
  if (arc.kind === "ray") {
    const from = vertexPoint(polygon, arc.from);
    return `M ${from.x} ${from.y} L ${px(0)} ${px(0)}`;
  }
  const from = vertexPoint(polygon, arc.from);
  const to = vertexPoint(polygon, arc.to);
  if (polygon.puncture && arc.kind === "chord") {
    // bow toward the clockwise side (the puncture-free one)
    const steps = ((arc.to - arc.from) % n + n) % n;
    const mid = ((arc.from - 1) + steps / 2) % n;
    const angle = Math.PI / 2 - (2 * Math.PI * mid) / n;
    const cx = px(Math.cos(angle) * 0.42);
    const cy = px(-Math.sin(angle) * 0.42);
    return `M ${from.x} ${from.y} Q ${cx} ${cy} ${to.x} ${to.y}`;
  }
  return `M ${from.x} ${from.y} L ${to.x} ${to.y}`;
}

function polygonSvg(
  polygon: PolygonJson,
  arcs: { arc: ArcJson | VertexGeometry; index: number; cls: string; title: string }[],
): string {
  const parts: string[] = [];
  parts.push(`<svg class="polygon" viewBox="0 0 ${SVG} ${SVG}" width="${SVG}" height="${SVG}">`);
  const n = polygon.vertices.length;
  for (let k = 0; k < n; k++) {
    const a = vertexPoint(polygon, k + 1);
    const b = vertexPoint(polygon, (k % n) + 1 === n ? n : ((k + 1) % n) + 1);
    parts.push(
      `<line class="boundary" x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}"/>`,
    );
  }
  for (const { arc, index, cls, title } of arcs) {
    parts.push(
      `<path class="${cls}" data-arc-index="${index}" d="${arcPath(arc, polygon)}">` +
        `<title>${esc(title)}</title></path>`,
    );
  }
  if (polygon.puncture) {
    parts.push(`<circle class="puncture" cx="${px(0)}" cy="${px(0)}" r="5"/>`);
  }
  for (const v of polygon.vertices) {
    const p = vertexPoint(polygon, v.label);
    parts.push(
      `<circle class="marked" cx="${p.x}" cy="${p.y}" r="6"/>` +
        `<text class="vlabel" x="${p.x + (p.x >= px(0) ? 12 : -12)}" y="${p.y + 4}">${v.label}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

function arcTitle(arc: ArcJson): string {
  if (arc.kind === "chord") return `chord ${arc.from}-${arc.to}`;
  if (arc.kind === "loop") return `loop at ${arc.base}`;
  return `ray at ${arc.from}`;
}

function historyPanel(state: SessionState): string {
  const items = state.history
    .map((move) =>
      move.type === "mutate"
        ? `<li>mutate at index ${move.index}</li>`
        : `<li>flip ${esc(arcTitle(move.arc))}</li>`,
    )
    .join("");
  return (
    `<section class="panel"><h2>History (${state.history.length})</h2>` +
    `<ol id="history-panel">${items}</ol>` +
    `<button id="undo-btn" data-action="undo">Undo</button></section>`
  );
}

function clusterPanel(state: SessionState): string {
  const items = (state.cluster ?? [])
    .map((text, i) => `<li><span class="vname">x${i + 1} =</span> <code>${esc(text)}</code></li>`)
    .join("");
  return `<section class="panel"><h2>Cluster variables</h2><ul id="cluster-panel">${items}</ul></section>`;
}

function matrixPanel(state: SessionState): string {
  if (!state.matrix) return "";
  const rows = state.matrix
    .map((row) => `<tr>${row.map((v) => `<td>${v}</td>`).join("")}</tr>`)
    .join("");
  return `<section class="panel"><h2>Exchange matrix</h2><table class="matrix">${rows}</table></section>`;
}

function seedView(state: SessionState, showTau: boolean): string {
  const quiver = state.quiver
    ? quiverSvg(state.quiver, showTau, true)
    : `<p class="hint">matrix is not skew-symmetric; no quiver to draw</p>`;
  return (
    `<div class="columns"><div>${quiver}` +
    `<p class="hint">click a vertex to mutate there</p></div>` +
    `<div>${clusterPanel(state)}${matrixPanel(state)}${historyPanel(state)}</div></div>`
  );
}

function discView(state: SessionState): string {
  const arcs = (state.arcs ?? []).map((arc, index) => ({
    arc,
    index,
    cls: `arc clickable${state.flippable && !state.flippable[index] ? " folded" : ""}`,
    title: arcTitle(arc),
  }));
  return (
    `<div class="columns"><div>${polygonSvg(state.polygon!, arcs)}` +
    `<p class="hint">click an arc to flip it</p></div>` +
    `<div>${matrixPanel(state)}${historyPanel(state)}</div></div>`
  );
}

function gammaView(state: SessionState, showTau: boolean): string {
  const geometry = state.vertex_geometry ?? {};
  const arcs = Object.values(geometry).map((g, index) => ({
    arc: g,
    index,
    cls: "arc faint",
    title: "",
  }));
  const p = state.params!;
  return (
    `<div class="columns"><div><h2>&Gamma;${p.type === "D" ? "&#8857;" : ""}(${p.n},${p.m})</h2>` +
    `${quiverSvg(state.quiver!, showTau, false)}</div>` +
    `<div>${polygonSvg(state.polygon!, arcs)}${historyPanel(state)}</div></div>`
  );
}

export function renderApp(view: ViewState): string {
  const parts: string[] = [];
  if (view.connectionLost) {
    parts.push(
      `<div class="banner error" id="retry-banner">connection lost ` +
        `<button data-action="retry">retry</button></div>`,
    );
  }
  if (view.notice) {
    parts.push(`<div class="banner notice" id="notice">${esc(view.notice)}</div>`);
  }
  const state = view.state;
  if (!state) {
    parts.push(`<p class="hint">no session; pick one above</p>`);
    return parts.join("");
  }
  parts.push(
    `<div class="meta">session <code>${esc(state.id)}</code> &middot; ${esc(state.kind)}` +
      ` &middot; <label><input type="checkbox" data-action="toggle-tau"` +
      `${view.showTau ? " checked" : ""}/> show &tau;</label>` +
      `${view.pending ? ' &middot; <span class="pending">working&hellip;</span>' : ""}</div>`,
  );
  if (state.kind === "seed") parts.push(seedView(state, view.showTau));
  else if (state.kind === "disc") parts.push(discView(state));
  else parts.push(gammaView(state, view.showTau));
  return parts.join("");
}
