import type { QuiverJson } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

/**
 * Deterministic layered layout for abstract quivers: one row per tau-orbit,
 * one column per position along the orbit (walking tau backwards, i.e. in
 * the arrow direction of the usual pictures). Rows are ordered by their
 * smallest vertex id, columns are staggered half a step on odd rows so the
 * diagonal arrows of translation quivers read naturally.
 */
export function tauOrbitLayout(quiver: QuiverJson): Map<number, Point> {
  const ids = quiver.vertices.map((v) => v.id);
  const tau = new Map<number, number>();
  for (const [src, dst] of Object.entries(quiver.tau)) {
    tau.set(Number(src), dst);
  }
  const tauInv = new Map<number, number>();
  for (const [src, dst] of tau.entries()) {
    tauInv.set(dst, src);
  }

  const seen = new Set<number>();
  const orbits: number[][] = [];
  for (const id of ids) {
    if (seen.has(id)) continue;
    // walk to the tau-maximal end of the chain (or anywhere on a cycle)
    let start = id;
    const guard = new Set<number>([start]);
    while (tauInv.has(start)) {
      const prev = tauInv.get(start)!;
      if (guard.has(prev)) break; // cycle
      guard.add(prev);
      start = prev;
    }
    const orbit: number[] = [];
    let current: number | undefined = start;
    while (current !== undefined && !seen.has(current)) {
      seen.add(current);
      orbit.push(current);
      current = tau.get(current);
    }
    orbits.push(orbit);
  }
  orbits.sort((a, b) => Math.min(...a) - Math.min(...b));

  const points = new Map<number, Point>();
  orbits.forEach((orbit, row) => {
    orbit.forEach((id, pos) => {
      // tau moves left in the classical pictures, so later tau-iterates
      // get smaller x
      const col = orbit.length - 1 - pos;
      points.set(id, { x: col + (row % 2) / 2, y: row });
    });
  });
  return points;
}
