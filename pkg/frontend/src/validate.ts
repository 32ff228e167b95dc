import { QuiverJson } from './types.js';

/** Client-side re-check of the three structural axioms before rendering.
 * Returns null for a valid payload, otherwise the violated rule. */
export function validateQuiver(q: QuiverJson): string | null {
  if (!Number.isInteger(q.n) || q.n < 1) return 'vertex count must be a positive integer';
  if (!Number.isInteger(q.m) || q.m < 1) return 'colour bound must be a positive integer';
  if (!Array.isArray(q.arrows)) return 'arrows must be a list';
  const seen = new Map<string, number>();
  for (const arrow of q.arrows) {
    if (!Array.isArray(arrow) || arrow.length !== 3) return `bad arrow entry ${JSON.stringify(arrow)}`;
    const [i, j, c] = arrow;
    if (![i, j, c].every(Number.isInteger)) return `bad arrow entry ${JSON.stringify(arrow)}`;
    if (i === j) return `loop at vertex ${i}`;
    if (i < 1 || i > q.n || j < 1 || j > q.n) return `arrow ${i}->${j} outside 1..${q.n}`;
    if (c < 0 || c > q.m) return `colour ${c} outside 0..${q.m}`;
    const fwd = seen.get(`${i},${j}`);
    if (fwd !== undefined && fwd !== c) return `two colours on the pair ${i}->${j}`;
    const bwd = seen.get(`${j},${i}`);
    if (bwd !== undefined && bwd !== q.m - c) return `skew conflict on the pair {${i},${j}}`;
    seen.set(`${i},${j}`, c);
  }
  return null;
}

export function sameQuiver(a: QuiverJson, b: QuiverJson): boolean {
  if (a.n !== b.n || a.m !== b.m || a.arrows.length !== b.arrows.length) return false;
  const key = (q: QuiverJson) =>
    q.arrows
      .map((arrow) => arrow.join(','))
      .sort()
      .join(';');
  return key(a) === key(b);
}
