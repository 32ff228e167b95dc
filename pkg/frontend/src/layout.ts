import { Layout, Point, QuiverJson } from './types.js';

const WIDTH = 640;
const HEIGHT = 480;
const ITERATIONS = 200;

/** Deterministic force layout: vertices start on a circle and relax with
 * spring forces on edges and repulsion between all pairs.  Vertices whose
 * positions are pinned keep them exactly, so mutating a quiver (which only
 * rewires arrows) never moves the picture under the pointer. */
export function forceLayout(quiver: QuiverJson, pinned?: Layout): Layout {
  const positions: Layout = new Map();
  for (let v = 1; v <= quiver.n; v += 1) {
    const angle = (2 * Math.PI * (v - 1)) / quiver.n - Math.PI / 2;
    positions.set(v, {
      x: WIDTH / 2 + 180 * Math.cos(angle),
      y: HEIGHT / 2 + 180 * Math.sin(angle),
    });
  }
  if (pinned) {
    for (const [v, p] of pinned) {
      if (v >= 1 && v <= quiver.n) positions.set(v, { ...p });
    }
    if (pinned.size >= quiver.n) return positions;
  }
  const pinnedSet = new Set(pinned ? [...pinned.keys()] : []);
  const edges = quiver.arrows.map(([i, j]) => [i, j] as const);
  for (let step = 0; step < ITERATIONS; step += 1) {
    const force = new Map<number, Point>();
    for (let v = 1; v <= quiver.n; v += 1) force.set(v, { x: 0, y: 0 });
    for (let u = 1; u <= quiver.n; u += 1) {
      for (let v = u + 1; v <= quiver.n; v += 1) {
        const pu = positions.get(u)!;
        const pv = positions.get(v)!;
        const dx = pu.x - pv.x;
        const dy = pu.y - pv.y;
        const dist = Math.max(20, Math.hypot(dx, dy));
        const push = 12000 / (dist * dist);
        force.get(u)!.x += (dx / dist) * push;
        force.get(u)!.y += (dy / dist) * push;
        force.get(v)!.x -= (dx / dist) * push;
        force.get(v)!.y -= (dy / dist) * push;
      }
    }
    for (const [i, j] of edges) {
      const pi = positions.get(i)!;
      const pj = positions.get(j)!;
      const dx = pj.x - pi.x;
      const dy = pj.y - pi.y;
      const dist = Math.max(1, Math.hypot(dx, dy));
      const pull = 0.02 * (dist - 140);
      force.get(i)!.x += (dx / dist) * pull;
      force.get(i)!.y += (dy / dist) * pull;
      force.get(j)!.x -= (dx / dist) * pull;
      force.get(j)!.y -= (dy / dist) * pull;
    }
    const cooling = 1 - step / ITERATIONS;
    for (let v = 1; v <= quiver.n; v += 1) {
      if (pinnedSet.has(v)) continue;
      const p = positions.get(v)!;
      const f = force.get(v)!;
      p.x = Math.min(WIDTH - 30, Math.max(30, p.x + f.x * cooling));
      p.y = Math.min(HEIGHT - 30, Math.max(30, p.y + f.y * cooling));
    }
  }
  return positions;
}

export const CANVAS = { width: WIDTH, height: HEIGHT };
