import { CANVAS } from './layout.js';
import { Layout, QuiverJson } from './types.js';

// ordinal palette for colours 1..m; colour 0 is always the bold stroke and
// the numeric label stays authoritative for colour-blind safety
const PALETTE = ['#1a1a1a', '#d1495b', '#1f7a8c', '#e09f3e', '#6a4c93', '#2e933c'];

export function colourStroke(c: number): string {
  return PALETTE[Math.min(c, PALETTE.length - 1)];
}

function escapeAttr(value: string): string {
  return value.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/"/g, '&quot;');
}

/** Render one directed edge per skew pair, in the stored representative
 * direction, labelled with its colour; returns an SVG document string so
 * the scene is a pure function of the view model. */
export function renderQuiver(quiver: QuiverJson, layout: Layout, selected?: number): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${CANVAS.width} ${CANVAS.height}" ` +
      `width="${CANVAS.width}" height="${CANVAS.height}">`,
  );
  parts.push(
    '<defs><marker id="arrowhead" markerWidth="9" markerHeight="7" refX="8" refY="3.5" orient="auto">' +
      '<polygon points="0 0, 9 3.5, 0 7" fill="context-stroke"/></marker></defs>',
  );
  for (const [i, j, c] of quiver.arrows) {
    const from = layout.get(i);
    const to = layout.get(j);
    if (!from || !to) continue;
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const dist = Math.max(1, Math.hypot(dx, dy));
    const trim = 22 / dist;
    const x1 = from.x + dx * trim;
    const y1 = from.y + dy * trim;
    const x2 = to.x - dx * trim;
    const y2 = to.y - dy * trim;
    const bold = c === 0;
    parts.push(
      `<line class="arrow${bold ? ' zero' : ''}" x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" ` +
        `x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" stroke="${colourStroke(c)}" ` +
        `stroke-width="${bold ? 3 : 1.6}" marker-end="url(#arrowhead)"/>`,
    );
    const lx = (x1 + x2) / 2 + (dy / dist) * 10;
    const ly = (y1 + y2) / 2 - (dx / dist) * 10;
    parts.push(
      `<text class="colour-label" x="${lx.toFixed(1)}" y="${ly.toFixed(1)}" ` +
        `fill="${colourStroke(c)}" font-size="13" text-anchor="middle">${c}</text>`,
    );
  }
  for (let v = 1; v <= quiver.n; v += 1) {
    const p = layout.get(v);
    if (!p) continue;
    const ring = v === selected ? ' stroke="#d1495b" stroke-width="3"' : ' stroke="#444"';
    parts.push(
      `<g class="vertex" data-vertex="${v}" cursor="pointer">` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="16" fill="#f4f1ea"${ring}/>` +
        `<text x="${p.x.toFixed(1)}" y="${(p.y + 4.5).toFixed(1)}" font-size="14" ` +
        `text-anchor="middle">${v}</text></g>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}

export function renderBadge(text: string): string {
  const tone = text === 'TypeI' || text === 'TypeII' ? 'member' : 'outside';
  return `<span class="badge ${tone}">${escapeAttr(text)}</span>`;
}

/** Small static thumbnail for the orbit gallery. */
export function renderThumbnail(quiver: QuiverJson, layout: Layout, badge: string): string {
  return (
    `<figure class="orbit-member">${renderQuiver(quiver, layout)}` +
    `<figcaption>${renderBadge(badge)}</figcaption></figure>`
  );
}
