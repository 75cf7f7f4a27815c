/** SVG and HTML fragments from a ViewState. Pure string building. */

import { ViewState, VertexView } from "./view.js";

const BADGE_COLORS: Record<string, string> = {
  sink: "#2563eb",
  source: "#16a34a",
  "certified-exit": "#dc2626",
  "global-descent": "#9333ea",
};

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function shorten(
  from: { x: number; y: number },
  to: { x: number; y: number },
  margin: number,
): { x1: number; y1: number; x2: number; y2: number } {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  return {
    x1: from.x + (dx / len) * margin,
    y1: from.y + (dy / len) * margin,
    x2: to.x - (dx / len) * margin,
    y2: to.y - (dy / len) * margin,
  };
}

function vertexNode(v: VertexView, busy: boolean): string {
  const ring =
    v.badges.length > 0
      ? ` stroke="${BADGE_COLORS[v.badges[0]]}" stroke-width="4"`
      : ' stroke="#334155" stroke-width="2"';
  const badgeText = v.badges.length
    ? `<title>vertex ${v.label}: ${v.badges.join(", ")}</title>`
    : `<title>vertex ${v.label}</title>`;
  const marks = v.badges
    .map(
      (badge, idx) =>
        `<circle cx="${v.x + 24}" cy="${v.y - 18 + idx * 12}" r="5" ` +
        `fill="${BADGE_COLORS[badge]}" class="badge badge-${badge}"/>`,
    )
    .join("");
  return (
    `<g class="vertex${busy ? " busy" : ""}" data-vertex="${v.label}">` +
    badgeText +
    `<circle cx="${v.x}" cy="${v.y}" r="18" fill="#f8fafc"${ring}/>` +
    `<text x="${v.x}" y="${v.y + 5}" text-anchor="middle" class="vertex-label">${v.label}</text>` +
    marks +
    `</g>`
  );
}

export function renderSvg(view: ViewState, width = 400, height = 400): string {
  const pos = new Map(view.vertices.map((v) => [v.label, v] as const));
  const arrows = view.arrows
    .map((arrow) => {
      const from = pos.get(arrow.from);
      const to = pos.get(arrow.to);
      if (!from || !to) return "";
      const { x1, y1, x2, y2 } = shorten(from, to, 24);
      const mx = (x1 + x2) / 2 + (y2 - y1 > 0 ? 10 : -10);
      const my = (y1 + y2) / 2 + (x2 - x1 > 0 ? -8 : 14);
      return (
        `<g class="arrow">` +
        `<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" ` +
        `stroke="#475569" stroke-width="1.5" marker-end="url(#head)"/>` +
        `<text x="${mx}" y="${my}" text-anchor="middle" class="weight">` +
        `${escapeXml(arrow.weight)}</text>` +
        `</g>`
      );
    })
    .join("");
  const vertices = view.vertices.map((v) => vertexNode(v, view.busy)).join("");
  return (
    `<svg viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" ` +
    `xmlns="http://www.w3.org/2000/svg">` +
    `<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="3" ` +
    `orient="auto"><path d="M0,0 L8,3 L0,6 Z" fill="#475569"/></marker></defs>` +
    arrows +
    vertices +
    `</svg>`
  );
}

export function renderTrail(view: ViewState): string {
  if (view.trail.length === 0) return "(no mutations yet)";
  return view.trail.map((v) => String(v)).join(" → ");
}

export function renderBanner(view: ViewState): string {
  const parts: string[] = [];
  if (view.banner) parts.push(`<div class="banner closed">${view.banner}</div>`);
  if (view.notice) parts.push(`<div class="banner notice">${view.notice}</div>`);
  return parts.join("");
}

export function renderLegend(): string {
  return Object.entries(BADGE_COLORS)
    .map(
      ([name, color]) =>
        `<span class="legend-item"><span class="dot" style="background:${color}"></span>${name}</span>`,
    )
    .join(" ");
}
