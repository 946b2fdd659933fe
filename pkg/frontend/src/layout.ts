/** SVG rendering of a layout document.
 *
 * Geometry mirrors the server's renderer: the fixed "top" layer is the left
 * column (blue), the free "bottom" layer the right column (red), edges are
 * straight segments.  Labels are truncated at ten characters; the full text
 * lives in the hover tooltip, not here.
 *
 * Copies of a split vertex are linked visually: every part of the same
 * original shares a hue and the group is spanned by a dashed bracket.  (The
 * original interactive tool does not indicate copies; this is an addition,
 * see the README.)
 */

import type { GraphJson, LayoutDocumentJson, VertexRecordJson } from "./types.js";

export const LABEL_LIMIT = 10;
export const WIDTH = 900;
const ROW_GAP = 26;
const MARGIN = 48;
const RADIUS = 5;
const TOP_X = 180;
const BOTTOM_X = WIDTH - 180;
const BRACKET_OFFSET = 96;

const SVG_NS = "http://www.w3.org/2000/svg";

export interface VertexInfo {
  record: VertexRecordJson;
  layer: "top" | "bottom";
  degree: number;
}

export function vertexIndex(graph: GraphJson): Map<string, VertexInfo> {
  const index = new Map<string, VertexInfo>();
  for (const record of graph.top) {
    index.set(record.id, { record, layer: "top", degree: 0 });
  }
  for (const record of graph.bottom) {
    index.set(record.id, { record, layer: "bottom", degree: 0 });
  }
  for (const [t, b] of graph.edges) {
    const top = index.get(t);
    const bottom = index.get(b);
    if (top) top.degree += 1;
    if (bottom) bottom.degree += 1;
  }
  return index;
}

export interface RenderHandlers {
  onVertexClick(id: string): void;
  onBackgroundClick(): void;
  onVertexEnter(id: string, event: MouseEvent): void;
  onVertexLeave(): void;
}

function element<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

/** Shared hue per split group, keyed by the original's id; groups are
 * numbered by first appearance so colors are stable across re-renders. */
function copyHues(
  records: VertexRecordJson[],
  startIndex: number,
): { hues: Map<string, number>; next: number } {
  const members = new Map<string, number>();
  for (const record of records) {
    const root = record.originalId ?? record.id;
    members.set(root, (members.get(root) ?? 0) + 1);
  }
  const hues = new Map<string, number>();
  let index = startIndex;
  for (const record of records) {
    const root = record.originalId ?? record.id;
    if ((members.get(root) ?? 0) >= 2 && !hues.has(root)) {
      hues.set(root, (index * 137.508) % 360);
      index += 1;
    }
  }
  return { hues, next: index };
}

function renderColumn(
  svg: SVGSVGElement,
  records: VertexRecordJson[],
  layer: "top" | "bottom",
  x: number,
  yOf: Map<string, number>,
  hues: Map<string, number>,
  handlers: RenderHandlers,
  selection: string | null,
): void {
  for (const record of records) {
    const y = yOf.get(record.id);
    if (y === undefined) continue;
    const group = element("g", { "data-id": record.id });
    group.classList.add("vertex", layer);
    if (record.id === selection) group.classList.add("selected");

    const circle = element("circle", {
      cx: String(x),
      cy: String(y),
      r: String(RADIUS),
    });
    const root = record.originalId ?? record.id;
    const hue = hues.get(root);
    if (hue !== undefined) {
      group.classList.add("copy");
      group.style.setProperty("--copy-hue", hue.toFixed(1));
    }
    group.appendChild(circle);

    const anchor = layer === "top" ? "end" : "start";
    const tx = layer === "top" ? x - RADIUS - 6 : x + RADIUS + 6;
    const text = element("text", {
      x: String(tx),
      y: String(y + 4),
      "text-anchor": anchor,
    });
    text.textContent = record.label.slice(0, LABEL_LIMIT);
    group.appendChild(text);

    group.addEventListener("click", (event) => {
      event.stopPropagation();
      handlers.onVertexClick(record.id);
    });
    group.addEventListener("mouseenter", (event) =>
      handlers.onVertexEnter(record.id, event),
    );
    group.addEventListener("mouseleave", () => handlers.onVertexLeave());
    svg.appendChild(group);
  }
}

function renderBrackets(
  svg: SVGSVGElement,
  records: VertexRecordJson[],
  layer: "top" | "bottom",
  x: number,
  yOf: Map<string, number>,
  hues: Map<string, number>,
): void {
  const spans = new Map<string, { lo: number; hi: number }>();
  for (const record of records) {
    const root = record.originalId ?? record.id;
    const y = yOf.get(record.id);
    if (y === undefined || !hues.has(root)) continue;
    const span = spans.get(root);
    if (!span) spans.set(root, { lo: y, hi: y });
    else {
      span.lo = Math.min(span.lo, y);
      span.hi = Math.max(span.hi, y);
    }
  }
  const bx = layer === "top" ? x - BRACKET_OFFSET : x + BRACKET_OFFSET;
  const tick = layer === "top" ? 6 : -6;
  for (const [root, span] of spans) {
    const hue = hues.get(root)!;
    const d =
      `M ${bx + tick} ${span.lo} L ${bx} ${span.lo} ` +
      `L ${bx} ${span.hi} L ${bx + tick} ${span.hi}`;
    const path = element("path", { d, "data-root": root });
    path.classList.add("copy-bracket");
    path.style.stroke = `hsl(${hue.toFixed(1)}, 70%, 45%)`;
    svg.appendChild(path);
  }
}

export function renderLayout(
  svg: SVGSVGElement,
  doc: LayoutDocumentJson,
  selection: string | null,
  handlers: RenderHandlers,
): void {
  svg.replaceChildren();
  const rows = Math.max(doc.order.top.length, doc.order.bottom.length, 1);
  const height = MARGIN * 2 + (rows - 1) * ROW_GAP;
  svg.setAttribute("width", String(WIDTH));
  svg.setAttribute("height", String(Math.max(height, 160)));

  const yOf = new Map<string, number>();
  doc.order.top.forEach((id, i) => yOf.set(id, MARGIN + i * ROW_GAP));
  doc.order.bottom.forEach((id, i) => yOf.set(id, MARGIN + i * ROW_GAP));

  svg.addEventListener("click", () => handlers.onBackgroundClick());

  for (const [t, b] of doc.graph.edges) {
    const y1 = yOf.get(t);
    const y2 = yOf.get(b);
    if (y1 === undefined || y2 === undefined) continue;
    const line = element("line", {
      x1: String(TOP_X),
      y1: String(y1),
      x2: String(BOTTOM_X),
      y2: String(y2),
      "data-top": t,
      "data-bottom": b,
    });
    line.classList.add("edge");
    if (selection !== null && (t === selection || b === selection)) {
      line.classList.add("highlight");
    }
    svg.appendChild(line);
  }

  const top = copyHues(doc.graph.top, 0);
  const bottom = copyHues(doc.graph.bottom, top.next);
  renderColumn(svg, doc.graph.top, "top", TOP_X, yOf, top.hues,
    handlers, selection);
  renderColumn(svg, doc.graph.bottom, "bottom", BOTTOM_X, yOf, bottom.hues,
    handlers, selection);
  renderBrackets(svg, doc.graph.top, "top", TOP_X, yOf, top.hues);
  renderBrackets(svg, doc.graph.bottom, "bottom", BOTTOM_X, yOf, bottom.hues);
}
