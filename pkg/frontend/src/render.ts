// Pure DOM construction from server payloads. Every coordinate comes
// from the payload; the only transform applied is flipping the y axis,
// because the server's y grows upward with frequency while SVG y grows
// downward. Node size is a direct restyling of rel_freq.

import type { GraphPayload, SearchPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const NODE_RADIUS_MIN = 4;
const NODE_RADIUS_SPAN = 10;

export function nodeRadius(relFreq: number): number {
  return NODE_RADIUS_MIN + NODE_RADIUS_SPAN * relFreq;
}

function clear(element: Element): void {
  while (element.firstChild) element.removeChild(element.firstChild);
}

export function renderGraph(svg: SVGSVGElement, payload: GraphPayload): void {
  const doc = svg.ownerDocument;
  const { width, height } = payload.params;
  clear(svg);
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);

  if (payload.nodes.length === 0) {
    const message = doc.createElementNS(SVG_NS, "text");
    message.setAttribute("class", "empty-state");
    message.setAttribute("x", String(width / 2));
    message.setAttribute("y", String(height / 2));
    message.setAttribute("text-anchor", "middle");
    message.textContent = "no topic words matched this query";
    svg.appendChild(message);
    return;
  }

  const flip = (y: number) => height - y;
  const positions = new Map(
    payload.nodes.map((n) => [n.word, { x: n.x, y: flip(n.y) }]),
  );

  for (const boundary of payload.class_boundaries) {
    const y = flip(boundary.y);
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "class-boundary");
    line.setAttribute("x1", "0");
    line.setAttribute("x2", String(width));
    line.setAttribute("y1", String(y));
    line.setAttribute("y2", String(y));
    line.setAttribute("stroke-dasharray", "6 6");
    svg.appendChild(line);

    const label = doc.createElementNS(SVG_NS, "text");
    label.setAttribute("class", "boundary-label");
    label.setAttribute("x", "4");
    label.setAttribute("y", String(y - 4));
    label.textContent = `df ${boundary.df_threshold.toFixed(1)}`;
    svg.appendChild(label);
  }

  for (const edge of payload.edges) {
    const child = positions.get(edge.child);
    const parent = positions.get(edge.parent);
    if (!child || !parent) continue;
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "edge");
    line.setAttribute("x1", String(child.x));
    line.setAttribute("y1", String(child.y));
    line.setAttribute("x2", String(parent.x));
    line.setAttribute("y2", String(parent.y));
    line.setAttribute("data-child", edge.child);
    line.setAttribute("data-parent", edge.parent);
    line.setAttribute("data-strength", edge.strength.toFixed(2));
    svg.appendChild(line);
  }

  for (const node of payload.nodes) {
    const pos = positions.get(node.word)!;
    const group = doc.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "node");
    group.setAttribute("data-word", node.word);
    group.setAttribute("data-df", String(node.df));
    group.setAttribute("data-class", String(node.class_idx));

    const circle = doc.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(pos.x));
    circle.setAttribute("cy", String(pos.y));
    circle.setAttribute("r", String(nodeRadius(node.rel_freq)));
    group.appendChild(circle);

    const label = doc.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(pos.x));
    label.setAttribute("y", String(pos.y - nodeRadius(node.rel_freq) - 4));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.word;
    group.appendChild(label);

    const tooltip = doc.createElementNS(SVG_NS, "title");
    tooltip.textContent =
      `${node.word}: df ${node.df} of ${payload.result_count}, ` +
      `rel ${node.rel_freq.toFixed(2)}, class ${node.class_idx}`;
    group.appendChild(tooltip);

    svg.appendChild(group);
  }
}

export function renderTitles(
  countElement: HTMLElement,
  listElement: HTMLElement,
  payload: SearchPayload,
): void {
  clear(listElement);
  if (payload.result_count === 0) {
    countElement.textContent = "no matching documents";
    return;
  }
  const shown = payload.titles.length;
  countElement.textContent =
    shown < payload.result_count
      ? `${payload.result_count} matching documents (showing ${shown})`
      : `${payload.result_count} matching documents`;
  for (const item of payload.titles) {
    const li = listElement.ownerDocument.createElement("li");
    li.setAttribute("data-doc-id", String(item.doc_id));
    li.textContent = item.title;
    listElement.appendChild(li);
  }
}
