// Board rendering: the path s_1..s_{n-1} in a row with s_n floating above
// its attachment vertices.  Coordinates are computed, not measured, so the
// layout is identical under jsdom and in a real browser.

import { GraphInfo } from "./api.js";

const STEP = 72;
const MARGIN = 44;
const PATH_Y = 132;
const APEX_Y = 40;
const R = 18;

const SVG_NS = "http://www.w3.org/2000/svg";

export function vertexX(info: GraphInfo, v: number): number {
  if (v < info.n) return MARGIN + (v - 1) * STEP;
  const xs = info.attach.map((j) => vertexX(info, j));
  return xs.reduce((a, b) => a + b, 0) / xs.length;
}

export function vertexY(info: GraphInfo, v: number): number {
  return v < info.n ? PATH_Y : APEX_Y;
}

export function edgeList(info: GraphInfo): Array<[number, number]> {
  const edges: Array<[number, number]> = [];
  for (let i = 1; i < info.n - 1; i++) edges.push([i, i + 1]);
  for (const j of info.attach) edges.push([j, info.n]);
  return edges;
}

export function renderBoard(root: HTMLElement, info: GraphInfo, config: string,
                            onVertex: (v: number) => void): void {
  root.innerHTML = "";
  const width = MARGIN * 2 + STEP * Math.max(info.n - 2, 0);
  const height = PATH_Y + R + 14;
  root.style.position = "relative";
  root.style.width = `${width}px`;
  root.style.height = `${height}px`;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));
  svg.classList.add("edges");
  for (const [a, b] of edgeList(info)) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(vertexX(info, a)));
    line.setAttribute("y1", String(vertexY(info, a)));
    line.setAttribute("x2", String(vertexX(info, b)));
    line.setAttribute("y2", String(vertexY(info, b)));
    svg.appendChild(line);
  }
  root.appendChild(svg);

  for (let v = 1; v <= info.n; v++) {
    const btn = document.createElement("button");
    btn.type = "button";
    btn.className = "vertex";
    btn.dataset.v = String(v);
    btn.textContent = `s${v}`;
    btn.style.left = `${vertexX(info, v) - R}px`;
    btn.style.top = `${vertexY(info, v) - R}px`;
    btn.addEventListener("click", () => onVertex(v));
    root.appendChild(btn);
  }
  paintConfig(root, config);
}

export function paintConfig(root: HTMLElement, config: string): void {
  root.querySelectorAll<HTMLButtonElement>("button.vertex").forEach((btn) => {
    const v = Number(btn.dataset.v);
    const black = config.charAt(v - 1) === "1";
    btn.classList.toggle("black", black);
    btn.classList.toggle("white", !black);
  });
}

export function shake(root: HTMLElement, v: number): void {
  const btn = root.querySelector<HTMLButtonElement>(`button.vertex[data-v="${v}"]`);
  if (!btn) return;
  btn.classList.remove("shake");
  void btn.offsetWidth; // restart the CSS animation
  btn.classList.add("shake");
}
