// DOM rendering for the explorer panel: pattern cells, the fractal
// section drawn through the server's similarity transform (so both
// layers share one coordinate frame), and the with-pass overlay.

import type { ExplorerViewState } from "./explorer.js";
import { mapSection } from "./transform.js";
import { toNumber } from "./rational.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    node.setAttribute(k, String(v));
  }
  return node;
}

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderExplorer(root: HTMLElement, view: ExplorerViewState): void {
  root.textContent = "";
  const m = view.m;

  const caption = el("p", "status",
    `side ${m}` + (view.pattern ? `, ${view.pattern.g} winning cells` : "") +
    (view.loading ? " (loading...)" : ""));
  root.appendChild(caption);
  if (view.notice) {
    root.appendChild(el("p", "toast", view.notice));
  }

  const svg = svgEl("svg", {
    viewBox: `-0.3 -0.3 ${m + 0.6} ${m + 0.6}`,
    class: "board explorer-board",
    role: "img",
  });

  if (view.visible.pattern && view.pattern) {
    const layer = svgEl("g", { class: "layer-pattern" });
    for (const [i, j] of view.pattern.cells) {
      layer.appendChild(svgEl("rect", {
        x: i - 1, y: m - j, width: 1, height: 1, class: "pcell",
      }));
    }
    svg.appendChild(layer);
  }

  if (view.visible.nimpass && view.nimpass) {
    const layer = svgEl("g", { class: "layer-nimpass" });
    for (const [i, j] of view.nimpass.red) {
      layer.appendChild(svgEl("rect", {
        x: i - 1, y: m - j, width: 1, height: 1, class: "redcell",
      }));
    }
    svg.appendChild(layer);
  }

  if (view.visible.section && view.section) {
    const layer = svgEl("g", { class: "layer-section" });
    if (view.section.similarity) {
      for (const d of mapSection(view.section)) {
        const pts = d.corners
          .map(([x, y]) => `${toNumber(x)},${m - toNumber(y)}`)
          .join(" ");
        layer.appendChild(svgEl("polygon", { points: pts, class: "diamond" }));
        layer.appendChild(svgEl("circle", {
          cx: toNumber(d.cx), cy: m - toNumber(d.cy), r: 0.09, class: "diamond-center",
        }));
      }
    }
    svg.appendChild(layer);
  }

  root.appendChild(svg);

  const legend = el("p", "hint",
    "squares: winning cells; outlines and dots: fractal slice mapped through " +
    "the similarity transform; red: with-pass winning cells");
  root.appendChild(legend);
}
