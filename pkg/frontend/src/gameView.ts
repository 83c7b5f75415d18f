// DOM rendering for the play panel. The board is an SVG of unit cells
// with the poisoned square marked; the click targets are the break
// lines themselves, drawn exactly at the cut positions the server
// listed as legal. Row j grows upward, matching the service's renders.

import type { GameViewState } from "./game.js";
import type { GameStateJson, MoveJson } from "./types.js";

export interface GameHandlers {
  onCut: (move: MoveJson) => void;
  onReplay: (index: number | undefined) => void;
  onOverlayToggle: (on: boolean) => void;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, String(v));
  }
  return el;
}

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

// Display-only diagnostic shown in the cell tooltip; the server remains
// the only authority on moves and outcomes.
function cellTooltip(i: number, j: number, s: GameStateJson): string {
  const value = (i - 1) ^ (j - 1) ^ (s.w - i) ^ (s.h - j);
  return `cell (${i},${j}): value ${value}`;
}

function boardSvg(view: GameViewState, shown: GameStateJson, live: boolean,
                  handlers: GameHandlers): SVGSVGElement {
  const { w, h } = shown;
  const svg = svgEl("svg", {
    viewBox: `-0.3 -0.3 ${w + 0.6} ${h + 0.6}`,
    class: "board",
    role: "img",
  });
  const pSet = new Set(
    view.pOverlay && shown.w === shown.h
      ? view.pOverlay.cells.map(([i, j]) => `${i},${j}`)
      : [],
  );
  for (let j = 1; j <= h; j += 1) {
    for (let i = 1; i <= w; i += 1) {
      const rect = svgEl("rect", {
        x: i - 1, y: h - j, width: 1, height: 1,
        class: pSet.has(`${i},${j}`) ? "cell cell-p" : "cell",
      });
      const tip = svgEl("title", {});
      tip.textContent = cellTooltip(i, j, shown);
      rect.appendChild(tip);
      svg.appendChild(rect);
    }
  }
  const p = shown.poison;
  svg.appendChild(svgEl("circle", {
    cx: p.i - 0.5, cy: h - p.j + 0.5, r: 0.3, class: "poison",
  }));
  if (live && view.phase === "playing" && !view.busy) {
    for (const move of view.legalMoves) {
      const vertical = move.axis === "vertical";
      const line = svgEl("line", {
        x1: vertical ? move.cut : 0,
        y1: vertical ? 0 : h - move.cut,
        x2: vertical ? move.cut : w,
        y2: vertical ? h : h - move.cut,
        class: "cutline",
        "data-axis": move.axis,
        "data-cut": move.cut,
      });
      line.addEventListener("click", () => handlers.onCut(move));
      svg.appendChild(line);
    }
  }
  return svg;
}

function statusLine(view: GameViewState): string {
  if (view.phase === "over") {
    return view.winner === "human"
      ? "You win: the engine is stuck with the poisoned square."
      : "You lose: the poisoned square is yours.";
  }
  if (view.busy) return "engine is thinking...";
  return view.state?.mover === "human" ? "your turn: click a break line" : "engine to move";
}

export function renderGame(root: HTMLElement, view: GameViewState,
                           handlers: GameHandlers): void {
  root.textContent = "";
  if (view.phase === "idle" || !view.state) {
    root.appendChild(el("p", "hint", "Start a new game to play."));
    return;
  }

  const replaying = view.replayIndex !== undefined && view.phase === "over";
  const shown = replaying
    ? view.history[view.replayIndex as number].state
    : view.state;

  const status = el("p", view.phase === "over" ? "status over" : "status",
                    replaying ? `replay: after move ${(view.replayIndex as number) + 1}` : statusLine(view));
  root.appendChild(status);
  root.appendChild(boardSvg(view, shown, !replaying, handlers));

  if (view.toast) {
    root.appendChild(el("p", "toast", view.toast));
  }

  const controls = el("div", "controls");
  const overlayLabel = el("label", "overlay-toggle") as HTMLLabelElement;
  const overlayBox = el("input") as HTMLInputElement;
  overlayBox.type = "checkbox";
  overlayBox.checked = view.pOverlayOn;
  overlayBox.disabled = view.state.w !== view.state.h;
  overlayBox.addEventListener("change", () => handlers.onOverlayToggle(overlayBox.checked));
  overlayLabel.appendChild(overlayBox);
  overlayLabel.appendChild(document.createTextNode(
    view.state.w === view.state.h ? " show winning cells" : " winning cells (square bars only)"));
  controls.appendChild(overlayLabel);

  if (view.phase === "over" && view.history.length > 0) {
    const replay = el("div", "replay");
    const prev = el("button", undefined, "<") as HTMLButtonElement;
    const next = el("button", undefined, ">") as HTMLButtonElement;
    const liveBtn = el("button", undefined, "final") as HTMLButtonElement;
    const idx = view.replayIndex ?? view.history.length - 1;
    prev.addEventListener("click", () => handlers.onReplay(Math.max(0, idx - 1)));
    next.addEventListener("click", () =>
      handlers.onReplay(Math.min(view.history.length - 1, idx + 1)));
    liveBtn.addEventListener("click", () => handlers.onReplay(undefined));
    replay.append(el("span", undefined, "replay:"), prev, next, liveBtn);
    controls.appendChild(replay);
  }
  root.appendChild(controls);

  const strip = el("ol", "history");
  view.history.forEach((entry, k) => {
    const item = el("li", entry.by === "human" ? "ply human" : "ply engine",
                    `${entry.by}: ${entry.move.axis} ${entry.move.cut}`);
    if (replaying && k === view.replayIndex) item.classList.add("current");
    strip.appendChild(item);
  });
  root.appendChild(strip);
}
