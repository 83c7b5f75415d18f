// Entry point: tab routing, the new-game form, and session restore from
// the URL hash so a reload lands back in the same server-side game.

import { ApiClient } from "./api.js";
import { GameController } from "./game.js";
import { renderGame } from "./gameView.js";
import { ExplorerController } from "./explorer.js";
import { renderExplorer } from "./explorerView.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function bootstrap(): void {
  const api = new ApiClient("");

  const playPanel = byId<HTMLElement>("play-panel");
  const boardRoot = byId<HTMLElement>("board-root");
  const explorePanel = byId<HTMLElement>("explore-panel");
  const exploreRoot = byId<HTMLElement>("explore-root");
  const tabPlay = byId<HTMLButtonElement>("tab-play");
  const tabExplore = byId<HTMLButtonElement>("tab-explore");

  const game = new GameController(api, (view) => {
    renderGame(boardRoot, view, {
      onCut: (move) => void game.clickCut(move),
      onReplay: (index) => game.setReplayIndex(index),
      onOverlayToggle: (on) => void game.togglePOverlay(on),
    });
  });

  const explorer = new ExplorerController(api, (view) => renderExplorer(exploreRoot, view));

  function showTab(which: "play" | "explore"): void {
    playPanel.hidden = which !== "play";
    explorePanel.hidden = which !== "explore";
    tabPlay.classList.toggle("active", which === "play");
    tabExplore.classList.toggle("active", which === "explore");
    if (which === "explore" && !explorer.view.pattern && !explorer.view.loading) {
      void explorer.start(explorer.view.m);
    }
  }

  tabPlay.addEventListener("click", () => {
    if (game.view.sessionId) {
      location.hash = `#g=${game.view.sessionId}`;
    } else {
      location.hash = "";
    }
    showTab("play");
  });
  tabExplore.addEventListener("click", () => {
    location.hash = "#explore";
    showTab("explore");
  });

  const form = byId<HTMLFormElement>("new-game-form");
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const m = parseInt(byId<HTMLInputElement>("side-input").value, 10);
    const poisonRaw = byId<HTMLInputElement>("poison-input").value.trim();
    const engineFirst = byId<HTMLSelectElement>("first-select").value === "engine";
    let poison: { i: number; j: number } | undefined;
    if (poisonRaw) {
      const parts = poisonRaw.split(",").map((x) => parseInt(x.trim(), 10));
      if (parts.length === 2 && parts.every(Number.isFinite)) {
        poison = { i: parts[0], j: parts[1] };
      }
    }
    void game.newGame({ m, poison, engineFirst }).then(() => {
      if (game.view.sessionId) {
        location.hash = `#g=${game.view.sessionId}`;
      }
    });
  });

  const slider = byId<HTMLInputElement>("side-slider");
  slider.addEventListener("change", () => void explorer.setSide(parseInt(slider.value, 10)));
  slider.addEventListener("input", () => {
    byId<HTMLElement>("side-slider-value").textContent = slider.value;
  });
  for (const layer of ["pattern", "section", "nimpass"] as const) {
    const box = byId<HTMLInputElement>(`layer-${layer}`);
    box.addEventListener("change", () => void explorer.toggle(layer, box.checked));
  }

  // Restore state from the URL: #g=<id> resumes a live game, #explore
  // opens the explorer. Everything else starts at the new-game form.
  const hash = location.hash;
  if (hash.startsWith("#g=")) {
    showTab("play");
    void game.resume(hash.slice(3)).then((ok) => {
      if (!ok) location.hash = "";
    });
  } else if (hash === "#explore") {
    showTab("explore");
  } else {
    showTab("play");
  }
}

if (typeof document !== "undefined" && document.getElementById("play-panel")) {
  bootstrap();
}
