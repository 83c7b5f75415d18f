// Explorer controller: one slider (the side length m) and three layers.
// Each layer's data is cached per (layer, m); toggling a layer on only
// fetches that layer, and moving the slider refetches just the layers
// that are actually visible.

import { ApiClient, ApiError } from "./api.js";
import type { NimpassResponse, PatternResponse, SectionResponse } from "./types.js";

export type LayerName = "pattern" | "section" | "nimpass";

export interface ExplorerViewState {
  m: number;
  visible: Record<LayerName, boolean>;
  pattern?: PatternResponse;
  section?: SectionResponse;
  nimpass?: NimpassResponse;
  notice?: string;
  loading: boolean;
}

/** Smallest fractal order whose top level reaches side m. */
export function sectionOrder(m: number): number {
  let n = 1;
  while (2 ** n < m) n += 1;
  return n;
}

export class ExplorerController {
  view: ExplorerViewState = {
    m: 11,
    visible: { pattern: true, section: true, nimpass: false },
    loading: false,
  };
  private cache = new Map<string, unknown>();

  constructor(private api: ApiClient, private onChange: (v: ExplorerViewState) => void) {}

  private emit(partial: Partial<ExplorerViewState>): void {
    this.view = { ...this.view, ...partial };
    this.onChange(this.view);
  }

  private async fetchLayer(layer: LayerName, m: number): Promise<unknown> {
    const key = `${layer}:${m}`;
    if (this.cache.has(key)) {
      return this.cache.get(key);
    }
    let data: unknown;
    if (layer === "pattern") {
      data = await this.api.getPattern(m);
    } else if (layer === "section") {
      data = await this.api.getSection(sectionOrder(m), m);
    } else {
      data = await this.api.getNimpass(m);
    }
    this.cache.set(key, data);
    return data;
  }

  private async loadVisible(layers: LayerName[]): Promise<void> {
    const m = this.view.m;
    this.emit({ loading: true, notice: undefined });
    try {
      for (const layer of layers) {
        if (!this.view.visible[layer]) continue;
        const data = await this.fetchLayer(layer, m);
        if (this.view.m !== m) return; // slider moved on while fetching
        this.emit({ [layer]: data } as Partial<ExplorerViewState>);
      }
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        this.emit({ notice: `capacity: ${err.message}` });
      } else {
        this.emit({ notice: "fetch failed" });
        throw err;
      }
    } finally {
      this.emit({ loading: false });
    }
  }

  async setSide(m: number): Promise<void> {
    this.emit({ m, pattern: undefined, section: undefined, nimpass: undefined });
    await this.loadVisible(["pattern", "section", "nimpass"]);
  }

  async toggle(layer: LayerName, on: boolean): Promise<void> {
    this.emit({ visible: { ...this.view.visible, [layer]: on } });
    if (on) {
      await this.loadVisible([layer]);
    } else {
      this.emit({ [layer]: undefined } as Partial<ExplorerViewState>);
    }
  }

  async start(m: number): Promise<void> {
    await this.setSide(m);
  }
}
