import { describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { ExplorerController, sectionOrder } from "../src/explorer.js";

function mockApi() {
  return {
    getPattern: vi.fn().mockResolvedValue({ m: 11, g: 29, cells: [] }),
    getSection: vi.fn().mockResolvedValue({ diamonds: [], count: 29, similarity: null }),
    getNimpass: vi.fn().mockResolvedValue({ blue: [], red: [] }),
  };
}

const asClient = (m: ReturnType<typeof mockApi>) => m as unknown as ApiClient;

describe("sectionOrder", () => {
  it("is the smallest order whose top level reaches m", () => {
    expect(sectionOrder(1)).toBe(1);
    expect(sectionOrder(2)).toBe(1);
    expect(sectionOrder(3)).toBe(2);
    expect(sectionOrder(11)).toBe(4);
    expect(sectionOrder(16)).toBe(4);
    expect(sectionOrder(17)).toBe(5);
  });
});

describe("ExplorerController", () => {
  it("fetches only visible layers", async () => {
    const api = mockApi();
    const ex = new ExplorerController(asClient(api), () => {});
    await ex.start(11);
    expect(api.getPattern).toHaveBeenCalledTimes(1);
    expect(api.getSection).toHaveBeenCalledWith(4, 11, false);
    expect(api.getNimpass).not.toHaveBeenCalled();
  });

  it("toggling one layer never refetches the others", async () => {
    const api = mockApi();
    const ex = new ExplorerController(asClient(api), () => {});
    await ex.start(11);
    await ex.toggle("nimpass", true);
    expect(api.getNimpass).toHaveBeenCalledTimes(1);
    expect(api.getPattern).toHaveBeenCalledTimes(1);
    expect(api.getSection).toHaveBeenCalledTimes(1);
    await ex.toggle("nimpass", false);
    await ex.toggle("nimpass", true);
    // cached: still a single service call
    expect(api.getNimpass).toHaveBeenCalledTimes(1);
    expect(ex.view.nimpass).toBeDefined();
  });

  it("slider changes refetch each visible layer once per new side", async () => {
    const api = mockApi();
    const ex = new ExplorerController(asClient(api), () => {});
    await ex.start(11);
    await ex.setSide(12);
    expect(api.getPattern).toHaveBeenCalledTimes(2);
    expect(api.getSection).toHaveBeenCalledTimes(2);
    await ex.setSide(11); // back to a cached side
    expect(api.getPattern).toHaveBeenCalledTimes(2);
    expect(api.getNimpass).not.toHaveBeenCalled();
  });

  it("renders a 422 as a capacity notice", async () => {
    const api = mockApi();
    api.getSection.mockRejectedValue(new ApiError(422, "section order capped at 8"));
    const ex = new ExplorerController(asClient(api), () => {});
    await ex.start(300);
    expect(ex.view.notice).toContain("capacity");
  });
});
