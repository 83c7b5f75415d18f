import { describe, expect, it } from "vitest";

import { applySimilarity, mapSection } from "../src/transform.js";
import { eq, rat } from "../src/rational.js";
import type { SectionResponse } from "../src/types.js";

// Order-2 solid sliced at level 3, exactly as the service reports it,
// with the transform the service computed against the side-3 pattern.
const sectionH23: SectionResponse = {
  diamonds: [
    { cx_num: -2, cy_num: 0, r_num: 1, den: 4 },
    { cx_num: 0, cy_num: -2, r_num: 1, den: 4 },
    { cx_num: 0, cy_num: 0, r_num: 1, den: 4 },
    { cx_num: 0, cy_num: 2, r_num: 1, den: 4 },
    { cx_num: 2, cy_num: 0, r_num: 1, den: 4 },
  ],
  count: 5,
  similarity: {
    matrix: [[1, 1], [1, -1]],
    scale: { num: 2, den: 1 },
    translation: [{ num: 3, den: 2 }, { num: 3, den: 2 }],
  },
};

const cellCenters3 = [
  [1, 1], [2, 2], [3, 3], [1, 3], [3, 1],
].map(([i, j]) => [rat(2 * i - 1, 2), rat(2 * j - 1, 2)] as const);

describe("applySimilarity", () => {
  it("maps the origin to the translation", () => {
    const [x, y] = applySimilarity(sectionH23.similarity!, rat(0), rat(0));
    expect(eq(x, rat(3, 2))).toBe(true);
    expect(eq(y, rat(3, 2))).toBe(true);
  });

  it("is exact on dyadic inputs", () => {
    const [x, y] = applySimilarity(sectionH23.similarity!, rat(1, 2), rat(0));
    expect(eq(x, rat(5, 2))).toBe(true);
    expect(eq(y, rat(5, 2))).toBe(true);
  });
});

describe("mapSection", () => {
  it("sends every diamond center onto a pattern cell center", () => {
    const mapped = mapSection(sectionH23);
    expect(mapped).toHaveLength(5);
    for (const d of mapped) {
      const hit = cellCenters3.some(([cx, cy]) => eq(d.cx, cx) && eq(d.cy, cy));
      expect(hit).toBe(true);
    }
    const distinct = new Set(mapped.map((d) => `${d.cx.num}/${d.cx.den},${d.cy.num}/${d.cy.den}`));
    expect(distinct.size).toBe(5);
  });

  it("sends diamond vertices onto the cell corner lattice", () => {
    for (const d of mapSection(sectionH23)) {
      for (const [x, y] of d.corners) {
        expect(x.den).toBe(1n);
        expect(y.den).toBe(1n);
      }
    }
  });

  it("refuses sections without a transform", () => {
    expect(() => mapSection({ ...sectionH23, similarity: null })).toThrow();
  });
});
