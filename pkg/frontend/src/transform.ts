// Applies the server-computed similarity transform to section diamonds so
// the explorer can draw them in pattern coordinates. The transform comes
// from the service verbatim; nothing is re-derived here.

import { add, mul, rat, scaleInt, type Rat } from "./rational.js";
import type { SectionResponse, SimilarityJson } from "./types.js";

export interface MappedDiamond {
  cx: Rat;
  cy: Rat;
  corners: [Rat, Rat][]; // images of the four diamond vertices
}

export function applySimilarity(sim: SimilarityJson, x: Rat, y: Rat): [Rat, Rat] {
  const [[a, b], [c, d]] = sim.matrix;
  const scale = rat(sim.scale.num, sim.scale.den);
  const tx = rat(sim.translation[0].num, sim.translation[0].den);
  const ty = rat(sim.translation[1].num, sim.translation[1].den);
  const mx = add(scaleInt(x, a), scaleInt(y, b));
  const my = add(scaleInt(x, c), scaleInt(y, d));
  return [add(mul(scale, mx), tx), add(mul(scale, my), ty)];
}

export function mapSection(section: SectionResponse): MappedDiamond[] {
  const sim = section.similarity;
  if (!sim) {
    throw new Error("section carries no similarity transform to the pattern");
  }
  return section.diamonds.map((d) => {
    const cx = rat(d.cx_num, d.den);
    const cy = rat(d.cy_num, d.den);
    const r = rat(d.r_num, d.den);
    const [mcx, mcy] = applySimilarity(sim, cx, cy);
    const corners = (
      [
        [add(cx, r), cy],
        [cx, add(cy, r)],
        [add(cx, mul(rat(-1), r)), cy],
        [cx, add(cy, mul(rat(-1), r))],
      ] as [Rat, Rat][]
    ).map(([vx, vy]) => applySimilarity(sim, vx, vy));
    return { cx: mcx, cy: mcy, corners };
  });
}
