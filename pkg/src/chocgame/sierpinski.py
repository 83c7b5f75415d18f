"""Vertex-octahedron fractal: exact construction, horizontal sections, similarity checks.

The order-0 solid is the L1 unit ball; each subdivision keeps the six
half-size octahedra sitting at the midpoints between center and
vertices.  Every coordinate is a dyadic rational kept as an integer
numerator over an explicit power-of-two denominator, so all geometry
tests are integer comparisons.

A horizontal plane cuts each surviving octahedron in a diamond (an L1
ball in the plane); the diamond sets at levels m/2^n reproduce the
square-board P-position patterns up to a 45-degree similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Pattern
from .errors import CapacityError, DomainError

MAX_BUILD_ORDER = 10

# The eight scaled 45-degree rotations/reflections: integer matrices
# [[a, b], [c, d]] with entries +-1 and orthogonal columns (each is
# sqrt(2) times an orthogonal map).
_CANDIDATE_MATRICES = tuple(
    (a, b, c, -(a * b) * c)
    for a in (1, -1)
    for b in (1, -1)
    for c in (1, -1)
)


@dataclass(frozen=True)
class Octa:
    """Axis-aligned regular octahedron: |p - c| <= 1/2^order in L1."""

    cx: int
    cy: int
    cz: int
    order: int

    @property
    def denominator(self) -> int:
        return 1 << self.order


ROOT = Octa(0, 0, 0, 0)

_CHILD_OFFSETS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))


def subdivide(o: Octa) -> list[Octa]:
    """The six half-size children at the center-to-vertex midpoints."""
    return [
        Octa(2 * o.cx + dx, 2 * o.cy + dy, 2 * o.cz + dz, o.order + 1)
        for dx, dy, dz in _CHILD_OFFSETS
    ]


def build(n: int, max_order: int = MAX_BUILD_ORDER) -> list[Octa]:
    """All 6^n order-n octahedra of the order-n solid."""
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    if n > max_order:
        raise CapacityError(f"order {n} exceeds the build bound {max_order} (6^n pieces)")
    out: list[Octa] = []

    def rec(cx: int, cy: int, cz: int, k: int) -> None:
        if k == n:
            out.append(Octa(cx, cy, cz, n))
            return
        for dx, dy, dz in _CHILD_OFFSETS:
            rec(2 * cx + dx, 2 * cy + dy, 2 * cz + dz, k + 1)

    rec(0, 0, 0, 0)
    return out


@dataclass(frozen=True)
class Diamond:
    """Planar L1 ball: center (cx_num, cy_num)/den, radius r_num/den."""

    cx_num: int
    cy_num: int
    r_num: int
    den: int


@dataclass(frozen=True)
class Section:
    """One horizontal slice: equal-radius diamonds on a common denominator."""

    order: int
    level_num: int
    level_den: int
    r_num: int
    den: int
    centers: frozenset[tuple[int, int]]

    @property
    def count(self) -> int:
        return len(self.centers)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.r_num, self.den)

    def diamonds(self) -> list[Diamond]:
        return [
            Diamond(cx, cy, self.r_num, self.den)
            for cx, cy in sorted(self.centers)
        ]


def section(n: int, level_num: int, level_den: int) -> Section:
    """Slice the order-n solid with the plane z = 1 - level.

    level_den must be 2^n (integer levels) or 2^(n+1) (half levels).
    Octahedra meeting the plane in a single point carry no area and are
    excluded; the survivors all share one radius by dyadic parity.
    """
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    if level_den not in (1 << n, 1 << (n + 1)):
        raise DomainError(
            f"level denominator must be 2^{n} or 2^{n + 1}, got {level_den}"
        )
    if not 0 < level_num < 2 * level_den:
        raise DomainError("plane z = 1 - level must cut the solid: need 0 < level < 2")
    den2 = 1 << (n + 1)  # work over the half-level denominator
    z0 = den2 - level_num * (den2 // level_den)

    hits: list[tuple[int, int]] = []

    def rec(cx: int, cy: int, cz: int, k: int) -> None:
        # Subtree at order k spans z in [(cz-1)/2^k, (cz+1)/2^k].
        unit = 1 << (n + 1 - k)
        if abs(z0 - cz * unit) > unit:
            return
        if k == n:
            if abs(z0 - 2 * cz) < 2:
                hits.append((cx, cy))
            return
        for dx, dy, dz in _CHILD_OFFSETS:
            rec(2 * cx + dx, 2 * cy + dy, 2 * cz + dz, k + 1)

    rec(0, 0, 0, 0)

    if z0 % 2 == 0:  # integer level: planes pass through octahedron centers
        return Section(n, level_num, level_den, r_num=1, den=1 << n,
                       centers=frozenset(hits))
    return Section(n, level_num, level_den, r_num=1, den=den2,
                   centers=frozenset((2 * cx, 2 * cy) for cx, cy in hits))


def integer_section(n: int, m: int) -> Section:
    """The m-th horizontal section of the order-n solid."""
    return section(n, m, 1 << n)


def half_section(n: int, m: int) -> Section:
    """The section halfway between levels m and m+1."""
    return section(n, 2 * m + 1, 1 << (n + 1))


@dataclass(frozen=True)
class SimilarityMap:
    """p |-> scale * matrix @ p + translation, exact over the rationals."""

    matrix: tuple[int, int, int, int]  # row-major (a, b, c, d)
    scale: Fraction
    translation: tuple[Fraction, Fraction]

    def apply(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        a, b, c, d = self.matrix
        return (
            self.scale * (a * x + b * y) + self.translation[0],
            self.scale * (c * x + d * y) + self.translation[1],
        )


@dataclass(frozen=True)
class SimilarityMismatch:
    reason: str
    counterexample: tuple[Fraction, Fraction] | None = None


def _pattern_centers(pat: Pattern) -> set[tuple[Fraction, Fraction]]:
    half = Fraction(1, 2)
    return {(i - half, j - half) for i, j in pat}


def fit_similarity(sec: Section, pat: Pattern):
    """Find the 45-degree similarity carrying diamond centers onto cell centers.

    The scale is forced: a diamond of L1 radius r must become a unit
    cell, so lengths stretch by 1/(r*sqrt(2)) and the sqrt(2) is
    absorbed by the +-1 candidate matrices.  The translation comes from
    matching bounding-box corners; the map is then verified on every
    center.  Returns a SimilarityMap, or a SimilarityMismatch naming a
    diamond center with no partner.
    """
    targets = _pattern_centers(pat)
    if sec.count != len(targets):
        return SimilarityMismatch(
            f"diamond count {sec.count} != pattern cell count {len(targets)}"
        )
    points = [(Fraction(cx, sec.den), Fraction(cy, sec.den)) for cx, cy in sec.centers]
    scale = Fraction(sec.den, 2 * sec.r_num)
    tmin_x = min(x for x, _ in targets)
    tmin_y = min(y for _, y in targets)
    last_bad: tuple[Fraction, Fraction] | None = None
    for a, b, c, d in _CANDIDATE_MATRICES:
        mapped = [(scale * (a * x + b * y), scale * (c * x + d * y)) for x, y in points]
        tx = tmin_x - min(x for x, _ in mapped)
        ty = tmin_y - min(y for _, y in mapped)
        placed = {(x + tx, y + ty) for x, y in mapped}
        if placed == targets:
            return SimilarityMap((a, b, c, d), scale, (tx, ty))
        for idx, (x, y) in enumerate(mapped):
            if (x + tx, y + ty) not in targets:
                last_bad = points[idx]
                break
    return SimilarityMismatch("no 45-degree similarity matches", last_bad)


def check_half_congruence(n: int, m: int) -> bool:
    """Half-level section versus the half-scale odd-level section.

    The section between levels m and m+1 collects one polar child per
    diamond of the two neighbor levels, which makes it exactly the
    level-(2m+1) section one order deeper; that deeper section is the
    half-scale realization of level 2m+1.  Checked in full; whenever
    level 2m+1 also exists above the equator at order n (2m+1 <= 2^n),
    the literal half-scaled translate of that section is checked too.
    """
    if not 1 <= m < (1 << n):
        raise DomainError(f"need 1 <= m < 2^{n}, got m={m}")
    left = half_section(n, m)
    deep = integer_section(n + 1, 2 * m + 1)
    if left.radius != deep.radius or left.den != deep.den:
        return False
    if left.centers != deep.centers:
        return False
    if 2 * m + 1 > (1 << n):
        return True
    right = integer_section(n, 2 * m + 1)
    if left.radius * 2 != right.radius or left.count != right.count:
        return False
    # Halving the right side's coordinates reuses its numerators over
    # twice the denominator, which is exactly the left side's.
    lpts = left.centers
    rpts = right.centers
    if left.den != 2 * right.den:
        return False
    dx = min(x for x, _ in lpts) - min(x for x, _ in rpts)
    dy = min(y for _, y in lpts) - min(y for _, y in rpts)
    return {(x + dx, y + dy) for x, y in rpts} == lpts


def check_refinement(n: int, m: int) -> bool:
    """Same plane, one order deeper: the region must not change.

    Each diamond of the order-n section is tiled exactly by its four
    same-plane children, so the deeper center set must be the four
    half-radius offsets of every coarser center (and the radii halve).
    """
    if not 1 <= m <= (1 << n):
        raise DomainError(f"need 1 <= m <= 2^{n}, got m={m}")
    coarse = integer_section(n, m)
    fine = integer_section(n + 1, 2 * m)
    if 2 * fine.radius != coarse.radius:
        return False
    expected = set()
    for cx, cy in coarse.centers:
        expected.update(
            ((2 * cx + 1, 2 * cy), (2 * cx - 1, 2 * cy),
             (2 * cx, 2 * cy + 1), (2 * cx, 2 * cy - 1))
        )
    return expected == set(fine.centers)


def check_corner_center(n: int, m: int) -> bool:
    """Section-level corner/center decomposition.

    For m with low bits s and complement t, the level-m diamond centers
    must be the four (m-s)-shifted copies of the level-s centers plus
    the level-t centers in place.  Powers of two decompose onto
    themselves and are trivially true.
    """
    if not 2 <= m <= (1 << n):
        raise DomainError(f"need 2 <= m <= 2^{n}, got m={m}")
    from .recursion import decompose

    d = decompose(m)
    if d.s == 0:
        return True
    whole = integer_section(n, m)
    corner = integer_section(n, d.s)
    center = integer_section(n, d.t)
    off = m - d.s
    expected = set(center.centers)
    for cx, cy in corner.centers:
        expected.update(
            ((cx + off, cy), (cx - off, cy), (cx, cy + off), (cx, cy - off))
        )
    return expected == set(whole.centers)
