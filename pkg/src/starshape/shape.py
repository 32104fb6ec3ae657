"""Newton-polytope geometry of monomial staircases.

The Newton polytope P of a monomial ideal is the convex hull of its
generator lattice points plus the non-negative orthant (recession by
monomial multiples); Q is the closure of the complement of P inside the
orthant, bounded exactly when every axis carries a pure power.  For n = 2
the area of Q is exact (lower-left convex chain + shoelace); for n >= 3 a
seeded Monte-Carlo estimate is provided for reporting only.

AxisSimplex is the simplex spanned by the origin and one point per axis;
for a star configuration of s hyperplanes in P^n the predicted limit
simplex has intercepts (s-i+1)/(n-i+1) and volume binom(s,n)/n!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import UnboundedRegionError
from .gin import GinResult
from .linalg import format_rational
from .lp import EQ, LE, lp_feasible
from .rng import SeededRng

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Shape:
    """Staircase shape: pairwise-incomparable generator points, with the
    scale they have been divided by (1 for an unscaled ideal)."""

    num_vars: int
    points: tuple[Point, ...]
    scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("shape needs at least one generator point")
        pts = tuple(
            tuple(Fraction(c) for c in p) for p in self.points
        )
        for p in pts:
            if len(p) != self.num_vars:
                raise ValueError("generator point has wrong dimension")
            if any(c < 0 for c in p):
                raise ValueError("negative coordinate")
        for i, p in enumerate(pts):
            for q in pts[i + 1 :]:
                if all(a <= b for a, b in zip(p, q)) or all(
                    b <= a for a, b in zip(p, q)
                ):
                    raise ValueError(f"comparable generator points {p} and {q}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "scale", Fraction(self.scale))


def shape_of(res: GinResult) -> Shape:
    """Unscaled shape of a computed initial ideal (artinian generators)."""
    return Shape(res.n, tuple(tuple(Fraction(e) for e in g) for g in res.artinian.generators))


def scaled(sh: Shape, m: int) -> Shape:
    """Divide every generator point by m (exact rationals)."""
    if m < 1:
        raise ValueError("scale factor must be a positive integer")
    return Shape(
        sh.num_vars,
        tuple(tuple(c / m for c in p) for p in sh.points),
        sh.scale / m,
    )


def axis_intercept(sh: Shape, i: int) -> Fraction | None:
    """min t with t*e_i in P, or None when the axis misses P.

    Points of P on axis i can only arise from generator points already on
    that axis (all coordinates are non-negative), so the intercept is the
    least i-th coordinate among pure-axis generators.
    """
    if not 1 <= i <= sh.num_vars:
        raise ValueError("axis index out of range")
    best: Fraction | None = None
    for p in sh.points:
        if all(c == 0 for j, c in enumerate(p) if j != i - 1):
            if best is None or p[i - 1] < best:
                best = p[i - 1]
    return best


def contains(sh: Shape, q: Sequence[Fraction]) -> bool:
    """Exact membership of q in P = conv(points) + orthant, via LP
    feasibility: lambda >= 0, sum lambda = 1, sum lambda g <= q."""
    point = [Fraction(c) for c in q]
    if len(point) != sh.num_vars:
        raise ValueError("dimension mismatch")
    if any(c < 0 for c in point):
        raise ValueError("membership queries live in the orthant")
    k = len(sh.points)
    rows = []
    rels = []
    rhs = []
    for i in range(sh.num_vars):
        rows.append([g[i] for g in sh.points])
        rels.append(LE)
        rhs.append(point[i])
    rows.append([Fraction(1)] * k)
    rels.append(EQ)
    rhs.append(Fraction(1))
    feasible, _ = lp_feasible(rows, rhs, rels, [True] * k)
    return feasible


def _lower_hull(points: Sequence[tuple[Fraction, Fraction]]):
    """Convex chain facing the origin (Andrew monotone chain, lower part)."""
    pts = sorted(points)
    hull: list[tuple[Fraction, Fraction]] = []
    for p in pts:
        while len(hull) >= 2:
            ox, oy = hull[-2]
            ax, ay = hull[-1]
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def q_area_2d(sh: Shape) -> Fraction:
    """Exact area of Q for n = 2: shoelace over the polygon closed through
    the origin along the lower-left convex chain from (0, t2) to (t1, 0)."""
    if sh.num_vars != 2:
        raise ValueError("exact area is only defined for two variables")
    t1 = axis_intercept(sh, 1)
    t2 = axis_intercept(sh, 2)
    if t1 is None or t2 is None:
        raise UnboundedRegionError("missing pure power: Q is unbounded")
    hull = _lower_hull([(p[0], p[1]) for p in sh.points])
    poly = [(Fraction(0), Fraction(0))] + hull
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def q_volume_estimate(
    sh: Shape, samples: int = 4000, seed: int = 0
) -> tuple[float, float]:
    """Monte-Carlo estimate (value, stderr) of vol(Q) for n >= 3.

    Samples uniformly in the simplex spanned by the axis intercepts (which
    contains Q) and counts non-membership in P.  Reporting only; nothing
    downstream decides on these floats.  Deterministic given seed.
    """
    n = sh.num_vars
    if n < 3:
        raise ValueError("use q_area_2d for two variables")
    if samples < 1:
        raise ValueError("need at least one sample")
    ts = []
    for i in range(1, n + 1):
        t = axis_intercept(sh, i)
        if t is None:
            raise UnboundedRegionError("missing pure power: Q is unbounded")
        ts.append(t)
    box_volume = Fraction(1)
    for t in ts:
        box_volume *= t
    box_volume /= factorial(n)
    rng = SeededRng(seed)
    hits = 0
    for _ in range(samples):
        exps = [-math.log(1.0 - rng.next_float()) for _ in range(n + 1)]
        total = sum(exps)
        q = [Fraction(ts[i]) * Fraction(exps[i] / total) for i in range(n)]
        if not contains(sh, q):
            hits += 1
    p_hat = hits / samples
    estimate = float(box_volume) * p_hat
    stderr = float(box_volume) * math.sqrt(p_hat * (1.0 - p_hat) / samples)
    return estimate, stderr


@dataclass(frozen=True)
class AxisSimplex:
    """Simplex spanned by the origin and intercepts a_i e_i."""

    intercepts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        vals = tuple(Fraction(a) for a in self.intercepts)
        if not vals or any(a <= 0 for a in vals):
            raise ValueError("intercepts must be positive")
        object.__setattr__(self, "intercepts", vals)

    @property
    def n(self) -> int:
        return len(self.intercepts)

    @property
    def volume(self) -> Fraction:
        vol = Fraction(1)
        for a in self.intercepts:
            vol *= a
        return vol / factorial(self.n)

    @classmethod
    def star(cls, n: int, s: int) -> "AxisSimplex":
        """Predicted limit simplex for a star configuration: the axis-i
        intercept is (s-i+1)/(n-i+1); volume binom(s,n)/n!."""
        if n < 1 or s < n:
            raise ValueError("need s >= n >= 1")
        simplex = cls(tuple(Fraction(s - i + 1, n - i + 1) for i in range(1, n + 1)))
        assert simplex.volume == Fraction(comb(s, n), factorial(n))
        return simplex


def avoids_interior(sh: Shape, simplex: AxisSimplex) -> bool:
    """True when every generator point lies on or outside the simplex's
    facet hyperplane sum x_i / a_i = 1 (the shape misses the interior)."""
    if simplex.n != sh.num_vars:
        raise ValueError("dimension mismatch")
    for p in sh.points:
        if sum(c / a for c, a in zip(p, simplex.intercepts)) < 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Flat renderings (n = 2): SVG staircase + hull + simplex overlay, and a CSV
# of generator points and intercepts.


def staircase_svg(sh: Shape, simplex: AxisSimplex | None = None) -> str:
    if sh.num_vars != 2:
        raise ValueError("SVG rendering is only available for two variables")
    t1 = axis_intercept(sh, 1)
    t2 = axis_intercept(sh, 2)
    pts = sorted((float(p[0]), float(p[1])) for p in sh.points)
    xmax = max([p[0] for p in pts] + ([float(simplex.intercepts[0])] if simplex else []))
    ymax = max([p[1] for p in pts] + ([float(simplex.intercepts[1])] if simplex else []))
    xmax, ymax = xmax + 1.0, ymax + 1.0
    unit = 60.0
    width, height = xmax * unit + 40, ymax * unit + 40

    def sx(x: float) -> float:
        return 20 + x * unit

    def sy(y: float) -> float:
        return height - 20 - y * unit

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<line x1="{sx(0):.1f}" y1="{sy(0):.1f}" x2="{sx(xmax):.1f}" y2="{sy(0):.1f}" stroke="black"/>',
        f'<line x1="{sx(0):.1f}" y1="{sy(0):.1f}" x2="{sx(0):.1f}" y2="{sy(ymax):.1f}" stroke="black"/>',
    ]
    # Staircase boundary of the union of corner cones over the points.
    step = [(pts[0][0], ymax)]
    for i, (x, y) in enumerate(pts):
        step.append((x, pts[i - 1][1] if i else ymax))
        step.append((x, y))
    step.append((xmax, pts[-1][1]))
    path = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in step)
    lines.append(
        f'<polyline points="{path}" fill="none" stroke="#888888" stroke-width="1.5"/>'
    )
    if t1 is not None and t2 is not None:
        hull = _lower_hull([(p[0], p[1]) for p in sh.points])
        hp = " ".join(f"{sx(float(x)):.1f},{sy(float(y)):.1f}" for x, y in hull)
        lines.append(
            f'<polyline points="{hp}" fill="none" stroke="#1f77b4" stroke-width="2"/>'
        )
    for x, y in pts:
        lines.append(
            f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="4" fill="#1f77b4"/>'
        )
    if simplex is not None:
        a1, a2 = (float(a) for a in simplex.intercepts)
        tri = f"{sx(0):.1f},{sy(0):.1f} {sx(a1):.1f},{sy(0):.1f} {sx(0):.1f},{sy(a2):.1f}"
        lines.append(
            f'<polygon points="{tri}" fill="#d6272833" stroke="#d62728" stroke-width="1.5"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def points_csv(sh: Shape) -> str:
    header = "type," + ",".join(f"x{i}" for i in range(1, sh.num_vars + 1))
    rows = [header]
    for p in sh.points:
        rows.append("generator," + ",".join(format_rational(c) for c in p))
    intercepts = [axis_intercept(sh, i) for i in range(1, sh.num_vars + 1)]
    rows.append(
        "intercept,"
        + ",".join("" if t is None else format_rational(t) for t in intercepts)
    )
    return "\n".join(rows) + "\n"
