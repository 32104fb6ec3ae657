"""Projective point configurations and their symbolic-power linear algebra.

A FatPointScheme is a finite set of points of P^n with exact rational
coordinates plus a uniform multiplicity m.  Over a characteristic-0 field
the m-th symbolic power of the point ideal is the differential power, so a
degree-d form belongs to it exactly when all its partial derivatives of
order m-1 vanish at every point (lower orders then vanish as well, by
Euler's relation, as long as d >= m-1).  That turns each degree into one
exact kernel computation on an integer condition matrix.

Star configurations are built from s hyperplanes, either the always-valid
Vandermonde family h_j = sum_i j^i x_{i+1} or a seeded random family; both
are validated against the configuration invariants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, gcd
from typing import Sequence

from .errors import DegenerateConfigurationError, SchemeFormatError
from .linalg import RatMatrix, echelon_int, parse_rational
from .monomial import Exponents, dimension_of_degree, monomials_of_degree
from .rng import SeededRng

Coords = tuple[Fraction, ...]


def normalize_point(coords: Sequence[Fraction]) -> Coords:
    """Canonical representative: divide so the last nonzero coordinate is 1."""
    vals = [Fraction(c) for c in coords]
    last = None
    for i in range(len(vals) - 1, -1, -1):
        if vals[i] != 0:
            last = vals[i]
            break
    if last is None:
        raise SchemeFormatError("projective point with all coordinates zero")
    return tuple(v / last for v in vals)


def primitive_int_coords(coords: Coords) -> tuple[int, ...]:
    """Integer representative with gcd 1; sign fixed by the canonical form."""
    lcm = 1
    for c in coords:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [c.numerator * (lcm // c.denominator) for c in coords]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class FatPointScheme:
    """Distinct points of P^dim, all carrying the same multiplicity."""

    dim: int
    points: tuple[Coords, ...]
    multiplicity: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise SchemeFormatError("ambient dimension must be at least 1")
        if self.multiplicity < 1:
            raise SchemeFormatError("multiplicity must be at least 1")
        if not self.points:
            raise SchemeFormatError("empty point list")
        canon = []
        for idx, p in enumerate(self.points):
            if len(p) != self.dim + 1:
                raise SchemeFormatError(
                    f"point {idx}: expected {self.dim + 1} coordinates, got {len(p)}"
                )
            canon.append(normalize_point(p))
        object.__setattr__(self, "points", tuple(canon))
        seen: dict[Coords, int] = {}
        for idx, p in enumerate(self.points):
            if p in seen:
                raise SchemeFormatError(f"points {seen[p]} and {idx} coincide")
            seen[p] = idx

    def with_multiplicity(self, m: int) -> "FatPointScheme":
        return FatPointScheme(self.dim, self.points, m)

    @cached_property
    def int_points(self) -> tuple[tuple[int, ...], ...]:
        return tuple(primitive_int_coords(p) for p in self.points)

    def fat_point_degree(self) -> int:
        """Expected length of the scheme: points * local colength."""
        n, m = self.dim, self.multiplicity
        return len(self.points) * comb(n + m - 1, n)


def _condition_rows(
    points,
    num_vars: int,
    multiplicity: int,
    mons: Sequence[Exponents],
    max_degree: int,
) -> list[list[int]]:
    """Rows of derivative-evaluation conditions (exact, any numeric type).

    One row per (point, multi-index beta with |beta| = m-1); the entry at a
    degree-d monomial x^alpha is (d^beta x^alpha)(p), i.e. the falling
    factorial prod alpha_i!/(alpha_i-beta_i)! times p^(alpha-beta).
    """
    betas = monomials_of_degree(num_vars, multiplicity - 1)
    rows = []
    for p in points:
        powers = [[1] * (max_degree + 1) for _ in range(num_vars)]
        for i, c in enumerate(p):
            for e in range(1, max_degree + 1):
                powers[i][e] = powers[i][e - 1] * c
        for beta in betas:
            row = []
            for alpha in mons:
                entry = 1
                for ai, bi, pw in zip(alpha, beta, powers):
                    if bi > ai:
                        entry = 0
                        break
                    for t in range(ai, ai - bi, -1):
                        entry *= t
                    entry *= pw[ai - bi]
                row.append(entry)
            rows.append(row)
    return rows


def conditions_matrix(sch: FatPointScheme, d: int) -> RatMatrix:
    """Vanishing-to-order-m conditions on degree-d forms.

    Columns are the degree-d monomials of the n+1 ambient variables in
    descending reverse-lexicographic order; rows are indexed by (point,
    derivative multi-index of order m-1); entries are the derivatives
    evaluated at the canonical point representatives.  For d >= m-1 a form
    lies in the m-th symbolic power exactly when its coefficient vector is
    in the kernel (below that the derivative rows vanish identically and
    carry no information).
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    k = sch.dim + 1
    mons = monomials_of_degree(k, d)
    rows = _condition_rows(sch.points, k, sch.multiplicity, mons, d)
    return RatMatrix.from_rows(rows)


def _rank_int(rows: list[list[int]], ncols: int) -> int:
    pivots, _ = echelon_int(rows, range(ncols), ncols)
    return len(pivots)


def hf_symbolic(sch: FatPointScheme, d: int) -> int:
    """dim of the degree-d piece of the m-th symbolic power, exactly.

    Zero for d < m: a nonzero form cannot vanish to order above its degree.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d < sch.multiplicity:
        return 0
    k = sch.dim + 1
    mons = monomials_of_degree(k, d)
    rows = _condition_rows(sch.int_points, k, sch.multiplicity, mons, d)
    return dimension_of_degree(k, d) - _rank_int(rows, len(mons))


def symbolic_basis(sch: FatPointScheme, d: int) -> list[list[Fraction]]:
    """Exact kernel basis of the conditions matrix, in the descending
    reverse-lexicographic column convention; length == hf_symbolic."""
    from .linalg import nullspace

    if d < 0:
        raise ValueError("degree must be non-negative")
    if d < sch.multiplicity:
        return []
    return nullspace(conditions_matrix(sch, d))


def transform_scheme(sch: FatPointScheme, g: RatMatrix) -> FatPointScheme:
    """Apply the coordinate change x -> g x to every point.

    A form f vanishes to order m at p exactly when f after the inverse
    substitution vanishes to order m at g p, so the transformed scheme's
    symbolic power realizes the original one in new coordinates.
    """
    k = sch.dim + 1
    if g.rows != k or g.cols != k:
        raise ValueError("coordinate change has the wrong shape")
    g_rows = g.int_rows()
    new_points = []
    for p in sch.int_points:
        q = [sum(a * c for a, c in zip(row, p)) for row in g_rows]
        new_points.append(tuple(Fraction(x) for x in q))
    return FatPointScheme(sch.dim, tuple(new_points), sch.multiplicity)


@dataclass(frozen=True)
class StarConfiguration:
    """s hyperplanes of P^n in linearly general position and their
    binom(s, n) n-wise intersection points."""

    n: int
    s: int
    hyperplanes: tuple[tuple[int, ...], ...]
    points: tuple[Coords, ...]
    provenance: str

    def scheme(self, multiplicity: int = 1) -> FatPointScheme:
        return FatPointScheme(self.n, self.points, multiplicity)


def _int_kernel_vector(rows: list[list[int]], ncols: int) -> list[int] | None:
    """Kernel vector of an (ncols-1) x ncols integer system via cofactor
    expansion along the deleted column (Cramer); None if rank deficient."""
    coords = []
    for j in range(ncols):
        minor = [[row[c] for c in range(ncols) if c != j] for row in rows]
        coords.append((-1) ** j * _det_int(minor))
    if all(c == 0 for c in coords):
        return None
    for row in rows:
        if sum(a * c for a, c in zip(row, coords)) != 0:
            raise AssertionError("cofactor kernel vector failed verification")
    return coords


def _det_int(m: list[list[int]]) -> int:
    """Exact integer determinant (Bareiss)."""
    a = [list(r) for r in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def _points_from_hyperplanes(
    n: int, hyperplanes: Sequence[tuple[int, ...]]
) -> list[Coords] | None:
    """Intersection point of every n-subset; None on any degeneracy."""
    pts: list[Coords] = []
    seen = set()
    for subset in combinations(range(len(hyperplanes)), n):
        rows = [list(hyperplanes[j]) for j in subset]
        vec = _int_kernel_vector(rows, n + 1)
        if vec is None:
            return None
        point = normalize_point([Fraction(c) for c in vec])
        if point in seen:
            return None
        seen.add(point)
        pts.append(point)
    return pts


def build_star(
    n: int,
    s: int,
    mode: str = "vandermonde",
    seed: int = 0,
    bound: int = 1000,
) -> StarConfiguration:
    """Star configuration of the n-wise intersection points of s hyperplanes.

    vandermonde: h_j has coefficients (1, j, j^2, ..., j^n) for j = 1..s;
    every n x (n+1) subsystem is a Vandermonde slice of full rank, so this
    family is valid for every (n, s).  seeded: coefficients drawn uniformly
    from [-bound, bound], redrawn (bounded retries) on degeneracy.
    Deterministic given (n, s, mode, seed, bound).
    """
    if n < 1 or s < n:
        raise ValueError("need s >= n >= 1")
    if mode == "vandermonde":
        planes = tuple(tuple(j**i for i in range(n + 1)) for j in range(1, s + 1))
        pts = _points_from_hyperplanes(n, planes)
        if pts is None:
            raise DegenerateConfigurationError("vandermonde family degenerated")
        return StarConfiguration(n, s, planes, tuple(pts), "vandermonde")
    if mode == "seeded":
        rng = SeededRng(seed)
        for _ in range(100):
            planes = tuple(
                tuple(rng.next_int(-bound, bound) for _ in range(n + 1))
                for _ in range(s)
            )
            if any(all(c == 0 for c in h) for h in planes):
                continue
            pts = _points_from_hyperplanes(n, planes)
            if pts is not None:
                return StarConfiguration(
                    n, s, planes, tuple(pts), f"seeded:{seed}:{bound}"
                )
        raise DegenerateConfigurationError(
            "no valid hyperplane family after 100 seeded attempts"
        )
    raise ValueError(f"unknown mode {mode!r}")


def load_points(path) -> FatPointScheme:
    """Read a point scheme from JSON.

    Expected shape: {"dim": n, "multiplicity": m,
                     "points": [["p/q" | "p", ...], ...]}.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemeFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemeFormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemeFormatError(f"{path}: top level must be an object")
    for key in ("dim", "points"):
        if key not in doc:
            raise SchemeFormatError(f"{path}: missing key {key!r}")
    dim = doc["dim"]
    mult = doc.get("multiplicity", 1)
    if not isinstance(dim, int) or not isinstance(mult, int):
        raise SchemeFormatError(f"{path}: dim and multiplicity must be integers")
    raw_points = doc["points"]
    if not isinstance(raw_points, list):
        raise SchemeFormatError(f"{path}: points must be a list")
    points = []
    for idx, raw in enumerate(raw_points):
        if not isinstance(raw, list):
            raise SchemeFormatError(f"{path}: point {idx} must be a list")
        coords = []
        for jdx, val in enumerate(raw):
            try:
                coords.append(parse_rational(str(val)))
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemeFormatError(
                    f"{path}: point {idx}, coordinate {jdx}: {exc}"
                ) from exc
        points.append(tuple(coords))
    try:
        return FatPointScheme(dim, tuple(points), mult)
    except SchemeFormatError as exc:
        raise SchemeFormatError(f"{path}: {exc}") from exc
