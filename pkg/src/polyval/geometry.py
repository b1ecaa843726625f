"""Incidence geometries: finite generalized polygons with axiom checking,
plus seeded oracles for projective planes over valued fields and for the
affine-derived plane of a twisted series multiplication.

A finite geometry is a bipartite incidence structure over opaque string
ids; the polygon axioms are checked on its incidence graph:

  GP1: every element is incident with at least two others;
  GP2: any two elements are joined by a path of length at most n;
  GP3: geodesics of length below n are unique (equivalently, no cycle
       shorter than 2n exists).

Closed chains of length 2n (apartment candidates) are enumerated
exhaustively for finite geometries and sampled via join/meet closures for
the plane oracles.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .fields import finite_field
from .hahn import SeriesElement, TwistContext, series_str
from .values import INFINITY, is_finite


class FiniteGeometry:
    """Bipartite incidence structure over disjoint point/line id sets."""

    finite = True

    def __init__(self, points, lines, incidence, n=None):
        self.points = tuple(points)
        self.lines = tuple(lines)
        pset, lset = set(self.points), set(self.lines)
        if len(pset) != len(self.points) or len(lset) != len(self.lines):
            raise ValueError("duplicate element ids")
        if pset & lset:
            raise ValueError("point and line id spaces must be disjoint")
        self.n = n
        self._lines_on = {p: [] for p in self.points}
        self._points_on = {l: [] for l in self.lines}
        flags = set()
        for p, l in incidence:
            if p not in pset or l not in lset:
                raise ValueError(f"incidence ({p!r}, {l!r}) references unknown ids")
            if (p, l) in flags:
                continue
            flags.add((p, l))
            self._lines_on[p].append(l)
            self._points_on[l].append(p)
        self.flags = frozenset(flags)

    def kind(self, x):
        if x in self._lines_on:
            return "point"
        if x in self._points_on:
            return "line"
        raise KeyError(f"unknown element {x!r}")

    def incident(self, x, y):
        kx = self.kind(x)
        ky = self.kind(y)
        if kx == ky:
            return False
        p, l = (x, y) if kx == "point" else (y, x)
        return (p, l) in self.flags

    def pencil(self, x):
        """Elements incident with x."""
        if x in self._lines_on:
            return tuple(self._lines_on[x])
        return tuple(self._points_on[x])

    def elements(self):
        return self.points + self.lines

    def elements_equal(self, x, y):
        return x == y

    def dual(self):
        return FiniteGeometry(
            self.lines, self.points, [(l, p) for (p, l) in self.flags], n=self.n
        )

    def adjacent(self, x, y):
        """Same-kind elements with a common incident element."""
        if self.kind(x) != self.kind(y):
            return False
        if x == y:
            return True
        px = set(self.pencil(x))
        return any(e in px for e in self.pencil(y))

    def to_json(self):
        return {
            "n": self.n,
            "points": list(self.points),
            "lines": list(self.lines),
            "incidence": sorted([p, l] for (p, l) in self.flags),
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["points"], data["lines"], data["incidence"], n=data.get("n"))

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self):
        return (
            f"FiniteGeometry({len(self.points)} points, {len(self.lines)} lines, "
            f"{len(self.flags)} flags)"
        )


def verify_gp_axioms(geometry, n):
    """Check the polygon axioms for gonality n; the report carries the first
    witness for each violated axiom and girth/diameter statistics."""
    if n < 2:
        raise ValueError(f"gonality must be >= 2, got {n}")
    report = {"n": n, "pass": True, "violations": [], "stats": {}}

    def violate(axiom, witness):
        report["pass"] = False
        report["violations"].append({"axiom": axiom, "witness": witness})

    adjacency = {x: tuple(geometry.pencil(x)) for x in geometry.elements()}
    for x, nbrs in adjacency.items():
        if len(nbrs) < 2:
            violate("GP1", {"element": x, "degree": len(nbrs)})
            break

    diameter = 0
    geodesic_violation = None
    diameter_violation = None
    for root in geometry.elements():
        dist = {root: 0}
        count = {root: 1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    count[w] = count[u]
                    queue.append(w)
                elif dist[w] == dist[u] + 1:
                    count[w] += count[u]
        for x in geometry.elements():
            if x not in dist:
                if diameter_violation is None:
                    diameter_violation = {"pair": [root, x], "distance": "unreachable"}
            elif dist[x] > n:
                if diameter_violation is None:
                    diameter_violation = {"pair": [root, x], "distance": dist[x]}
            elif 0 < dist[x] < n and count[x] > 1:
                if geodesic_violation is None:
                    geodesic_violation = {
                        "pair": [root, x],
                        "distance": dist[x],
                        "geodesics": count[x],
                    }
        if dist:
            diameter = max(diameter, max(dist.values()))
    if diameter_violation is not None:
        violate("GP2", diameter_violation)
    if geodesic_violation is not None:
        violate("GP3", geodesic_violation)

    report["stats"]["diameter"] = diameter
    report["stats"]["girth"] = girth(geometry)
    return report


def girth(geometry):
    """Shortest cycle length of the incidence graph; None if acyclic."""
    adjacency = {x: tuple(geometry.pencil(x)) for x in geometry.elements()}
    best = None
    for root in geometry.elements():
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


# ---------------------------------------------------------------------------
# fixtures


def generate_pg2(q):
    """The classical projective plane of order q (q a prime power <= 13)."""
    if q > 13:
        raise ValueError(f"order {q} out of the supported range")
    field = finite_field(q)
    reps = []
    seen = set()
    for triple in itertools.product(field.elements(), repeat=3):
        if triple == (field.zero,) * 3 or triple in seen:
            continue
        reps.append(triple)
        for c in field.elements():
            if c != field.zero:
                seen.add(tuple(field.mul(c, x) for x in triple))
    points = [f"P({a}:{b}:{c})" for (a, b, c) in reps]
    lines = [f"L[{a}:{b}:{c}]" for (a, b, c) in reps]
    incidence = []
    for (a, b, c), pid in zip(reps, points):
        for (d, e, f), lid in zip(reps, lines):
            s = field.add(field.add(field.mul(a, d), field.mul(b, e)), field.mul(c, f))
            if s == field.zero:
                incidence.append((pid, lid))
    return FiniteGeometry(points, lines, incidence, n=3)


def generate_w2():
    """The generalized quadrangle of order (2, 2): points are the 2-subsets
    of a 6-set, lines are its perfect matchings, incidence is membership."""
    base = range(6)
    points = list(itertools.combinations(base, 2))
    matchings = []
    for a in itertools.combinations(base, 2):
        rest = [x for x in base if x not in a]
        for idx in range(1, 4):
            b = (rest[0], rest[idx])
            c = tuple(x for x in rest[1:] if x != rest[idx])
            m = tuple(sorted((tuple(sorted(a)), tuple(sorted(b)), tuple(sorted(c)))))
            if m not in matchings:
                matchings.append(m)
    point_ids = {p: f"P{p[0]}{p[1]}" for p in points}
    line_ids = {m: "L" + "-".join(f"{a}{b}" for (a, b) in m) for m in matchings}
    incidence = [
        (point_ids[p], line_ids[m]) for m in matchings for p in m
    ]
    return FiniteGeometry(point_ids.values(), line_ids.values(), incidence, n=4)


def generate_ordinary_polygon(k):
    """The thin polygon: k points and k lines arranged in a single cycle."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    points = [f"p{i}" for i in range(k)]
    lines = [f"l{i}" for i in range(k)]
    incidence = [(points[i], lines[i]) for i in range(k)]
    incidence += [(points[(i + 1) % k], lines[i]) for i in range(k)]
    return FiniteGeometry(points, lines, incidence, n=k)


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain:
    """A closed chain of length 2n: consecutive elements incident, kinds
    alternating.  Degenerate when elements repeat."""

    elements: tuple
    degenerate: bool

    @property
    def length(self):
        return len(self.elements)


def make_chain(geometry, elements):
    elements = tuple(elements)
    if len(elements) % 2 != 0 or len(elements) < 4:
        raise ValueError("a closed chain needs even length >= 4")
    kinds = [geometry.kind(x) for x in elements]
    for i, x in enumerate(elements):
        y = elements[(i + 1) % len(elements)]
        if kinds[i] == kinds[(i + 1) % len(elements)]:
            raise ValueError(f"kinds do not alternate at position {i}")
        if not geometry.incident(x, y):
            raise ValueError(f"consecutive elements not incident at position {i}")
    degenerate = False
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if geometry.elements_equal(elements[i], elements[j]):
                degenerate = True
                break
        if degenerate:
            break
    return Chain(elements, degenerate)


def _canonical_cycle(elements):
    best = None
    k = len(elements)
    for seq in (elements, tuple(reversed(elements))):
        for r in range(k):
            rot = seq[r:] + seq[:r]
            if best is None or rot < best:
                best = rot
    return best


def enumerate_chains(geometry, n, base=None, limit=20000, seed=0):
    """Closed chains of length 2n.

    Finite geometries: exhaustive enumeration, one representative per
    rotation/reflection class, degenerate chains included.  Plane oracles:
    seeded sampling of triangle closures via join.  ``base`` restricts to
    chains through that element.
    """
    if geometry.finite:
        return _enumerate_finite(geometry, n, base, limit)
    return geometry.sample_chains(n, base=base, limit=limit, seed=seed)


def _enumerate_finite(geometry, n, base, limit):
    length = 2 * n
    chains = []
    seen = set()
    starts = [base] if base is not None else sorted(geometry.elements())
    for start in starts:
        stack = [(start,)]
        while stack:
            walk = stack.pop()
            if len(walk) == length:
                if geometry.incident(walk[-1], walk[0]):
                    key = _canonical_cycle(walk)
                    if key not in seen:
                        seen.add(key)
                        chains.append(make_chain(geometry, walk))
                        if len(chains) >= limit:
                            return chains
                continue
            for nxt in sorted(geometry.pencil(walk[-1])):
                # a closing element must still reach walk[0]; prune only on length
                stack.append(walk + (nxt,))
    return chains


# ---------------------------------------------------------------------------
# plane oracle over a valued field


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


class ProjectiveElement:
    """Point or line of a plane oracle: a unimodular coordinate triple.

    Equality is projective (all 2x2 minors vanish); unhashable on purpose.
    """

    __slots__ = ("kind", "coords", "_handle")

    def __init__(self, kind, coords, handle):
        self.kind = kind
        self.coords = tuple(coords)
        self._handle = handle

    def __eq__(self, other):
        if not isinstance(other, ProjectiveElement) or other.kind != self.kind:
            return NotImplemented if not isinstance(other, ProjectiveElement) else False
        zero = self._handle.field.zero
        return all(m == zero for m in cross(self.coords, other.coords))

    __hash__ = None

    def __repr__(self):
        f = self._handle.field
        inner = " : ".join(f.element_str(c) for c in self.coords)
        return f"({inner})" if self.kind == "point" else f"[{inner}]"


class ProjectivePlane:
    """PG(2, K) for a valued field handle K, with seeded samplers.

    All answers are exact; samplers are deterministic given the seed that
    produced the Random instance passed in.
    """

    finite = False

    def __init__(self, field):
        self.field = field

    def normalize(self, coords):
        """Scale a triple so the minimum coordinate valuation is 0."""
        coords = tuple(coords)
        vals = [self.field.valuation(c) for c in coords]
        finite_vals = [v for v in vals if is_finite(v)]
        if not finite_vals:
            raise ValueError("projective triple must be nonzero")
        m = min(finite_vals)
        if m != 0:
            scale = self.field.uniformizer_power(-m)
            coords = tuple(c * scale for c in coords)
        return coords

    def point(self, coords):
        return ProjectiveElement("point", self.normalize(coords), self)

    def line(self, coords):
        return ProjectiveElement("line", self.normalize(coords), self)

    def kind(self, x):
        return x.kind

    def elements_equal(self, x, y):
        return x == y

    def incident(self, x, y):
        if x.kind == y.kind:
            return False
        dot = sum((a * b for a, b in zip(x.coords, y.coords)), self.field.zero)
        return self.field.is_zero(dot)

    def join(self, p, q):
        if p.kind != "point" or q.kind != "point":
            raise ValueError("join expects two points")
        c = cross(p.coords, q.coords)
        if all(self.field.is_zero(x) for x in c):
            raise ValueError("join of coincident points")
        return self.line(c)

    def meet(self, l, m):
        if l.kind != "line" or m.kind != "line":
            raise ValueError("meet expects two lines")
        c = cross(l.coords, m.coords)
        if all(self.field.is_zero(x) for x in c):
            raise ValueError("meet of coincident lines")
        return self.point(c)

    def _random_triple(self, rng):
        while True:
            coords = tuple(
                self.field.zero if rng.random() < 0.18 else self.field.random_element(rng, allow_zero=False)
                for _ in range(3)
            )
            if not all(self.field.is_zero(c) for c in coords):
                return coords

    def sample_point(self, rng):
        return self.point(self._random_triple(rng))

    def sample_line(self, rng):
        return self.line(self._random_triple(rng))

    def sample_pencil(self, x, count, rng, max_tries=400):
        """Distinct elements incident with x (points of a line, or dually).

        The two basis elements are chosen complementary to the coordinate
        of x with minimum valuation, which keeps them independent after
        reduction; combinations then spread over all residue classes of
        the pencil instead of clustering in one."""
        units = (
            (self.field.one, self.field.zero, self.field.zero),
            (self.field.zero, self.field.one, self.field.zero),
            (self.field.zero, self.field.zero, self.field.one),
        )
        vals = [self.field.valuation(c) for c in x.coords]
        k = vals.index(min(v for v in vals if is_finite(v)))
        basis = []
        for i in range(3):
            if i == k:
                continue
            c = cross(x.coords, units[i])
            basis.append(
                ProjectiveElement(
                    "line" if x.kind == "point" else "point", self.normalize(c), self
                )
            )
        b1, b2 = basis[0], basis[1]
        # alpha*b1 + beta*b2 with alpha nonzero: distinct beta/alpha ratios
        # give distinct elements, so dedup on the ratio instead of paying
        # for projective comparisons of the combined coordinates
        out = []
        ratios = []
        tries = 0
        while len(out) < count and tries < max_tries:
            tries += 1
            alpha = self.field.random_element(rng, allow_zero=False)
            beta = self.field.random_element(rng)
            ratio = beta / alpha
            if any(ratio == r for r in ratios):
                continue
            ratios.append(ratio)
            coords = tuple(alpha * u + beta * v for u, v in zip(b1.coords, b2.coords))
            out.append(
                ProjectiveElement(
                    "line" if x.kind == "point" else "point", self.normalize(coords), self
                )
            )
        if len(out) < count:
            raise RuntimeError(f"could not sample {count} distinct pencil elements")
        return out

    def sample_chains(self, n, base=None, limit=100, seed=0):
        if n != 3:
            raise ValueError("the plane oracle only closes chains for n = 3")
        rng = random.Random(seed)
        chains = []
        guard = 0
        while len(chains) < limit and guard < 50 * limit + 100:
            guard += 1
            if base is not None and base.kind == "line":
                p1, p2 = self.sample_pencil(base, 2, rng)
                l12 = base
            else:
                p1 = base if base is not None else self.sample_point(rng)
                p2 = self.sample_point(rng)
                if p1 == p2:
                    continue
                l12 = self.join(p1, p2)
            p3 = self.sample_point(rng)
            if p3 == p1 or p3 == p2 or self.incident(p3, l12):
                continue
            chain = (p1, l12, p2, self.join(p2, p3), p3, self.join(p3, p1))
            chains.append(make_chain(self, chain))
        if len(chains) < limit:
            raise RuntimeError("triangle sampling stalled")
        return chains

    def __repr__(self):
        return f"ProjectivePlane({self.field.name})"


# ---------------------------------------------------------------------------
# the affine plane of a twisted series multiplication


@dataclass(frozen=True)
class AffinePoint:
    x: object
    y: object


@dataclass(frozen=True)
class SlopePoint:
    """Point at infinity of all lines of a fixed slope."""

    m: object


@dataclass(frozen=True)
class VerticalInfinity:
    """Common point at infinity of the vertical lines."""


@dataclass(frozen=True)
class AffineLine:
    """y = m (*) x + k."""

    m: object
    k: object


@dataclass(frozen=True)
class VerticalLine:
    c: object


@dataclass(frozen=True)
class LineAtInfinity:
    pass


_POINT_TYPES = (AffinePoint, SlopePoint, VerticalInfinity)
_LINE_TYPES = (AffineLine, VerticalLine, LineAtInfinity)


class TwistedPlane:
    """Projective completion of the affine plane coordinatized by a twisted
    series multiplication.  join and meet are computed in closed form; when
    the twist exponents of two slopes differ, the meet comes from
    telescoping the twist orbit (a finite geometric series)."""

    finite = False

    def __init__(self, context: TwistContext):
        self.ctx = context
        self.field = context.field

    def kind(self, x):
        if isinstance(x, _POINT_TYPES):
            return "point"
        if isinstance(x, _LINE_TYPES):
            return "line"
        raise TypeError(f"not a plane element: {x!r}")

    def elements_equal(self, x, y):
        return type(x) is type(y) and x == y

    def incident(self, a, b):
        if self.kind(a) == self.kind(b):
            return False
        pt, ln = (a, b) if self.kind(a) == "point" else (b, a)
        if isinstance(pt, AffinePoint):
            if isinstance(ln, AffineLine):
                return pt.y == self.ctx.multiply(ln.m, pt.x) + ln.k
            if isinstance(ln, VerticalLine):
                return pt.x == ln.c
            return False
        if isinstance(pt, SlopePoint):
            if isinstance(ln, AffineLine):
                return pt.m == ln.m
            return isinstance(ln, LineAtInfinity)
        # VerticalInfinity
        return isinstance(ln, (VerticalLine, LineAtInfinity))

    def join(self, p, q):
        if self.kind(p) != "point" or self.kind(q) != "point":
            raise ValueError("join expects two points")
        if self.elements_equal(p, q):
            raise ValueError("join of coincident points")
        if isinstance(p, AffinePoint) and isinstance(q, AffinePoint):
            if p.x == q.x:
                return VerticalLine(p.x)
            dy = p.y - q.y
            if dy.is_zero():
                m = SeriesElement.zero(self.field)
            else:
                m = self.ctx.right_divide(p.x - q.x, dy)
            return AffineLine(m, p.y - self.ctx.multiply(m, p.x))
        if isinstance(p, AffinePoint) or isinstance(q, AffinePoint):
            pt = p if isinstance(p, AffinePoint) else q
            inf = q if isinstance(p, AffinePoint) else p
            if isinstance(inf, SlopePoint):
                return AffineLine(inf.m, pt.y - self.ctx.multiply(inf.m, pt.x))
            return VerticalLine(pt.x)
        return LineAtInfinity()

    def meet(self, l1, l2):
        if self.kind(l1) != "line" or self.kind(l2) != "line":
            raise ValueError("meet expects two lines")
        if self.elements_equal(l1, l2):
            raise ValueError("meet of coincident lines")
        if isinstance(l1, LineAtInfinity) or isinstance(l2, LineAtInfinity):
            other = l2 if isinstance(l1, LineAtInfinity) else l1
            if isinstance(other, AffineLine):
                return SlopePoint(other.m)
            return VerticalInfinity()
        if isinstance(l1, VerticalLine) and isinstance(l2, VerticalLine):
            return VerticalInfinity()
        if isinstance(l1, VerticalLine) or isinstance(l2, VerticalLine):
            vert = l1 if isinstance(l1, VerticalLine) else l2
            aff = l2 if isinstance(l1, VerticalLine) else l1
            return AffinePoint(vert.c, self.ctx.multiply(aff.m, vert.c) + aff.k)
        if l1.m == l2.m:
            return SlopePoint(l1.m)
        x = self._solve_common_abscissa(l1, l2)
        return AffinePoint(x, self.ctx.multiply(l1.m, x) + l1.k)

    def _solve_common_abscissa(self, l1, l2):
        """x with m1 (*) x + k1 = m2 (*) x + k2, the slopes distinct."""
        ctx = self.ctx
        m1, k1, m2, k2 = l1.m, l1.k, l2.m, l2.k
        if m1.is_zero():
            return ctx.left_divide(m2, k1 - k2)
        if m2.is_zero():
            return ctx.left_divide(m1, k2 - k1)
        lam1 = ctx.twist_exponent(m1)
        lam2 = ctx.twist_exponent(m2)
        order = ctx.sigma_order
        d = (lam2 - lam1) % order
        if d == 0:
            y = (k2 - k1) / (m1 - m2)
            return y.sigma_pow((-lam1) % order)
        # y - u*sigma^d(y) = c0 with y = sigma^lam1(x); iterate the twist
        # orbit until sigma^(r*d) is the identity, then solve linearly.
        # v(u) != 0 here, so the telescoped factor cannot equal 1.
        u = m2 / m1
        c0 = (k2 - k1) / m1
        r = 1
        while (r * d) % order:
            r += 1
        total = SeriesElement.zero(self.field)
        prefactor = SeriesElement.one(self.field)
        for i in range(r):
            total = total + prefactor * c0.sigma_pow((i * d) % order)
            prefactor = prefactor * u.sigma_pow((i * d) % order)
        y = total / (SeriesElement.one(self.field) - prefactor)
        return y.sigma_pow((-lam1) % order)

    # --- samplers (integral patch) ---

    def _random_integral(self, rng, allow_zero=True):
        handle = self._series_handle()
        while True:
            x = handle.random_element(rng, allow_zero=allow_zero)
            v = x.valuation()
            if v is INFINITY or v >= 0:
                return x

    def _series_handle(self):
        from .valuedfield import SeriesRationals

        if not hasattr(self, "_handle_cache"):
            self._handle_cache = SeriesRationals(self.field, self.ctx.N)
        return self._handle_cache

    def sample_affine_line(self, rng):
        m = self._random_integral(rng)
        k = self._random_integral(rng)
        return AffineLine(m, k)

    def sample_point_on(self, line, rng):
        if isinstance(line, AffineLine):
            x = self._random_integral(rng)
            return AffinePoint(x, self.ctx.multiply(line.m, x) + line.k)
        if isinstance(line, VerticalLine):
            return AffinePoint(line.c, self._random_integral(rng))
        raise ValueError("sampling on the line at infinity is not supported")

    def sample_chains(self, n, base=None, limit=100, seed=0):
        """Seeded triangles with affine vertices, distinct non-vertical
        integral sides (the patch where the affine valuation is defined)."""
        if n != 3:
            raise ValueError("the plane oracle only closes chains for n = 3")
        rng = random.Random(seed)
        chains = []
        guard = 0
        while len(chains) < limit and guard < 200 * limit + 200:
            guard += 1
            pts = [
                AffinePoint(self._random_integral(rng), self._random_integral(rng))
                for _ in range(3)
            ]
            if (
                pts[0].x == pts[1].x
                or pts[1].x == pts[2].x
                or pts[0].x == pts[2].x
            ):
                continue
            try:
                sides = [
                    self.join(pts[0], pts[1]),
                    self.join(pts[1], pts[2]),
                    self.join(pts[2], pts[0]),
                ]
            except (ZeroDivisionError, ValueError):
                continue
            ok = True
            for s in sides:
                if not isinstance(s, AffineLine):
                    ok = False
                    break
                for coord in (s.m, s.k):
                    v = coord.valuation()
                    if v is not INFINITY and v < 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            if sides[0].m == sides[1].m or sides[1].m == sides[2].m or sides[0].m == sides[2].m:
                continue
            chain = (pts[0], sides[0], pts[1], sides[1], pts[2], sides[2])
            chains.append(make_chain(self, chain))
        if len(chains) < limit:
            raise RuntimeError("twisted-plane triangle sampling stalled")
        return chains

    def embed_projective(self, plane, element):
        """Image in PG(2, K) under the standard affine chart, defined when
        the twist is the identity (sigma_order == 1)."""
        if self.ctx.sigma_order != 1:
            raise ValueError("projective comparison needs an untwisted context")
        f = self.field
        one = SeriesElement.one(f)
        zero = SeriesElement.zero(f)
        if isinstance(element, AffinePoint):
            return plane.point((element.x, element.y, one))
        if isinstance(element, SlopePoint):
            return plane.point((one, element.m, zero))
        if isinstance(element, VerticalInfinity):
            return plane.point((zero, one, zero))
        if isinstance(element, AffineLine):
            return plane.line((element.m, -one, element.k))
        if isinstance(element, VerticalLine):
            return plane.line((one, zero, -element.c))
        if isinstance(element, LineAtInfinity):
            return plane.line((zero, zero, one))
        raise TypeError(f"not a plane element: {element!r}")

    def element_str(self, element):
        s = series_str
        if isinstance(element, AffinePoint):
            return f"({s(element.x)}, {s(element.y)})"
        if isinstance(element, SlopePoint):
            return f"(slope {s(element.m)})"
        if isinstance(element, VerticalInfinity):
            return "(vertical-infinity)"
        if isinstance(element, AffineLine):
            return f"[y = ({s(element.m)}) (*) x + ({s(element.k)})]"
        if isinstance(element, VerticalLine):
            return f"[x = {s(element.c)}]"
        return "[line at infinity]"

    def __repr__(self):
        return f"TwistedPlane({self.ctx!r})"
