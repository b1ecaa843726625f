"""Incidence geometry: finite fixtures, axiom checks, and plane oracles."""

import itertools
import random
from fractions import Fraction

import pytest

from polyval import (
    Chain,
    FiniteGeometry,
    PadicRationals,
    ProjectivePlane,
    SeriesRationals,
    TwistContext,
    TwistedPlane,
    enumerate_chains,
    finite_field,
    generate_ordinary_polygon,
    generate_pg2,
    generate_w2,
    girth,
    make_chain,
    verify_gp_axioms,
)
from polyval.geometry import cross

# --- finite fixtures ---------------------------------------------------------


def broken_fano():
    g = generate_pg2(2)
    inc = set(g.flags)
    inc.discard(sorted(inc)[0])
    return FiniteGeometry(g.points, g.lines, inc)


def test_pg2_counts():
    for q in (2, 3, 4, 5):
        g = generate_pg2(q)
        assert len(g.points) == q * q + q + 1
        assert len(g.lines) == q * q + q + 1
        for l in g.lines:
            assert len([p for p in g.points if g.incident(p, l)]) == q + 1


def test_w2_counts():
    g = generate_w2()
    assert len(g.points) == 15 and len(g.lines) == 15
    for x in g.elements():
        assert len(g.pencil(x)) == 3


@pytest.mark.parametrize(
    "make,n,ok",
    [
        (lambda: generate_pg2(2), 3, True),
        (lambda: generate_pg2(3), 3, True),
        (lambda: generate_pg2(2), 4, False),
        (generate_w2, 4, True),
        (generate_w2, 3, False),
        (lambda: generate_ordinary_polygon(3), 3, True),
        (lambda: generate_ordinary_polygon(5), 5, True),
        (lambda: generate_ordinary_polygon(8), 8, True),
        (lambda: generate_ordinary_polygon(5), 4, False),
        (broken_fano, 3, False),
    ],
)
def test_axiom_matrix(make, n, ok):
    report = verify_gp_axioms(make(), n)
    assert report["pass"] is ok
    if not ok:
        assert report["violations"]
        assert all("witness" in v for v in report["violations"])


def test_girth_values():
    assert girth(generate_pg2(2)) == 6
    assert girth(generate_pg2(3)) == 6
    assert girth(generate_w2()) == 8
    for k in (3, 4, 6, 7):
        assert girth(generate_ordinary_polygon(k)) == 2 * k


def test_diameter_reported():
    rep = verify_gp_axioms(generate_w2(), 4)
    assert rep["stats"]["girth"] == 8
    assert rep["stats"]["diameter"] == 4


# --- chain enumeration ---------------------------------------------------------


def _oracle_chain_count(g, n, base=None):
    """Independent count of closed 2n-walks up to rotations/reflections."""
    length = 2 * n
    seen = set()

    def canon(w):
        rots = [w[i:] + w[:i] for i in range(len(w))]
        rots += [tuple(reversed(r)) for r in rots]
        return min(rots)

    starts = [base] if base is not None else sorted(g.elements())
    for start in starts:
        stack = [(start,)]
        while stack:
            walk = stack.pop()
            if len(walk) == length:
                if g.incident(walk[-1], walk[0]):
                    seen.add(canon(walk))
                continue
            for nxt in g.pencil(walk[-1]):
                stack.append(walk + (nxt,))
    return len(seen)


def test_chain_counts_frozen():
    fano = generate_pg2(2)
    hexagon = generate_ordinary_polygon(6)
    assert len(enumerate_chains(fano, 3)) == 231
    assert len(enumerate_chains(hexagon, 6)) == 673
    base = sorted(fano.elements())[0]
    assert len(enumerate_chains(fano, 3, base=base)) == 61


def test_flag_triangle_count():
    # triangles through a fixed incident point-line pair (p0, l0): the side
    # on l0 picks one of the 2 remaining points of l0, the opposite vertex
    # is any of the 4 points off l0, so 2 * 4 = 8
    fano = generate_pg2(2)
    p0 = sorted(fano.points)[0]
    l0 = sorted(fano.pencil(p0))[0]
    on_l0 = [p for p in fano.points if fano.incident(p, l0) and p != p0]
    off_l0 = [p for p in fano.points if not fano.incident(p, l0)]
    assert len(on_l0) * len(off_l0) == 8

    hits = 0
    for c in enumerate_chains(fano, 3, base=p0):
        if c.degenerate:
            continue
        els = c.elements
        L = len(els)
        if any({els[i], els[(i + 1) % L]} == {p0, l0} for i in range(L)):
            hits += 1
    assert hits == 8


def test_chain_counts_against_oracle():
    fano = generate_pg2(2)
    base = sorted(fano.elements())[0]
    assert len(enumerate_chains(fano, 3, base=base)) == _oracle_chain_count(
        fano, 3, base=base
    )
    square = generate_ordinary_polygon(4)
    assert len(enumerate_chains(square, 4)) == _oracle_chain_count(square, 4)


def test_chains_are_valid():
    g = generate_w2()
    chains = enumerate_chains(g, 4, limit=500)
    assert chains
    nondeg = [c for c in chains if not c.degenerate]
    assert nondeg
    for c in chains[:50]:
        els = c.elements
        assert len(els) == 8
        for i, e in enumerate(els):
            assert g.incident(e, els[(i + 1) % len(els)])


def test_make_chain_rejects_gaps():
    g = generate_pg2(2)
    pts = sorted(g.points)[:2]
    with pytest.raises(ValueError):
        make_chain(g, (pts[0], pts[1]))  # two points are never incident


def test_degenerate_flag():
    g = generate_ordinary_polygon(3)
    walks = enumerate_chains(g, 3)
    flags = {c.degenerate for c in walks}
    assert flags == {True, False}
    for c in walks:
        els = c.elements
        backtracks = any(
            els[i - 1] == els[(i + 1) % len(els)] for i in range(len(els))
        )
        assert c.degenerate == backtracks


# --- serialization and duality -------------------------------------------------


def test_json_roundtrip(tmp_path):
    g = generate_w2()
    blob = g.to_json()
    g2 = FiniteGeometry.from_json(blob)
    assert sorted(g2.points) == sorted(g.points)
    assert sorted(g2.lines) == sorted(g.lines)
    assert g2.flags == g.flags
    path = tmp_path / "w2.json"
    g.save(path)
    g3 = FiniteGeometry.load(path)
    assert g3.flags == g.flags


def test_dual_swaps_kinds():
    g = generate_pg2(2)
    d = g.dual()
    assert len(d.points) == len(g.lines)
    for p in g.points:
        for l in g.lines:
            assert g.incident(p, l) == d.incident(l, p)
    assert verify_gp_axioms(d, 3)["pass"]


# --- plane oracles ---------------------------------------------------------


def test_cross_is_perpendicular():
    rng = random.Random(2)
    for _ in range(50):
        a = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        b = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        c = cross(a, b)
        assert sum(x * y for x, y in zip(a, c)) == 0
        assert sum(x * y for x, y in zip(b, c)) == 0


@pytest.mark.parametrize("field", [PadicRationals(3), SeriesRationals()])
def test_plane_join_meet(field):
    pl = ProjectivePlane(field)
    rng = random.Random(3)
    for _ in range(25):
        p, q = pl.sample_point(rng), pl.sample_point(rng)
        if pl.elements_equal(p, q):
            continue
        l = pl.join(p, q)
        assert pl.incident(p, l) and pl.incident(q, l)
        l2 = pl.sample_line(rng)
        if pl.elements_equal(l, l2):
            continue
        z = pl.meet(l, l2)
        assert pl.incident(z, l) and pl.incident(z, l2)


def test_plane_normalization_projective_equality():
    F = PadicRationals(3)
    pl = ProjectivePlane(F)
    p = pl.point((Fraction(3), Fraction(6), Fraction(9)))
    q = pl.point((Fraction(1), Fraction(2), Fraction(3)))
    assert pl.elements_equal(p, q)
    r = pl.point((Fraction(1), Fraction(2), Fraction(4)))
    assert not pl.elements_equal(p, r)


def test_plane_pencil_samples_are_incident_and_distinct():
    F = SeriesRationals()
    pl = ProjectivePlane(F)
    rng = random.Random(4)
    for _ in range(5):
        x = pl.sample_line(rng)
        pts = pl.sample_pencil(x, 8, rng)
        assert len(pts) >= 2
        for p in pts:
            assert pl.incident(p, x)
        for a, b in itertools.combinations(pts, 2):
            assert not pl.elements_equal(a, b)


def test_plane_chains_close():
    pl = ProjectivePlane(PadicRationals(5))
    chains = pl.sample_chains(3, limit=10, seed=7)
    assert len(chains) == 10
    for c in chains:
        els = c.elements
        assert len(els) == 6
        for i, e in enumerate(els):
            assert pl.incident(e, els[(i + 1) % 6])
        assert not c.degenerate


# --- twisted coordinate plane ------------------------------------------------


def test_twisted_untwisted_matches_projective_embedding():
    F3 = finite_field(3)
    tp = TwistedPlane(TwistContext(F3, 1))
    pl = ProjectivePlane(SeriesRationals(base=F3, exponent_denominator=1))
    rng = random.Random(5)
    for _ in range(30):
        l = tp.sample_affine_line(rng)
        p = tp.sample_point_on(l, rng)
        assert tp.incident(p, l)
        P = tp.embed_projective(pl, p)
        L = tp.embed_projective(pl, l)
        assert pl.incident(P, L)


def test_twisted_join_meet():
    tp = TwistedPlane(TwistContext(finite_field(9), 2))
    rng = random.Random(6)
    hits = 0
    for _ in range(40):
        l1 = tp.sample_affine_line(rng)
        l2 = tp.sample_affine_line(rng)
        if tp.elements_equal(l1, l2):
            continue
        z = tp.meet(l1, l2)
        if z is None:
            continue  # parallel
        hits += 1
        assert tp.incident(z, l1) and tp.incident(z, l2)
        p = tp.sample_point_on(l1, rng)
        if tp.elements_equal(p, z):
            continue
        j = tp.join(p, z)
        assert tp.incident(p, j) and tp.incident(z, j)
    assert hits > 10


def test_twisted_chains_close():
    tp = TwistedPlane(TwistContext(finite_field(9), 2))
    chains = tp.sample_chains(3, limit=6, seed=1)
    assert chains
    for c in chains:
        els = c.elements
        assert len(els) == 6
        for i, e in enumerate(els):
            assert tp.incident(e, els[(i + 1) % 6])
