"""End-to-end acceptance criteria.

Each test exercises one numbered criterion, enforces its runtime budget,
and registers a one-line [PASS]/[FAIL] summary that conftest reprints
after the run.
"""

import contextlib
import io
import itertools
import math
import random
import time
from fractions import Fraction

import conftest

from polyval import (
    INFINITY,
    FiniteGeometry,
    PadicRationals,
    ProjectivePlane,
    ResidualSequence,
    SeriesRationals,
    TwistContext,
    Valuation,
    WeightSequence,
    case_identity_sweep,
    enumerate_residual_sequences,
    euclidean_weights,
    finite_field,
    generate_ordinary_polygon,
    generate_pg2,
    generate_w2,
    minor_valuation,
    radical_string,
    reduce_to_standard,
    rescale_discrete,
    run_finite_suite,
    run_plane_suite,
    sin_pi_frac,
    slope,
    standard_sequence,
    verify_gp_axioms,
)
from polyval.cli import main


def _criterion(num, label, budget, fn):
    t0 = time.perf_counter()
    err = None
    try:
        fn()
    except BaseException as e:  # noqa: BLE001 - reported then re-raised
        err = e
    dt = time.perf_counter() - t0
    ok = err is None and (budget is None or dt < budget)
    mark = "PASS" if ok else "FAIL"
    suffix = f"{dt:.2f}s" + (f" / budget {budget:g}s" if budget else "")
    conftest.ACCEPTANCE_LINES.append(f"[{mark}] {num:>2}. {label} ({suffix})")
    if err is not None:
        raise err
    if budget is not None:
        assert dt < budget, f"over budget: {dt:.2f}s >= {budget}s"


def test_criterion_01_weight_formula():
    def body():
        ws = euclidean_weights(6)
        half = Fraction(1, 2)
        r3h = sin_pi_frac(2, 6)  # sqrt(3)/2 in the n=6 context
        assert radical_string(r3h) == "sqrt(3)/2"
        expected = [half, r3h, Fraction(1), r3h, half]
        idx = list(range(1, 6)) + list(range(7, 12))
        for i, want in zip(idx, expected + expected):
            got = ws.weight(i)
            if isinstance(want, Fraction):
                assert got.is_rational() and got.as_fraction() == want
            else:
                assert got == want
            assert abs(got.to_float() - abs(math.sin(i * math.pi / 6))) < 1e-12

    _criterion(1, "euclidean weights for n=6, exact and float", 1, body)


def test_criterion_02_discrete_tables():
    def body():
        assert [s.entries for s in rescale_discrete(3).sequences] == [
            (1, 1, 1, 1),
            (1, 1, 1, 1),
        ]
        assert sorted(s.entries for s in rescale_discrete(4).sequences) == [
            (1, 1, 1, 1, 1, 1),
            (1, 2, 1, 1, 2, 1),
        ]
        assert sorted(s.entries for s in rescale_discrete(6).sequences) == [
            (1, 1, 2, 1, 1, 1, 1, 2, 1, 1),
            (1, 3, 2, 3, 1, 1, 3, 2, 3, 1),
        ]

    _criterion(2, "discrete weight tables for n=3,4,6", 1, body)


def test_criterion_03_case_identities():
    def body():
        rep = case_identity_sweep(12)
        assert rep["pass"] and not rep["failures"]
        want = sum(4 * (n - 2) * (2 * n + 1) for n in range(3, 13))
        assert rep["checked"] == want

    _criterion(3, "exchange identities, four cases, n=3..12", 30, body)


def test_criterion_04_reduction_soundness():
    def body():
        for n in range(3, 9):
            for s in enumerate_residual_sequences(n):
                out = reduce_to_standard(s)
                target = slope(s)
                chi = s.chi()
                for _, step in out["steps"]:
                    assert step.chi() > chi
                    chi = step.chi()
                    assert slope(step) == target
                final = out["final"]
                assert final == standard_sequence(n, s.endpoint)
                assert slope(final) == target

    _criterion(4, "valley reduction sound for all sequences, n<=8", 120, body)


def test_criterion_05_monotone_slope():
    def body():
        for n in range(3, 13):
            assert slope(ResidualSequence(tuple(range(n + 1)))).is_zero()

    _criterion(5, "monotone sequence has exactly zero slope, n<=12", 1, body)


def test_criterion_06_gp_checkers():
    def body():
        assert verify_gp_axioms(generate_pg2(2), 3)["pass"]
        assert verify_gp_axioms(generate_pg2(3), 3)["pass"]
        assert verify_gp_axioms(generate_w2(), 4)["pass"]
        assert not verify_gp_axioms(generate_w2(), 3)["pass"]
        for k in range(3, 9):
            assert verify_gp_axioms(generate_ordinary_polygon(k), k)["pass"]
        fano = generate_pg2(2)
        inc = set(fano.flags)
        inc.discard(sorted(inc)[0])
        broken = FiniteGeometry(fano.points, fano.lines, inc)
        rep = verify_gp_axioms(broken, 3)
        assert not rep["pass"]
        assert rep["violations"] and all("witness" in v for v in rep["violations"])

    _criterion(6, "polygon axiom checkers on the fixture matrix", 10, body)


def test_criterion_07_trivial_valuation():
    def body():
        fixtures = [
            (generate_pg2(2), 3),
            (generate_pg2(3), 3),
            (generate_w2(), 4),
            (generate_ordinary_polygon(3), 3),
            (generate_ordinary_polygon(4), 4),
            (generate_ordinary_polygon(5), 5),
            (generate_ordinary_polygon(6), 6),
        ]
        tables = {
            3: [(1, 1, 1, 1)],
            4: [(1, 1, 1, 1, 1, 1), (1, 2, 1, 1, 2, 1)],
            6: [
                (1, 1, 2, 1, 1, 1, 1, 2, 1, 1),
                (1, 3, 2, 3, 1, 1, 3, 2, 3, 1),
            ],
        }
        for g, n in fixtures:
            weight_choices = [euclidean_weights(n)]
            for entries in tables.get(n, []):
                weight_choices.append(WeightSequence(n, entries))
            v = Valuation.trivial(g)
            for w in weight_choices:
                rep = run_finite_suite(g, v, w)
                assert rep["pass"], (g, w)
                assert rep["checks"]["U4"]["chains"] > 0

    _criterion(7, "trivial valuation passes U1-U4 on all finite fixtures", 60, body)


def test_criterion_08_plane_witness():
    def body():
        for field in (SeriesRationals(), PadicRationals(3)):
            pl = ProjectivePlane(field)
            rep = run_plane_suite(
                pl,
                pairs=10**4,
                triples=10**4,
                lines=10**2,
                line_budget=10**3,
                triangles=10**3,
                seed=0,
            )
            assert rep["pass"], rep
            assert rep["checks"]["U2"]["pairs"] == 10**4
            assert rep["checks"]["U3"]["triples"] == 10**4
            assert rep["checks"]["U1"]["lines"] == 10**2
            assert rep["checks"]["U4"]["triangles"] == 10**3
            for axiom in ("U1", "U2", "U3", "U4"):
                assert rep["checks"][axiom]["failures"] == []

    _criterion(8, "minor valuation passes U1-U4 over series and 3-adic planes", 300, body)


def test_criterion_09_hahn_valuation_laws():
    def body():
        S = SeriesRationals()
        rng = random.Random(0)
        for _ in range(10**4):
            a, b = S.random_element(rng), S.random_element(rng)
            va, vb = S.valuation(a), S.valuation(b)
            assert (va is INFINITY) == S.is_zero(a)
            assert (vb is INFINITY) == S.is_zero(b)
            if va is not INFINITY and vb is not INFINITY:
                assert S.valuation(a * b) == va + vb
                vs = S.valuation(a + b)
                if va != vb:
                    assert vs == min(va, vb)
                else:
                    assert vs is INFINITY or vs >= va

    _criterion(9, "series valuation laws on 10^4 seeded pairs", 30, body)


def test_criterion_10_quasifield():
    def body():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rc = main(
                ["quasifield-test", "--q", "9", "--N", "2", "--triples", "1000",
                 "--seed", "0", "--format", "json"]
            )
        assert rc == 0
        import json as _json

        data = _json.loads(buf.getvalue())
        assert data["pass"] is True
        checks = data["checks"]
        assert checks["identity"]["checked"] == 1000
        for key in ("identity", "left_distributive", "left_division",
                    "right_division", "valuation_additive"):
            assert checks[key]["pass"], key
        w = data["right_distributivity_witness"]
        assert w and w["(x+y)*z"] != w["x*z + y*z"]

    _criterion(10, "order-9 twisted quasifield laws plus failure witness", 30, body)


def test_criterion_11_representative_independence():
    def body():
        S = SeriesRationals()
        rng = random.Random(1)
        done = 0
        while done < 10**3:
            p = tuple(S.random_element(rng) for _ in range(3))
            q = tuple(S.random_element(rng) for _ in range(3))
            try:
                base = minor_valuation(S, p, q)
            except ValueError:
                continue  # zero or proportional triple; resample
            u = S.random_unit(rng)
            tp = S.uniformizer_power(Fraction(rng.randint(0, 4), 2))
            scaled_p = tuple(c * u * tp for c in p)
            u2 = S.random_unit(rng)
            scaled_q = tuple(c * u2 for c in q)
            assert minor_valuation(S, scaled_p, scaled_q) == base
            done += 1

    _criterion(11, "minor valuation invariant under unit/t-power rescaling", 30, body)


def test_criterion_12_demo_determinism():
    def body():
        for val in ("3-adic", "series"):
            argv = ["demo-plane", "--val", val, "--samples", "400", "--seed",
                    "11", "--format", "json"]
            outs = []
            for _ in range(2):
                buf = io.StringIO()
                with contextlib.redirect_stdout(buf):
                    rc = main(list(argv))
                assert rc == 0
                outs.append(buf.getvalue())
            assert outs[0] == outs[1]
            assert outs[0].encode() == outs[1].encode()

    _criterion(12, "demo-plane reports are byte-identical for equal seeds", None, body)
