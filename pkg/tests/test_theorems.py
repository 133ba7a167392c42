import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffhyper.cyclotomic import cyclotomic_field
from ffhyper.errors import EvenCharacteristic, UnknownTheorem
from ffhyper.finite_field import field_of_order
from ffhyper.hypergeometric import evaluator
from ffhyper.theorems import (
    IDENTITIES,
    INVARIANTS,
    REGISTRY,
    SweepPlan,
    TheoremReport,
    reports_to_json,
    run_suite,
    run_theorem,
    theorem_ids,
    verify_dixon,
    verify_gauss_analogue,
    verify_kummer,
    verify_recursion,
    verify_remark_4f3,
    verify_vanishing,
    verify_whipple_4f3,
)
from ffhyper.theorems.report import Tally

from oracle import brute, close

SPEC_IDS = {
    "gauss", "kummer", "dixon", "whipple4", "whipple5", "remark", "recursion", "vanishing",
    "hp", "greene-gauss", "greene-437", "star-greene", "star-katz", "katz-recursion",
}
ODD_ONLY = {"dixon", "whipple4", "whipple5", "remark", "vanishing", "greene-437"}


# -- plans ---------------------------------------------------------------------------
@pytest.mark.parametrize("text", ["exhaustive", "sample:500:42", "sample:7:1", "auto:10000:500:42"])
def test_plan_round_trip(text):
    assert str(SweepPlan.parse(text)) == text


def test_plan_parse_variants():
    assert SweepPlan.parse("auto") == SweepPlan()
    assert SweepPlan.parse("sample:10") == SweepPlan.sampled(10, 42)
    for bad in ("", "sample", "sample:x:1", "auto:1", "often", "sample:0:1"):
        with pytest.raises(ValueError):
            SweepPlan.parse(bad)


@settings(max_examples=60, deadline=None)
@given(sizes=st.lists(st.integers(1, 6), min_size=1, max_size=4), count=st.integers(1, 40), seed=st.integers(0, 99))
def test_sampled_tuples(sizes, count, seed):
    space = [range(n) for n in sizes]
    plan = SweepPlan.sampled(count, seed)
    got = plan.tuples(space, "key")
    total = 1
    for n in sizes:
        total *= n
    assert len(got) == min(count, total)
    assert len(set(got)) == len(got)
    assert got == sorted(got)
    assert all(all(0 <= v < n for v, n in zip(t, sizes)) for t in got)
    assert got == plan.tuples(space, "key")


def test_exhaustive_order_and_auto_threshold():
    space = [range(3), range(2)]
    assert SweepPlan.exhaustive().tuples(space, "k") == [(i, j) for i in range(3) for j in range(2)]
    auto = SweepPlan("auto", count=5, limit=6)
    assert len(auto.tuples(space, "k")) == 6
    assert len(auto.tuples([range(7)], "k")) == 5
    assert SweepPlan.sampled(3).tuples([range(5)], "a") != SweepPlan.sampled(3).tuples([range(50)], "b")[:0]


# -- registry ------------------------------------------------------------------------
def test_registry_contents():
    assert SPEC_IDS == set(IDENTITIES)
    assert set(theorem_ids()) == set(IDENTITIES) | set(INVARIANTS)
    assert list(REGISTRY)[: len(IDENTITIES)] == list(IDENTITIES)


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        run_theorem("nope", 5)
    with pytest.raises(UnknownTheorem):
        run_suite([5], theorems=["hp", "nope"])


@pytest.mark.parametrize("tid", sorted(ODD_ONLY))
def test_even_characteristic_skips(tid):
    r = run_theorem(tid, 8)
    assert r.skipped is not None and r.skipped.startswith("EvenCharacteristic")
    assert r.status() == "SKIP" and r.success and r.tuples_tested == 0
    assert r.field_info == field_of_order(8).describe()
    with pytest.raises(EvenCharacteristic):
        REGISTRY[tid](8)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_every_verifier_passes_small_fields(q):
    for r in run_suite([q], SweepPlan("auto", count=60, limit=300), n_max=3):
        assert r.success, r.to_text()
        if r.skipped is None:
            assert sum(r.branch_counts.values()) == r.tuples_tested
            assert r.tuples_tested > 0


# -- spec examples -------------------------------------------------------------------
def test_gauss_analogue_counts():
    r = verify_gauss_analogue(5, SweepPlan.exhaustive())
    assert r.success and r.tuples_tested == 64
    assert r.branch_counts == {"admissible": 48, "excluded": 16}
    assert verify_gauss_analogue(3, SweepPlan.exhaustive()).success


def test_kummer_examples():
    ev = evaluator(field_of_order(7))
    for b in range(6):
        assert ev.star((3, b), ((3 - b) % 6,), field_of_order(7).neg_code(1)) == 0
    r = verify_kummer(7, SweepPlan.exhaustive())
    assert r.success and r.tuples_tested == 36
    assert verify_kummer(9, SweepPlan.exhaustive()).branch_counts["square"] > 0


def test_dixon_constant_values():
    ev = evaluator(field_of_order(5))
    assert ev.star((0, 0, 0), (0, 0), 1) == -94
    assert ev.star((0, 2, 2), (2, 2), 1) == Fraction(-14, 5)
    r = verify_dixon(7, SweepPlan.exhaustive())
    assert r.success and r.tuples_tested == 216


def test_whipple4_examples():
    ev = evaluator(field_of_order(5))
    m1 = field_of_order(5).neg_code(1)
    for b in range(4):
        for c in range(4):
            for d in range(4):
                top = (3, b, c, d)
                bottom = tuple((3 - v) % 4 for v in top[1:])
                assert ev.star(top, bottom, m1) == 0
    r = verify_whipple_4f3(7, SweepPlan.exhaustive())
    assert r.success and r.tuples_tested == 1296 and r.branch_counts["cd-eq-a"] > 0


def test_remark_examples():
    r = verify_remark_4f3(5, SweepPlan.exhaustive())
    assert r.success and r.tuples_tested == 16
    r7 = verify_remark_4f3(7, SweepPlan.exhaustive())
    assert r7.branch_counts == {"cd-trivial": 6, "cd-nontrivial": 30}


def test_recursion_and_vanishing_examples():
    r = verify_recursion(5, n_max=2, plan=SweepPlan.exhaustive())
    assert r.success and r.branch_counts["n=2:delta"] > 0
    assert verify_recursion(7, n_max=3, plan=SweepPlan.sampled(200, 42)).success
    v = verify_vanishing(5, n_max=4, plan=SweepPlan.exhaustive())
    assert v.success and v.checks == v.tuples_tested == 2 + 8 + 32 + 128 + 512


# -- reports -------------------------------------------------------------------------
def test_tally_records_mismatches():
    ctx = field_of_order(5)
    K = cyclotomic_field(ctx.conductor)
    t = Tally("demo", ctx)
    t.branch("a")
    assert t.compare((1,), K.one, K.one)
    assert not t.compare((2,), K.one, K.zero, "off by one")
    r = t.finish()
    assert not r.success and r.status() == "FAIL"
    assert r.failures[0].params == (2,)
    assert "off by one" in r.to_text()


def test_report_json_schema_and_stability():
    r = run_theorem("kummer", 5, SweepPlan.exhaustive())
    d = json.loads(r.to_json())
    assert set(d) == {
        "theorem_id", "q", "generator", "tuples_tested", "checks", "branches", "failures", "skipped", "skip_reason",
    }
    assert d["generator"] == field_of_order(5).describe()
    assert "elapsed" not in r.to_json()
    again = run_theorem("kummer", 5, SweepPlan.exhaustive())
    assert reports_to_json([r]) == reports_to_json([again])
    assert "elapsed" in r.to_text(timing=True) and "elapsed" not in r.to_text()


def test_failure_serialisation():
    ctx = field_of_order(5)
    K = cyclotomic_field(ctx.conductor)
    t = Tally("demo", ctx)
    t.branch("x")
    t.compare((1, 2), K.zeta(1), K.one)
    d = t.finish().to_dict()
    assert d["failures"] == [
        {"tuple": [1, 2], "note": "", "lhs": K.zeta(1).to_dict(), "rhs": K.one.to_dict()}
    ]


# -- characteristic 2 ---------------------------------------------------------------------
def test_kummer_closed_form_needs_char2_term():
    # float oracle: at q = 4 with B trivial, the square-root sum alone misses the value
    b = brute(4)
    m1 = b.minus_one
    for a in range(3):
        lhs = b.star((a, 0), (a,), m1)
        (r,) = [r for r in range(3) if (2 * r - a) % 3 == 0]
        closed = b.gauss(r) * b.gauss(-r) * b.chi(r, m1) / (b.gauss(a) * b.gauss(-a))
        fix = -4 * 3 / (b.gauss(a) * b.gauss(-a))
        assert not close(lhs, closed)
        assert close(lhs, closed + fix)


def test_greene_root_sum_fails_in_char2():
    b = brute(4)
    bad = 0
    for a in range(1, 3):
        for bb in range(1, 3):
            for c in range(1, 3):
                if (bb + c - a) % 3 == 0 or (2 * (bb + c) - a) % 3 == 0:
                    continue
                lhs = b.star((a, bb, c), (a - bb, a - c), b.one)
                (r,) = [r for r in range(3) if (2 * r - a) % 3 == 0]
                g = b.gauss
                rhs = g(-a) * g(bb - r) * g(c - r) * g(bb + c - a) / (g(-r) * g(bb - a) * g(c - a) * g(bb + c - r))
                bad += not close(lhs, rhs)
    assert bad == 4


def test_report_is_a_dataclass_with_defaults():
    r = TheoremReport("x", 5)
    assert r.success and r.status() == "PASS" and r.branch_counts == {}
