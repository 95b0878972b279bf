from fractions import Fraction

import pytest

import embtree


def test_counts():
    assert embtree.count("binary", "2;2,1") == 3
    assert embtree.count("cayley", "2;2,1", steps=[-1, 1]) == 720
    assert embtree.count("cayley", "3", steps="0,1") == 9


def test_hypothesis_raises():
    with pytest.raises(embtree.HypothesisViolation):
        embtree.count("sary", "1,1,1,2,1;1", steps="-2,-1,1")
    with pytest.raises(embtree.ParseError):
        embtree.count("cayley", "2;x")


def test_formula_matches_oracle():
    for p in ["1;1", "2;2,1", "1,1;2"]:
        assert embtree.count("cayley", p) == embtree.oracle_count("cayley", p)
        assert embtree.count("sary", p, steps="-1..1") == embtree.oracle_count("sary", p, steps="-1..1")


def test_budget():
    embtree.set_max_steps(10)
    try:
        with pytest.raises(embtree.BudgetExceeded):
            embtree.oracle_count("cayley", "2;2,1")
    finally:
        embtree.set_max_steps(200_000_000)


def test_law_sums_to_one():
    law = embtree.law("binary", 3)
    assert len(law) == 5
    assert all(p == Fraction(1, 5) for p in law.values())
    assert sum(embtree.law("cayley", 4).values()) == 1


def test_sampler_is_seeded():
    a = embtree.sample("cayley", "2;2,1", seed=7, n=3)
    assert a == embtree.sample("cayley", "2;2,1", seed=7, n=3)
    assert len(a) == 3 and all(t["n"] == 5 for t in a)


def test_bijection_round_trip():
    for profile, steps in [("2,1", "-1..1"), ("1;2,1", "-1,1")]:
        for f in embtree.sample("function", profile, steps=steps, seed=11, n=5):
            out = embtree.phi_or_psi(f)
            assert out["valid"]
            assert embtree.inverse(out["tree"]) == f
