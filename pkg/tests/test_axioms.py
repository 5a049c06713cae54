import numpy as np
import pytest
from gmpy2 import mpq

import oracles
from dialgebra import (AS_PRINTED, RATIONAL, STANDARD, HomDialgebra,
                       LinearMap, MultTable, check_dendriform,
                       check_dialgebra, check_dipterous,
                       check_multiplicativity, check_triple_system,
                       check_zinbiel, find_bar_units)
from dialgebra.axioms import residual_via_system

from conftest import trunc_poly, zero_algebra


def tbl(n, entries):
    return MultTable.from_entries(n, entries, RATIONAL)


def diag(values):
    n = len(values)
    return LinearMap.from_entries(n, {j + 1: {j + 1: v} for j, v in
                                      enumerate(values)}, RATIONAL)


# e1.e1 = e2, e2.e1 = e1 is not associative:
# (e1.e1).e1 = e1 but e1.(e1.e1) = e1.e2 = 0
NONASSOC = HomDialgebra(
    "nonassoc",
    tbl(2, {(1, 1): {2: 1}, (2, 1): {1: 1}}),
    MultTable.zero(2, RATIONAL),
    LinearMap.identity(2, RATIONAL))

# the one-generator pattern e1 o e1 = e2, e1 o e2 = e3, e2 o e1 = 2 e3
ZINBIEL3 = tbl(3, {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 1): {3: 2}})
ID3 = LinearMap.identity(3, RATIONAL)


def test_zero_algebra_passes_everything():
    report = check_dialgebra(zero_algebra(3))
    assert report.ok
    assert [r.id for r in report.records] == ["ax1", "ax2", "ax3", "ax4",
                                              "ax5"]
    assert check_multiplicativity(zero_algebra(3)).ok


def test_associative_identity_twist_passes():
    A = trunc_poly(4)
    assert check_dialgebra(A).ok
    assert check_multiplicativity(A).ok


def test_nonassociative_fails_with_witness():
    report = check_dialgebra(NONASSOC)
    assert not report.ok
    ax1 = report.record("ax1")
    assert not ax1.passed
    idx, res = ax1.violations[0]
    assert idx == (1, 1, 1)
    assert res.coords == [mpq(1), mpq(0)]  # lhs - rhs = e1


def test_residual_via_system_matches_vector_path():
    for ident in ("ax1", "ax2", "ax3", "ax4", "ax5"):
        rec = check_dialgebra(NONASSOC).record(ident)
        for idx, res in rec.violations:
            again = residual_via_system(NONASSOC, ident, *idx)
            assert again.coords == res.coords


def test_oracle_agrees_on_verdicts():
    rng = np.random.default_rng(11)
    for A in (trunc_poly(3), NONASSOC, zero_algebra(2)):
        exact = {r.id: r.passed for r in check_dialgebra(A).records}
        sampled = oracles.axiom_residuals(A, rng)
        for ident, passed in exact.items():
            assert passed == (sampled[ident] < 1e-8), (A.name, ident)


def test_multiplicativity_scaling_twist():
    A = trunc_poly(3)
    good = HomDialgebra("s", A.left, A.right, diag([2, 4, 8]))
    assert check_multiplicativity(good).ok
    bad = HomDialgebra("s", A.left, A.right, diag([2, 2, 2]))
    rep = check_multiplicativity(bad)
    assert not rep.ok
    assert rep.record("mult_left").violations[0][0] == (1, 1)


def test_violation_count():
    rep = check_dialgebra(NONASSOC)
    assert rep.violation_count() == sum(len(r.violations) for r in rep.records)
    assert rep.violation_count() > 0


# ------------------------------------------------------------- bar units

def test_bar_unit_exists_for_unital_algebra():
    t = tbl(2, {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}})
    A = HomDialgebra("unital", t, t, LinearMap.identity(2, RATIONAL))
    result = find_bar_units(A)
    assert result.exists
    assert result.particular.coords == [mpq(1), mpq(0)]
    assert result.parameters == 0


def test_bar_unit_absent_for_nilpotent():
    result = find_bar_units(trunc_poly(3))
    assert not result.exists
    assert result.reason == "system inconsistent"


def test_bar_unit_requires_identity_twist():
    A = trunc_poly(2)
    twisted = HomDialgebra("t", A.left, A.right, diag([1, 2]))
    assert find_bar_units(twisted).reason == "alpha is not identity"


# ------------------------------------------------------ satellite checks

def test_zinbiel_identity():
    assert check_zinbiel(ZINBIEL3, ID3).ok
    # breaking the 2:1 weighting breaks the identity at (1,1,1)
    broken = tbl(3, {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 1): {3: 1}})
    rep = check_zinbiel(broken, ID3)
    assert not rep.ok
    assert rep.records[0].violations[0][0] == (1, 1, 1)


def test_zinbiel_oracle_agreement():
    rng = np.random.default_rng(5)
    assert oracles.zinbiel_residual(ZINBIEL3, ID3, rng) < 1e-9


def test_dendriform_from_zinbiel_passes_standard():
    rep = check_dendriform(ZINBIEL3, ZINBIEL3.transpose(), ID3,
                           variant=STANDARD)
    assert rep.ok
    worst = oracles.dendriform_residuals(ZINBIEL3, ZINBIEL3.transpose(), ID3,
                                         np.random.default_rng(7))
    assert max(worst) < 1e-9


def test_dendriform_variants_disagree_here():
    # mixed-product outer table differs: standard closes, as-printed doesn't
    rep = check_dendriform(ZINBIEL3, ZINBIEL3.transpose(), ID3,
                           variant=AS_PRINTED)
    assert not rep.ok
    bad = rep.record("dend3")
    assert bad.violations[0][0] == (1, 1, 1)


def test_dendriform_fails_for_plain_double_product():
    t = trunc_poly(3).left
    rep = check_dendriform(t, t, ID3)
    assert not rep.record("dend1").passed


def test_dipterous_shared_and_sided():
    t = trunc_poly(3).left
    assert check_dipterous(t, t, ID3, "left").ok
    assert check_dipterous(t, t, ID3, "right").ok
    rep = check_dipterous(MultTable.zero(3, RATIONAL), t, ID3, "left")
    assert rep.record("dip_star").passed  # vacuous
    assert not rep.record("dip_left").passed


def test_triple_system_chains():
    assert check_triple_system(trunc_poly(2), "left").ok
    rep = check_triple_system(NONASSOC, "left")
    assert not rep.ok
