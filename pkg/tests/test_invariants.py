import numpy as np
import pytest
from gmpy2 import mpq

import oracles
from dialgebra import (FINGERPRINT_FIELDS, ISOMORPHIC, NON_ISOMORPHIC,
                       RATIONAL, UNKNOWN, LinearMap, compare, fingerprint,
                       fingerprint_mismatch, get, hom_residual, iso_search,
                       transport)
from dialgebra.invariants import charpoly

from conftest import rand_invertible, rand_map, seeded, trunc_poly, \
    zero_algebra


def test_charpoly_small_exact():
    # diag(1, 1): (x-1)^2 = x^2 - 2x + 1
    assert charpoly(LinearMap.identity(2, RATIONAL)) == [1, -2, 1]
    nil = LinearMap.from_entries(2, {1: {2: 1}}, RATIONAL)
    assert charpoly(nil) == [1, 0, 0]
    comp = LinearMap(2, [[0, -1], [1, 0]], RATIONAL)  # rotation: x^2 + 1
    assert charpoly(comp) == [1, 0, 1]


def test_charpoly_matches_numpy_on_random_matrices():
    rng = seeded(31)
    for _ in range(15):
        M = rand_map(rng, 4)
        exact = [float(c) for c in charpoly(M)]
        approx = oracles.charpoly_floats(M)
        assert max(abs(a - b) for a, b in zip(exact, approx)) < 1e-6


def test_fingerprint_field_order_and_content():
    fp = fingerprint(get("Hd2.5")).as_dict()
    assert tuple(fp) == FINGERPRINT_FIELDS
    assert fp["dim"] == 2
    assert fp["rank_alpha"] == 1
    assert fp["charpoly_alpha"] == ["1", "0", "0"]


def test_fingerprint_is_transport_invariant():
    rng = seeded(12)
    A = get("Hd3.4")
    for _ in range(4):
        moved = transport(A, rand_invertible(rng, A.n))
        assert fingerprint_mismatch(fingerprint(A), fingerprint(moved)) is None


def test_fingerprint_mismatch_reports_first_field():
    fa = fingerprint(get("Hd2.1"))
    fb = fingerprint(get("Hd2.5"))
    assert fingerprint_mismatch(fa, fb) == "rank_alpha"
    assert fingerprint_mismatch(fa, fa) is None


def test_compare_separates_by_dim():
    verdict = compare(zero_algebra(2), zero_algebra(3))
    assert verdict.kind == NON_ISOMORPHIC and verdict.witness == "dim"


def test_compare_identical_short_circuits():
    A = get("Hd2.3")
    verdict = compare(A, get("Hd2.3"))
    assert verdict.kind == ISOMORPHIC
    assert verdict.residual == 0.0
    assert verdict.detail == {"identical": True}


def test_compare_unknown_without_search():
    A = get("Hd2.5")
    moved = transport(A, rand_invertible(seeded(2), 2))
    verdict = compare(A, moved)
    assert verdict.kind == UNKNOWN


def test_compare_with_search_recovers_isomorphism():
    A = get("Hd2.5")
    moved = transport(A, rand_invertible(seeded(2), 2))
    verdict = compare(A, moved, search=True, budget=200, seed=0)
    assert verdict.kind == ISOMORPHIC
    assert verdict.residual <= 1e-9
    phi = np.array([[complex(v) for v in row] for row in verdict.phi.m])
    assert hom_residual(phi, A, moved) <= 1e-9


def test_iso_search_dim_mismatch():
    assert iso_search(zero_algebra(2), zero_algebra(3)).kind == NON_ISOMORPHIC


def test_hom_residual_detects_wrong_map():
    A = get("Hd2.1")
    assert hom_residual(np.eye(2, dtype=complex), A, A) == 0.0
    bad = np.array([[0, 1], [1, 0]], dtype=complex)
    moved = transport(A, LinearMap(2, [[1, 1], [0, 1]], RATIONAL))
    assert hom_residual(bad, A, moved) > 1e-3


def test_search_gives_up_within_budget():
    # different product spans can't be matched; fingerprints differ so
    # force the search path directly
    verdict = iso_search(trunc_poly(2), zero_algebra(2), budget=3, seed=0)
    assert verdict.kind == UNKNOWN
    assert verdict.detail["trials"] == 3
