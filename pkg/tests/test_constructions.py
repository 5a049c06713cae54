import numpy as np
import pytest
from gmpy2 import mpq

import oracles
from dialgebra import (RATIONAL, HomDialgebra, LinearMap, MultTable,
                       check_dendriform, check_dialgebra, check_zinbiel,
                       commutative_dendriform_to_zinbiel,
                       conjugate_automorphism_check, fingerprint, get,
                       inverse_map, is_automorphism, symmetrize_zinbiel,
                       transport, untwist_candidate, yau_twist_dipterous,
                       zinbiel_to_dendriform)
from dialgebra.constructions import transport_table

from conftest import rand_invertible, seeded, trunc_poly, zero_algebra

ZINBIEL3 = MultTable.from_entries(
    3, {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 1): {3: 2}}, RATIONAL)
ID3 = LinearMap.identity(3, RATIONAL)


def diag(values):
    n = len(values)
    return LinearMap.from_entries(n, {j + 1: {j + 1: v} for j, v in
                                      enumerate(values)}, RATIONAL)


def test_inverse_map():
    M = LinearMap(2, [[2, 1], [1, 1]], RATIONAL)
    inv = inverse_map(M)
    assert inv.m == [[1, -1], [-1, 2]]
    assert inverse_map(LinearMap(2, [[1, 2], [2, 4]], RATIONAL)) is None


def test_transport_by_identity_is_noop():
    A = trunc_poly(3)
    moved = transport(A, ID3)
    assert moved.left == A.left and moved.right == A.right
    assert moved.alpha.m == A.alpha.m
    assert moved.name == "poly3~"


def test_transport_preserves_axioms_and_fingerprint():
    rng = seeded(4)
    for name in ("Hd2.1", "Hd2.5", "Hd3.10"):
        A = get(name)
        for _ in range(3):
            phi = rand_invertible(rng, A.n)
            moved = transport(A, phi)
            assert check_dialgebra(moved).ok == check_dialgebra(A).ok
            assert fingerprint(moved).as_dict() == fingerprint(A).as_dict()


def test_transport_rejects_singular():
    with pytest.raises(ValueError):
        transport(trunc_poly(2), LinearMap(2, [[1, 1], [1, 1]], RATIONAL))


def test_transport_table_roundtrip():
    A = trunc_poly(3)
    phi = diag([1, 2, 3])
    inv = inverse_map(phi)
    t = transport_table(A.left, phi, inv)
    back = transport_table(t, inv, phi)
    assert back == A.left


def test_is_automorphism():
    A = trunc_poly(3)
    ok, why = is_automorphism(A, diag([2, 4, 8]))
    assert ok and why is None
    ok, why = is_automorphism(A, diag([2, 2, 2]))
    assert not ok and "product" in why
    ok, why = is_automorphism(A, LinearMap.zero(3, RATIONAL))
    assert not ok and why == "singular"


def test_automorphism_needs_to_commute_with_twist():
    A = trunc_poly(2)
    twisted = HomDialgebra("t", A.left, A.right, diag([1, 0]))
    swap = LinearMap(2, [[0, 1], [1, 0]], RATIONAL)
    ok, why = is_automorphism(twisted, swap)
    assert not ok and "commute" in why


def test_conjugate_automorphism_transports():
    A = trunc_poly(3)
    psi = diag([2, 4, 8])
    phi = rand_invertible(seeded(9), 3)
    out = conjugate_automorphism_check(A, phi, psi)
    assert out["pass"] and out["reason"] is None
    with pytest.raises(ValueError):
        conjugate_automorphism_check(A, phi, diag([2, 2, 2]))


# ------------------------------------------------------------------ twists

def test_yau_twist_produces_twisted_structure():
    t = trunc_poly(3).left
    alpha = diag([2, 4, 8])
    star, other, back_alpha, report = yau_twist_dipterous(t, t, alpha, "left")
    assert report.ok
    assert star.coeff(1, 1, 2) == 4  # alpha(e2) = 4 e2 lands outside
    assert back_alpha is alpha
    rng = np.random.default_rng(3)
    assert oracles.multiplicativity_residual(star, alpha, rng) < 1e-9


def test_yau_twist_preconditions():
    t = trunc_poly(3).left
    with pytest.raises(ValueError):
        yau_twist_dipterous(t, t, diag([2, 2, 2]), "left")  # not an endo
    bad = MultTable.from_entries(3, {(1, 1): {2: 1}, (2, 1): {1: 1}},
                                 RATIONAL)
    with pytest.raises(ValueError):
        yau_twist_dipterous(bad, bad, ID3, "left")  # not even associative


def test_untwist_inverts_an_invertible_twist():
    t = trunc_poly(3).left
    alpha = diag([2, 4, 8])
    star, other, _, _ = yau_twist_dipterous(t, t, alpha, "left")
    twisted = HomDialgebra("tw", star, other, alpha)
    out, report = untwist_candidate(twisted, use_inverse=True)
    assert report.ok
    assert out.left == t and out.right == t
    assert out.alpha.is_identity()
    assert out.name == "tw'"


def test_untwist_without_inverse_composes_forward():
    A = get("Hd2.5")
    out, report = untwist_candidate(A)
    assert report.ok  # alpha kills the product span here, so all zero
    assert out.left.is_zero() and out.right.is_zero()


def test_untwist_inverse_needs_invertible_twist():
    with pytest.raises(ValueError):
        untwist_candidate(get("Hd2.5"), use_inverse=True)


# ----------------------------------------------------------------- bridges

def test_zinbiel_to_dendriform():
    prec, succ, alpha = zinbiel_to_dendriform(ZINBIEL3, ID3)
    assert prec is ZINBIEL3
    assert succ.coeff(2, 1, 3) == 1  # transposed
    assert check_dendriform(prec, succ, alpha).ok
    bad = MultTable.from_entries(3, {(1, 1): {2: 1}, (2, 1): {3: 1}},
                                 RATIONAL)
    with pytest.raises(ValueError):
        zinbiel_to_dendriform(bad, ID3)


def test_dendriform_back_to_zinbiel_is_exact_inverse():
    prec, succ, alpha = zinbiel_to_dendriform(ZINBIEL3, ID3)
    circ, report = commutative_dendriform_to_zinbiel(prec, succ, alpha)
    assert report.ok
    assert circ == ZINBIEL3  # bit-exact round trip


def test_dendriform_to_zinbiel_needs_commutativity():
    t = trunc_poly(3).left
    twisted = MultTable.from_entries(3, {(1, 1): {2: 1}}, RATIONAL)
    with pytest.raises(ValueError):
        commutative_dendriform_to_zinbiel(t, twisted, ID3)


def test_symmetrize_zinbiel():
    sym, report = symmetrize_zinbiel(ZINBIEL3, ID3)
    assert report.ok
    assert [r.id for r in report.records] == ["hom_associative", "commutative"]
    assert sym.coeff(1, 1, 2) == 2
    assert sym.coeff(1, 2, 3) == 3 and sym.coeff(2, 1, 3) == 3
    with pytest.raises(ValueError):
        symmetrize_zinbiel(trunc_poly(3).left, ID3)
