"""Base-change-invariant fingerprints and the isomorphism decision helpers.

A fingerprint never proves two structures isomorphic -- it can only separate
them (every field is invariant under transport by an invertible map).  The
positive direction is a budgeted numeric least-squares search for an explicit
homomorphism, which is always reverified before the verdict is emitted;
exhausting the budget yields the honest answer UNKNOWN.
"""

import numpy as np
from scipy.optimize import least_squares

from . import scalars
from .centroids import center, linear_centroid_space
from .core import LinearMap, compose, to_complex
from .derivations import (alpha_fixed_points, central_derivation_space,
                          derivation_space)
from .scalars import COMPLEX, RATIONAL
from .solver import Matrix, rank

# field order = comparison order; the first differing field names the witness
FINGERPRINT_FIELDS = (
    "dim", "rank_alpha", "charpoly_alpha", "dim_left_span", "dim_right_span",
    "dim_product_span", "dim_center", "dim_alpha_fixed", "dim_derivations_k1",
    "dim_linear_centroid", "dim_central_derivations",
)

NON_ISOMORPHIC = "non_isomorphic"
ISOMORPHIC = "isomorphic"
UNKNOWN = "unknown"


def charpoly(M):
    """Characteristic polynomial coefficients [1, c1, ..., cn] of an n*n map
    (Faddeev-LeVerrier recursion; exact on the rational backend)."""
    n = M.n
    backend = M.backend
    ident = LinearMap.identity(n, backend)
    coeffs = [scalars.one(backend)]
    Mk = ident
    for k in range(1, n + 1):
        AM = compose(M, Mk)
        tr = AM.m[0][0]
        for i in range(1, n):
            tr = tr + AM.m[i][i]
        ck = -tr / k
        coeffs.append(ck)
        Mk = AM + ident.scale(ck)
    return coeffs


class Fingerprint:

    __slots__ = FINGERPRINT_FIELDS + ("backend",)

    def __init__(self, **kw):
        for f in FINGERPRINT_FIELDS:
            setattr(self, f, kw[f])
        self.backend = kw["backend"]

    def as_dict(self):
        out = {}
        for f in FINGERPRINT_FIELDS:
            v = getattr(self, f)
            if f == "charpoly_alpha":
                v = [scalars.format_scalar(c) for c in v]
            out[f] = v
        return out

    def __repr__(self):
        return "Fingerprint(%s)" % self.as_dict()


def fingerprint(A, eps=scalars.EPS):
    n = A.n
    prod_vecs = {"left": [], "right": []}
    for tag, tab in (("left", A.left), ("right", A.right)):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                prod_vecs[tag].append(tab.basis_product(i, j).coords)
    span_rank = lambda rows: rank(Matrix.from_rows(rows, A.backend, cols=n), eps)
    return Fingerprint(
        backend=A.backend,
        dim=n,
        rank_alpha=rank(Matrix.from_rows(A.alpha.m, A.backend, cols=n), eps),
        charpoly_alpha=charpoly(A.alpha),
        dim_left_span=span_rank(prod_vecs["left"]),
        dim_right_span=span_rank(prod_vecs["right"]),
        dim_product_span=span_rank(prod_vecs["left"] + prod_vecs["right"]),
        dim_center=center(A, eps).dim,
        dim_alpha_fixed=alpha_fixed_points(A, eps).dim,
        dim_derivations_k1=derivation_space(A, 1, eps).dim,
        dim_linear_centroid=linear_centroid_space(A, eps).dim,
        dim_central_derivations=central_derivation_space(A, eps).dim,
    )


def _charpoly_eq(ca, cb, eps):
    if len(ca) != len(cb):
        return False
    for x, y in zip(ca, cb):
        xc = scalars.coerce(x, COMPLEX)
        yc = scalars.coerce(y, COMPLEX)
        if abs(xc - yc) > eps:
            return False
    return True


def fingerprint_mismatch(fa, fb, eps=scalars.EPS):
    """Name of the first differing field, or None."""
    for f in FINGERPRINT_FIELDS:
        va, vb = getattr(fa, f), getattr(fb, f)
        if f == "charpoly_alpha":
            if not _charpoly_eq(va, vb, eps):
                return f
        elif va != vb:
            return f
    return None


class CompareVerdict:

    __slots__ = ("kind", "witness", "phi", "residual", "detail")

    def __init__(self, kind, witness=None, phi=None, residual=None, detail=None):
        self.kind = kind
        self.witness = witness
        self.phi = phi
        self.residual = residual
        self.detail = detail

    def __repr__(self):
        if self.kind == NON_ISOMORPHIC:
            return "CompareVerdict(NON_ISOMORPHIC, witness=%s)" % self.witness
        if self.kind == ISOMORPHIC:
            return "CompareVerdict(ISOMORPHIC, residual=%.3g)" % self.residual
        return "CompareVerdict(UNKNOWN)"


def _complex_tensors(A):
    Ac = A if A.backend == COMPLEX else to_complex(A)
    n = A.n
    gl = np.array(Ac.left.g, dtype=complex)
    gr = np.array(Ac.right.g, dtype=complex)
    al = np.array(Ac.alpha.m, dtype=complex)
    return n, gl, gr, al


def hom_residual(phi, A, B):
    """Max |.| residual of the homomorphism equations for the matrix phi
    (numpy complex n*n): phi(x *_A y) = phi(x) *_B phi(y) for both products,
    and phi alpha_A = alpha_B phi."""
    n, gal, gar, aal = _complex_tensors(A)
    _, gbl, gbr, abl = _complex_tensors(B)
    res = []
    for ga, gb in ((gal, gbl), (gar, gbr)):
        lhs = np.einsum("kp,ijp->ijk", phi, ga)
        rhs = np.einsum("pi,qj,pqk->ijk", phi, phi, gb)
        res.append((lhs - rhs).ravel())
    res.append((phi @ aal - abl @ phi).ravel())
    return float(np.max(np.abs(np.concatenate(res))))


def iso_search(A, B, budget=200, seed=0, eps=scalars.EPS, det_floor=1e-6):
    """Seeded random-restart least-squares search for an invertible
    homomorphism.  Accepts only when the reverified max residual is <= eps
    and |det phi| >= det_floor; otherwise UNKNOWN."""
    if A.n != B.n:
        return CompareVerdict(NON_ISOMORPHIC, witness="dim")
    n, gal, gar, aal = _complex_tensors(A)
    _, gbl, gbr, abl = _complex_tensors(B)

    def residuals(x):
        phi = (x[:n * n] + 1j * x[n * n:]).reshape(n, n)
        parts = []
        for ga, gb in ((gal, gbl), (gar, gbr)):
            lhs = np.einsum("kp,ijp->ijk", phi, ga)
            rhs = np.einsum("pi,qj,pqk->ijk", phi, phi, gb)
            parts.append((lhs - rhs).ravel())
        parts.append((phi @ aal - abl @ phi).ravel())
        z = np.concatenate(parts)
        return np.concatenate([z.real, z.imag])

    rng = np.random.default_rng(seed)
    for trial in range(budget):
        x0 = rng.standard_normal(2 * n * n)
        if trial == 0:  # the identity is a cheap first guess
            x0 = np.concatenate([np.eye(n).ravel(), np.zeros(n * n)])
        sol = least_squares(residuals, x0, method="lm", xtol=1e-15, ftol=1e-15,
                            gtol=1e-15, max_nfev=400)
        if not np.all(np.isfinite(sol.x)):
            continue
        phi = (sol.x[:n * n] + 1j * sol.x[n * n:]).reshape(n, n)
        with np.errstate(divide="ignore", invalid="ignore"):
            det = np.linalg.det(phi)  # exactly-singular iterates are routine
        if not np.isfinite(det) or abs(det) < det_floor:
            continue
        residual = hom_residual(phi, A, B)
        if residual <= eps:
            phi_map = LinearMap(n, [[complex(phi[i, j]) for j in range(n)]
                                    for i in range(n)], COMPLEX)
            return CompareVerdict(ISOMORPHIC, phi=phi_map, residual=residual,
                                  detail={"trials": trial + 1, "seed": seed})
    return CompareVerdict(UNKNOWN, detail={"trials": budget, "seed": seed})


def compare(A, B, search=False, budget=200, seed=0, eps=scalars.EPS):
    """Fingerprint separation first; identical structures short-circuit to
    ISOMORPHIC(identity); fingerprint ties go to iso_search when requested."""
    if A.n != B.n:
        return CompareVerdict(NON_ISOMORPHIC, witness="dim")
    if (A.backend == B.backend and A.left.g == B.left.g and A.right.g == B.right.g
            and A.alpha.m == B.alpha.m):
        ident = LinearMap.identity(A.n, COMPLEX)
        return CompareVerdict(ISOMORPHIC, phi=ident, residual=0.0,
                              detail={"identical": True})
    fa, fb = fingerprint(A, eps), fingerprint(B, eps)
    witness = fingerprint_mismatch(fa, fb, eps)
    if witness is not None:
        return CompareVerdict(NON_ISOMORPHIC, witness=witness,
                              detail={"a": fa.as_dict(), "b": fb.as_dict()})
    if search:
        return iso_search(A, B, budget=budget, seed=seed, eps=eps)
    return CompareVerdict(UNKNOWN)
