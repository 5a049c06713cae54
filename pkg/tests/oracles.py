"""Independent cross-checks for the exact solvers.

Everything here runs on numpy floats with different algorithms from the
library: identities are sampled on random real vectors instead of
enumerating basis triples, and solution-space dimensions come from the
SVD rank of a constraint matrix assembled by probing with matrix units.
Agreement with the exact code is therefore evidence, not tautology.
"""

import numpy as np

AXIOMS = {
    "ax1": ("left", "left", "left", "left"),
    "ax2": ("left", "left", "left", "right"),
    "ax3": ("left", "right", "right", "left"),
    "ax4": ("right", "left", "right", "right"),
    "ax5": ("right", "right", "right", "right"),
}


def _c(v):
    if isinstance(v, complex):
        return v
    return complex(float(v))


def table_array(tab):
    """MultTable -> (n, n, n) complex ndarray, t[i, j, k] the e_k
    coefficient of e_i . e_j (0-based)."""
    return np.array([[[_c(v) for v in cell] for cell in row] for row in tab.g])


def map_array(M):
    return np.array([[_c(v) for v in row] for row in M.m])


def mult(t, x, y):
    return np.einsum("ijk,i,j->k", t, x, y)


def axiom_residuals(A, rng, samples=20):
    """Worst residual of each of the five identities over random real
    triples.  Keys ax1..ax5; (outer, inner) tables per side as in AXIOMS:
    outer(inner(x, y), a z) - outer'(a x, inner'(y, z))."""
    t = {"left": table_array(A.left), "right": table_array(A.right)}
    a = map_array(A.alpha)
    out = {}
    for ident in sorted(AXIOMS):
        lo, li, ro, ri = AXIOMS[ident]
        worst = 0.0
        for _ in range(samples):
            x = rng.standard_normal(A.n)
            y = rng.standard_normal(A.n)
            z = rng.standard_normal(A.n)
            lhs = mult(t[lo], mult(t[li], x, y), a @ z)
            rhs = mult(t[ro], a @ x, mult(t[ri], y, z))
            worst = max(worst, float(np.abs(lhs - rhs).max()))
        out[ident] = worst
    return out


def multiplicativity_residual(tab, alpha, rng, samples=20):
    t = table_array(tab)
    a = map_array(alpha)
    worst = 0.0
    for _ in range(samples):
        x = rng.standard_normal(tab.n)
        y = rng.standard_normal(tab.n)
        res = a @ mult(t, x, y) - mult(t, a @ x, a @ y)
        worst = max(worst, float(np.abs(res).max()))
    return worst


def zinbiel_residual(circ, alpha, rng, samples=20):
    """(x o y) o a(z) - a(x) o (y o z) - a(x) o (z o y), worst case."""
    t = table_array(circ)
    a = map_array(alpha)
    worst = 0.0
    for _ in range(samples):
        x = rng.standard_normal(circ.n)
        y = rng.standard_normal(circ.n)
        z = rng.standard_normal(circ.n)
        res = (mult(t, mult(t, x, y), a @ z)
               - mult(t, a @ x, mult(t, y, z))
               - mult(t, a @ x, mult(t, z, y)))
        worst = max(worst, float(np.abs(res).max()))
    return worst


def dendriform_residuals(prec, succ, alpha, rng, samples=20):
    """Worst residuals of the three compatibility identities, in order."""
    p = table_array(prec)
    s = table_array(succ)
    a = map_array(alpha)
    worst = [0.0, 0.0, 0.0]
    for _ in range(samples):
        x = rng.standard_normal(prec.n)
        y = rng.standard_normal(prec.n)
        z = rng.standard_normal(prec.n)
        ax, az = a @ x, a @ z
        r1 = (mult(p, mult(p, x, y), az)
              - mult(p, ax, mult(p, y, z) + mult(s, y, z)))
        r2 = mult(p, mult(s, x, y), az) - mult(s, ax, mult(p, y, z))
        r3 = (mult(s, mult(p, x, y) + mult(s, x, y), az)
              - mult(s, ax, mult(s, y, z)))
        for idx, r in enumerate((r1, r2, r3)):
            worst[idx] = max(worst[idx], float(np.abs(r).max()))
    return worst


def _nullity(resid, n):
    cols = []
    for p in range(n):
        for q in range(n):
            d = np.zeros((n, n), dtype=complex)
            d[p, q] = 1.0
            cols.append(resid(d))
    M = np.column_stack(cols)
    return n * n - int(np.linalg.matrix_rank(M))


def derivation_dim(A, k=1):
    """Dimension of the k-twisted derivation space, recovered by SVD."""
    a = map_array(A.alpha)
    ak = np.linalg.matrix_power(a, k)
    tabs = [table_array(A.left), table_array(A.right)]
    n = A.n

    def resid(d):
        parts = [(d @ a - a @ d).ravel()]
        for t in tabs:
            lhs = np.einsum("rs,ijs->ijr", d, t)
            t1 = np.einsum("pqr,pi,qj->ijr", t, d, ak)
            t2 = np.einsum("pqr,pi,qj->ijr", t, ak, d)
            parts.append((lhs - t1 - t2).ravel())
        return np.concatenate(parts)

    return _nullity(resid, n)


def centroid_dim(A):
    """Dimension of the linear centroid conditions, recovered by SVD."""
    a = map_array(A.alpha)
    tabs = [table_array(A.left), table_array(A.right)]
    n = A.n

    def resid(c):
        parts = [(c @ a - a @ c).ravel()]
        for t in tabs:
            lhs = np.einsum("pqr,pi,qj->ijr", t, c, a)
            rhs = np.einsum("pqr,pi,qj->ijr", t, a, c)
            parts.append((lhs - rhs).ravel())
        return np.concatenate(parts)

    return _nullity(resid, n)


def charpoly_floats(M):
    """Characteristic polynomial coefficients (leading 1 first) via numpy."""
    return [complex(v) for v in np.poly(map_array(M))]
