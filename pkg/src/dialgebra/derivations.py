"""Twisted derivations: the k-twisted Leibniz solvers and their satellites.

A map D is an alpha^k-derivation when D commutes with alpha and, for both
products,  D(x.y) = D(x).alpha^k(y) + alpha^k(x).D(y).

Unknown maps are vectorized row-major: coordinate (i-1)*n + (j-1) is the
coefficient of e_i in D(e_j).  Under RREF that vectorization reproduces the
canonical bases pinned in the golden tests.
"""

from . import scalars
from .axioms import AxiomReport, IdentityRecord
from .core import (LEFT, RIGHT, LinearMap, Vector, apply_map, compose,
                   map_power, table_product)
from .solver import Matrix, nullspace, rref_span

ASSOCIATIVE = "associative"
JORDAN = "jordan"


def _commutation_rows(alpha, rows):
    """Append the n^2 equations of D alpha - alpha D = 0."""
    n = alpha.n
    a = alpha.m
    z = scalars.zero(alpha.backend)
    for i in range(n):
        for j in range(n):
            row = [z] * (n * n)
            for p in range(n):
                # + d[i][p] * a[p][j]
                row[i * n + p] = row[i * n + p] + a[p][j]
                # - a[i][p] * d[p][j]
                row[p * n + j] = row[p * n + j] - a[i][p]
            rows.append(row)


def derivation_system(A, k):
    """Coefficient matrix of the alpha^k-derivation conditions (rows:
    n^2 commutation + 2n^3 Leibniz; columns: n^2 unknowns d_{ij})."""
    n = A.n
    ak = map_power(A.alpha, k)
    akm = ak.m
    z = scalars.zero(A.backend)
    rows = []
    _commutation_rows(A.alpha, rows)
    for tab in (A.left, A.right):
        g = tab.g
        for i in range(n):
            for j in range(n):
                cell = g[i][j]
                for r in range(n):
                    row = [z] * (n * n)
                    # + D(e_i . e_j)_r = sum_u g[i][j][u] d[r][u]
                    for u in range(n):
                        if cell[u]:
                            row[r * n + u] = row[r * n + u] + cell[u]
                    # - (D(e_i) . alpha^k(e_j))_r = - sum_{p,q} d[p][i] ak[q][j] g[p][q][r]
                    for p in range(n):
                        acc = z
                        for q in range(n):
                            if akm[q][j] and g[p][q][r]:
                                acc = acc + akm[q][j] * g[p][q][r]
                        if acc:
                            row[p * n + i] = row[p * n + i] - acc
                    # - (alpha^k(e_i) . D(e_j))_r = - sum_{p,q} ak[p][i] d[q][j] g[p][q][r]
                    for q in range(n):
                        acc = z
                        for p in range(n):
                            if akm[p][i] and g[p][q][r]:
                                acc = acc + akm[p][i] * g[p][q][r]
                        if acc:
                            row[q * n + j] = row[q * n + j] - acc
                    rows.append(row)
    return Matrix.from_rows(rows, A.backend, cols=n * n)


def derivation_space(A, k, eps=scalars.EPS):
    """Canonical solution space of the alpha^k-derivation system."""
    if k < 0:
        raise ValueError("k must be >= 0")
    M = derivation_system(A, k)
    space = nullspace(M, eps)
    assert len(space.pivots) + space.dim == A.n * A.n  # rank-nullity
    return space


def derivation_maps(A, k, eps=scalars.EPS):
    return derivation_space(A, k, eps).maps(A.n, A.backend)


def is_derivation(A, D, k, eps=scalars.EPS):
    """Pointwise audit of both defining conditions, with residual witnesses."""
    n = A.n
    ak = map_power(A.alpha, k)
    comm = []
    for j in range(1, n + 1):
        ej = Vector.basis(j, n, A.backend)
        res = apply_map(D, apply_map(A.alpha, ej)) - apply_map(A.alpha, apply_map(D, ej))
        if not res.is_zero(eps):
            comm.append(((j,), res))
    records = [IdentityRecord("commutes_alpha", comm)]
    for side, tab in ((LEFT, A.left), (RIGHT, A.right)):
        violations = []
        for i in range(1, n + 1):
            ei = Vector.basis(i, n, A.backend)
            for j in range(1, n + 1):
                ej = Vector.basis(j, n, A.backend)
                res = (apply_map(D, tab.basis_product(i, j))
                       - table_product(tab, apply_map(D, ei), apply_map(ak, ej))
                       - table_product(tab, apply_map(ak, ei), apply_map(D, ej)))
                if not res.is_zero(eps):
                    violations.append(((i, j), res))
        records.append(IdentityRecord("leibniz_%s" % side, violations))
    return AxiomReport("derivation(k=%d)" % k, records, meta={"k": k})


def alpha_fixed_points(A, eps=scalars.EPS):
    """Nullspace of (alpha - id), as vectors in the ambient space."""
    n = A.n
    ident = LinearMap.identity(n, A.backend)
    diff = A.alpha - ident
    return nullspace(Matrix.from_rows(diff.m, A.backend, cols=n), eps)


def inner_map(A, f, k, side, eps=scalars.EPS):
    """The map g -> alpha^(k-1)(g) . f, for an alpha-fixed f."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not (apply_map(A.alpha, f) - f).is_zero(eps):
        raise ValueError("f is not an alpha-fixed point")
    n = A.n
    tab = A.table(side)
    akm1 = map_power(A.alpha, k - 1)
    cols = []
    for j in range(1, n + 1):
        g = apply_map(akm1, Vector.basis(j, n, A.backend))
        cols.append(table_product(tab, g, f))
    return LinearMap.from_columns(cols, A.backend)


def bracket(D1, D2):
    return compose(D1, D2) - compose(D2, D1)


def bracket_check(A, D, k, D2, s, eps=scalars.EPS):
    """[D, D2] must be an alpha^(k+s)-derivation when D, D2 are derivations
    at exponents k, s.  Preconditions are enforced."""
    pre1 = is_derivation(A, D, k, eps)
    if not pre1.ok:
        raise ValueError("first map is not an alpha^%d-derivation" % k)
    pre2 = is_derivation(A, D2, s, eps)
    if not pre2.ok:
        raise ValueError("second map is not an alpha^%d-derivation" % s)
    return is_derivation(A, bracket(D, D2), k + s, eps)


def triple_derivation_system(A, k, kind, side):
    """Equations for D(((x.y).z)) = (D(x).ak(y)).ak(z) + (ak(x).D(y)).ak(z)
    + (ak(x).ak(y)).D(z) over basis triples; JORDAN restricts to z = x.
    Commutation with alpha is always included."""
    n = A.n
    tab = A.table(side)
    ak = map_power(A.alpha, k)
    akm = ak.m
    g = tab.g
    z = scalars.zero(A.backend)
    basis = [Vector.basis(i, n, A.backend) for i in range(1, n + 1)]
    ak_basis = [apply_map(ak, b) for b in basis]
    bp = [[tab.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    # precompute (e_i . e_j) . e_l coordinates and, for the Leibniz side,
    # contraction helpers
    rows = []
    _commutation_rows(A.alpha, rows)
    triples = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                if kind == JORDAN and l != i:
                    continue
                triples.append((i, j, l))
    for (i, j, l) in triples:
        lhs_vec = table_product(tab, bp[i][j], basis[l])  # (e_i.e_j).e_l
        for r in range(n):
            row = [z] * (n * n)
            # + D((x.y).z)_r = sum_u [(e_i.e_j).e_l]_u d[r][u]
            for u in range(n):
                if lhs_vec.coords[u]:
                    row[r * n + u] = row[r * n + u] + lhs_vec.coords[u]
            # - ((D e_i . ak e_j) . ak e_l)_r: D e_i = sum_p d[p][i] e_p
            for p in range(n):
                inner = table_product(tab, basis[p], ak_basis[j])
                outer = table_product(tab, inner, ak_basis[l])
                if outer.coords[r]:
                    row[p * n + i] = row[p * n + i] - outer.coords[r]
            # - ((ak e_i . D e_j) . ak e_l)_r
            for q in range(n):
                inner = table_product(tab, ak_basis[i], basis[q])
                outer = table_product(tab, inner, ak_basis[l])
                if outer.coords[r]:
                    row[q * n + j] = row[q * n + j] - outer.coords[r]
            # - ((ak e_i . ak e_j) . D e_l)_r
            head = table_product(tab, ak_basis[i], ak_basis[j])
            for u in range(n):
                outer = table_product(tab, head, basis[u])
                if outer.coords[r]:
                    row[u * n + l] = row[u * n + l] - outer.coords[r]
            rows.append(row)
    return Matrix.from_rows(rows, A.backend, cols=n * n)


def triple_derivation_space(A, k, kind, side, eps=scalars.EPS):
    if k < 0:
        raise ValueError("k must be >= 0")
    M = triple_derivation_system(A, k, kind, side)
    space = nullspace(M, eps)
    assert len(space.pivots) + space.dim == A.n * A.n
    return space


def _leibniz3(A, tab, D, k, x, y, zv):
    """Three-term twisted Leibniz expansion of D on (x.y).z."""
    ak = map_power(A.alpha, k)
    t1 = table_product(tab, table_product(tab, apply_map(D, x), apply_map(ak, y)),
                       apply_map(ak, zv))
    t2 = table_product(tab, table_product(tab, apply_map(ak, x), apply_map(D, y)),
                       apply_map(ak, zv))
    t3 = table_product(tab, table_product(tab, apply_map(ak, x), apply_map(ak, y)),
                       apply_map(D, zv))
    return t1 + t2 + t3


def cyclic_sum_check(A, D, delta, k, x, y, zv, side=LEFT):
    """Returns the pair (S_A, S_B):

    S_A = cyclic sum over (x,y,z) of alpha applied to the three-term
          twisted Leibniz expansion of D on (x.y).z;
    S_B = cyclic sum of (alpha^k(x) . alpha^k(y)) . (D - delta)(z).
    """
    tab = A.table(side)
    ak = map_power(A.alpha, k)
    diff = D - delta
    sa = Vector.zero(A.n, A.backend)
    sb = Vector.zero(A.n, A.backend)
    for (u, v, w) in ((x, y, zv), (y, zv, x), (zv, x, y)):
        sa = sa + apply_map(A.alpha, _leibniz3(A, tab, D, k, u, v, w))
        head = table_product(tab, apply_map(ak, u), apply_map(ak, v))
        sb = sb + table_product(tab, head, apply_map(diff, w))
    return sa, sb


def algebra_square(A, eps=scalars.EPS):
    """Canonical basis of span{e_i . e_j : both products}."""
    vecs = []
    for tab in (A.left, A.right):
        for i in range(1, A.n + 1):
            for j in range(1, A.n + 1):
                v = tab.basis_product(i, j)
                if not v.is_zero(eps):
                    vecs.append(v.coords)
    return rref_span(vecs, A.n, A.backend, eps)


def central_derivation_system(A, eps=scalars.EPS):
    """Rows: psi alpha - alpha psi = 0; psi(e_j) inside the center for all j;
    psi(v) = 0 for a spanning set v of A.A (both products)."""
    from .centroids import center_constraint_matrix  # local to avoid a cycle
    n = A.n
    z = scalars.zero(A.backend)
    rows = []
    _commutation_rows(A.alpha, rows)
    C = center_constraint_matrix(A)
    for j in range(n):  # psi(e_j) must satisfy C v = 0
        for crow in C.a:
            row = [z] * (n * n)
            for i in range(n):
                if crow[i]:
                    row[i * n + j] = crow[i]
            rows.append(row)
    sq = algebra_square(A, eps)
    for v in sq.basis:  # psi(v) = 0, coordinate r
        for r in range(n):
            row = [z] * (n * n)
            for j in range(n):
                if v[j]:
                    row[r * n + j] = v[j]
            rows.append(row)
    return Matrix.from_rows(rows, A.backend, cols=n * n)


def central_derivation_space(A, eps=scalars.EPS):
    M = central_derivation_system(A, eps)
    space = nullspace(M, eps)
    assert len(space.pivots) + space.dim == A.n * A.n
    return space
