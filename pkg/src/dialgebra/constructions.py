"""Structure transports and twists.

transport conjugates everything by an invertible map (producing an isomorphic
copy); the twist/untwist pair composes product tables with the twist map; the
Zinbiel <-> dendriform bridges move between one-product and two-product
presentations.  Preconditions are enforced with the axiom checkers rather
than trusted.
"""

from . import scalars
from .axioms import (STANDARD, AxiomReport, IdentityRecord, check_dendriform,
                     check_dialgebra, check_dipterous, check_zinbiel,
                     _table_multiplicativity)
from .core import (LEFT, RIGHT, HomDialgebra, LinearMap, MultTable,
                   apply_map, compose, compose_table, table_product)
from .solver import invert


def inverse_map(M, eps=scalars.EPS):
    inv_rows = invert(M.m, M.backend, eps)
    if inv_rows is None:
        return None
    return LinearMap(M.n, inv_rows, M.backend)


def transport_table(tab, phi, phi_inv):
    """x *' y = phi(phi_inv(x) * phi_inv(y)), entrywise on the basis."""
    n = tab.n
    cols_inv = [phi_inv.column(j) for j in range(1, n + 1)]
    g = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = table_product(tab, cols_inv[i], cols_inv[j])
            g[i][j] = apply_map(phi, prod).coords
    return MultTable(n, g, tab.backend)


def transport(A, phi, eps=scalars.EPS):
    """Isomorphic copy of A along an invertible map phi."""
    phi_inv = inverse_map(phi, eps)
    if phi_inv is None:
        raise ValueError("transport map is singular")
    left = transport_table(A.left, phi, phi_inv)
    right = transport_table(A.right, phi, phi_inv)
    alpha = compose(compose(phi, A.alpha), phi_inv)
    return HomDialgebra("%s~" % A.name, left, right, alpha)


def is_automorphism(A, psi, eps=scalars.EPS):
    """Invertible, commutes with the twist map, preserves both products."""
    if inverse_map(psi, eps) is None:
        return False, "singular"
    comm = compose(psi, A.alpha) - compose(A.alpha, psi)
    if not comm.is_zero(eps):
        return False, "does not commute with the twist map"
    for side, tab in ((LEFT, A.left), (RIGHT, A.right)):
        for i in range(1, A.n + 1):
            for j in range(1, A.n + 1):
                lhs = apply_map(psi, tab.basis_product(i, j))
                rhs = table_product(tab, psi.column(i), psi.column(j))
                if not (lhs - rhs).is_zero(eps):
                    return False, "breaks the %s product at (%d, %d)" % (side, i, j)
    return True, None


def conjugate_automorphism_check(A, phi, psi, eps=scalars.EPS):
    """psi an automorphism of A  =>  phi psi phi^-1 an automorphism of
    transport(A, phi).  Verifies both halves explicitly."""
    ok, why = is_automorphism(A, psi, eps)
    if not ok:
        raise ValueError("psi is not an automorphism of the input: %s" % why)
    phi_inv = inverse_map(phi, eps)
    if phi_inv is None:
        raise ValueError("transport map is singular")
    moved = transport(A, phi, eps)
    conj = compose(compose(phi, psi), phi_inv)
    ok2, why2 = is_automorphism(moved, conj, eps)
    return {"pass": ok2, "reason": why2, "conjugated": conj, "transported": moved}


def yau_twist_dipterous(star, other, alpha, side, eps=scalars.EPS):
    """Twist an (untwisted) dipterous structure by an endomorphism alpha:
    both products get composed with alpha on the outside."""
    ident = LinearMap.identity(star.n, star.backend)
    base = check_dipterous(star, other, ident, side, eps)
    if not base.ok:
        raise ValueError("input is not a dipterous algebra (untwisted check failed)")
    for tag, tab in (("star", star), ("other", other)):
        rec = _table_multiplicativity(tab, alpha, "endo_%s" % tag, eps)
        if not rec.passed:
            raise ValueError("twist map is not an endomorphism of the %s product" % tag)
    twisted_star = compose_table(alpha, star)
    twisted_other = compose_table(alpha, other)
    report = check_dipterous(twisted_star, twisted_other, alpha, side, eps)
    return twisted_star, twisted_other, alpha, report


def untwist_candidate(A, use_inverse=False, eps=scalars.EPS):
    """Compose both products with the twist map on the outside (or with its
    inverse, behind the flag) and test the result as an untwisted dialgebra."""
    if use_inverse:
        m = inverse_map(A.alpha, eps)
        if m is None:
            raise ValueError("twist map is singular; inverse variant unavailable")
    else:
        m = A.alpha
    left = compose_table(m, A.left)
    right = compose_table(m, A.right)
    out = HomDialgebra("%s'" % A.name, left, right,
                       LinearMap.identity(A.n, A.backend))
    return out, check_dialgebra(out, eps)


def zinbiel_to_dendriform(circ, alpha, eps=scalars.EPS):
    """x < y = x o y,  x > y = y o x."""
    pre = check_zinbiel(circ, alpha, eps)
    if not pre.ok:
        raise ValueError("input fails the Zinbiel identity at %s"
                         % [v[0] for v in pre.records[0].violations])
    return circ, circ.transpose(), alpha


def symmetrize_zinbiel(circ, alpha, eps=scalars.EPS):
    """Single product x.y = x o y + y o x; checked for commutativity and the
    twisted associativity (x.y).alpha(z) = alpha(x).(y.z)."""
    pre = check_zinbiel(circ, alpha, eps)
    if not pre.ok:
        raise ValueError("input fails the Zinbiel identity at %s"
                         % [v[0] for v in pre.records[0].violations])
    n = circ.n
    sym = MultTable(n, [[[circ.g[i][j][k] + circ.g[j][i][k] for k in range(n)]
                         for j in range(n)] for i in range(n)], circ.backend)
    acols = [alpha.column(j) for j in range(1, n + 1)]
    bp = [[sym.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    assoc = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = (table_product(sym, bp[i][j], acols[k])
                       - table_product(sym, acols[i], bp[j][k]))
                if not res.is_zero(eps):
                    assoc.append(((i + 1, j + 1, k + 1), res))
    comm = []
    for i in range(n):
        for j in range(n):
            res = bp[i][j] - bp[j][i]
            if not res.is_zero(eps):
                comm.append(((i + 1, j + 1), res))
    report = AxiomReport("symmetrized", [IdentityRecord("hom_associative", assoc),
                                         IdentityRecord("commutative", comm)])
    return sym, report


def commutative_dendriform_to_zinbiel(left, right, alpha, eps=scalars.EPS):
    """For a commutative dendriform structure (x < y = y > x entrywise),
    the left product alone is a Zinbiel candidate; reports its check."""
    pre = check_dendriform(left, right, alpha, STANDARD, eps)
    if not pre.ok:
        raise ValueError("input fails the dendriform identities")
    rt = right.transpose()
    if not all(scalars.is_zero(left.g[i][j][k] - rt.g[i][j][k], eps)
               for i in range(left.n) for j in range(left.n) for k in range(left.n)):
        raise ValueError("dendriform structure is not commutative (x<y != y>x)")
    return left, check_zinbiel(left, alpha, eps)
