"""Centroid machinery.

The defining three-way equality  psi(x).alpha(y) = psi(x).psi(y) =
alpha(x).psi(y)  mixes a linear condition (outer equality, both products,
plus commutation with alpha) with a genuinely quadratic one (middle term).
The solver is therefore two-stage: stage 1 returns the canonical solution
space of the linear conditions; stage 2 expands the middle equality on a
general member of that space and certifies whether the quadratic constraints
vanish identically ("closed") or returns the offending polynomials.
"""

from . import scalars
from .core import LEFT, RIGHT, Vector, apply_map, compose, table_product
from .derivations import (_commutation_rows, central_derivation_system,
                          is_derivation)
from .solver import Matrix, SolutionSpace, nullspace, rref_span

LINEAR = "linear"
FULL = "full"


def vec_of_map(M):
    """Row-major vectorization matching SolutionSpace.maps()."""
    return [M.m[i][j] for i in range(M.n) for j in range(M.n)]


def system_residual(M, vec):
    """Largest-residual audit of a candidate vector against a system."""
    return M.mul_vec(vec)


def satisfies(M, lin_map, eps=scalars.EPS):
    return all(scalars.is_zero(v, eps) for v in system_residual(M, vec_of_map(lin_map)))


def linear_centroid_system(A):
    """Rows: psi alpha - alpha psi = 0 and, for both products and all basis
    pairs, psi(e_i).alpha(e_j) - alpha(e_i).psi(e_j) = 0."""
    n = A.n
    a = A.alpha.m
    z = scalars.zero(A.backend)
    rows = []
    _commutation_rows(A.alpha, rows)
    for tab in (A.left, A.right):
        g = tab.g
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    row = [z] * (n * n)
                    # + (psi(e_i).alpha(e_j))_r = sum_{p,q} c[p][i] a[q][j] g[p][q][r]
                    for p in range(n):
                        acc = z
                        for q in range(n):
                            if a[q][j] and g[p][q][r]:
                                acc = acc + a[q][j] * g[p][q][r]
                        if acc:
                            row[p * n + i] = row[p * n + i] + acc
                    # - (alpha(e_i).psi(e_j))_r = - sum_{p,q} a[p][i] c[q][j] g[p][q][r]
                    for q in range(n):
                        acc = z
                        for p in range(n):
                            if a[p][i] and g[p][q][r]:
                                acc = acc + a[p][i] * g[p][q][r]
                        if acc:
                            row[q * n + j] = row[q * n + j] - acc
                    rows.append(row)
    return Matrix.from_rows(rows, A.backend, cols=n * n)


def linear_centroid_space(A, eps=scalars.EPS):
    M = linear_centroid_system(A)
    space = nullspace(M, eps)
    assert len(space.pivots) + space.dim == A.n * A.n
    return space


class QuadraticConstraint:
    """One scalar equation sum_ab quad[(a,b)] t_a t_b + sum_a lin[a] t_a = 0
    arising from output coordinate r of the pair (i, j) under `product`."""

    __slots__ = ("product", "i", "j", "r", "quad", "lin")

    def __init__(self, product, i, j, r, quad, lin):
        self.product = product
        self.i = i
        self.j = j
        self.r = r
        self.quad = quad
        self.lin = lin

    def __repr__(self):
        return ("QuadraticConstraint(%s, (%d,%d)->%d, quad=%s, lin=%s)"
                % (self.product, self.i, self.j, self.r, self.quad, self.lin))


class CentroidResult:

    __slots__ = ("linear_space", "closed", "constraints")

    def __init__(self, linear_space, closed, constraints):
        self.linear_space = linear_space
        self.closed = closed
        self.constraints = constraints

    @property
    def dim_linear(self):
        return self.linear_space.dim

    @property
    def dim_full_closed(self):
        """Linear dimension when the middle equality closes, else None (the
        solution set is then a proper subvariety, not a subspace)."""
        return self.linear_space.dim if self.closed else None

    def __repr__(self):
        return "CentroidResult(dim=%d, %s)" % (
            self.dim_linear, "closed" if self.closed else "not closed")


def centroid_closure(A, space, eps=scalars.EPS):
    """Expand psi(e_i).psi(e_j) - psi(e_i).alpha(e_j) for a general member
    psi(t) = sum_a t_a psi_a of the given linear space."""
    n = A.n
    psis = space.maps(n, A.backend)
    d = len(psis)
    acols = [A.alpha.column(j) for j in range(1, n + 1)]
    psi_cols = [[p.column(j) for j in range(1, n + 1)] for p in psis]
    constraints = []
    for side, tab in ((LEFT, A.left), (RIGHT, A.right)):
        for i in range(n):
            for j in range(n):
                # vectors psi_a(e_i).psi_b(e_j) and psi_a(e_i).alpha(e_j)
                for r in range(n):
                    quad = {}
                    lin = {}
                    for a_idx in range(d):
                        li = table_product(tab, psi_cols[a_idx][i], acols[j]).coords[r]
                        if not scalars.is_zero(li, eps):
                            lin[a_idx] = -li
                        for b_idx in range(d):
                            q = table_product(tab, psi_cols[a_idx][i],
                                              psi_cols[b_idx][j]).coords[r]
                            if scalars.is_zero(q, eps):
                                continue
                            key = (min(a_idx, b_idx), max(a_idx, b_idx))
                            cur = quad.get(key, scalars.zero(A.backend))
                            quad[key] = cur + q
                    quad = {k: v for k, v in quad.items() if not scalars.is_zero(v, eps)}
                    if quad or lin:
                        constraints.append(QuadraticConstraint(
                            side, i + 1, j + 1, r + 1, quad, lin))
    return CentroidResult(space, not constraints, constraints)


def centroid(A, variant=LINEAR, eps=scalars.EPS):
    space = linear_centroid_space(A, eps)
    if variant == LINEAR:
        return CentroidResult(space, True, [])
    return centroid_closure(A, space, eps)


def full_space(n, backend):
    z, o = scalars.zero(backend), scalars.one(backend)
    basis = [[o if i == j else z for j in range(n)] for i in range(n)]
    return SolutionSpace(n, basis, list(range(n)))


def centralizer(A, H, eps=scalars.EPS):
    """Elements x of H with alpha(x).h = h.alpha(x) = 0 for all h in H,
    both products.  Returned in ambient coordinates, canonical basis."""
    n = A.n
    hvecs = [Vector(b, A.backend) for b in H.basis]
    if not hvecs:
        return SolutionSpace(n, [], [])
    z = scalars.zero(A.backend)
    alpha_h = [apply_map(A.alpha, h) for h in hvecs]
    rows = []
    for tab in (A.left, A.right):
        for hb in hvecs:
            for r in range(n):
                # coefficient of s_a in [alpha(h_a) . h_b]_r
                rows.append([table_product(tab, alpha_h[a], hb).coords[r]
                             for a in range(len(hvecs))])
                # coefficient of s_a in [h_b . alpha(h_a)]_r
                rows.append([table_product(tab, hb, alpha_h[a]).coords[r]
                             for a in range(len(hvecs))])
    M = Matrix.from_rows(rows, A.backend, cols=len(hvecs))
    s_space = nullspace(M, eps)
    ambient_basis = []
    for s in s_space.basis:
        v = Vector.zero(n, A.backend)
        for coeff, h in zip(s, hvecs):
            if coeff:
                v = v + h.scale(coeff)
        ambient_basis.append(v.coords)
    return rref_span(ambient_basis, n, A.backend, eps)


def center(A, eps=scalars.EPS):
    return centralizer(A, full_space(A.n, A.backend), eps)


def center_constraint_matrix(A):
    """Linear conditions on ambient x expressing alpha(x).e_b = 0 and
    e_b.alpha(x) = 0 for every basis e_b, both products (the center)."""
    n = A.n
    a = A.alpha.m
    rows = []
    for tab in (A.left, A.right):
        g = tab.g
        for b in range(n):
            for r in range(n):
                row1 = []
                row2 = []
                for i in range(n):
                    acc1 = scalars.zero(A.backend)
                    acc2 = scalars.zero(A.backend)
                    for p in range(n):
                        if a[p][i]:
                            if g[p][b][r]:
                                acc1 = acc1 + a[p][i] * g[p][b][r]
                            if g[b][p][r]:
                                acc2 = acc2 + g[b][p][r] * a[p][i]
                    row1.append(acc1)
                    row2.append(acc2)
                rows.append(row1)
                rows.append(row2)
    return Matrix.from_rows(rows, A.backend, cols=n)


class CompositionAudit:
    """Results of composing a centroid member phi with a derivation d."""

    __slots__ = ("phi_d_derivation", "d_phi_in_centroid", "phi_d_central",
                 "bracket_central", "reports")

    def __init__(self, phi_d_derivation, d_phi_in_centroid, phi_d_central,
                 bracket_central, reports):
        self.phi_d_derivation = phi_d_derivation
        self.d_phi_in_centroid = d_phi_in_centroid
        self.phi_d_central = phi_d_central
        self.bracket_central = bracket_central
        self.reports = reports

    def __repr__(self):
        return ("CompositionAudit(phi_d_derivation=%s, d_phi_in_centroid=%s, "
                "phi_d_central=%s, bracket_central=%s)"
                % (self.phi_d_derivation, self.d_phi_in_centroid,
                   self.phi_d_central, self.bracket_central))


def composition_audit(A, phi, d, eps=scalars.EPS):
    """Audits: (a) phi o d is an alpha-derivation; (b) d o phi satisfies the
    linear centroid conditions, and phi o d the central-derivation ones;
    (c) [d, phi] satisfies the central-derivation conditions."""
    csys = linear_centroid_system(A)
    if not satisfies(csys, phi, eps):
        raise ValueError("phi is not in the linear centroid")
    dcheck = is_derivation(A, d, 1, eps)
    if not dcheck.ok:
        raise ValueError("d is not an alpha-derivation")
    phi_d = compose(phi, d)
    d_phi = compose(d, phi)
    br = phi_d - d_phi  # [phi, d]; central membership is sign-invariant
    zsys = central_derivation_system(A, eps)
    rep_a = is_derivation(A, phi_d, 1, eps)
    audit = CompositionAudit(
        phi_d_derivation=rep_a.ok,
        d_phi_in_centroid=satisfies(csys, d_phi, eps),
        phi_d_central=satisfies(zsys, phi_d, eps),
        bracket_central=satisfies(zsys, br, eps),
        reports={"phi_d_derivation": rep_a})
    return audit
