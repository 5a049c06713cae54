"""Identity checkers.  Every checker reports *all* violating index tuples
with their residual vectors, never just the first; the reports feed the
discrepancy records downstream.

The five dialgebra identities, with * standing for the twist map:
  ax1: (x -| y) -| *(z)  =  *(x) -| (y -| z)
  ax2: (x -| y) -| *(z)  =  *(x) -| (y |- z)
  ax3: (x |- y) -| *(z)  =  *(x) |- (y -| z)
  ax4: (x -| y) |- *(z)  =  *(x) |- (y |- z)
  ax5: (x |- y) |- *(z)  =  *(x) |- (y |- z)

check_dialgebra evaluates them through vector products; residual_via_system
evaluates the same residuals by raw index contraction of the structure
constants.  The two code paths are independent on purpose and are required
to agree (tested on every catalog entry).
"""

from . import scalars
from .core import LEFT, RIGHT, Vector, apply_map, table_product
from .solver import Matrix, solve_affine

STANDARD = "standard"
AS_PRINTED = "as_printed"

# (identity id, lhs outer, lhs inner, rhs outer, rhs inner)
DIALGEBRA_AXIOMS = (
    ("ax1", LEFT, LEFT, LEFT, LEFT),
    ("ax2", LEFT, LEFT, LEFT, RIGHT),
    ("ax3", LEFT, RIGHT, RIGHT, LEFT),
    ("ax4", RIGHT, LEFT, RIGHT, RIGHT),
    ("ax5", RIGHT, RIGHT, RIGHT, RIGHT),
)


class IdentityRecord:

    __slots__ = ("id", "violations")

    def __init__(self, ident, violations):
        self.id = ident
        self.violations = violations  # [(index tuple, residual Vector)]

    @property
    def passed(self):
        return not self.violations

    def __repr__(self):
        return "IdentityRecord(%s, %s)" % (
            self.id, "pass" if self.passed else "%d violations" % len(self.violations))


class AxiomReport:

    def __init__(self, name, records, meta=None):
        self.name = name
        self.records = records
        self.meta = meta or {}

    @property
    def ok(self):
        return all(r.passed for r in self.records)

    def record(self, ident):
        for r in self.records:
            if r.id == ident:
                return r
        raise KeyError(ident)

    def violation_count(self):
        return sum(len(r.violations) for r in self.records)

    def __repr__(self):
        return "AxiomReport(%r, %s)" % (self.name, "ok" if self.ok else "FAIL")


def _alpha_columns(alpha):
    return [alpha.column(j) for j in range(1, alpha.n + 1)]


def check_dialgebra(A, eps=scalars.EPS):
    """All five identities on all n^3 basis triples."""
    n = A.n
    acols = _alpha_columns(A.alpha)
    basis = A.basis()
    prods = {LEFT: A.left, RIGHT: A.right}
    # cache basis products per side
    bp = {s: [[tab.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
          for s, tab in prods.items()}
    records = []
    for ident, lo, li, ro, ri in DIALGEBRA_AXIOMS:
        violations = []
        for i in range(n):
            for j in range(n):
                inner_l = bp[li][i][j]
                for k in range(n):
                    lhs = table_product(prods[lo], inner_l, acols[k])
                    rhs = table_product(prods[ro], acols[i], bp[ri][j][k])
                    res = lhs - rhs
                    if not res.is_zero(eps):
                        violations.append(((i + 1, j + 1, k + 1), res))
        records.append(IdentityRecord(ident, violations))
    return AxiomReport(A.name, records)


def residual_via_system(A, ident, i, j, k):
    """Residual of one identity at basis triple (i, j, k), 1-based, computed
    by direct contraction of the structure constants -- no vector products."""
    n = A.n
    lo, li, ro, ri = dict((a[0], a[1:]) for a in DIALGEBRA_AXIOMS)[ident]
    g = {LEFT: A.left.g, RIGHT: A.right.g}
    a = A.alpha.m
    i, j, k = i - 1, j - 1, k - 1
    out = []
    for r in range(n):
        acc = scalars.zero(A.backend)
        for p in range(n):
            for q in range(n):
                if g[li][i][j][p] and a[q][k]:
                    acc = acc + g[li][i][j][p] * a[q][k] * g[lo][p][q][r]
                if a[p][i] and g[ri][j][k][q]:
                    acc = acc - a[p][i] * g[ri][j][k][q] * g[ro][p][q][r]
        out.append(acc)
    return Vector(out, A.backend)


def check_multiplicativity(A, eps=scalars.EPS):
    """Twist map is an endomorphism of both products: *(x.y) = *(x).*(y)."""
    rec_l = _table_multiplicativity(A.left, A.alpha, "mult_left", eps)
    rec_r = _table_multiplicativity(A.right, A.alpha, "mult_right", eps)
    return AxiomReport(A.name, [rec_l, rec_r])


def check_table_multiplicativity(tables, alpha, eps=scalars.EPS):
    """check_multiplicativity for an arbitrary named family of products;
    `tables` is a sequence of (name, MultTable) pairs."""
    return AxiomReport("multiplicativity",
                       [_table_multiplicativity(tab, alpha, "mult_%s" % name, eps)
                        for name, tab in tables])


def _table_multiplicativity(tab, alpha, ident, eps=scalars.EPS):
    n = tab.n
    acols = _alpha_columns(alpha)
    violations = []
    for i in range(n):
        for j in range(n):
            lhs = apply_map(alpha, tab.basis_product(i + 1, j + 1))
            rhs = table_product(tab, acols[i], acols[j])
            res = lhs - rhs
            if not res.is_zero(eps):
                violations.append(((i + 1, j + 1), res))
    return IdentityRecord(ident, violations)


class BarUnitResult:
    """Affine family of bar units: elements e with x -| e = x = e |- x for
    all x, under the extra defining requirement that the twist map is the
    identity.  empty -> `reason` says why."""

    __slots__ = ("particular", "homogeneous", "reason")

    def __init__(self, particular, homogeneous, reason=None):
        self.particular = particular
        self.homogeneous = homogeneous
        self.reason = reason

    @property
    def exists(self):
        return self.particular is not None

    @property
    def parameters(self):
        return self.homogeneous.dim if self.homogeneous is not None else 0

    def __repr__(self):
        if not self.exists:
            return "BarUnitResult(empty: %s)" % self.reason
        return "BarUnitResult(%r + %d free)" % (self.particular, self.parameters)


def find_bar_units(A, eps=scalars.EPS):
    if not A.alpha.is_identity(eps):
        return BarUnitResult(None, None, "alpha is not identity")
    n = A.n
    rows, rhs = [], []
    z, o = scalars.zero(A.backend), scalars.one(A.backend)
    for i in range(n):          # basis element x = e_{i+1}
        for r in range(n):      # output coordinate
            # sum_j c_j (e_i -| e_j)_r = delta_{ir}
            rows.append([A.left.g[i][j][r] for j in range(n)])
            rhs.append(o if i == r else z)
            # sum_j c_j (e_j |- e_i)_r = delta_{ir}
            rows.append([A.right.g[j][i][r] for j in range(n)])
            rhs.append(o if i == r else z)
    M = Matrix.from_rows(rows, A.backend, cols=n)
    sol = solve_affine(M, rhs, eps)
    if sol is None:
        return BarUnitResult(None, None, "system inconsistent")
    particular, homogeneous = sol
    return BarUnitResult(Vector(particular, A.backend), homogeneous)


def check_dendriform(left, right, alpha, variant=STANDARD, eps=scalars.EPS):
    """Three Hom-dendriform identities for (<, >) = (left, right).

    d1: (x<y)<*(z) = *(x)<(y<z + y>z)
    d2: (x>y)<*(z) = *(x)>(y<z)
    d3 standard:   (x<y + x>y)>*(z) = *(x)>(y>z)
    d3 as_printed: (x<y + x>y)<*(z) = *(x)>(y>z)
    """
    n = left.n
    acols = _alpha_columns(alpha)
    bl = [[left.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    br = [[right.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    v1, v2, v3 = [], [], []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                idx = (i + 1, j + 1, k + 1)
                res = (table_product(left, bl[i][j], acols[k])
                       - table_product(left, acols[i], bl[j][k] + br[j][k]))
                if not res.is_zero(eps):
                    v1.append((idx, res))
                res = (table_product(left, br[i][j], acols[k])
                       - table_product(right, acols[i], bl[j][k]))
                if not res.is_zero(eps):
                    v2.append((idx, res))
                mixed = bl[i][j] + br[i][j]
                outer = left if variant == AS_PRINTED else right
                res = (table_product(outer, mixed, acols[k])
                       - table_product(right, acols[i], br[j][k]))
                if not res.is_zero(eps):
                    v3.append((idx, res))
    return AxiomReport("dendriform", [IdentityRecord("dend1", v1),
                                      IdentityRecord("dend2", v2),
                                      IdentityRecord("dend3", v3)],
                       meta={"variant": variant})


def check_zinbiel(circ, alpha, eps=scalars.EPS):
    """(x o y) o *(z) = *(x) o (y o z) + *(x) o (z o y)."""
    n = circ.n
    acols = _alpha_columns(alpha)
    bp = [[circ.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = (table_product(circ, bp[i][j], acols[k])
                       - table_product(circ, acols[i], bp[j][k])
                       - table_product(circ, acols[i], bp[k][j]))
                if not res.is_zero(eps):
                    violations.append(((i + 1, j + 1, k + 1), res))
    return AxiomReport("zinbiel", [IdentityRecord("zinbiel", violations)])


def check_dipterous(star, other, alpha, side, eps=scalars.EPS):
    """LEFT:  shared identity + (x*y) > *(z) = *(x) > (y>z), other = >.
    RIGHT: shared identity + (x<y) < *(z) = *(x) < (y*z), other = <.
    Shared: (x*y) * *(z) = *(x) * (y*z)."""
    n = star.n
    acols = _alpha_columns(alpha)
    bs = [[star.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    bo = [[other.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    shared, sided = [], []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                idx = (i + 1, j + 1, k + 1)
                res = (table_product(star, bs[i][j], acols[k])
                       - table_product(star, acols[i], bs[j][k]))
                if not res.is_zero(eps):
                    shared.append((idx, res))
                if side == LEFT:
                    res = (table_product(other, bs[i][j], acols[k])
                           - table_product(other, acols[i], bo[j][k]))
                else:
                    res = (table_product(other, bo[i][j], acols[k])
                           - table_product(other, acols[i], bs[j][k]))
                if not res.is_zero(eps):
                    sided.append((idx, res))
    ident = "dip_left" if side == LEFT else "dip_right"
    return AxiomReport("dipterous", [IdentityRecord("dip_star", shared),
                                     IdentityRecord(ident, sided)],
                       meta={"side": side})


def check_triple_system(A, side, eps=scalars.EPS):
    """Chained five-argument equalities for the chosen product.

    E1 = (((x.y).*(z)).*(u)).*(w)
    E2 = ((*(x).(y.z)).*(u)).*(w)
    E3 = *(x).(*(y).((z.u).*(w)))
    checked as E1 = E2 and E1 = E3 on all n^5 basis tuples.  The bracketing
    of E2/E3 is this module's chosen parse (flagged in meta) -- it follows
    the associativity-shift pattern of the dialgebra identities.
    """
    n = A.n
    tab = A.table(side)
    acols = _alpha_columns(A.alpha)
    bp = [[tab.basis_product(i + 1, j + 1) for j in range(n)] for i in range(n)]
    v12, v13 = [], []
    for i in range(n):
        for j in range(n):
            pij = bp[i][j]
            for k in range(n):
                e1_base = table_product(tab, pij, acols[k])
                e2_base = table_product(tab, acols[i], bp[j][k])
                for u in range(n):
                    e1_u = table_product(tab, e1_base, acols[u])
                    e2_u = table_product(tab, e2_base, acols[u])
                    for w in range(n):
                        idx = (i + 1, j + 1, k + 1, u + 1, w + 1)
                        e1 = table_product(tab, e1_u, acols[w])
                        e2 = table_product(tab, e2_u, acols[w])
                        res12 = e1 - e2
                        if not res12.is_zero(eps):
                            v12.append((idx, res12))
                        inner = table_product(tab, bp[k][u], acols[w])
                        e3 = table_product(tab, acols[i],
                                           table_product(tab, acols[j], inner))
                        res13 = e1 - e3
                        if not res13.is_zero(eps):
                            v13.append((idx, res13))
    return AxiomReport(A.name, [IdentityRecord("triple_12", v12),
                                IdentityRecord("triple_13", v13)],
                       meta={"side": side, "parse": "chosen"})
