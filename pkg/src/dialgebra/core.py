"""Structure-constant representation of a two-product algebra with a twist map.

Conventions, used everywhere downstream:
  * basis indices are 1-based in every public API (e_1 .. e_n);
  * MultTable entry (i, j, k) is the coefficient of e_k in e_i * e_j;
  * LinearMap entry (i, j) is the coefficient of e_i in the image of e_j
    (column-per-input), so apply is an ordinary matrix-vector product;
  * unlisted entries are zero.
"""

from . import scalars

LEFT = "left"
RIGHT = "right"


class Vector:

    __slots__ = ("n", "coords", "backend")

    def __init__(self, coords, backend):
        self.coords = [scalars.coerce(c, backend) for c in coords]
        self.n = len(self.coords)
        self.backend = backend

    @classmethod
    def zero(cls, n, backend):
        return cls([scalars.zero(backend)] * n, backend)

    @classmethod
    def basis(cls, i, n, backend):
        coords = [scalars.zero(backend)] * n
        coords[i - 1] = scalars.one(backend)
        return cls(coords, backend)

    def __add__(self, other):
        return Vector([a + b for a, b in zip(self.coords, other.coords)], self.backend)

    def __sub__(self, other):
        return Vector([a - b for a, b in zip(self.coords, other.coords)], self.backend)

    def scale(self, c):
        c = scalars.coerce(c, self.backend)
        return Vector([c * a for a in self.coords], self.backend)

    def is_zero(self, eps=scalars.EPS):
        return all(scalars.is_zero(c, eps) for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, Vector) and self.backend == other.backend
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.backend, tuple(map(str, self.coords))))

    def __repr__(self):
        return "Vector(%s)" % (", ".join(scalars.format_scalar(c) for c in self.coords))


class MultTable:
    """Dense n*n*n coefficient tensor for one bilinear product."""

    __slots__ = ("n", "g", "backend")

    def __init__(self, n, g, backend):
        if len(g) != n or any(len(r) != n for r in g) or any(
                len(c) != n for r in g for c in r):
            raise ValueError("table must be n*n*n")
        self.n = n
        self.g = [[[scalars.coerce(v, backend) for v in col] for col in row] for row in g]
        self.backend = backend

    @classmethod
    def zero(cls, n, backend):
        z = scalars.zero(backend)
        return cls(n, [[[z] * n for _ in range(n)] for _ in range(n)], backend)

    @classmethod
    def from_entries(cls, n, entries, backend):
        """entries: {(i, j): {k: value}} with 1-based indices, zero default."""
        g = [[[scalars.zero(backend)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), image in entries.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexError("product index out of range: (%d, %d)" % (i, j))
            for k, v in image.items():
                if not 1 <= k <= n:
                    raise IndexError("output index out of range: %d" % k)
                g[i - 1][j - 1][k - 1] = scalars.coerce(v, backend)
        return cls(n, g, backend)

    def coeff(self, i, j, k):
        return self.g[i - 1][j - 1][k - 1]

    def basis_product(self, i, j):
        """e_i * e_j as a Vector (1-based)."""
        return Vector(self.g[i - 1][j - 1], self.backend)

    def transpose(self):
        """Swap the two inputs: out[i][j][k] = in[j][i][k]."""
        n = self.n
        return MultTable(n, [[self.g[j][i] for j in range(n)] for i in range(n)],
                         self.backend)

    def entries(self, eps=scalars.EPS):
        """Sorted sparse listing [(i, j, k, value)] of nonzero entries."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    v = self.g[i][j][k]
                    if not scalars.is_zero(v, eps):
                        out.append((i + 1, j + 1, k + 1, v))
        return out

    def is_zero(self, eps=scalars.EPS):
        return not self.entries(eps)

    def __eq__(self, other):
        return (isinstance(other, MultTable) and self.n == other.n
                and self.backend == other.backend and self.g == other.g)

    def __repr__(self):
        return "MultTable(n=%d, %d nonzero)" % (self.n, len(self.entries()))


class LinearMap:

    __slots__ = ("n", "m", "backend")

    def __init__(self, n, m, backend):
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError("matrix must be n*n")
        self.n = n
        self.m = [[scalars.coerce(v, backend) for v in row] for row in m]
        self.backend = backend

    @classmethod
    def identity(cls, n, backend):
        z, o = scalars.zero(backend), scalars.one(backend)
        return cls(n, [[o if i == j else z for j in range(n)] for i in range(n)], backend)

    @classmethod
    def zero(cls, n, backend):
        z = scalars.zero(backend)
        return cls(n, [[z] * n for _ in range(n)], backend)

    @classmethod
    def from_columns(cls, columns, backend):
        """Build from the list of image vectors of e_1..e_n."""
        n = len(columns)
        return cls(n, [[columns[j].coords[i] for j in range(n)] for i in range(n)],
                   backend)

    @classmethod
    def from_entries(cls, n, entries, backend):
        """entries: {j: {i: value}} = image of e_j has coefficient value on e_i."""
        m = [[scalars.zero(backend)] * n for _ in range(n)]
        for j, image in entries.items():
            if not 1 <= j <= n:
                raise IndexError("map input index out of range: %d" % j)
            for i, v in image.items():
                if not 1 <= i <= n:
                    raise IndexError("map output index out of range: %d" % i)
                m[i - 1][j - 1] = scalars.coerce(v, backend)
        return cls(n, m, backend)

    def coeff(self, i, j):
        return self.m[i - 1][j - 1]

    def column(self, j):
        """Image of e_j as a Vector (1-based j)."""
        return Vector([self.m[i][j - 1] for i in range(self.n)], self.backend)

    def is_identity(self, eps=scalars.EPS):
        o, z = scalars.one(self.backend), scalars.zero(self.backend)
        for i in range(self.n):
            for j in range(self.n):
                want = o if i == j else z
                if not scalars.approx_eq(self.m[i][j], want, eps):
                    return False
        return True

    def is_zero(self, eps=scalars.EPS):
        return all(scalars.is_zero(v, eps) for row in self.m for v in row)

    def __add__(self, other):
        return LinearMap(self.n, [[a + b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.m, other.m)], self.backend)

    def __sub__(self, other):
        return LinearMap(self.n, [[a - b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.m, other.m)], self.backend)

    def scale(self, c):
        c = scalars.coerce(c, self.backend)
        return LinearMap(self.n, [[c * v for v in row] for row in self.m], self.backend)

    def entries(self, eps=scalars.EPS):
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if not scalars.is_zero(self.m[i][j], eps):
                    out.append((i + 1, j + 1, self.m[i][j]))
        return out

    def __eq__(self, other):
        return (isinstance(other, LinearMap) and self.n == other.n
                and self.backend == other.backend and self.m == other.m)

    def __repr__(self):
        return "LinearMap(%s)" % self.m


class HomDialgebra:
    """(A, left product, right product, twist map), all over one backend."""

    __slots__ = ("name", "n", "left", "right", "alpha", "backend")

    def __init__(self, name, left, right, alpha):
        if not (left.n == right.n == alpha.n):
            raise ValueError("dimension mismatch between tables and twist map")
        if not (left.backend == right.backend == alpha.backend):
            raise ValueError("backend mismatch between tables and twist map")
        self.name = name
        self.n = left.n
        self.left = left
        self.right = right
        self.alpha = alpha
        self.backend = left.backend

    def table(self, side):
        if side == LEFT:
            return self.left
        if side == RIGHT:
            return self.right
        raise ValueError("side must be LEFT or RIGHT")

    def basis(self):
        return [Vector.basis(i, self.n, self.backend) for i in range(1, self.n + 1)]

    def __repr__(self):
        return "HomDialgebra(%r, n=%d, %s)" % (self.name, self.n, self.backend)


def product(A, side, x, y):
    """Bilinear contraction of the chosen table: sum x_i y_j g[i][j][.]."""
    tab = A.table(side) if isinstance(A, HomDialgebra) else A
    return table_product(tab, x, y)


def table_product(tab, x, y):
    if tab.n != x.n or tab.n != y.n:
        raise ValueError("dimension mismatch")
    n = tab.n
    out = [scalars.zero(tab.backend)] * n
    for i in range(n):
        xi = x.coords[i]
        if not xi:
            continue
        row = tab.g[i]
        for j in range(n):
            yj = y.coords[j]
            if not yj:
                continue
            cell = row[j]
            c = xi * yj
            for k in range(n):
                if cell[k]:
                    out[k] = out[k] + c * cell[k]
    return Vector(out, tab.backend)


def apply_map(M, x):
    if M.n != x.n:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(M.n):
        acc = scalars.zero(M.backend)
        row = M.m[i]
        for j in range(M.n):
            if row[j]:
                acc = acc + row[j] * x.coords[j]
        out.append(acc)
    return Vector(out, M.backend)


def compose(M1, M2):
    """(M1 o M2)(x) = M1(M2(x))."""
    if M1.n != M2.n:
        raise ValueError("dimension mismatch")
    n = M1.n
    m = [[scalars.zero(M1.backend)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = scalars.zero(M1.backend)
            for p in range(n):
                if M1.m[i][p] and M2.m[p][j]:
                    acc = acc + M1.m[i][p] * M2.m[p][j]
            m[i][j] = acc
    return LinearMap(n, m, M1.backend)


def map_power(M, k):
    """M composed with itself k times; k=0 is the identity."""
    if k < 0:
        raise ValueError("negative power")
    out = LinearMap.identity(M.n, M.backend)
    for _ in range(k):
        out = compose(out, M)
    return out


def compose_table(M, tab):
    """The product (x, y) -> M(x * y), as a new table."""
    n = tab.n
    g = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            g[i][j] = apply_map(M, Vector(tab.g[i][j], tab.backend)).coords
    return MultTable(n, g, tab.backend)


def to_complex(A):
    """Same structure constants on the complex-double backend."""
    from .scalars import COMPLEX, coerce
    n = A.n

    def conv_table(tab):
        return MultTable(n, [[[coerce(v, COMPLEX) for v in col] for col in row]
                             for row in tab.g], COMPLEX)

    alpha = LinearMap(n, [[coerce(v, COMPLEX) for v in row] for row in A.alpha.m],
                      COMPLEX)
    return HomDialgebra(A.name, conv_table(A.left), conv_table(A.right), alpha)
