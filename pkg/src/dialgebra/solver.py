"""Exact linear algebra on top of the scalar backends.

Everything downstream (derivation spaces, centroids, centralizers) reduces to
one primitive: the canonical nullspace of a rectangular system.  Canonical
means the reduced-row-echelon free-variable parametrization: basis vector t
has a 1 in its own free coordinate, 0 in every other free coordinate, and the
pivot coordinates are filled in from the RREF rows.  That makes computed bases
deterministic, so golden tests and table comparisons are stable.

Rational backend: exact elimination, pivot = first nonzero entry (leftmost
column, topmost row).  Complex backend: partial pivoting by magnitude with an
eps threshold deciding rank; the standalone rank() uses SVD instead and the
two must agree on every system we care about (tested).
"""

import numpy as np

from . import scalars
from .core import LinearMap, Vector
from .scalars import COMPLEX, EPS, RATIONAL


class Matrix:

    __slots__ = ("rows", "cols", "a", "backend")

    def __init__(self, rows, cols, a, backend):
        if len(a) != rows or any(len(r) != cols for r in a):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.cols = cols
        self.a = [[scalars.coerce(v, backend) for v in row] for row in a]
        self.backend = backend

    @classmethod
    def zero(cls, rows, cols, backend):
        z = scalars.zero(backend)
        return cls(rows, cols, [[z] * cols for _ in range(rows)], backend)

    @classmethod
    def identity(cls, n, backend):
        z, o = scalars.zero(backend), scalars.one(backend)
        return cls(n, n, [[o if i == j else z for j in range(n)] for i in range(n)],
                   backend)

    @classmethod
    def from_rows(cls, rows_list, backend, cols=None):
        rows_list = [list(r) for r in rows_list]
        if cols is None:
            if not rows_list:
                raise ValueError("cannot infer width of an empty matrix")
            cols = len(rows_list[0])
        return cls(len(rows_list), cols, rows_list, backend)

    def mul_vec(self, v):
        out = []
        for row in self.a:
            acc = scalars.zero(self.backend)
            for x, c in zip(row, v):
                if x and c:
                    acc = acc + x * c
            out.append(acc)
        return out

    def __repr__(self):
        return "Matrix(%dx%d, %s)" % (self.rows, self.cols, self.backend)


class SolutionSpace:
    """Canonical basis of a nullspace (or of any subspace after rref_span)."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, basis, pivots):
        self.ambient = ambient
        self.basis = basis      # list of length-`ambient` coordinate lists
        self.pivots = pivots    # pivot column indices of the solved system

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self, backend):
        return [Vector(b, backend) for b in self.basis]

    def maps(self, n, backend):
        """Reshape basis vectors to n*n maps: coordinate (i-1)*n+(j-1) is the
        coefficient of e_i in the image of e_j."""
        if self.ambient != n * n:
            raise ValueError("ambient dimension is not n*n")
        out = []
        for b in self.basis:
            out.append(LinearMap(n, [[b[i * n + j] for j in range(n)] for i in range(n)],
                                 backend))
        return out

    def __repr__(self):
        return "SolutionSpace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def _rref_rational(a, rows, cols):
    """In-place exact RREF; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pv = a[r][c]
        if pv != 1:
            inv = 1 / pv
            a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ar = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _rref_complex(a, rows, cols, eps):
    """Partial pivoting by magnitude; entries below eps count as zero."""
    pivots = []
    r = 0
    for c in range(cols):
        best, best_abs = None, eps
        for i in range(r, rows):
            m = abs(a[i][c])
            if m > best_abs:
                best, best_abs = i, m
        if best is None:
            continue
        a[r], a[best] = a[best], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and abs(a[i][c]) > 0:
                f = a[i][c]
                ar = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rref(M, eps=EPS):
    """Returns (rref rows, pivot columns) without mutating M."""
    a = [row[:] for row in M.a]
    if M.backend == RATIONAL:
        pivots = _rref_rational(a, M.rows, M.cols)
    else:
        pivots = _rref_complex(a, M.rows, M.cols, eps)
    return a, pivots


def nullspace(M, eps=EPS):
    """Canonical basis of {v : Mv = 0}; rank + dim = cols by construction."""
    a, pivots = rref(M, eps)
    return _nullspace_from_rref(a, pivots, M.cols, M.backend)


def _nullspace_from_rref(a, pivots, cols, backend):
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    z, o = scalars.zero(backend), scalars.one(backend)
    basis = []
    for f in free:
        v = [z] * cols
        v[f] = o
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][f]
        basis.append(v)
    return SolutionSpace(cols, basis, pivots)


def rank(M, eps=EPS):
    """Exact rank (rational) or eps-thresholded singular-value rank (complex)."""
    if M.backend == RATIONAL:
        _, pivots = rref(M)
        return len(pivots)
    if M.rows == 0 or M.cols == 0:
        return 0
    arr = np.array(M.a, dtype=complex)
    if not arr.any():
        return 0
    s = np.linalg.svd(arr, compute_uv=False)
    return int((s > eps).sum())


def solve_affine(M, b, eps=EPS):
    """All solutions of Mv = b: (particular, homogeneous SolutionSpace), or
    None when inconsistent.  Particular solution has all free coords zero."""
    aug = [row[:] + [bv] for row, bv in zip(M.a, b)]
    if M.backend == RATIONAL:
        pivots = _rref_rational(aug, M.rows, M.cols + 1)
    else:
        pivots = _rref_complex(aug, M.rows, M.cols + 1, eps)
    if M.cols in pivots:  # a row reduced to 0 = 1
        return None
    z = scalars.zero(M.backend)
    particular = [z] * M.cols
    for r, pc in enumerate(pivots):
        particular[pc] = aug[r][M.cols]
    homogeneous = _nullspace_from_rref(aug, pivots, M.cols, M.backend)
    return particular, homogeneous


def invert(M_rows, backend, eps=EPS):
    """Exact inverse of a square matrix given as row lists; None if singular."""
    n = len(M_rows)
    z, o = scalars.zero(backend), scalars.one(backend)
    aug = [[scalars.coerce(v, backend) for v in row]
           + [o if i == j else z for j in range(n)]
           for i, row in enumerate(M_rows)]
    if backend == RATIONAL:
        pivots = _rref_rational(aug, n, 2 * n)
    else:
        pivots = _rref_complex(aug, n, 2 * n, eps)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in aug]


def rref_span(vectors, ambient, backend, eps=EPS):
    """Canonical basis (RREF rows) of the span of the given coordinate lists."""
    if not vectors:
        return SolutionSpace(ambient, [], [])
    M = Matrix.from_rows(vectors, backend, cols=ambient)
    a, pivots = rref(M, eps)
    basis = [a[r] for r in range(len(pivots))]
    return SolutionSpace(ambient, basis, pivots)


def in_span(space, coords, backend, eps=EPS):
    """Is the coordinate list inside the span of space.basis?"""
    if all(scalars.is_zero(c, eps) for c in coords):
        return True
    if not space.basis:
        return False
    stacked = rref_span(space.basis + [coords], space.ambient, backend, eps)
    return stacked.dim == space.dim
