"""Exact linear algebra over the rationals.

Matrices, echelon-form subspaces, kernels and solvers, polynomial
arithmetic, and the semisimple plus nilpotent splitting of a square
matrix.  Scalars are `fractions.Fraction` throughout; nothing here
rounds, samples, or depends on floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "Q",
    "q",
    "vec",
    "zero_vec",
    "unit_vec",
    "vadd",
    "vsub",
    "vscale",
    "vdot",
    "is_zero_vec",
    "Mat",
    "Subspace",
    "kernel",
    "image",
    "rank",
    "solve",
    "SolveResult",
    "inverse",
    "Poly",
    "poly_gcd",
    "poly_xgcd",
    "poly_lcm",
    "squarefree_part",
    "is_squarefree",
    "matrix_poly",
    "char_poly",
    "min_poly",
    "sn_decomposition",
    "is_semisimple",
    "is_nilpotent",
    "polynomial_in",
    "sqrt_rational",
]

Q = Fraction
_ZERO = Fraction(0)
_ONE = Fraction(1)


def q(value) -> Fraction:
    """Coerce an int, Fraction, or exact string ("3", "-1/2") to Fraction.

    Floats are rejected on purpose: accepting one would smuggle rounding
    error into computations whose entire point is exactness.
    """
    if isinstance(value, float):
        raise TypeError("refusing float %r: use an exact rational (p/q)" % value)
    return Fraction(value)


# ---------------------------------------------------------------------------
# vectors: plain tuples of Fraction

def vec(values) -> tuple:
    return tuple(q(v) for v in values)


def zero_vec(n: int) -> tuple:
    return (_ZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    if not c:
        return zero_vec(len(a))
    return tuple(c * x for x in a)


def vdot(a, b):
    total = _ZERO
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def is_zero_vec(a) -> bool:
    return not any(a)


# ---------------------------------------------------------------------------
# matrices

class Mat:
    """Dense exact-rational matrix, immutable after construction.

    Rows and columns may be zero; a 0 x n or n x 0 matrix is legal and
    behaves as expected under products and transposition.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: Optional[int] = None):
        rows = []
        width = cols
        for row in entries:
            t = tuple(q(x) for x in row)
            if width is None:
                width = len(t)
            elif len(t) != width:
                raise ValueError("ragged rows in matrix")
            rows.append(t)
        if width is None:
            width = 0
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # -- constructors --------------------------------------------------
    @staticmethod
    def zeros(rows: int, cols: int) -> "Mat":
        return Mat([zero_vec(cols) for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([unit_vec(n, i) for i in range(n)], cols=n)

    @staticmethod
    def from_rows(rows, cols: Optional[int] = None) -> "Mat":
        return Mat(rows, cols=cols)

    @staticmethod
    def from_cols(cols, rows: Optional[int] = None) -> "Mat":
        cols = [tuple(q(x) for x in c) for c in cols]
        if cols:
            height = len(cols[0])
        else:
            height = rows or 0
        return Mat([[c[i] for c in cols] for i in range(height)], cols=len(cols))

    # -- access --------------------------------------------------------
    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(
            [vadd(a, b) for a, b in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(
            [vsub(a, b) for a, b in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __neg__(self) -> "Mat":
        return Mat([vscale(-_ONE, r) for r in self.entries], cols=self.cols)

    def scale(self, c) -> "Mat":
        c = q(c)
        return Mat([vscale(c, r) for r in self.entries], cols=self.cols)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        oent = other.entries
        for i, arow in enumerate(self.entries):
            rrow = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = oent[k]
                for j, b in enumerate(brow):
                    if b:
                        rrow[j] += a * b
        return Mat(out, cols=other.cols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.entries:
            s = _ZERO
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Mat":
        return Mat(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def power(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        result = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == Mat.identity(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Mat[{self.rows}x{self.cols}: {body}]"


# ---------------------------------------------------------------------------
# reduced row echelon form

def _rref(rows):
    """Reduce a list of row vectors in place.

    Returns (nonzero reduced rows, pivot column indices).  The output is
    the unique reduced echelon form of the row span, which is what makes
    Subspace comparison a plain tuple comparison.
    """
    work = [list(r) for r in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        pivot_row = None
        for i in range(r, m):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        prow = work[r]
        pv = prow[col]
        if pv != 1:
            inv = _ONE / pv
            for j in range(col, n):
                if prow[j]:
                    prow[j] *= inv
        for i in range(m):
            if i == r:
                continue
            f = work[i][col]
            if not f:
                continue
            irow = work[i]
            for j in range(col, n):
                p = prow[j]
                if p:
                    irow[j] -= f * p
        pivots.append(col)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in work[:r]], pivots


class Subspace:
    """A linear subspace stored as its unique reduced-echelon basis.

    Two Subspace objects are equal exactly when they are the same
    subspace of the same ambient space; no tolerance is involved.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis, pivots):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            t = tuple(q(x) for x in v)
            if len(t) != ambient_dim:
                raise ValueError("vector does not live in the ambient space")
            rows.append(t)
        basis, pivots = _rref(rows)
        return Subspace(ambient_dim, tuple(basis), tuple(pivots))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, (), ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.span(ambient_dim, [unit_vec(ambient_dim, i) for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def _residual(self, v):
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    x = row[j]
                    if x:
                        w[j] -= c * x
        return w

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector does not live in the ambient space")
        return not any(self._residual(v))

    def coordinates_of(self, v) -> Optional[tuple]:
        """Coefficients of v in this basis, or None when v is outside.

        For a reduced-echelon basis the coefficient of basis row j is just
        the entry of v at pivot j; membership is then verified exactly.
        """
        if len(v) != self.ambient_dim:
            raise ValueError("vector does not live in the ambient space")
        coords = tuple(q(v[p]) for p in self.pivots)
        check = list(zero_vec(self.ambient_dim))
        for c, row in zip(coords, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        check[j] += c * x
        if tuple(check) != tuple(q(x) for x in v):
            return None
        return coords

    def contains_space(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(v) for v in other.basis)

    def sum_with(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of [U^T | -W^T]."""
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        du, dw = self.dim, other.dim
        rows = []
        for i in range(self.ambient_dim):
            row = [self.basis[a][i] for a in range(du)]
            row += [-other.basis[b][i] for b in range(dw)]
            rows.append(row)
        combos = kernel(Mat(rows, cols=du + dw))
        vectors = []
        for c in combos.basis:
            v = list(zero_vec(self.ambient_dim))
            for a in range(du):
                if c[a]:
                    for j, x in enumerate(self.basis[a]):
                        if x:
                            v[j] += c[a] * x
            vectors.append(tuple(v))
        return Subspace.span(self.ambient_dim, vectors)

    def standard_complement(self) -> list:
        """Unit vectors at the non-pivot coordinates.

        Together with the basis they span the ambient space, which gives a
        deterministic complement without any choice of inner product.
        """
        taken = set(self.pivots)
        return [
            unit_vec(self.ambient_dim, i)
            for i in range(self.ambient_dim)
            if i not in taken
        ]

    def basis_matrix(self) -> Mat:
        """Basis vectors as the rows of a matrix."""
        return Mat(self.basis or [], cols=self.ambient_dim)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def kernel(m: Mat) -> Subspace:
    """Null space {v : m v = 0}, as a canonical Subspace of Q^cols."""
    reduced, pivots = _rref(m.entries)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for f in free:
        v = list(zero_vec(m.cols))
        v[f] = _ONE
        for row, p in zip(reduced, pivots):
            if row[f]:
                v[p] = -row[f]
        vectors.append(v)
    return Subspace.span(m.cols, vectors)


def image(m: Mat) -> Subspace:
    """Column space, as a Subspace of Q^rows."""
    return Subspace.span(m.rows, [m.col(j) for j in range(m.cols)])


def rank(m: Mat) -> int:
    _, pivots = _rref(m.entries)
    return len(pivots)


class SolveResult:
    __slots__ = ("particular", "kernel")

    def __init__(self, particular, kern):
        object.__setattr__(self, "particular", particular)
        object.__setattr__(self, "kernel", kern)

    def __setattr__(self, name, value):
        raise AttributeError("SolveResult is immutable")

    def __iter__(self):
        return iter((self.particular, self.kernel))


def solve(m: Mat, b: Sequence) -> Optional[SolveResult]:
    """Solve m x = b exactly.

    Returns None when the system is inconsistent, otherwise one particular
    solution together with the kernel describing the full solution set.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    augmented = [list(row) + [q(x)] for row, x in zip(m.entries, b)]
    if not augmented:
        return SolveResult(zero_vec(m.cols), Subspace.full(m.cols))
    reduced, pivots = _rref(augmented)
    if m.cols in pivots:
        return None
    x = list(zero_vec(m.cols))
    for row, p in zip(reduced, pivots):
        x[p] = row[m.cols]
    return SolveResult(tuple(x), kernel(m))


def inverse(m: Mat) -> Mat:
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    augmented = [list(row) + list(unit_vec(n, i)) for i, row in enumerate(m.entries)]
    reduced, pivots = _rref(augmented)
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return Mat([row[n:] for row in reduced], cols=n)


# ---------------------------------------------------------------------------
# polynomials over Q

class Poly:
    """Polynomial with exact rational coefficients, low degree first.

    The zero polynomial has empty coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [q(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((_ONE,))

    @staticmethod
    def x() -> "Poly":
        return Poly((_ZERO, _ONE))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading
        if lead == 1:
            return self
        return Poly(tuple(c / lead for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [_ZERO] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return Poly(a)

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [_ZERO] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] -= c
        return Poly(a)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = q(c)
        return Poly(tuple(c * x for x in self.coeffs))

    def divmod_by(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        quot = [_ZERO] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            quot[i - d] = f
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= f * b
        return Poly(quot), Poly(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod_by(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod_by(other)[0]

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def __call__(self, x):
        x = q(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}t" if i == 1 else f"{mag}t^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: Poly, b: Poly):
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = Poly.one(), Poly.zero()
    v0, v1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        quot, rem = r0.divmod_by(r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quot * u1
        v0, v1 = v1, v0 - quot * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading
    inv = _ONE / lead
    return r0.monic(), u0.scale(inv), v0.scale(inv)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero()
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), monic.  Has the same roots, all simple."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return (p // g).monic()


def is_squarefree(p: Poly) -> bool:
    if p.is_zero():
        return False
    return poly_gcd(p, p.derivative()).degree == 0


# ---------------------------------------------------------------------------
# matrix polynomials, characteristic and minimal polynomials

def matrix_poly(p: Poly, m: Mat) -> Mat:
    """Evaluate p at a square matrix by Horner's rule."""
    if not m.is_square():
        raise ValueError("polynomial of non-square matrix")
    n = m.rows
    acc = Mat.zeros(n, n)
    ident = Mat.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ m
        if c:
            acc = acc + ident.scale(c)
    return acc


def char_poly(m: Mat) -> Poly:
    """Characteristic polynomial det(tI - m) by the Faddeev-LeVerrier recursion."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of non-square matrix")
    n = m.rows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    mk = Mat.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk
        c = -mk.trace() / k
        coeffs[n - k] = c
        if k < n:
            mk = mk + Mat.identity(n).scale(c)
    return Poly(coeffs)


def _poly_apply(p: Poly, m: Mat, v: Sequence) -> tuple:
    """p(m) v without forming the matrix p(m)."""
    acc = zero_vec(len(v))
    for c in reversed(p.coeffs):
        acc = m.apply(acc)
        if c:
            acc = vadd(acc, vscale(c, v))
    return acc


def min_poly(m: Mat) -> Poly:
    """Minimal polynomial via Krylov sequences of the standard basis vectors.

    For each seed e_i the first linear dependence among e_i, m e_i, m^2 e_i,
    ... yields the monic annihilator of e_i; the minimal polynomial is the
    lcm of these, and the scan stops early once its degree reaches n.
    """
    if not m.is_square():
        raise ValueError("minimal polynomial of non-square matrix")
    n = m.rows
    if n == 0:
        return Poly.one()
    result = Poly.one()
    for i in range(n):
        if result.degree == n:
            break
        seed = unit_vec(n, i)
        if _poly_apply(result, m, seed) == zero_vec(n):
            continue
        # rows: (residual list, pivot index, combination coefficients)
        stored = []
        v = seed
        combo = [_ONE]
        while True:
            resid = list(v)
            coeffs = list(combo) + [_ZERO] * (len(stored) + 1 - len(combo))
            for res_row, piv, row_combo in stored:
                c = resid[piv]
                if c:
                    for j in range(n):
                        x = res_row[j]
                        if x:
                            resid[j] -= c * x
                    for j, x in enumerate(row_combo):
                        if x:
                            coeffs[j] -= c * x
            piv = None
            for j in range(n):
                if resid[j]:
                    piv = j
                    break
            if piv is None:
                # coeffs expresses 0 = sum coeffs_k m^k seed; leading index
                # is the current power, so normalize to a monic annihilator
                k = len(combo) - 1
                lead = coeffs[k]
                ann = Poly([c / lead for c in coeffs[: k + 1]])
                result = poly_lcm(result, ann)
                break
            inv = _ONE / resid[piv]
            resid = [x * inv for x in resid]
            coeffs = [x * inv for x in coeffs]
            stored.append((resid, piv, coeffs))
            v = m.apply(v)
            combo = [_ZERO] * (len(stored) + 1)
            combo[len(stored)] = _ONE
    return result


def _compose_mod(p: Poly, x: Poly, mod: Poly) -> Poly:
    """p(x) reduced mod `mod`, by Horner's rule in the quotient ring."""
    acc = Poly.zero()
    for c in reversed(p.coeffs):
        acc = (acc * x) % mod
        if c:
            acc = acc + Poly((c,))
    return acc


def sn_decomposition(m: Mat):
    """Split m = S + N with S semisimple, N nilpotent, [S, N] = 0.

    Both parts are polynomials in m, which is what forces them to commute
    with m and with each other.  The construction is the Newton iteration
    x <- x - f(x) u(x) on the squarefree part f of the characteristic
    polynomial chi, with u from the Bezout identity u f' + v f = 1; each
    step squares the order of vanishing of f(x), so ceil(log2 n) + 1
    steps reach f(x) = 0.  The iteration runs on polynomials in the
    quotient ring Q[t]/(chi) and only the final result is evaluated at m.
    """
    if not m.is_square():
        raise ValueError("sn_decomposition of non-square matrix")
    n = m.rows
    if n == 0:
        return m, m
    chi = char_poly(m)
    f = squarefree_part(chi)
    g, u, _ = poly_xgcd(f.derivative(), f)
    if g != Poly.one():
        raise ArithmeticError("squarefree part not coprime with its derivative")
    x = Poly.x() % chi
    steps = n.bit_length() + 1
    for _ in range(steps):
        fx = _compose_mod(f, x, chi)
        if fx.is_zero():
            break
        x = (x - fx * _compose_mod(u, x, chi)) % chi
    else:
        if not _compose_mod(f, x, chi).is_zero():
            raise ArithmeticError("Newton iteration failed to converge")
    s = matrix_poly(x, m)
    return s, m - s


def is_semisimple(m: Mat) -> bool:
    """True when the minimal polynomial is squarefree.

    Squarefreeness is a gcd condition, so the answer over Q agrees with
    the answer over any extension field including the reals.
    """
    return is_squarefree(min_poly(m))


def is_nilpotent(m: Mat) -> bool:
    mp = min_poly(m)
    return all(not c for c in mp.coeffs[:-1])


def polynomial_in(m: Mat, target: Mat) -> Optional[tuple]:
    """Coefficients c with target = sum c_k m^k (k < n), or None.

    Used to certify that computed parts lie in the Krylov span of m.
    """
    if not m.is_square() or not target.is_square() or m.rows != target.rows:
        raise ValueError("shape mismatch")
    n = m.rows
    if n == 0:
        return ()
    powers = []
    acc = Mat.identity(n)
    for _ in range(n):
        powers.append(acc)
        acc = acc @ m
    cols = [
        tuple(p.entries[i][j] for i in range(n) for j in range(n)) for p in powers
    ]
    flat_target = tuple(target.entries[i][j] for i in range(n) for j in range(n))
    res = solve(Mat.from_cols(cols), flat_target)
    return None if res is None else res.particular


def sqrt_rational(x) -> Optional[Fraction]:
    """Exact nonnegative square root of a rational, or None if irrational."""
    x = q(x)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
