"""Representations of structure-constant Lie algebras over Q.

Everything returns certificates: a reducibility verdict comes with a
verified invariant subspace, splittings come with verified projections,
and when the deterministic schedule cannot certify either answer it
raises SimplicityUndecided rather than guessing.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import List, Optional, Sequence, Tuple

import sympy

from .errors import DecompositionError, InternalFault, RepError, SimplicityUndecided
from .exactla import (
    Mat,
    Poly,
    Subspace,
    kernel,
    matrix_poly,
    min_poly,
    rank,
    unit_vec,
    zero_vec,
)
from .liecore import LieAlgebra

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Rep:
    """A Lie algebra representation given by one matrix per basis element.

    The defining condition rho([e_i, e_j]) = rho(e_i) rho(e_j) -
    rho(e_j) rho(e_i) is checked on all basis pairs at construction.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        mats: Sequence[Mat],
        check: bool = True,
        dim: Optional[int] = None,
    ):
        mats = tuple(mats)
        if len(mats) != algebra.dim:
            raise RepError("need exactly one matrix per basis element")
        if mats:
            d = mats[0].rows
            for m in mats:
                if m.rows != d or m.cols != d:
                    raise RepError("representation matrices must be square and equal-sized")
            if dim is not None and dim != d:
                raise RepError("declared dimension contradicts the matrices")
        else:
            # the zero algebra still has modules of every dimension
            if dim is None:
                raise RepError("dimension required when there are no matrices")
            d = dim
        self.algebra = algebra
        self.mats = mats
        self.dim = d
        if check:
            self._validate()

    def _validate(self):
        g = self.algebra.dim
        for i in range(g):
            for j in range(i + 1, g):
                lhs = self.mats[i] @ self.mats[j] - self.mats[j] @ self.mats[i]
                cij = self.algebra.structure_constant(i, j)
                rhs = Mat.zeros(self.dim, self.dim)
                for k, c in enumerate(cij):
                    if c:
                        rhs = rhs + self.mats[k].scale(c)
                if lhs != rhs:
                    raise RepError(
                        f"matrices fail the bracket condition on basis pair ({i}, {j})"
                    )

    def rho(self, x) -> Mat:
        """Matrix of the algebra element with coefficient vector x."""
        if len(x) != self.algebra.dim:
            raise ValueError("coefficient vector length mismatch")
        acc = Mat.zeros(self.dim, self.dim)
        for i, c in enumerate(x):
            if c:
                acc = acc + self.mats[i].scale(c)
        return acc

    def act(self, x, v) -> tuple:
        return self.rho(x).apply(v)

    def __repr__(self):
        return f"Rep(dim {self.dim} of algebra dim {self.algebra.dim})"


# ---------------------------------------------------------------------------
# basic constructions

def rep_on_subspace(rep: Rep, space: Subspace) -> Rep:
    """Restriction of `rep` to an invariant subspace, in its echelon basis."""
    k = space.dim
    if k == 0:
        raise ValueError("restriction to the zero subspace")
    mats = []
    for m in rep.mats:
        cols = []
        for b in space.basis:
            coords = space.coordinates_of(m.apply(b))
            if coords is None:
                raise ValueError("subspace is not invariant")
            cols.append(coords)
        mats.append(Mat.from_cols(cols, rows=k))
    return Rep(rep.algebra, mats, check=False, dim=k)


def wedge_square(rep: Rep) -> Rep:
    """Induced representation on the second exterior power.

    Basis e_i ^ e_j for i < j in lexicographic order.
    """
    d = rep.dim
    index = {}
    pairs = []
    for i in range(d):
        for j in range(i + 1, d):
            index[(i, j)] = len(pairs)
            pairs.append((i, j))
    n2 = len(pairs)

    def wedge_coord(out, a, b, coeff):
        if a == b or not coeff:
            return
        if a < b:
            out[index[(a, b)]] += coeff
        else:
            out[index[(b, a)]] -= coeff

    mats = []
    for m in rep.mats:
        cols = []
        for (i, j) in pairs:
            col = [_ZERO] * n2
            for k in range(d):
                wedge_coord(col, k, j, m[k, i])
                wedge_coord(col, i, k, m[k, j])
            cols.append(col)
        mats.append(Mat.from_cols(cols, rows=n2))
    return Rep(rep.algebra, mats, check=False, dim=n2)


def is_faithful(rep: Rep) -> bool:
    cols = [
        tuple(m.entries[r][c] for r in range(rep.dim) for c in range(rep.dim))
        for m in rep.mats
    ]
    return kernel(Mat.from_cols(cols)).is_zero()


def spin(rep: Rep, v) -> Subspace:
    """Smallest invariant subspace containing v (under the given matrices)."""
    return _spin_mats(rep.mats, v, rep.dim)


def _spin_mats(mats: Sequence[Mat], v, d: int) -> Subspace:
    rows: List[tuple] = []
    pivots: List[int] = []

    def reduce_add(w):
        w = list(w)
        for row, p in zip(rows, pivots):
            c = w[p]
            if c:
                for j in range(p, d):
                    x = row[j]
                    if x:
                        w[j] -= c * x
        piv = None
        for j in range(d):
            if w[j]:
                piv = j
                break
        if piv is None:
            return None
        inv = _ONE / w[piv]
        w = tuple(x * inv for x in w)
        rows.append(w)
        pivots.append(piv)
        return w

    queue = []
    first = reduce_add(v)
    if first is not None:
        queue.append(first)
    while queue:
        u = queue.pop()
        for m in mats:
            w = reduce_add(m.apply(u))
            if w is not None:
                queue.append(w)
    return Subspace.span(d, rows)


def hom_space(rep1: Rep, rep2: Rep) -> List[Mat]:
    """Basis of the intertwiners T with T rho1(x) = rho2(x) T for all x."""
    if rep1.algebra is not rep2.algebra and rep1.algebra.dim != rep2.algebra.dim:
        raise ValueError("intertwiners need representations of the same algebra")
    d1, d2 = rep1.dim, rep2.dim
    width = d1 * d2
    seen = set()
    rows = []
    for m1, m2 in zip(rep1.mats, rep2.mats):
        # equation block: T m1 - m2 T = 0, unknown T is d2 x d1, row-major
        for r in range(d2):
            for c in range(d1):
                row = [_ZERO] * width
                for k in range(d1):
                    a = m1[k, c]
                    if a:
                        row[r * d1 + k] += a
                for k in range(d2):
                    b = m2[r, k]
                    if b:
                        row[k * d1 + c] -= b
                if any(row):
                    t = tuple(row)
                    if t not in seen:
                        seen.add(t)
                        rows.append(t)
    combos = kernel(Mat(rows, cols=width) if rows else Mat([], cols=width))
    out = []
    for v in combos.basis:
        out.append(Mat([v[r * d1:(r + 1) * d1] for r in range(d2)], cols=d1))
    return out


def commutant(rep: Rep) -> List[Mat]:
    """Basis of the algebra of matrices commuting with the whole image.

    Closure under products is asserted; it holds by definition, so a
    violation is an internal fault, not bad input.
    """
    basis = hom_space(rep, rep)
    flat = Subspace.span(
        rep.dim ** 2,
        [tuple(b.entries[r][c] for r in range(rep.dim) for c in range(rep.dim))
         for b in basis],
    )
    for x in basis:
        for y in basis:
            p = x @ y
            v = tuple(p.entries[r][c] for r in range(rep.dim) for c in range(rep.dim))
            if not flat.contains(v):
                raise InternalFault(
                    "commutant basis not closed under products",
                    {"x": x.entries, "y": y.entries},
                )
    return basis


def isotypical_component(rep: Rep, simple: Rep) -> Subspace:
    """Sum of the images of all intertwiners from `simple` into `rep`."""
    vectors = []
    for t in hom_space(simple, rep):
        for j in range(t.cols):
            col = t.col(j)
            if any(col):
                vectors.append(col)
    return Subspace.span(rep.dim, vectors)


def invariant_symmetric_forms(rep: Rep) -> List[Mat]:
    """Basis of symmetric B with rho(x)^T B + B rho(x) = 0 for all x."""
    d = rep.dim
    width = d * d
    rows = []
    # symmetry
    for r in range(d):
        for c in range(r + 1, d):
            row = [_ZERO] * width
            row[r * d + c] += _ONE
            row[c * d + r] -= _ONE
            rows.append(row)
    # invariance
    for m in rep.mats:
        for r in range(d):
            for c in range(d):
                row = [_ZERO] * width
                for k in range(d):
                    a = m[k, r]
                    if a:
                        row[k * d + c] += a
                    b = m[k, c]
                    if b:
                        row[r * d + k] += b
                if any(row):
                    rows.append(row)
    combos = kernel(Mat(rows, cols=width) if rows else Mat([], cols=width))
    return [
        Mat([v[r * d:(r + 1) * d] for r in range(d)], cols=d)
        for v in combos.basis
    ]


def nondegenerate_invariant_form(rep: Rep) -> Optional[Mat]:
    """A nondegenerate invariant symmetric form, or None when none exists.

    The determinant of a combination sum c_i B_i is a polynomial of degree
    at most d in the c_i, so if it is not identically zero it is nonzero
    somewhere on the integer grid {0..d}^r; scanning that grid is an
    exact, deterministic replacement for a random choice.
    """
    basis = invariant_symmetric_forms(rep)
    if not basis:
        return None
    d = rep.dim
    for combo in iproduct(range(d + 1), repeat=len(basis)):
        if not any(combo):
            continue
        cand = Mat.zeros(d, d)
        for c, b in zip(combo, basis):
            if c:
                cand = cand + b.scale(c)
        if rank(cand) == d:
            return cand
    return None


# ---------------------------------------------------------------------------
# enveloping algebra and simplicity

def enveloping_basis(rep: Rep) -> List[Mat]:
    """Basis of the unital algebra generated by the representing matrices."""
    d = rep.dim
    flat_dim = d * d

    rows: List[tuple] = []
    pivots: List[int] = []
    elements: List[Mat] = []

    def reduce_vec(w):
        w = list(w)
        for row, p in zip(rows, pivots):
            c = w[p]
            if c:
                for j in range(p, flat_dim):
                    x = row[j]
                    if x:
                        w[j] -= c * x
        piv = None
        for j in range(flat_dim):
            if w[j]:
                piv = j
                break
        return w, piv

    def try_add(m: Mat) -> bool:
        flat = tuple(m.entries[r][c] for r in range(d) for c in range(d))
        w, piv = reduce_vec(flat)
        if piv is None:
            return False
        inv = _ONE / w[piv]
        rows.append(tuple(x * inv for x in w))
        pivots.append(piv)
        elements.append(m)
        return True

    try_add(Mat.identity(d))
    for m in rep.mats:
        try_add(m)
    frontier = list(elements)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(elements):
                for p in (a @ b, b @ a):
                    if try_add(p):
                        fresh.append(p)
        frontier = fresh
    return elements


def _factor_over_q(p: Poly) -> List[Tuple[Poly, int]]:
    """Irreducible factorization of p over Q as (factor, multiplicity) pairs."""
    if p.degree < 1:
        return []
    t = sympy.Symbol("t")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * t ** i
        for i, c in enumerate(p.coeffs)
    )
    _, factors = sympy.factor_list(sympy.Poly(expr, t))
    out = []
    for fac, mult in factors:
        fp = sympy.Poly(fac, t)
        coeffs = [Fraction(int(x.p), int(x.q)) for x in reversed(fp.all_coeffs())]
        out.append((Poly(coeffs).monic(), int(mult)))
    return out


def _invariant_under(rep: Rep, space: Subspace) -> bool:
    return all(
        space.contains(m.apply(b)) for m in rep.mats for b in space.basis
    )


def _certify_reducible(rep: Rep, space: Subspace):
    if space.is_zero() or space.is_full():
        raise InternalFault("reducibility certificate is not proper", {})
    if not _invariant_under(rep, space):
        raise InternalFault(
            "reducibility certificate is not invariant",
            {"basis": space.basis},
        )
    return False, space


def _norton_probe(rep: Rep, a: Mat, transposes: List[Mat]):
    """Inspect one singular element of the enveloping algebra.

    Returns (False, W) when a kernel vector generates a proper submodule,
    (True, None) when nullity is one and both spins fill everything (the
    nullity-one criterion is conclusive), or None when inconclusive.
    """
    d = rep.dim
    ker = kernel(a)
    if ker.is_zero() or ker.dim == d:
        return None
    for v in ker.basis:
        closure = _spin_mats(rep.mats, v, d)
        if closure.dim < d:
            return _certify_reducible(rep, closure)
    if ker.dim != 1:
        return None
    kert = kernel(a.transpose())
    if kert.dim != 1:
        # rank is transpose-invariant, so the nullities must agree
        raise InternalFault("transpose changed a matrix rank", {"a": a.entries})
    wclosure = _spin_mats(transposes, kert.basis[0], d)
    if wclosure.dim < d:
        # orthogonal complement of a transpose-side submodule is invariant
        comp = kernel(Mat([list(r) for r in wclosure.basis], cols=d))
        return _certify_reducible(rep, comp)
    return True, None


def is_simple(rep: Rep) -> Tuple[bool, Optional[Subspace]]:
    """Decide irreducibility with a certificate.

    Returns (True, None) or (False, W) with W a verified proper nonzero
    invariant subspace.  The decision procedure is a deterministic
    schedule: kernel spins of singular elements (with the nullity-one
    double spin conclusive in both directions), the enveloping-algebra
    dimension count, the commutative primitive-element route, and
    factored minimal polynomials to manufacture more singular elements.
    If the whole schedule is inconclusive it raises SimplicityUndecided.
    """
    d = rep.dim
    if d == 0:
        raise ValueError("simplicity of the zero module is not defined")
    if d == 1:
        return True, None
    transposes = [m.transpose() for m in rep.mats]

    # stage 1: the representing matrices and their pairwise products
    stage1: List[Mat] = [m for m in rep.mats if not m.is_zero()]
    g = len(stage1)
    for i in range(g):
        for j in range(g):
            if i != j:
                p = stage1[i] @ stage1[j]
                if not p.is_zero():
                    stage1.append(p)
    seen = set()
    for a in stage1:
        if a.entries in seen:
            continue
        seen.add(a.entries)
        verdict = _norton_probe(rep, a, transposes)
        if verdict is not None:
            return verdict

    # stage 2: enveloping algebra dimension
    env = enveloping_basis(rep)
    dim_e = len(env)
    if dim_e == d * d:
        return True, None
    if dim_e == 1:
        return _certify_reducible(rep, Subspace.span(d, [unit_vec(d, 0)]))

    for a in env:
        if a.entries in seen:
            continue
        seen.add(a.entries)
        verdict = _norton_probe(rep, a, transposes)
        if verdict is not None:
            return verdict

    # stage 3: commutative enveloping algebra via a primitive element
    commutative = all(
        env[i] @ env[j] == env[j] @ env[i]
        for i in range(len(env))
        for j in range(i + 1, len(env))
    )
    candidates = list(env)
    for i in range(len(env)):
        for j in range(i + 1, len(env)):
            candidates.append(env[i] + env[j])
            candidates.append(env[i] - env[j])
    if commutative:
        for x in candidates:
            mp = min_poly(x)
            if mp.degree != dim_e:
                continue
            factors = _factor_over_q(mp)
            if len(factors) == 1 and factors[0][1] == 1:
                # the enveloping algebra is a field
                if d == dim_e:
                    return True, None
                orbit = [b.apply(unit_vec(d, 0)) for b in env]
                return _certify_reducible(rep, Subspace.span(d, orbit))
            # zero divisors: a proper factor has a proper invariant kernel
            fac = factors[0][0]
            if fac == mp:
                raise InternalFault("factorization returned the input", {})
            return _certify_reducible(rep, kernel(matrix_poly(fac, x)))

    # stage 4: factored minimal polynomials manufacture singular elements
    for x in candidates:
        mp = min_poly(x)
        factors = _factor_over_q(mp)
        if len(factors) == 1 and factors[0][1] == 1:
            continue
        for fac, _mult in factors:
            b = matrix_poly(fac, x)
            if b.is_zero() or b.entries in seen:
                continue
            seen.add(b.entries)
            verdict = _norton_probe(rep, b, transposes)
            if verdict is not None:
                return verdict

    raise SimplicityUndecided(
        f"no certificate found for a module of dimension {d} "
        f"with enveloping algebra of dimension {dim_e}"
    )


# ---------------------------------------------------------------------------
# decomposition into simple summands

def invariant_complement(rep: Rep, space: Subspace) -> Subspace:
    """An invariant complement of an invariant subspace.

    Searches for a projection-like intertwiner pi: M -> W whose
    restriction to W is invertible; its kernel is then an invariant
    complement.  The restriction determinant is polynomial of degree at
    most dim W in the search coefficients, so the integer grid
    {0..dim W}^r is exhaustive.  Raises DecompositionError when no
    intertwiner works, which certifies the subspace does not split off.
    """
    d = rep.dim
    k = space.dim
    if k == 0 or k == d:
        raise ValueError("complement asked for a trivial subspace")
    if not _invariant_under(rep, space):
        raise ValueError("complement asked for a non-invariant subspace")
    sub = rep_on_subspace(rep, space)
    homs = hom_space(rep, sub)
    if homs:
        wcols = Mat.from_cols([list(b) for b in space.basis], rows=d)
        restrictions = [h @ wcols for h in homs]
        for combo in iproduct(range(k + 1), repeat=len(homs)):
            if not any(combo):
                continue
            restr = Mat.zeros(k, k)
            for c, r in zip(combo, restrictions):
                if c:
                    restr = restr + r.scale(c)
            if rank(restr) != k:
                continue
            pi = Mat.zeros(k, d)
            for c, h in zip(combo, homs):
                if c:
                    pi = pi + h.scale(c)
            comp = kernel(pi)
            if comp.dim != d - k or not space.intersect(comp).is_zero():
                raise InternalFault(
                    "projection kernel is not a complement",
                    {"pi": pi.entries},
                )
            if not _invariant_under(rep, comp):
                raise InternalFault(
                    "kernel of an intertwiner is not invariant",
                    {"pi": pi.entries},
                )
            return comp
    raise DecompositionError(
        "invariant subspace admits no invariant complement"
    )


def simple_decomposition(rep: Rep) -> List[Subspace]:
    """Split the module into simple invariant summands.

    Raises DecompositionError when the module is not semisimple and
    SimplicityUndecided when irreducibility of a piece cannot be
    certified.  The returned subspaces are verified independent,
    spanning, and invariant.
    """
    d = rep.dim
    simple, wit = is_simple(rep)
    if simple:
        return [Subspace.full(d)]
    comp = invariant_complement(rep, wit)
    parts = []
    for piece in (wit, comp):
        sub = rep_on_subspace(rep, piece)
        basis_cols = Mat.from_cols([list(b) for b in piece.basis], rows=d)
        for inner in simple_decomposition(sub):
            vectors = [basis_cols.apply(v) for v in inner.basis]
            parts.append(Subspace.span(d, vectors))
    total = Subspace.zero(d)
    count = 0
    for p in parts:
        count += p.dim
        total = total.sum_with(p)
    if count != d or not total.is_full():
        raise InternalFault(
            "summands fail to stack up to the whole module",
            {"dims": [p.dim for p in parts]},
        )
    return parts


def match_decompositions(
    rep1: Rep,
    parts1: Sequence[Subspace],
    rep2: Rep,
    parts2: Sequence[Subspace],
):
    """Match simple summands across two decompositions by isomorphism.

    Returns (perm, isos) where perm[i] = j pairs parts1[i] with parts2[j]
    and isos[i] is an invertible intertwiner between the restricted
    modules in their echelon coordinates.  Raises ValueError when no
    perfect matching exists (the decompositions then do not describe
    isomorphic module lists).
    """
    if len(parts1) != len(parts2):
        raise ValueError("decompositions have different lengths")
    subs1 = [rep_on_subspace(rep1, p) for p in parts1]
    subs2 = [rep_on_subspace(rep2, p) for p in parts2]
    used = set()
    perm = []
    isos = []
    for i, s1 in enumerate(subs1):
        found = None
        for j, s2 in enumerate(subs2):
            if j in used or s1.dim != s2.dim:
                continue
            homs = hom_space(s1, s2)
            iso = None
            k = s1.dim
            for combo in iproduct(range(k + 1), repeat=len(homs)):
                if not any(combo):
                    continue
                cand = Mat.zeros(k, k)
                for c, h in zip(combo, homs):
                    if c:
                        cand = cand + h.scale(c)
                if rank(cand) == k:
                    iso = cand
                    break
            if iso is not None:
                found = (j, iso)
                break
        if found is None:
            raise ValueError(f"summand {i} matches nothing on the other side")
        j, iso = found
        # re-verify the intertwiner equation exactly
        for m1, m2 in zip(subs1[i].mats, subs2[j].mats):
            if iso @ m1 != m2 @ iso:
                raise InternalFault(
                    "matching produced a non-intertwiner",
                    {"i": i, "j": j},
                )
        used.add(j)
        perm.append(j)
        isos.append(iso)
    return perm, isos
