"""Lie algebras over Q given by structure constants.

Brackets are supplied for index pairs i < j only; antisymmetry fills in
the rest and the Jacobi identity is checked on every basis triple at
construction time, so an instance that exists is a Lie algebra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .errors import InternalFault, JacobiError, NonAbelianRadicalError
from .exactla import (
    Mat,
    Subspace,
    inverse,
    kernel,
    q,
    rank,
    solve,
    unit_vec,
    zero_vec,
)

_ZERO = Fraction(0)


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact rational structure constants."""

    def __init__(self, dim: int, pairs: Dict[Tuple[int, int], Sequence], labels=None):
        if dim < 0:
            raise ValueError("negative dimension")
        if labels is None:
            labels = [f"e{i}" for i in range(dim)]
        labels = [str(x) for x in labels]
        if len(labels) != dim:
            raise ValueError("label count does not match dimension")
        if len(set(labels)) != dim:
            raise ValueError("duplicate basis labels")
        tensor = [[None] * dim for _ in range(dim)]
        for (i, j), v in pairs.items():
            if not (0 <= i < j < dim):
                raise ValueError("bracket pairs must have 0 <= i < j < dim")
            vv = tuple(q(x) for x in v)
            if len(vv) != dim:
                raise ValueError("bracket value has wrong length")
            if any(vv):
                tensor[i][j] = vv
                tensor[j][i] = tuple(-x for x in vv)
        self.dim = dim
        self.labels = labels
        self._tensor = tensor
        self._nz = [
            tuple(j for j in range(dim) if tensor[i][j] is not None)
            for i in range(dim)
        ]
        self._killing: Optional[Mat] = None
        self._derived: Optional[Subspace] = None
        self._radical: Optional[Subspace] = None
        self._validate_jacobi()

    # -- construction-time validation -----------------------------------
    def _validate_jacobi(self):
        bad = self.jacobi_defect()
        if bad is not None:
            raise JacobiError(*bad)

    def jacobi_defect(self):
        """Recompute every cyclic bracket sum from the tensor.

        Returns None when all sums vanish exactly, otherwise the first
        violating (i, j, k) with its defect vector.  Construction rejects
        violators, so on a live instance this is a re-verification.
        """
        n = self.dim
        t = self._tensor
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    defect = None
                    for (a, bc) in ((i, t[j][k]), (j, t[k][i]), (k, t[i][j])):
                        if bc is None:
                            continue
                        term = self._ad_apply(a, bc)
                        if defect is None:
                            defect = list(term)
                        else:
                            for m, x in enumerate(term):
                                if x:
                                    defect[m] += x
                    if defect is not None and any(defect):
                        return (i, j, k), tuple(defect)
        return None

    # -- bracket ---------------------------------------------------------
    def _ad_apply(self, i: int, v) -> tuple:
        """[e_i, v] for a coefficient vector v."""
        out = [_ZERO] * self.dim
        row = self._tensor[i]
        for j in self._nz[i]:
            c = v[j]
            if c:
                for m, x in enumerate(row[j]):
                    if x:
                        out[m] += c * x
        return tuple(out)

    def structure_constant(self, i: int, j: int) -> tuple:
        v = self._tensor[i][j]
        return v if v is not None else zero_vec(self.dim)

    def bracket(self, x, y) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match dimension")
        out = [_ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._tensor[i]
            for j in self._nz[i]:
                yj = y[j]
                if yj:
                    f = xi * yj
                    for m, c in enumerate(row[j]):
                        if c:
                            out[m] += f * c
        return tuple(out)

    def ad(self, x) -> Mat:
        """Matrix of y -> [x, y] in the defining basis."""
        if len(x) != self.dim:
            raise ValueError("vector length does not match dimension")
        n = self.dim
        cols = []
        for j in range(n):
            col = [_ZERO] * n
            for i, xi in enumerate(x):
                if xi:
                    cij = self._tensor[i][j]
                    if cij is not None:
                        for m, c in enumerate(cij):
                            if c:
                                col[m] += xi * c
            cols.append(col)
        return Mat.from_cols(cols, rows=n)

    # -- derived objects ---------------------------------------------------
    def killing_form(self) -> Mat:
        """Gram matrix of (x, y) -> trace(ad x ad y) in the defining basis."""
        if self._killing is None:
            n = self.dim
            rows = [[_ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    s = _ZERO
                    for k in self._nz[j]:
                        cjk = self._tensor[j][k]
                        for m, a in enumerate(cjk):
                            if a:
                                tim = self._tensor[i][m]
                                if tim is not None and tim[k]:
                                    s += a * tim[k]
                    rows[i][j] = s
                    rows[j][i] = s
            self._killing = Mat(rows, cols=n)
        return self._killing

    def derived_subalgebra(self) -> Subspace:
        if self._derived is None:
            vectors = []
            for i in range(self.dim):
                for j in self._nz[i]:
                    if j > i:
                        vectors.append(self._tensor[i][j])
            self._derived = Subspace.span(self.dim, vectors)
        return self._derived

    def bracket_span(self, a: Subspace, b: Subspace) -> Subspace:
        vectors = []
        for u in a.basis:
            for v in b.basis:
                w = self.bracket(u, v)
                if any(w):
                    vectors.append(w)
        return Subspace.span(self.dim, vectors)

    def subalgebra_closure(self, vectors) -> Subspace:
        """Smallest subalgebra containing the given vectors."""
        s = Subspace.span(self.dim, list(vectors))
        while True:
            grown = s.sum_with(self.bracket_span(s, s))
            if grown.dim == s.dim:
                return s
            s = grown

    def centralizer(self, of: Subspace, within: Optional[Subspace] = None) -> Subspace:
        """{x in `within` : [x, v] = 0 for all v in `of`}."""
        if within is None:
            within = Subspace.full(self.dim)
        gens = within.basis
        if not gens:
            return Subspace.zero(self.dim)
        if of.is_zero():
            return within
        rows = []
        columns = [[self.bracket(g, v) for g in gens] for v in of.basis]
        for block in columns:
            for m in range(self.dim):
                rows.append([block[a][m] for a in range(len(gens))])
        combos = kernel(Mat(rows, cols=len(gens)))
        vectors = []
        for c in combos.basis:
            v = [_ZERO] * self.dim
            for a, ca in enumerate(c):
                if ca:
                    for m, x in enumerate(gens[a]):
                        if x:
                            v[m] += ca * x
            vectors.append(v)
        return Subspace.span(self.dim, vectors)

    # -- predicates on subspaces -----------------------------------------
    def is_subalgebra(self, space: Subspace) -> bool:
        return space.contains_space(self.bracket_span(space, space))

    def is_ideal(self, space: Subspace) -> bool:
        return space.contains_space(
            self.bracket_span(Subspace.full(self.dim), space)
        )

    def is_abelian_space(self, space: Subspace) -> bool:
        return self.bracket_span(space, space).is_zero()

    def is_solvable_space(self, space: Subspace) -> bool:
        """Derived series of a subalgebra terminates at zero."""
        if not self.is_subalgebra(space):
            raise ValueError("solvability asked of a non-subalgebra")
        s = space
        while not s.is_zero():
            d = self.bracket_span(s, s)
            if d.dim == s.dim:
                return False
            s = d
        return True

    def solvable_radical(self) -> Subspace:
        """Largest solvable ideal, certified before being returned.

        In characteristic zero this is the Killing-orthogonal complement
        of the derived subalgebra; the ideal and solvability properties
        are nevertheless re-checked on the computed space.
        """
        if self._radical is None:
            derived = self.derived_subalgebra()
            if derived.is_zero():
                rad = Subspace.full(self.dim)
            else:
                killing = self.killing_form()
                rows = [killing.apply(d) for d in derived.basis]
                rad = kernel(Mat(rows, cols=self.dim))
            if not self.is_ideal(rad):
                raise InternalFault(
                    "computed radical is not an ideal",
                    {"radical_basis": rad.basis},
                )
            if not self.is_solvable_space(rad):
                raise InternalFault(
                    "computed radical is not solvable",
                    {"radical_basis": rad.basis},
                )
            self._radical = rad
        return self._radical

    # -- maps ---------------------------------------------------------------
    def is_automorphism(self, t: Mat) -> bool:
        if t.rows != self.dim or t.cols != self.dim:
            return False
        if rank(t) != self.dim:
            return False
        img = [t.col(i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = self.bracket(img[i], img[j])
                cij = self._tensor[i][j]
                rhs = t.apply(cij) if cij is not None else zero_vec(self.dim)
                if lhs != rhs:
                    return False
        return True

    def is_involution(self, t: Mat) -> bool:
        return t.is_square() and t.rows == self.dim and (t @ t).is_identity()

    # -- derived algebras -----------------------------------------------------
    def quotient(self, ideal: Subspace, labels=None):
        """Quotient algebra by an ideal plus the projection matrix.

        The quotient basis is the image of the unit vectors at the ideal's
        non-pivot coordinates; the projection maps defining-basis
        coordinates to quotient coordinates.
        """
        if not self.is_ideal(ideal):
            raise ValueError("quotient by a non-ideal")
        comp = ideal.standard_complement()
        k = len(comp)
        m = Mat.from_cols(
            [list(c) for c in comp] + [list(b) for b in ideal.basis],
            rows=self.dim,
        )
        minv = inverse(m)
        proj = Mat(minv.entries[:k], cols=self.dim)
        pairs = {}
        for a in range(k):
            for b in range(a + 1, k):
                v = self.bracket(comp[a], comp[b])
                if any(v):
                    w = proj.apply(v)
                    if any(w):
                        pairs[(a, b)] = w
        if labels is None:
            labels = [f"q{i}" for i in range(k)]
        return LieAlgebra(k, pairs, labels), proj

    def restrict(self, space: Subspace, labels=None):
        """Subalgebra on the echelon basis of `space`, plus the embedding."""
        if not self.is_subalgebra(space):
            raise ValueError("restriction to a non-subalgebra")
        k = space.dim
        pairs = {}
        for a in range(k):
            for b in range(a + 1, k):
                v = self.bracket(space.basis[a], space.basis[b])
                coords = space.coordinates_of(v)
                if coords is None:
                    raise InternalFault(
                        "closed subspace has a bracket outside itself",
                        {"pair": (a, b), "value": v},
                    )
                if any(coords):
                    pairs[(a, b)] = coords
        if labels is None:
            labels = [f"r{i}" for i in range(k)]
        embed = Mat.from_cols([list(b) for b in space.basis], rows=self.dim)
        return LieAlgebra(k, pairs, labels), embed

    # -- Levi complement --------------------------------------------------
    def levi_complement(
        self,
        sigma: Optional[Mat] = None,
        contain: Optional[Subspace] = None,
    ) -> Optional[Subspace]:
        """A subalgebra complementing the solvable radical.

        Requires the radical to be abelian (NonAbelianRadicalError
        otherwise).  With `sigma` (an involutive automorphism) the result
        is sigma-stable; with `contain` (a subalgebra meeting the radical
        trivially) the result contains it.  Starting from any complement
        of the radical, the correction making it a subalgebra is a linear
        system in a map from the complement into the radical; with the
        radical abelian the system is exactly the closure condition.
        Returns None when the constrained system is unsolvable; the
        unconstrained system always has a solution, so an unconstrained
        call never returns None.
        """
        n = self.dim
        rad = self.solvable_radical()
        if not self.is_abelian_space(rad):
            raise NonAbelianRadicalError(
                "complement search implemented for abelian radicals only"
            )
        if contain is not None:
            if not self.is_subalgebra(contain):
                raise ValueError("contain is not a subalgebra")
            if not contain.intersect(rad).is_zero():
                return None
        if sigma is not None:
            if not self.is_involution(sigma) or not self.is_automorphism(sigma):
                raise ValueError("sigma is not an involutive automorphism")
        if rad.is_full():
            if contain is not None and not contain.is_zero():
                return None
            return Subspace.zero(n)

        # complement basis with eigenvalue tags and pinned flags
        wdata = []
        if sigma is not None:
            ident = Mat.identity(n)
            gplus = kernel(sigma - ident)
            gminus = kernel(sigma + ident)
            radp = rad.intersect(gplus)
            radm = rad.intersect(gminus)
            if radp.dim + radm.dim != rad.dim:
                raise InternalFault(
                    "radical not split by an involutive automorphism",
                    {"rad_dim": rad.dim, "plus": radp.dim, "minus": radm.dim},
                )
            if contain is not None:
                cp = contain.intersect(gplus)
                cm = contain.intersect(gminus)
                if cp.dim + cm.dim != contain.dim:
                    raise ValueError("contain is not spanned by sigma eigenvectors")
            else:
                cp = cm = Subspace.zero(n)
            for part, radpart, eps in ((cp, radp, 1), (cm, radm, -1)):
                for c in part.basis:
                    wdata.append((c, eps, True))
                cur = part.sum_with(radpart)
                side = gplus if eps == 1 else gminus
                for v in side.basis:
                    if not cur.contains(v):
                        cur = cur.sum_with(Subspace.span(n, [v]))
                        wdata.append((v, eps, False))
        else:
            cur = rad
            if contain is not None:
                for c in contain.basis:
                    wdata.append((c, 0, True))
                cur = rad.sum_with(contain)
            for i in range(n):
                v = unit_vec(n, i)
                if not cur.contains(v):
                    cur = cur.sum_with(Subspace.span(n, [v]))
                    wdata.append((v, 0, False))

        k = len(wdata)
        d = rad.dim
        if k != n - d:
            raise InternalFault(
                "complement construction produced the wrong dimension",
                {"expected": n - d, "got": k},
            )
        wvecs = [w for (w, _, _) in wdata]

        # coordinates relative to (complement | radical)
        m = Mat.from_cols(
            [list(w) for w in wvecs] + [list(b) for b in rad.basis],
            rows=n,
        )
        minv = inverse(m)
        struct = {}
        for a in range(k):
            for b in range(a + 1, k):
                coords = minv.apply(self.bracket(wvecs[a], wvecs[b]))
                struct[(a, b)] = (coords[:k], coords[k:])

        # action of each complement vector on the radical, rad coordinates
        pmats = []
        for a in range(k):
            cols = []
            for r in rad.basis:
                rc = rad.coordinates_of(self.bracket(wvecs[a], r))
                if rc is None:
                    raise InternalFault(
                        "radical escaped under bracket with complement",
                        {"index": a},
                    )
                cols.append(rc)
            pmats.append(cols)

        free = [a for a, (_, _, pin) in enumerate(wdata) if not pin]
        offset = {a: idx * d for idx, a in enumerate(free)}
        width = len(free) * d

        rows = []
        rhs = []
        for (a, b), (cvec, rvec) in struct.items():
            for t in range(d):
                row = [_ZERO] * width
                if b in offset:
                    ob = offset[b]
                    for s in range(d):
                        val = pmats[a][s][t]
                        if val:
                            row[ob + s] += val
                if a in offset:
                    oa = offset[a]
                    for s in range(d):
                        val = pmats[b][s][t]
                        if val:
                            row[oa + s] -= val
                for e in range(k):
                    ce = cvec[e]
                    if ce and e in offset:
                        row[offset[e] + t] -= ce
                if any(row) or rvec[t]:
                    rows.append(row)
                    rhs.append(-rvec[t])
        if sigma is not None and free:
            scols = []
            for r in rad.basis:
                sc = rad.coordinates_of(sigma.apply(r))
                if sc is None:
                    raise InternalFault("radical not stable under sigma")
                scols.append(sc)
            for a in free:
                eps = wdata[a][1]
                oa = offset[a]
                for t in range(d):
                    row = [_ZERO] * width
                    for s in range(d):
                        val = scols[s][t]
                        if val:
                            row[oa + s] += val
                    row[oa + t] -= eps
                    if any(row):
                        rows.append(row)
                        rhs.append(_ZERO)

        if width:
            res = solve(Mat(rows, cols=width) if rows else Mat([], cols=width), rhs)
            if res is None:
                if sigma is None and contain is None:
                    raise InternalFault(
                        "unconstrained complement correction has no solution"
                    )
                return None
            x = res.particular
        else:
            if any(any(r) for (_, r) in struct.values()) or any(rhs):
                return None
            x = ()

        lvecs = []
        for a, (w, _, _) in enumerate(wdata):
            v = list(w)
            if a in offset:
                oa = offset[a]
                for s in range(d):
                    c = x[oa + s]
                    if c:
                        for j, rb in enumerate(rad.basis[s]):
                            if rb:
                                v[j] += c * rb
            lvecs.append(tuple(v))
        levi = Subspace.span(n, lvecs)

        cert = {"levi_basis": levi.basis}
        if levi.dim != k:
            raise InternalFault("complement corrections are dependent", cert)
        if not levi.intersect(rad).is_zero():
            raise InternalFault("complement meets the radical", cert)
        if not levi.sum_with(rad).is_full():
            raise InternalFault("complement plus radical is not everything", cert)
        if not self.is_subalgebra(levi):
            raise InternalFault("corrected complement is not closed", cert)
        if sigma is not None and not all(
            levi.contains(sigma.apply(b)) for b in levi.basis
        ):
            raise InternalFault("complement is not sigma-stable", cert)
        if contain is not None and not levi.contains_space(contain):
            raise InternalFault("complement lost the required subalgebra", cert)
        return levi

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim})"
