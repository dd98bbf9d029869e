"""Catalog of classical kinematical Lie algebras.

No structure constant in this file is written down by hand.  Each family
is realized by explicit matrices; commutators are computed exactly, their
coordinates in the generator span are solved for, and the expansion is
re-verified entry by entry before it becomes a structure constant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .errors import InternalFault
from .exactla import Mat, Subspace, inverse
from .liecore import LieAlgebra

_ZERO = Fraction(0)

FAMILIES = (
    "static",
    "galilei",
    "newton_hooke_plus",
    "newton_hooke_minus",
    "carroll",
    "poincare",
    "de_sitter",
    "anti_de_sitter",
)

# what the classifier is expected to say, for d >= 4
EXPECTED_LABEL = {
    "static": "flat-rad-equals-P",
    "galilei": "flat-rad-equals-P",
    "newton_hooke_plus": "flat-rad-equals-P",
    "newton_hooke_minus": "flat-rad-equals-P",
    "carroll": "flat-other",
    "poincare": "poincare-type",
    "de_sitter": "three-graded-para-kahler",
    "anti_de_sitter": "pseudo-kahler",
}


def dim_formula(d: int) -> int:
    return d * (d - 1) // 2 + 2 * d + 1


class CatalogEntry:
    """A named algebra with its basis roles and expected classification."""

    def __init__(self, family, d, algebra, z_label, s_labels, p_labels):
        self.family = family
        self.d = d
        self.algebra = algebra
        self.z_label = z_label
        self.s_labels = tuple(s_labels)
        self.p_labels = tuple(p_labels)
        self.expected_label = EXPECTED_LABEL[family]

    def __repr__(self):
        return f"CatalogEntry({self.family}, d={self.d})"


def _empty(n: int) -> List[List[Fraction]]:
    return [[_ZERO] * n for _ in range(n)]


def _pair_labels(d: int) -> List[str]:
    return [f"J{a}_{b}" for a in range(1, d + 1) for b in range(a + 1, d + 1)]


def _so_block(rows, a, b, offset):
    """Write E_ab - E_ba (1-based a < b) into a block starting at offset."""
    rows[offset + a - 1][offset + b - 1] += 1
    rows[offset + b - 1][offset + a - 1] -= 1


def _realization(family: str, d: int) -> Tuple[List[Mat], int]:
    """Generator matrices in basis order (J.., B.., P.., H)."""
    mats = []
    if family in ("poincare", "carroll", "de_sitter", "anti_de_sitter"):
        n = d + 2
        for a in range(1, d + 1):
            for b in range(a + 1, d + 1):
                rows = _empty(n)
                _so_block(rows, a, b, 1)
                mats.append(Mat(rows))
        for i in range(1, d + 1):  # boosts
            rows = _empty(n)
            rows[0][i] += 1
            if family != "carroll":
                rows[i][0] += 1
            mats.append(Mat(rows))
        for i in range(1, d + 1):  # spatial translations
            rows = _empty(n)
            rows[i][d + 1] += 1
            if family == "de_sitter":
                rows[d + 1][i] -= 1
            elif family == "anti_de_sitter":
                rows[d + 1][i] += 1
            mats.append(Mat(rows))
        rows = _empty(n)  # time translation
        rows[0][d + 1] += 1
        if family == "de_sitter":
            rows[d + 1][0] += 1
        elif family == "anti_de_sitter":
            rows[d + 1][0] -= 1
        mats.append(Mat(rows))
        return mats, n

    # the four flat families share one affine realization, parametrized by
    # how time translation rotates boosts into momenta and back
    coeffs = {
        "static": (0, 0),
        "galilei": (1, 0),
        "newton_hooke_plus": (1, -1),
        "newton_hooke_minus": (1, 1),
    }
    if family not in coeffs:
        raise ValueError(f"unknown family {family!r}")
    c_b, c_p = coeffs[family]
    n = 2 * d + 3
    for a in range(1, d + 1):
        for b in range(a + 1, d + 1):
            rows = _empty(n)
            _so_block(rows, a, b, 0)
            _so_block(rows, a, b, d)
            mats.append(Mat(rows))
    for i in range(1, d + 1):
        rows = _empty(n)
        rows[i - 1][2 * d] += 1
        mats.append(Mat(rows))
    for i in range(1, d + 1):
        rows = _empty(n)
        rows[d + i - 1][2 * d] += 1
        mats.append(Mat(rows))
    rows = _empty(n)
    for i in range(1, d + 1):
        if c_p:
            rows[i - 1][d + i - 1] += c_p
        if c_b:
            rows[d + i - 1][i - 1] -= c_b
    # a decoupled nilpotent corner keeps H nonzero even when both
    # coefficients vanish (the static family)
    rows[2 * d + 1][2 * d + 2] += 1
    mats.append(Mat(rows))
    return mats, n


def _flatten(m: Mat) -> tuple:
    return tuple(m.entries[i][j] for i in range(m.rows) for j in range(m.cols))


@lru_cache(maxsize=None)
def make(family: str, d: int) -> CatalogEntry:
    """Build one catalog algebra with verified structure constants."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if d < 1:
        raise ValueError("spatial dimension must be at least 1")
    mats, n = _realization(family, d)
    g = len(mats)
    if g != dim_formula(d):
        raise InternalFault(
            "realization has the wrong number of generators",
            {"family": family, "d": d, "got": g},
        )
    flat = [_flatten(m) for m in mats]
    span = Subspace.span(n * n, flat)
    if span.dim != g:
        raise InternalFault(
            "realization generators are linearly dependent",
            {"family": family, "d": d},
        )
    piv = span.pivots
    small = Mat([[flat[j][p] for j in range(g)] for p in piv], cols=g)
    small_inv = inverse(small)

    def coords_of(m: Mat, where) -> tuple:
        fv = _flatten(m)
        c = small_inv.apply(tuple(fv[p] for p in piv))
        for pos in range(n * n):
            s = _ZERO
            for j, cj in enumerate(c):
                if cj and flat[j][pos]:
                    s += cj * flat[j][pos]
            if s != fv[pos]:
                raise InternalFault(
                    "commutator is not in the generator span",
                    {"family": family, "d": d, "pair": where},
                )
        return c

    pairs: Dict[Tuple[int, int], tuple] = {}
    for i in range(g):
        for j in range(i + 1, g):
            comm = mats[i] @ mats[j] - mats[j] @ mats[i]
            if comm.is_zero():
                continue
            pairs[(i, j)] = coords_of(comm, (i, j))

    s_labels = _pair_labels(d)
    b_labels = [f"B{i}" for i in range(1, d + 1)]
    p_labels = [f"P{i}" for i in range(1, d + 1)]
    labels = s_labels + b_labels + p_labels + ["H"]
    algebra = LieAlgebra(g, pairs, labels)
    return CatalogEntry(
        family, d, algebra,
        z_label="H",
        s_labels=s_labels,
        p_labels=b_labels + p_labels,
    )


def all_entries(dims=(4, 5)) -> List[CatalogEntry]:
    return [make(f, d) for f in FAMILIES for d in dims]
