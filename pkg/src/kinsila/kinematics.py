"""Validation and symplectic classification of kinematical Lie algebras.

The pipeline: validate the decomposition against the defining conditions,
build the canonical involution, extract the central-component two-form
and its radical, measure holonomy of the transvection algebra, split the
action of the central element into semisimple and nilpotent parts, and
classify.  Statements that are theorems for validated inputs are still
re-checked; their failure raises InternalFault, never a validation error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DecompositionError,
    InternalFault,
    ValidationError,
)
from .exactla import (
    Mat,
    Subspace,
    is_nilpotent,
    is_semisimple,
    kernel,
    rank,
    sn_decomposition,
    sqrt_rational,
    unit_vec,
    zero_vec,
)
from .liecore import LieAlgebra
from .repth import (
    Rep,
    hom_space,
    invariant_complement,
    is_faithful,
    is_simple,
    match_decompositions,
    nondegenerate_invariant_form,
    rep_on_subspace,
    simple_decomposition,
    wedge_square,
)

LABELS = frozenset({
    "flat-rad-equals-P",
    "flat-heisenberg",
    "flat-other",
    "three-graded-para-kahler",
    "pseudo-kahler",
    "poincare-type",
    "unclassified",
})

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class KinStructure:
    """A validated decomposition plus everything derived during validation."""

    algebra: LieAlgebra
    z_indices: Tuple[int, ...]
    s_indices: Tuple[int, ...]
    p_indices: Tuple[int, ...]
    z0: tuple                     # ambient coordinates of the marked central vector
    z_space: Subspace
    s_space: Subspace
    p_space: Subspace
    s_algebra: LieAlgebra
    p_rep: Rep                    # action of s on P, in P coordinates
    parts: List[Subspace]         # two simple summands of P, in P coordinates
    v_rep: Rep                    # action on parts[0] in its echelon basis
    invariant_form: Optional[Mat]
    sigma: Mat
    items: Tuple[Tuple[str, bool], ...]

    def to_p_coords(self, ambient_vec) -> Optional[tuple]:
        return self.p_space.coordinates_of(ambient_vec)

    def from_p_coords(self, coords) -> tuple:
        v = list(zero_vec(self.algebra.dim))
        for c, b in zip(coords, self.p_space.basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        v[j] += c * x
        return tuple(v)


@dataclass
class SymplecticData:
    omega: Mat                    # in P coordinates
    radical: Subspace             # in P coordinates
    radical_case: str             # "zero" | "module" | "all"


@dataclass
class TransvectionData:
    pp: Subspace                  # [P, P], ambient
    transvection: Subspace        # [P, P] + P, ambient
    centralizer: Subspace         # elements of [P, P] commuting with P, ambient
    holonomy_dim: int
    flat: bool


@dataclass
class ZActionData:
    a_matrix: Mat                 # ad of the central vector on P, P coordinates
    s_part: Mat
    n_part: Mat
    kind: str                     # "zero" | "nilpotent" | "semisimple"


@dataclass
class KahlerData:
    label: str
    mu: Fraction
    certificates: Dict[str, object]
    notes: List[str] = field(default_factory=list)


@dataclass
class PoincareData:
    passed: bool
    items: List[Tuple[str, bool, str]]


@dataclass
class ClassificationResult:
    label: str
    validation_items: Tuple[Tuple[str, bool], ...]
    radical_case: str
    radical_dim: int
    z_action: str
    holonomy_dim: int
    flat: bool
    indecomposable: Optional[bool]
    sigma_check: Dict[str, bool] = field(default_factory=dict)
    omega: Optional[Mat] = None
    mu: Optional[Fraction] = None
    certificates: Dict[str, object] = field(default_factory=dict)
    poincare_items: Optional[List[Tuple[str, bool, str]]] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, Mat):
                return [[str(c) for c in row] for row in x.entries]
            if isinstance(x, Subspace):
                return [[str(c) for c in row] for row in x.basis]
            if isinstance(x, (list, tuple)):
                return [enc(y) for y in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x

        out = {
            "label": self.label,
            "validation": [[name, ok] for name, ok in self.validation_items],
            "sigma_check": dict(self.sigma_check),
            "radical_case": self.radical_case,
            "radical_dim": self.radical_dim,
            "z_action": self.z_action,
            "holonomy_dim": self.holonomy_dim,
            "flat": self.flat,
            "indecomposable": (
                self.indecomposable
                if self.indecomposable is not None
                else "not determined"
            ),
            "notes": list(self.notes),
        }
        if self.omega is not None:
            out["omega"] = enc(self.omega)
        if self.mu is not None:
            out["mu"] = str(self.mu)
            out["mu_sign"] = 1 if self.mu > 0 else -1
        if self.certificates:
            out["certificates"] = enc(self.certificates)
        if self.poincare_items is not None:
            out["poincare_certificate"] = [
                [name, ok, note] for name, ok, note in self.poincare_items
            ]
        return out


# ---------------------------------------------------------------------------
# validation

_CHECKS = (
    ("partition", "NOT_A_PARTITION"),
    ("z-line", "Z_NOT_LINE"),
    ("s-subalgebra", "S_NOT_SUBALGEBRA"),
    ("z-centralizes-s", "Z_NOT_CENTRALIZING"),
    ("p-module", "P_NOT_MODULE"),
    ("p-two-simple-copies", "P_NOT_TWO_COPIES"),
    ("v-simple", "V_NOT_SIMPLE"),
    ("v-faithful", "V_NOT_FAITHFUL"),
    ("wedge-condition", "WEDGE_CONDITION_FAILS"),
    ("invariant-form", "NO_INVARIANT_FORM"),
    ("sigma-involution", "SIGMA_NOT_AUTOMORPHISM"),
)


def _build_sigma(n: int, p_indices) -> Mat:
    p_set = set(p_indices)
    rows = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -_ONE if i in p_set else _ONE
    return Mat(rows)


def canonical_involution(
    algebra: LieAlgebra,
    z_indices: Sequence[int],
    s_indices: Sequence[int],
    p_indices: Sequence[int],
) -> Mat:
    """The map fixing the central line and rotations, negating the rest.

    Verified (not assumed) to be an involutive automorphism; when the
    input brackets break the grading this raises a validation error with
    code SIGMA_NOT_AUTOMORPHISM.
    """
    sigma = _build_sigma(algebra.dim, p_indices)
    if not algebra.is_involution(sigma) or not algebra.is_automorphism(sigma):
        raise ValidationError(
            "SIGMA_NOT_AUTOMORPHISM",
            "the grading involution is not an automorphism of the bracket",
        )
    return sigma


def validate(
    algebra: LieAlgebra,
    z_indices: Sequence[int],
    s_indices: Sequence[int],
    p_indices: Sequence[int],
) -> KinStructure:
    """Check the defining conditions, in order, with a typed failure.

    Raises ValidationError carrying the code of the first failed check
    and the ordered (check, passed) pairs evaluated up to that point.
    Returns the structure object all later stages consume.
    """
    n = algebra.dim
    z_indices = tuple(z_indices)
    s_indices = tuple(s_indices)
    p_indices = tuple(p_indices)
    items: List[Tuple[str, bool]] = []

    def fail(pos: int, message: str):
        name, code = _CHECKS[pos]
        items.append((name, False))
        raise ValidationError(code, message, items)

    def ok(pos: int):
        items.append((_CHECKS[pos][0], True))

    # 0: the three role sets partition the basis
    all_idx = list(z_indices) + list(s_indices) + list(p_indices)
    if (
        len(set(all_idx)) != len(all_idx)
        or sorted(all_idx) != list(range(n))
        or not z_indices
        or not p_indices
    ):
        fail(0, "role indices must partition the basis, with z and p nonempty")
    ok(0)

    # 1: the marked center is a line
    if len(z_indices) != 1:
        fail(1, f"the central component must be one-dimensional, got {len(z_indices)}")
    ok(1)
    z0 = unit_vec(n, z_indices[0])
    z_space = Subspace.span(n, [z0])
    s_space = Subspace.span(n, [unit_vec(n, i) for i in s_indices])
    p_space = Subspace.span(n, [unit_vec(n, i) for i in p_indices])

    # 2: s closes under the bracket
    if not algebra.is_subalgebra(s_space):
        fail(2, "the rotation component is not a subalgebra")
    ok(2)

    # 3: the central line commutes with s
    if not all(
        not any(algebra.bracket(z0, unit_vec(n, i))) for i in s_indices
    ):
        fail(3, "the central line does not commute with the rotation subalgebra")
    ok(3)

    # 4: P is an s-module
    s_algebra, _ = algebra.restrict(s_space)
    p_mats = []
    good = True
    for i in s_indices:
        cols = []
        for j in p_indices:
            w = algebra.bracket(unit_vec(n, i), unit_vec(n, j))
            coords = p_space.coordinates_of(w)
            if coords is None:
                good = False
                break
            cols.append(coords)
        if not good:
            break
        p_mats.append(Mat.from_cols(cols, rows=len(p_indices)))
    if not good:
        fail(4, "the bracket of a rotation with a momentum leaves the momentum space")
    ok(4)
    dp = len(p_indices)
    p_rep = Rep(s_algebra, p_mats, dim=dp)

    # 5: P is a sum of two isomorphic simple modules
    try:
        parts = simple_decomposition(p_rep)
    except DecompositionError as exc:
        fail(5, f"the momentum module does not split: {exc}")
    if len(parts) != 2 or parts[0].dim != parts[1].dim:
        fail(
            5,
            f"the momentum module splits into {len(parts)} simple pieces of "
            f"dimensions {[q.dim for q in parts]}, not two of equal dimension",
        )
    try:
        match_decompositions(p_rep, [parts[0]], p_rep, [parts[1]])
    except ValueError:
        fail(5, "the two simple pieces of the momentum module are not isomorphic")
    ok(5)

    # 6: the summand is simple (already certified by the decomposition)
    v_rep = rep_on_subspace(p_rep, parts[0])
    simple, _ = is_simple(v_rep)
    if not simple:
        fail(6, "a decomposition summand failed its own simplicity certificate")
    ok(6)

    # 7: the action on the summand is faithful
    if not is_faithful(v_rep):
        fail(7, "the rotation subalgebra does not act faithfully on the summand")
    ok(7)

    # 8: no copy of the summand inside its own exterior square
    if v_rep.dim >= 2 and hom_space(v_rep, wedge_square(v_rep)):
        fail(
            8,
            "the exterior square of the summand contains a copy of the summand",
        )
    ok(8)

    # 9: an invariant nondegenerate symmetric form on the summand
    form = nondegenerate_invariant_form(v_rep)
    if form is None:
        fail(9, "no invariant nondegenerate symmetric form on the summand")
    ok(9)

    # 10: the grading involution is an involutive automorphism
    sigma = _build_sigma(n, p_indices)
    if not algebra.is_involution(sigma) or not algebra.is_automorphism(sigma):
        fail(10, "the grading involution is not an automorphism of the bracket")
    ok(10)

    return KinStructure(
        algebra=algebra,
        z_indices=z_indices,
        s_indices=s_indices,
        p_indices=p_indices,
        z0=z0,
        z_space=z_space,
        s_space=s_space,
        p_space=p_space,
        s_algebra=s_algebra,
        p_rep=p_rep,
        parts=parts,
        v_rep=v_rep,
        invariant_form=form,
        sigma=sigma,
        items=tuple(items),
    )


# ---------------------------------------------------------------------------
# the central two-form

def omega_and_radical(structure: KinStructure) -> SymplecticData:
    """Two-form on P reading off the central component of brackets.

    Invariance under the fixed subalgebra and the radical trichotomy are
    theorems here, so violations raise InternalFault.
    """
    alg = structure.algebra
    n = alg.dim
    zi = structure.z_indices[0]
    p_idx = structure.p_indices
    dp = len(p_idx)
    rows = []
    for i in p_idx:
        row = []
        for j in p_idx:
            w = alg.bracket(unit_vec(n, i), unit_vec(n, j))
            row.append(w[zi])
        rows.append(row)
    omega = Mat(rows, cols=dp)
    if omega.transpose() != -omega:
        raise InternalFault("central two-form is not antisymmetric",
                            {"omega": omega.entries})

    # invariance under z and s actions on P
    actors = [("z", _ad_on_p(structure, structure.z0))]
    for k, i in enumerate(structure.s_indices):
        actors.append((f"s{k}", structure.p_rep.mats[k]))
    for name, m in actors:
        if not (m.transpose() @ omega + omega @ m).is_zero():
            raise InternalFault(
                "central two-form is not invariant",
                {"actor": name, "matrix": m.entries},
            )

    rad = kernel(omega)
    if rad.dim == 0:
        case = "zero"
    elif rad.dim == dp:
        case = "all"
    else:
        if 2 * rad.dim != dp:
            raise InternalFault(
                "two-form radical breaks the trichotomy",
                {"radical_dim": rad.dim, "p_dim": dp},
            )
        rad_rep = rep_on_subspace(structure.p_rep, rad)
        simple, _ = is_simple(rad_rep)
        if not simple or (
            structure.v_rep.dim != rad.dim
            or not hom_space(structure.v_rep, rad_rep)
        ):
            raise InternalFault(
                "two-form radical is not a copy of the simple summand",
                {"radical_dim": rad.dim},
            )
        case = "module"

    # brackets of radical vectors with momenta stay inside the rotations
    for r in rad.basis:
        amb_r = structure.from_p_coords(r)
        for j in p_idx:
            w = alg.bracket(amb_r, unit_vec(n, j))
            if not structure.s_space.contains(w):
                raise InternalFault(
                    "bracket of a radical vector with momenta leaves the rotations",
                    {"radical_vector": r},
                )
    return SymplecticData(omega=omega, radical=rad, radical_case=case)


def _ad_on_p(structure: KinStructure, ambient_vec) -> Mat:
    """Matrix of ad(ambient_vec) restricted to P, in P coordinates."""
    alg = structure.algebra
    n = alg.dim
    cols = []
    for j in structure.p_indices:
        w = alg.bracket(ambient_vec, unit_vec(n, j))
        coords = structure.p_space.coordinates_of(w)
        if coords is None:
            raise InternalFault(
                "fixed-part action does not preserve the momentum space",
                {"vector": ambient_vec},
            )
        cols.append(coords)
    return Mat.from_cols(cols, rows=len(structure.p_indices))


# ---------------------------------------------------------------------------
# transvection algebra and holonomy

def transvection_and_holonomy(structure: KinStructure) -> TransvectionData:
    """[P,P] + P with the dimension of its action modulo the inert part."""
    alg = structure.algebra
    pp = alg.bracket_span(structure.p_space, structure.p_space)
    transvection = pp.sum_with(structure.p_space)
    if not alg.is_subalgebra(transvection):
        raise InternalFault("transvection span is not a subalgebra", {})
    cent = alg.centralizer(structure.p_space, within=pp)
    hol = pp.dim - cent.dim
    return TransvectionData(
        pp=pp,
        transvection=transvection,
        centralizer=cent,
        holonomy_dim=hol,
        flat=(hol == 0),
    )


# ---------------------------------------------------------------------------
# the action of the central element on P

def z_action_split(structure: KinStructure) -> ZActionData:
    """Split ad(Z0)|P into commuting semisimple and nilpotent parts.

    For validated inputs the action is one or the other, never properly
    mixed, and a nonzero nilpotent action squares to zero; violations
    raise InternalFault.
    """
    a = _ad_on_p(structure, structure.z0)
    s_part, n_part = sn_decomposition(a)
    if a.is_zero():
        kind = "zero"
    elif n_part.is_zero():
        kind = "semisimple"
    elif s_part.is_zero():
        kind = "nilpotent"
        if not (a @ a).is_zero():
            raise InternalFault(
                "nilpotent central action does not square to zero",
                {"a": a.entries},
            )
    else:
        raise InternalFault(
            "central action has both a semisimple and a nilpotent part",
            {"s": s_part.entries, "n": n_part.entries},
        )
    if not is_semisimple(s_part) or not is_nilpotent(n_part):
        raise InternalFault("split parts fail their defining properties", {})
    return ZActionData(a_matrix=a, s_part=s_part, n_part=n_part, kind=kind)


# ---------------------------------------------------------------------------
# semisimple branch

def kahler_split(
    structure: KinStructure,
    zdata: ZActionData,
    sym: SymplecticData,
) -> KahlerData:
    """Classify a semisimple central action on P.

    The square of the action is a scalar; a positive square with rational
    root gives the two eigenspace certificates, a positive non-square is
    certified symbolically, and a negative scalar gives the complex-like
    structure.
    """
    if zdata.kind != "semisimple":
        raise ValueError("split asked for a non-semisimple action")
    a = zdata.a_matrix
    dp = a.rows
    a2 = a @ a
    mu = a2[0, 0]
    if a2 != Mat.identity(dp).scale(mu):
        raise InternalFault(
            "square of the semisimple central action is not scalar",
            {"a_squared": a2.entries},
        )
    if mu == 0:
        raise InternalFault("semisimple action with zero square is not zero", {})
    certificates: Dict[str, object] = {"a_squared_scalar": mu}
    notes: List[str] = [
        "the scalar square rescales by lambda^2 when the marked central "
        "generator is rescaled by lambda; only its sign is invariant"
    ]
    if mu < 0:
        certificates["complex_like_structure"] = a
        notes.append(
            f"the action squares to {mu} < 0; the normalized structure "
            f"divides by the irrational sqrt({-mu}) and is kept symbolic"
        )
        return KahlerData("pseudo-kahler", mu, certificates, notes)
    root = sqrt_rational(mu)
    if root is None:
        notes.append(
            f"the action squares to {mu} > 0 with irrational root; the "
            f"eigenspace split exists over the extension field and is "
            f"certified here only by the scalar square"
        )
        return KahlerData("three-graded-para-kahler", mu, certificates, notes)
    ident = Mat.identity(dp)
    lpos = kernel(a - ident.scale(root))
    lneg = kernel(a + ident.scale(root))
    checks = {}
    checks["half-dimensions"] = lpos.dim == dp // 2 and lneg.dim == dp // 2
    stable = True
    for m in list(structure.p_rep.mats) + [a]:
        for space in (lpos, lneg):
            for b in space.basis:
                if not space.contains(m.apply(b)):
                    stable = False
    checks["stable-under-fixed-part"] = stable
    abelian = True
    for space in (lpos, lneg):
        amb = [structure.from_p_coords(b) for b in space.basis]
        for x in amb:
            for y in amb:
                if any(structure.algebra.bracket(x, y)):
                    abelian = False
    checks["eigenspaces-abelian"] = abelian
    lagrangian = True
    for space in (lpos, lneg):
        for x in space.basis:
            wx = sym.omega.apply(x)
            for y in space.basis:
                if sum((c * d for c, d in zip(wx, y)), _ZERO):
                    lagrangian = False
    checks["eigenspaces-lagrangian"] = lagrangian
    pairing = Mat(
        [[sum((c * d for c, d in zip(sym.omega.apply(x), y)), _ZERO)
          for y in lneg.basis] for x in lpos.basis],
        cols=lneg.dim,
    )
    checks["duality-pairing-full-rank"] = rank(pairing) == dp // 2
    if not all(checks.values()):
        raise InternalFault(
            "eigenspace certificates failed for a semisimple positive square",
            {"checks": checks},
        )
    n = structure.algebra.dim
    g_plus = Subspace.span(n, [structure.from_p_coords(b) for b in lpos.basis])
    g_minus = Subspace.span(n, [structure.from_p_coords(b) for b in lneg.basis])
    g_zero = structure.z_space.sum_with(structure.s_space)
    grading = {"-1": g_minus, "0": g_zero, "1": g_plus}
    # re-verify the three-step grading on the recorded subspaces
    targets = {
        ("1", "-1"): g_zero, ("0", "1"): g_plus, ("0", "-1"): g_minus,
        ("0", "0"): g_zero,
        ("1", "1"): Subspace.span(n, []), ("-1", "-1"): Subspace.span(n, []),
    }
    for (i, j), target in targets.items():
        got = structure.algebra.bracket_span(grading[i], grading[j])
        if not target.contains_space(got):
            raise InternalFault(
                "grading subspaces fail the bracket inclusion",
                {"degrees": (i, j)},
            )
    certificates.update({
        "eigenvalue": root,
        "l_basis": lpos,
        "l_bar_basis": lneg,
        "grading": grading,
        "checks": {k: bool(v) for k, v in checks.items()},
    })
    return KahlerData("three-graded-para-kahler", mu, certificates, notes)


# ---------------------------------------------------------------------------
# nilpotent branch

def poincare_certificate(
    structure: KinStructure,
    sym: SymplecticData,
    zdata: ZActionData,
    trans: TransvectionData,
) -> PoincareData:
    """Itemized certificate for the nilpotent, nondegenerate case.

    A failed search for the graded complement is reported as not found by
    this method, never as a proof of absence.
    """
    if zdata.kind != "nilpotent":
        raise ValueError("certificate asked outside the nilpotent case")
    if sym.radical_case != "zero":
        raise ValueError("certificate asked with a degenerate two-form")
    alg = structure.algebra
    items: List[Tuple[str, bool, str]] = []
    dp = len(structure.p_indices)
    half = dp // 2

    rad_g = alg.solvable_radical()
    rad_abelian = alg.is_abelian_space(rad_g)
    items.append((
        "radical-abelian",
        rad_abelian,
        f"solvable radical has dimension {rad_g.dim}",
    ))

    levi = None
    if rad_abelian:
        levi = alg.levi_complement(sigma=structure.sigma, contain=structure.s_space)
        if levi is None:
            items.append((
                "sigma-stable-levi-containing-s",
                False,
                "no graded complement through the rotations was found by "
                "this method; this is not a proof of absence",
            ))
        else:
            items.append((
                "sigma-stable-levi-containing-s",
                True,
                f"complement of dimension {levi.dim}",
            ))
    else:
        items.append((
            "sigma-stable-levi-containing-s",
            False,
            "skipped: the solvable radical is not abelian",
        ))

    if levi is None:
        for name in (
            "p-splits-lagrangian-dual",
            "pieces-isomorphic-to-v",
            "bracket-of-pieces-is-z",
            "z-action-maps-one-piece-onto-the-other",
        ):
            items.append((name, False, "skipped: no complement available"))
    else:
        p_rad_amb = structure.p_space.intersect(rad_g)
        p_levi_amb = structure.p_space.intersect(levi)
        pr = _to_p_subspace(structure, p_rad_amb)
        pl = _to_p_subspace(structure, p_levi_amb)

        dims_ok = pr.dim == half and pl.dim == half
        lag_ok = dims_ok
        pairing_ok = False
        if dims_ok:
            for space in (pr, pl):
                for x in space.basis:
                    wx = sym.omega.apply(x)
                    for y in space.basis:
                        if sum((c * d for c, d in zip(wx, y)), _ZERO):
                            lag_ok = False
            pairing = Mat(
                [[sum((c * d for c, d in zip(sym.omega.apply(x), y)), _ZERO)
                  for y in pl.basis] for x in pr.basis],
                cols=pl.dim,
            )
            pairing_ok = rank(pairing) == half
        items.append((
            "p-splits-lagrangian-dual",
            dims_ok and lag_ok and pairing_ok,
            f"momentum meets the radical in dim {pr.dim} and the "
            f"complement in dim {pl.dim}",
        ))

        iso_ok = False
        if dims_ok and pr.dim > 0:
            pr_rep = rep_on_subspace(structure.p_rep, pr)
            pl_rep = rep_on_subspace(structure.p_rep, pl)
            pr_simple, _ = is_simple(pr_rep)
            pl_simple, _ = is_simple(pl_rep)
            iso_ok = (
                pr_simple
                and pl_simple
                and bool(hom_space(structure.v_rep, pr_rep))
                and bool(hom_space(structure.v_rep, pl_rep))
            )
        items.append((
            "pieces-isomorphic-to-v",
            iso_ok,
            "each piece is simple and admits an intertwiner from the summand",
        ))

        bracket_ok = False
        if dims_ok:
            span = alg.bracket_span(p_rad_amb, p_levi_amb)
            bracket_ok = span == structure.z_space
        items.append((
            "bracket-of-pieces-is-z",
            bracket_ok,
            "bracket of the two pieces spans exactly the central line",
        ))

        amap_ok = False
        if dims_ok:
            a = zdata.a_matrix
            images = [a.apply(b) for b in pl.basis]
            inside = all(pr.contains(w) for w in images)
            full = Subspace.span(dp, images).dim == half
            intertwines = all(
                (a @ m) == (m @ a) for m in structure.p_rep.mats
            )
            amap_ok = inside and full and intertwines
        items.append((
            "z-action-maps-one-piece-onto-the-other",
            amap_ok,
            "the central action carries the complement piece onto the "
            "radical piece and commutes with the rotations",
        ))

    not_solvable = not alg.is_solvable_space(trans.transvection)
    items.append((
        "transvection-not-solvable",
        not_solvable,
        f"transvection algebra has dimension {trans.transvection.dim}",
    ))
    items.append((
        "holonomy-nonzero",
        trans.holonomy_dim > 0,
        f"holonomy dimension {trans.holonomy_dim}",
    ))

    return PoincareData(passed=all(ok for _, ok, _ in items), items=items)


def _to_p_subspace(structure: KinStructure, ambient: Subspace) -> Subspace:
    dp = len(structure.p_indices)
    vectors = []
    for b in ambient.basis:
        coords = structure.p_space.coordinates_of(b)
        if coords is None:
            raise InternalFault(
                "claimed momentum subspace leaves the momentum space",
                {"vector": b},
            )
        vectors.append(coords)
    return Subspace.span(dp, vectors)


# ---------------------------------------------------------------------------
# the classification tree

def classify(
    algebra: LieAlgebra,
    z_indices: Sequence[int],
    s_indices: Sequence[int],
    p_indices: Sequence[int],
) -> ClassificationResult:
    """Validate and classify one algebra.

    ValidationError propagates to the caller; a label of "unclassified"
    still means the input is a valid generalized kinematical algebra.
    """
    structure = validate(algebra, z_indices, s_indices, p_indices)
    sym = omega_and_radical(structure)
    trans = transvection_and_holonomy(structure)
    zdata = z_action_split(structure)

    base = dict(
        validation_items=structure.items,
        sigma_check={
            "involutive": algebra.is_involution(structure.sigma),
            "automorphism": algebra.is_automorphism(structure.sigma),
        },
        omega=sym.omega,
        radical_case=sym.radical_case,
        radical_dim=sym.radical.dim,
        z_action=zdata.kind,
        holonomy_dim=trans.holonomy_dim,
        flat=trans.flat,
        indecomposable=(True if trans.holonomy_dim > 0 else None),
    )

    if sym.radical_case == "all":
        if not trans.pp.is_zero():
            raise InternalFault(
                "brackets of momenta survive although the two-form vanishes",
                {"pp_dim": trans.pp.dim},
            )
        ideal = structure.p_space.sum_with(structure.z_space)
        if not algebra.is_ideal(ideal):
            raise InternalFault(
                "momenta plus center fail to form an ideal in the fully "
                "degenerate case",
                {},
            )
        return ClassificationResult(
            label="flat-rad-equals-P",
            certificates={"pp_dim": 0, "p_plus_z_ideal": True},
            notes=["the two-form vanishes identically"],
            **base,
        )

    if sym.radical_case == "module":
        certs = _heisenberg_certificates(structure, sym)
        return ClassificationResult(
            label="flat-heisenberg",
            certificates=certs,
            notes=["the two-form degenerates exactly on one simple summand"],
            **base,
        )

    # nondegenerate two-form from here on
    if zdata.kind == "zero" or trans.flat:
        notes = []
        if zdata.kind == "zero":
            notes.append("the central element acts trivially on momenta")
        if trans.flat:
            notes.append("all brackets of momenta act trivially on momenta")
        return ClassificationResult(
            label="flat-other",
            notes=notes,
            **base,
        )

    if zdata.kind == "semisimple":
        kd = kahler_split(structure, zdata, sym)
        return ClassificationResult(
            label=kd.label,
            mu=kd.mu,
            certificates=kd.certificates,
            notes=kd.notes,
            **base,
        )

    # nilpotent, nondegenerate, non-flat
    pdata = poincare_certificate(structure, sym, zdata, trans)
    if pdata.passed:
        return ClassificationResult(
            label="poincare-type",
            poincare_items=pdata.items,
            notes=[
                "annotation, recorded and not computed: the associated "
                "symmetric space is modeled on a cotangent bundle with its "
                "canonical symplectic structure; conventions differ on "
                "whether the base is a configuration space or a group "
                "manifold, and this tool verifies neither"
            ],
            **base,
        )
    return ClassificationResult(
        label="unclassified",
        poincare_items=pdata.items,
        notes=[
            "the central action is nilpotent and the two-form is "
            "nondegenerate, but the itemized certificate did not close"
        ],
        **base,
    )


def _heisenberg_certificates(
    structure: KinStructure, sym: SymplecticData
) -> Dict[str, object]:
    """Certificates for the case where the radical is one simple summand."""
    alg = structure.algebra
    n = alg.dim
    rad = sym.radical
    rad_ambient = Subspace.span(
        n, [structure.from_p_coords(b) for b in rad.basis]
    )
    comp = invariant_complement(structure.p_rep, rad)
    comp_ambient = Subspace.span(
        n, [structure.from_p_coords(b) for b in comp.basis]
    )
    ww = alg.bracket_span(comp_ambient, comp_ambient)
    if ww != structure.z_space:
        raise InternalFault(
            "complement brackets do not span exactly the central line",
            {"ww_dim": ww.dim},
        )
    for j in structure.p_indices:
        if any(alg.bracket(structure.z0, unit_vec(n, j))):
            raise InternalFault(
                "central element acts on momenta in the degenerate-summand case",
                {},
            )
    if not alg.bracket_span(rad_ambient, comp_ambient).is_zero():
        raise InternalFault(
            "radical summand does not commute with its complement",
            {},
        )
    if not alg.is_abelian_space(rad_ambient):
        raise InternalFault("radical summand is not abelian", {})
    return {
        "radical_basis": rad,
        "complement_basis": comp,
        "complement_brackets_span_center": True,
        "center_acts_trivially": True,
        "radical_commutes_with_complement": True,
        "radical_abelian": True,
    }
