import random

import pytest

from conftest import doubled, so_algebra_and_rep
from kinsila.errors import DecompositionError, RepError
from kinsila.exactla import Mat, Subspace, inverse, unit_vec
from kinsila.liecore import LieAlgebra
from kinsila.repth import (
    Rep,
    commutant,
    enveloping_basis,
    hom_space,
    invariant_complement,
    invariant_symmetric_forms,
    is_faithful,
    is_simple,
    isotypical_component,
    match_decompositions,
    nondegenerate_invariant_form,
    rep_on_subspace,
    simple_decomposition,
    spin,
    wedge_square,
)


def so2_line():
    alg = LieAlgebra(1, {}, labels=["J"])
    return alg, Rep(alg, [Mat([[0, -1], [1, 0]])])


class TestRepConstruction:
    def test_bracket_condition_enforced(self):
        alg, _ = so_algebra_and_rep(3)
        good = [Mat([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]) for _ in range(3)]
        with pytest.raises(RepError):
            Rep(alg, good)  # three equal matrices cannot satisfy so(3)

    def test_matrix_count_enforced(self):
        alg, rep = so_algebra_and_rep(3)
        with pytest.raises(RepError):
            Rep(alg, rep.mats[:2])

    def test_rho_is_linear(self):
        _, rep = so_algebra_and_rep(3)
        x = (1, 2, -1)
        assert rep.rho(x) == (
            rep.mats[0] + rep.mats[1].scale(2) - rep.mats[2]
        )

    def test_zero_algebra_module(self):
        zero = LieAlgebra(0, {})
        rep = Rep(zero, [], dim=3)
        assert rep.dim == 3
        ok, wit = is_simple(rep)
        assert not ok and wit.dim == 1


class TestSimplicity:
    def test_standard_module_simple(self):
        for d in (3, 4, 5):
            _, rep = so_algebra_and_rep(d)
            ok, wit = is_simple(rep)
            assert ok and wit is None

    def test_rotation_plane_simple_over_q(self):
        # the enveloping algebra is the field Q[t]/(t^2+1)
        _, rot = so2_line()
        ok, _ = is_simple(rot)
        assert ok
        assert len(enveloping_basis(rot)) == 2

    def test_doubled_module_reducible(self):
        _, v = so_algebra_and_rep(3)
        ok, wit = is_simple(doubled(v))
        assert not ok
        assert 0 < wit.dim < 6
        for m in doubled(v).mats:
            for b in wit.basis:
                assert wit.contains(m.apply(b))

    def test_zero_action_reducible(self):
        alg = LieAlgebra(1, {}, labels=["J"])
        ok, wit = is_simple(Rep(alg, [Mat.zeros(2, 2)]))
        assert not ok and wit.dim == 1

    def test_one_dimensional_always_simple(self):
        alg = LieAlgebra(1, {}, labels=["J"])
        ok, _ = is_simple(Rep(alg, [Mat.zeros(1, 1)]))
        assert ok


class TestHomAndCommutant:
    def test_schur_line_for_absolutely_irreducible(self):
        _, v = so_algebra_and_rep(3)
        assert len(hom_space(v, v)) == 1
        assert len(commutant(v)) == 1

    def test_commutant_of_double_is_two_by_two(self):
        _, v = so_algebra_and_rep(3)
        assert len(commutant(doubled(v))) == 4

    def test_hom_between_nonisomorphic_is_zero(self):
        _, v = so_algebra_and_rep(4)
        assert hom_space(v, wedge_square(v)) == []

    def test_wedge_of_rotation_module(self):
        # for so(3) the second exterior power is the module itself
        _, v = so_algebra_and_rep(3)
        w = wedge_square(v)
        assert w.dim == 3
        homs = hom_space(v, w)
        assert len(homs) == 1
        t = homs[0]
        for m_v, m_w in zip(v.mats, w.mats):
            assert t @ m_v == m_w @ t

    def test_wedge_intertwiner_counts_by_dimension(self):
        for d, expected in ((3, 1), (4, 0), (5, 0)):
            _, v = so_algebra_and_rep(d)
            assert len(hom_space(v, wedge_square(v))) == expected

    def test_isotypical_component(self):
        _, v = so_algebra_and_rep(3)
        p = doubled(v)
        assert isotypical_component(p, v).is_full()
        assert isotypical_component(wedge_square(so_algebra_and_rep(4)[1]),
                                     so_algebra_and_rep(4)[1]).is_zero()


class TestInvariantForms:
    def test_standard_module_has_unique_form(self):
        _, v = so_algebra_and_rep(3)
        forms = invariant_symmetric_forms(v)
        assert len(forms) == 1
        b = nondegenerate_invariant_form(v)
        assert b is not None
        for m in v.mats:
            assert (m.transpose() @ b + b @ m).is_zero()

    def test_no_form_when_none_invariant(self):
        # 1-dim rep of the affine line algebra scales by ad, no invariant form
        alg = LieAlgebra(2, {(0, 1): (0, 1)}, labels=["h", "x"])
        rep = Rep(alg, [Mat([[1]]), Mat([[0]])], check=False)
        assert nondegenerate_invariant_form(rep) is None


class TestSpinAndFaithful:
    def test_spin_full_on_simple(self):
        _, v = so_algebra_and_rep(3)
        assert spin(v, (1, 0, 0)).is_full()

    def test_spin_proper_on_invariant_line(self):
        alg = LieAlgebra(1, {}, labels=["J"])
        rep = Rep(alg, [Mat([[0, 1], [0, 0]])])
        assert spin(rep, (1, 0)) == Subspace.span(2, [(1, 0)])

    def test_faithful(self):
        _, v = so_algebra_and_rep(4)
        assert is_faithful(v)
        alg = LieAlgebra(1, {}, labels=["J"])
        assert not is_faithful(Rep(alg, [Mat.zeros(2, 2)]))


class TestDecomposition:
    def test_double_splits_into_two(self):
        _, v = so_algebra_and_rep(3)
        parts = simple_decomposition(doubled(v))
        assert sorted(p.dim for p in parts) == [3, 3]
        total = parts[0].sum_with(parts[1])
        assert total.is_full()

    def test_complement_of_top_block(self):
        _, v = so_algebra_and_rep(3)
        p = doubled(v)
        top = Subspace.span(6, [unit_vec(6, i) for i in range(3)])
        assert invariant_complement(p, top) == Subspace.span(
            6, [unit_vec(6, i) for i in range(3, 6)]
        )

    def test_nonsplit_extension_refused(self):
        alg = LieAlgebra(1, {}, labels=["J"])
        rep = Rep(alg, [Mat([[0, 1], [0, 0]])])
        line = Subspace.span(2, [(1, 0)])
        with pytest.raises(DecompositionError):
            invariant_complement(rep, line)
        with pytest.raises(DecompositionError):
            simple_decomposition(rep)

    def test_skewed_double_still_splits(self):
        # conjugate the doubled module by a shear mixing the two copies
        _, v = so_algebra_and_rep(3)
        p = doubled(v)
        shear_rows = [[0] * 6 for _ in range(6)]
        for i in range(6):
            shear_rows[i][i] = 1
        for i in range(3):
            shear_rows[i][3 + i] = 1
        shear = Mat(shear_rows)
        shear_inv = inverse(shear)
        conj = Rep(p.algebra, [shear @ m @ shear_inv for m in p.mats])
        parts = simple_decomposition(conj)
        assert sorted(q.dim for q in parts) == [3, 3]

    def test_matching_after_commutant_transport(self):
        _, v = so_algebra_and_rep(3)
        p = doubled(v)
        parts = simple_decomposition(p)
        swap_rows = [[0] * 6 for _ in range(6)]
        for i in range(3):
            swap_rows[i][3 + i] = 1
            swap_rows[3 + i][i] = 1
        swap = Mat(swap_rows)
        for m in p.mats:
            assert swap @ m == m @ swap
        parts2 = [
            Subspace.span(6, [swap.apply(b) for b in q.basis]) for q in parts
        ]
        perm, isos = match_decompositions(p, parts, p, parts2)
        assert sorted(perm) == [0, 1]
        for i, j in enumerate(perm):
            s1 = rep_on_subspace(p, parts[i])
            s2 = rep_on_subspace(p, parts2[j])
            for m1, m2 in zip(s1.mats, s2.mats):
                assert isos[i] @ m1 == m2 @ isos[i]

    def test_matching_refuses_wrong_modules(self):
        _, v3 = so_algebra_and_rep(3)
        p = doubled(v3)
        parts = simple_decomposition(p)
        with pytest.raises(ValueError):
            match_decompositions(p, parts, p, [parts[0]])


class TestSubmoduleIntersections:
    def test_seeded_submodule_meet_and_join(self):
        # spans of random vectors generate submodules; meets and joins of
        # invariant subspaces stay invariant
        rng = random.Random(2210)
        _, v = so_algebra_and_rep(3)
        p = doubled(v)
        for _ in range(50):
            a = spin(p, tuple(rng.randint(-3, 3) for _ in range(6)))
            b = spin(p, tuple(rng.randint(-3, 3) for _ in range(6)))
            meet = a.intersect(b)
            join = a.sum_with(b)
            for m in p.mats:
                for base in meet.basis:
                    assert meet.contains(m.apply(base))
                for base in join.basis:
                    assert join.contains(m.apply(base))
            assert meet.dim + join.dim == a.dim + b.dim
