import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from anticonc import (
    Dist,
    Extremal,
    Mixture,
    agm_step,
    balancing_bound,
    bernoulli,
    convolve_all,
    delta,
    extreme_decompose,
    extreme_point_measure,
    quasi_uniform,
    same_type,
    type_partition,
    uniform_on,
)
from anticonc.errors import AlphaOutOfRange, OddN, QTooLarge
from anticonc.sampling import random_capped_dist, random_dist

from conftest import dists, fractions_in_unit


class TestAgmStep:
    def test_bernoulli_halves(self):
        b = bernoulli(F(1, 3))
        step = agm_step([b], [b])
        assert step.joint_zero == F(4, 9)
        assert step.first_sym_zero == step.second_sym_zero == F(5, 9)
        assert not step.mirror

    def test_mirrored_halves_reach_equality(self):
        b = bernoulli(F(1, 3))
        step = agm_step([b], [b.negate()])
        assert step.mirror
        assert step.joint_zero == step.first_sym_zero == F(5, 9)

    def test_point_masses(self):
        step = agm_step([delta(0)], [delta(0)])
        assert step == agm_step([delta(0)], [delta(0)])
        assert (step.joint_zero, step.mirror) == (F(1), True)

    def test_multi_summand_halves(self):
        first = [bernoulli(F(1, 2)), uniform_on([0, 1, 2])]
        second = [bernoulli(F(1, 3)).negate(), uniform_on([-1, 0])]
        step = agm_step(first, second)
        assert step.joint_zero <= max(step.first_sym_zero, step.second_sym_zero)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            agm_step([bernoulli(F(1, 2))], [])
        with pytest.raises(ValueError):
            agm_step([bernoulli(F(1, 2))], [bernoulli(F(1, 2))] * 2)

    @given(dists(dim=1), dists(dim=1))
    def test_bound_holds(self, a, b):
        step = agm_step([a], [b])
        assert step.joint_zero <= max(step.first_sym_zero, step.second_sym_zero)


class TestTypePartition:
    def test_groups_up_to_sign(self):
        b = bernoulli(F(1, 3))
        u = uniform_on([0, 1, 2])
        partition = type_partition([b, u, b.negate(), b, u.negate().shift(-1)])
        assert len(partition.classes) == 3
        assert partition.classes[0].members == (0, 2, 3)
        assert same_type(partition.classes[0].representative, b)
        sizes = [len(c.members) for c in partition.classes]
        assert sizes == sorted(sizes, reverse=True)

    def test_representative_is_canonical(self):
        b = bernoulli(F(1, 3))
        one = type_partition([b])
        other = type_partition([b.negate()])
        assert one.classes[0].representative == other.classes[0].representative

    def test_distinct_representatives_are_different_types(self):
        rng = random.Random(3)
        ds = [random_dist(rng) for _ in range(12)]
        partition = type_partition(ds)
        reps = [c.representative for c in partition.classes]
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                assert not same_type(reps[i], reps[j])
        assert sorted(i for c in partition.classes for i in c.members) == list(range(12))


class TestBalancingBound:
    def test_pair_of_bernoullis(self):
        b = bernoulli(F(1, 3))
        bound = balancing_bound([b, b], (0,))
        assert bound.lhs == F(4, 9)
        assert bound.rhs == F(5, 9)
        assert bound.index == 0
        assert bound.strict

    def test_mirrored_pair_is_tight(self):
        b = bernoulli(F(1, 3))
        bound = balancing_bound([b, b.negate()], (0,))
        assert bound.lhs == bound.rhs == F(5, 9)
        assert not bound.strict

    def test_picks_most_concentrated_summand(self):
        spread = uniform_on([0, 1, 2, 3])
        tight = bernoulli(F(1, 2))
        bound = balancing_bound([spread, tight], (1,))
        assert bound.index == 1
        assert bound.rhs == F(1, 2)

    def test_odd_count_rejected(self):
        with pytest.raises(OddN):
            balancing_bound([bernoulli(F(1, 2))], (0,))

    def test_two_dimensional(self):
        d = uniform_on([(0, 0), (1, 2)])
        bound = balancing_bound([d, d], (1, 2))
        assert bound.lhs == F(1, 2)
        assert bound.rhs == F(1, 2)

    def test_holds_across_all_targets(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.choice((2, 4))
            dim = rng.choice((1, 2))
            ds = [random_dist(rng, dim=dim) for _ in range(n)]
            joint = convolve_all(ds)
            bound = balancing_bound(ds, joint.concentration()[1])
            assert all(mass <= bound.rhs for _, mass in joint.atoms)


class TestExtremeDecompose:
    def test_recognizes_extremal_without_rest(self):
        result = extreme_decompose(uniform_on([0, 1]), F(1, 2))
        assert result == Extremal(points=((0,), (1,)), rest=None)

    def test_recognizes_extremal_with_rest(self):
        d = Dist.from_entries([(0, "2/5"), (1, "2/5"), (2, "1/5")])
        result = extreme_decompose(d, F(2, 5))
        assert result == Extremal(points=((0,), (1,)), rest=(2,))

    def test_worked_mixture(self):
        # cap 1/2 leaves room to stretch: the bound from the level, not a
        # vanishing atom, limits the extremal share here
        d = Dist.from_entries([(0, "1/2"), (1, "3/10"), (2, "1/5")])
        result = extreme_decompose(d, F(1, 2))
        assert isinstance(result, Mixture)
        assert result.p == F(2, 3)
        assert result.mu2 == extreme_point_measure(F(1, 2), [0, 1])
        assert result.mu1 == Dist.from_entries([(0, "1/2"), (1, "1/5"), (2, "3/10")])

    def test_uniform_under_loose_cap(self):
        result = extreme_decompose(uniform_on([0, 1, 2]), F(1, 2))
        assert isinstance(result, Mixture)
        rebuilt = {}
        for pt in {*result.mu1.support, *result.mu2.support}:
            rebuilt[pt] = result.p * result.mu1.atom(pt) + (1 - result.p) * result.mu2.atom(pt)
        assert rebuilt == dict(uniform_on([0, 1, 2]).atoms)

    def test_cap_violation_rejected(self):
        with pytest.raises(QTooLarge):
            extreme_decompose(bernoulli(F(1, 3)), F(1, 2))
        with pytest.raises(AlphaOutOfRange):
            extreme_decompose(bernoulli(F(1, 2)), F(0))

    def test_random_capped_measures_decompose_exactly(self):
        rng = random.Random(9)
        levels = (F(1, 3), F(2, 5), F(1, 2), F(3, 4))
        for _ in range(150):
            alpha = rng.choice(levels)
            d = random_capped_dist(rng, alpha)
            result = extreme_decompose(d, alpha)
            if isinstance(result, Extremal):
                masses = sorted((d.atom(p) for p in result.points), reverse=True)
                assert all(m == alpha for m in masses)
                continue
            assert 0 < result.p < 1
            assert result.mu1.concentration()[0] <= alpha
            assert result.mu2.concentration()[0] <= alpha
            support = {*result.mu1.support, *result.mu2.support}
            for pt in support:
                got = result.p * result.mu1.atom(pt) + (1 - result.p) * result.mu2.atom(pt)
                assert got == d.atom(pt)

    @given(fractions_in_unit())
    def test_quasi_uniform_is_extremal_at_its_level(self, alpha):
        result = extreme_decompose(quasi_uniform(alpha), alpha)
        assert isinstance(result, Extremal)
