"""Simplicity witnesses, one-sided equation solvers, H-class enumeration."""

import itertools
import math
import random

import pytest

from cofinj.algebra import (
    SHIFT_DOWN,
    SHIFT_UP,
    cn_element,
    compose,
    invert,
    make_idempotent,
    member,
)
from cofinj.core import IDENTITY, Element, Flavor
from cofinj.errors import BadArguments, BadBound, NotMember
from cofinj.witnesses import (
    SolutionSet,
    h_class_members,
    is_factorization,
    power_factorization,
    simplicity_witness,
    solve_left,
    solve_right,
)

from conftest import brute_solutions_left, brute_solutions_right, random_element

SWAP = Element(((1, 2), (2, 1)), 3, 0)
CHAIN = [Flavor.CN, Flavor.ISO, Flavor.ISO1, Flavor.MON, Flavor.ALMON]


class TestSimplicityWitness:
    def test_golden_down(self):
        g, d = simplicity_witness(Flavor.CN, SHIFT_DOWN)
        assert g == SHIFT_UP
        assert d == IDENTITY
        assert compose(compose(g, SHIFT_DOWN), d) == IDENTITY

    def test_golden_swap(self):
        g, d = simplicity_witness(Flavor.ALMON, SWAP)
        assert g == Element((), 1, 2)
        assert d == Element((), 3, -2)
        assert compose(compose(g, SWAP), d) == IDENTITY

    def test_identity(self):
        g, d = simplicity_witness(Flavor.CN, IDENTITY)
        assert compose(compose(g, IDENTITY), d) == IDENTITY

    def test_membership_enforced(self):
        with pytest.raises(NotMember):
            simplicity_witness(Flavor.MON, SWAP)

    def test_random_per_flavor(self):
        rng = random.Random(2)
        for _ in range(400):
            fl = rng.choice(CHAIN)
            b = random_element(rng, fl)
            g, d = simplicity_witness(fl, b)
            assert compose(compose(g, b), d) == IDENTITY
            assert member(Flavor.CN, g)
            assert member(Flavor.CN, d)


class TestSolveGoldens:
    def test_identity_equation(self):
        x = Element(((1, 3),), 3, 1)
        result = solve_left(Flavor.MON, IDENTITY, x)
        assert result == SolutionSet((x,), x, 0)

    def test_down_to_idempotent_right(self):
        result = solve_right(Flavor.MON, SHIFT_DOWN, make_idempotent({1}))
        assert result.solutions == (
            Element((), 2, 1),
            Element(((1, 1),), 2, 1),
        )
        assert result.base == Element((), 2, 1)
        assert result.extension_count == 1
        for x in result.solutions:
            assert compose(x, SHIFT_DOWN) == make_idempotent({1})

    def test_down_squared_left(self):
        bb = compose(SHIFT_DOWN, SHIFT_DOWN)
        result = solve_left(Flavor.ALMON, SHIFT_DOWN, bb)
        assert result.solutions == (cn_element(1, 0),)
        assert result.extension_count == 0

    def test_no_solutions(self):
        result = solve_left(Flavor.ALMON, make_idempotent({1}), IDENTITY)
        assert result == SolutionSet((), None, 0)

    def test_canonicalized_extension(self):
        e = make_idempotent({1})
        result = solve_left(Flavor.CN, e, e)
        assert result.solutions == (e, IDENTITY)
        assert result.extension_count == 1

    def test_flavor_filters_solutions(self):
        e = make_idempotent({2, 3})
        wide = solve_left(Flavor.ALMON, e, e)
        narrow = solve_left(Flavor.ISO, e, e)
        assert len(wide.solutions) == 7
        assert len(narrow.solutions) == 4
        assert set(narrow.solutions) < set(wide.solutions)
        assert all(member(Flavor.ISO, x) for x in narrow.solutions)

    def test_membership_enforced(self):
        with pytest.raises(NotMember):
            solve_left(Flavor.MON, SWAP, IDENTITY)


class TestSolveAgainstBruteForce:
    def test_left(self):
        rng = random.Random(3)
        for _ in range(60):
            fl = rng.choice(CHAIN)
            a = random_element(rng, fl, max_tail=3, max_shift=1)
            if rng.random() < 0.5:
                b = compose(a, random_element(rng, fl, max_tail=3, max_shift=1))
            else:
                b = random_element(rng, fl, max_tail=3, max_shift=1)
            result = solve_left(fl, a, b)
            assert set(result.solutions) == brute_solutions_left(fl, a, b)
            for x in result.solutions:
                assert member(fl, x)
                assert compose(a, x) == b

    def test_right(self):
        rng = random.Random(5)
        for _ in range(60):
            fl = rng.choice(CHAIN)
            a = random_element(rng, fl, max_tail=3, max_shift=1)
            if rng.random() < 0.5:
                b = compose(random_element(rng, fl, max_tail=3, max_shift=1), a)
            else:
                b = random_element(rng, fl, max_tail=3, max_shift=1)
            result = solve_right(fl, a, b)
            assert set(result.solutions) == brute_solutions_right(fl, a, b)
            for x in result.solutions:
                assert member(fl, x)
                assert compose(x, a) == b

    def test_duality(self):
        rng = random.Random(7)
        for _ in range(100):
            fl = rng.choice(CHAIN)
            a = random_element(rng, fl, max_tail=4, max_shift=2)
            b = random_element(rng, fl, max_tail=4, max_shift=2)
            right = solve_right(fl, a, b)
            left = solve_left(fl, invert(a), invert(b))
            assert right.solutions == tuple(invert(x) for x in left.solutions)
            assert right.extension_count == left.extension_count

    def test_combinatorial_bound(self):
        rng = random.Random(11)
        for _ in range(100):
            a = random_element(rng, max_tail=4, max_shift=2)
            b = random_element(rng, max_tail=4, max_shift=2)
            result = solve_left(Flavor.ALMON, a, b)
            na = len(a.range_missing())
            nb = len(b.range_missing())
            bound = sum(
                math.comb(na, s) * math.perm(nb, s)
                for s in range(min(na, nb) + 1)
            )
            assert len(result.solutions) <= bound


class TestHClass:
    def test_mon_identity_class(self):
        assert h_class_members(Flavor.MON, [], [], 4) == [IDENTITY]

    def test_almon_contains_swap(self):
        members = h_class_members(Flavor.ALMON, [], [], 3)
        assert members == [IDENTITY, SWAP]

    def test_iso_can_be_empty(self):
        assert h_class_members(Flavor.ISO, [1], [2], 4) == []

    def test_iso_singleton(self):
        assert h_class_members(Flavor.ISO, [1], [1], 3) == [make_idempotent({1})]

    def test_forced_shift_and_missing_sets(self):
        rng = random.Random(13)
        for _ in range(100):
            dm = {n for n in range(1, 5) if rng.random() < 0.4}
            rm = {n for n in range(1, 5) if rng.random() < 0.4}
            shift = len(rm) - len(dm)
            bound = max(
                1 + max(dm | rm, default=0),
                1 + max(rm, default=0) - shift,
            ) + rng.randint(0, 1)
            members = h_class_members(Flavor.ALMON, dm, rm, bound)
            assert members
            for e in members:
                assert e.shift == len(rm) - len(dm)
                assert e.domain_missing() == frozenset(dm)
                assert e.range_missing() == frozenset(rm)

    def test_mon_and_iso_at_most_one(self):
        rng = random.Random(17)
        for _ in range(100):
            dm = {n for n in range(1, 6) if rng.random() < 0.4}
            rm = {n for n in range(1, 6) if rng.random() < 0.4}
            shift = len(rm) - len(dm)
            bound = max(
                1 + max(dm | rm, default=0),
                1 + max(rm, default=0) - shift,
            )
            assert len(h_class_members(Flavor.MON, dm, rm, bound)) == 1
            assert len(h_class_members(Flavor.ISO, dm, rm, bound)) <= 1

    def test_range_point_past_shifted_bound_empty(self):
        assert h_class_members(Flavor.ALMON, {1, 2, 3}, {4}, 5) == []
        members = h_class_members(Flavor.ALMON, {1, 2, 3}, {4}, 7)
        assert len(members) == 6
        assert all(e.range_missing() == frozenset({4}) for e in members)

    def test_counts_grow_factorially_in_almon(self):
        for bound in range(1, 6):
            members = h_class_members(Flavor.ALMON, [], [], bound)
            assert len(members) == math.factorial(bound - 1)

    def test_bound_errors(self):
        with pytest.raises(BadBound):
            h_class_members(Flavor.ALMON, [3], [], 3)
        with pytest.raises(BadBound):
            h_class_members(Flavor.ALMON, [], [], 12)
        with pytest.raises(BadArguments):
            h_class_members(Flavor.ALMON, [0], [], 3)

    def test_all_h_related(self):
        members = h_class_members(Flavor.ALMON, [2], [1], 4)
        for x, y in itertools.combinations(members, 2):
            assert x.domain_missing() == y.domain_missing()
            assert x.range_missing() == y.range_missing()


class TestPowerFactorization:
    def test_goldens(self):
        assert power_factorization(0) == (IDENTITY, IDENTITY)
        assert power_factorization(3) == (Element((), 1, 3), Element((), 4, -3))

    def test_products_identity_factors_distinct(self):
        seen = set()
        for i in range(20):
            x, y = power_factorization(i)
            assert compose(x, y) == IDENTITY
            assert (x, y) not in seen
            seen.add((x, y))

    def test_rejects_negative(self):
        with pytest.raises(BadArguments):
            power_factorization(-1)


class TestIsFactorization:
    def test_true(self):
        assert is_factorization(SHIFT_UP, SHIFT_DOWN, IDENTITY)

    def test_false(self):
        assert not is_factorization(SHIFT_DOWN, SHIFT_UP, IDENTITY)
