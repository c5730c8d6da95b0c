"""Finite witnesses: simplicity conjugators, equation solvers, H-classes.

Each operation here returns explicit elements that can be re-verified by
composition, and each solution set is finite because missing domain and
range sets are finite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import compose, invert, member, ray_part
from .core import Element, Flavor, IDENTITY, canonicalize
from .errors import BadArguments, BadBound, NotMember, NotRelated

# Full enumeration of an H-class walks the permutations of the points
# below the bound; cap the factorial before it walks away.
_ENUMERATION_CAP = 9


def simplicity_witness(flavor: Flavor, b: Element) -> tuple[Element, Element]:
    """Elements g, d with compose(compose(g, b), d) == IDENTITY.

    Witnesses that every nonempty two-sided ideal contains the identity:
    g is the total shift landing exactly on b's ray, and d undoes first
    b's ray part and then g.  Both are pure ray shifts, so the witness
    stays inside every flavor.  The product is checked before returning.
    """
    if not member(flavor, b):
        raise NotMember(f"element must lie in {flavor.value}")
    g = Element((), 1, b.tail_start - 1)
    d = compose(invert(ray_part(b)), invert(g))
    if compose(compose(g, b), d) != IDENTITY:
        raise NotRelated("internal check failed: witness product is not identity")
    return g, d


@dataclass(frozen=True)
class SolutionSet:
    """All solutions of a one-sided equation, with the forced core.

    ``base`` is the restriction every solution must extend (None when
    the equation is inconsistent); it satisfies the equation but may
    itself fall outside the requested flavor, so ``solutions`` is the
    authoritative list.  ``extension_count`` counts the solutions whose
    domain strictly exceeds the base's.
    """

    solutions: tuple[Element, ...]
    base: Element | None
    extension_count: int

    def to_json_dict(self) -> dict:
        return {
            "solutions": [s.to_json_dict() for s in self.solutions],
            "base": self.base.to_json_dict() if self.base is not None else None,
            "extension_count": self.extension_count,
        }


def solve_left(flavor: Flavor, a: Element, b: Element) -> SolutionSet:
    """All x in the flavor with compose(a, x) == b.

    A solution must agree with a^-1 b on the image of dom b under a,
    and may additionally map points missing from ran a injectively to
    points missing from ran b; both sets are finite, so the solution
    set is finite.  Solutions exist only when dom b is contained in
    dom a.  Extensions are enumerated by subset size then
    lexicographically, and every candidate is verified by composition
    and filtered by flavor membership.
    """
    if not member(flavor, a) or not member(flavor, b):
        raise NotMember(f"both sides must lie in {flavor.value}")
    if not (a.domain_missing() <= b.domain_missing()):
        return SolutionSet((), None, 0)
    base = compose(invert(a), b)
    spare_points = sorted(a.range_missing())
    spare_values = sorted(b.range_missing())
    solutions = []
    extensions = 0
    for size in range(min(len(spare_points), len(spare_values)) + 1):
        for points in itertools.combinations(spare_points, size):
            for values in itertools.permutations(spare_values, size):
                extra = dict(base.front)
                extra.update(zip(points, values))
                candidate = canonicalize(
                    Element(tuple(extra.items()), base.tail_start, base.shift)
                )
                if member(flavor, candidate) and compose(a, candidate) == b:
                    solutions.append(candidate)
                    if size:
                        extensions += 1
    return SolutionSet(tuple(solutions), base, extensions)


def solve_right(flavor: Flavor, a: Element, b: Element) -> SolutionSet:
    """All x in the flavor with compose(x, a) == b.

    Dual to :func:`solve_left` through inversion: x a == b exactly when
    a^-1 x^-1 == b^-1, so the solutions are the inverses of the left
    solutions for the inverted sides, in matching order.
    """
    left = solve_left(flavor, invert(a), invert(b))
    return SolutionSet(
        tuple(invert(s) for s in left.solutions),
        invert(left.base) if left.base is not None else None,
        left.extension_count,
    )


def h_class_members(
    flavor: Flavor,
    dom_missing,
    ran_missing,
    tail_bound: int,
) -> list[Element]:
    """All flavor members with the given missing sets and a ray by the bound.

    The shift is forced by counting: a bijection between the two
    cofinite sets moves the complement sizes apart by exactly the
    shift.  Every candidate is a bijection from the in-bound domain
    points onto the in-bound range points extended by the forced pure
    shift, so the enumeration is a walk over permutations, filtered by
    flavor.  In MON the increasing assignment is the only candidate and
    in ISO only the pure translate can survive, so those lists have at
    most one entry; ALMON lists grow factorially with the bound.

    A missing range point at or past tail_bound + shift would force a
    member's ray beyond the bound, so such classes are empty here.
    """
    dm = frozenset(int(n) for n in dom_missing)
    rm = frozenset(int(n) for n in ran_missing)
    if any(n < 1 for n in dm | rm):
        raise BadArguments("missing points must be positive")
    least = 1 + max(dm | rm, default=0)
    if tail_bound < least:
        raise BadBound(f"tail_bound {tail_bound} below required {least}")
    shift = len(rm) - len(dm)
    if rm and tail_bound + shift <= max(rm):
        return []
    points = [n for n in range(1, tail_bound) if n not in dm]
    values = [n for n in range(1, tail_bound + shift) if n not in rm]
    if len(points) > _ENUMERATION_CAP:
        raise BadBound(
            f"enumeration over {len(points)} points exceeds the cap "
            f"of {_ENUMERATION_CAP}"
        )
    out = []
    for assignment in itertools.permutations(values):
        candidate = canonicalize(
            Element(tuple(zip(points, assignment)), tail_bound, shift)
        )
        if member(flavor, candidate):
            out.append(candidate)
    out.sort(key=lambda e: (e.tail_start, e.front))
    return out


def power_factorization(i: int) -> tuple[Element, Element]:
    """The canonical identity factorization through i steps: up^i, down^i.

    Multiplying the two sides gives the identity for every i, while the
    factors themselves are pairwise distinct across i, witnessing the
    infinitely many ways the identity factors in the pure-shift flavor.
    """
    if i < 0:
        raise BadArguments("power must be nonnegative")
    return Element((), 1, i), Element((), i + 1, -i)


def is_factorization(x: Element, y: Element, g: Element) -> bool:
    """Does x followed by y compose to g exactly?"""
    return compose(x, y) == g
