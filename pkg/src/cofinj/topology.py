"""Shift-invariant neighborhoods and containment checks.

A basic neighborhood is described by a center and a finite anchor set
inside the center's domain: it collects the elements whose domain is
contained in the center's and which agree with the center on every
anchor.  Multiplication and inversion respect these neighborhoods in the
isometry flavor; the checks here sample members and verify containment,
reporting violations instead of asserting silently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import compose, invert, member
from .core import Element, Flavor, canonicalize
from .errors import (
    AnchorOutsideDomain,
    BadArguments,
    InvalidNbhd,
    NotMember,
    Unsatisfiable,
)


@dataclass(frozen=True)
class BasicNbhd:
    """Center plus finite anchor set; anchors must lie in the domain."""

    center: Element
    anchors: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        anchors = frozenset(int(n) for n in self.anchors)
        object.__setattr__(self, "anchors", anchors)
        for n in anchors:
            if n < 1:
                raise InvalidNbhd(f"anchor {n} is not a positive integer")
            if self.center.apply(n) is None:
                raise InvalidNbhd(f"anchor {n} outside the center's domain")


def nbhd_contains(u: BasicNbhd, candidate: Element) -> bool:
    """Domain contained in the center's, agreement on every anchor."""
    if not (u.center.domain_missing() <= candidate.domain_missing()):
        return False
    return all(candidate.apply(n) == u.center.apply(n) for n in u.anchors)


def product_anchor_data(
    a: Element, b: Element, anchors
) -> tuple[frozenset[int], Element]:
    """Push anchors of a product through the first factor.

    For anchors F inside dom(ab), returns (F2, ab) where F2 is the image
    of F under a: members of the neighborhood of a anchored at F times
    members of the neighborhood of b anchored at F2 stay inside the
    neighborhood of ab anchored at F.  Empty anchor sets are refused;
    containment can genuinely fail without an anchor to pin the shift.
    """
    pts = frozenset(int(n) for n in anchors)
    if not pts:
        raise BadArguments("anchor set must be nonempty")
    if any(n < 1 for n in pts):
        raise BadArguments("anchor points must be natural numbers")
    g = compose(a, b)
    for n in pts:
        if g.apply(n) is None:
            raise AnchorOutsideDomain(f"anchor {n} outside dom of the product")
    f2 = frozenset(a.apply(n) for n in pts)
    return f2, g


def _restrict(e: Element, removed: set[int]) -> Element:
    """The same map with the given points deleted from the domain."""
    front = [(x, y) for x, y in e.front if x not in removed]
    tail_start = e.tail_start
    above = [n for n in removed if n >= e.tail_start]
    if above:
        tail_start = max(above) + 1
        front.extend(
            (n, n + e.shift)
            for n in range(e.tail_start, tail_start)
            if n not in removed
        )
    return canonicalize(Element(tuple(front), tail_start, e.shift))


def sample_nbhd_member(
    u: BasicNbhd, flavor: Flavor, seed: int, extra_removals: int = 3
) -> Element:
    """A random flavor member of the neighborhood, reproducible per seed.

    Members are produced by deleting up to ``extra_removals`` non-anchor
    domain points of the center; every flavor except CN is closed under
    restriction, and for CN the deletions are taken as ray truncations.
    Agreement at an anchor pins the shift of an isometry, so for ISO
    with anchors the samples are exactly restrictions of the center.
    For ALMON with anchors, finitely many non-anchor front values are
    additionally scrambled half the time, which changes the map without
    leaving the neighborhood.
    """
    if extra_removals < 0:
        raise BadArguments("extra_removals must be nonnegative")
    center = u.center
    if not member(flavor, center):
        raise NotMember(f"center must lie in {flavor.value}")
    rng = random.Random(seed)
    if flavor is Flavor.CN:
        ceiling = center.tail_start + extra_removals
        if u.anchors:
            ceiling = min(ceiling, min(u.anchors))
        new_tail = rng.randint(center.tail_start, max(center.tail_start, ceiling))
        candidate: Element = Element((), new_tail, center.shift)
    else:
        horizon = center.tail_start + extra_removals + 4
        pool = [
            n
            for n in range(1, horizon)
            if center.apply(n) is not None and n not in u.anchors
        ]
        count = min(rng.randint(0, extra_removals), len(pool))
        candidate = _restrict(center, set(rng.sample(pool, count)))
        if flavor is Flavor.ALMON and u.anchors and rng.random() < 0.5:
            movable = [i for i, (x, _) in enumerate(candidate.front)
                       if x not in u.anchors]
            if len(movable) >= 2:
                chosen = rng.sample(movable, min(len(movable), 3))
                front = list(candidate.front)
                values = [front[i][1] for i in chosen]
                rng.shuffle(values)
                for i, v in zip(chosen, values):
                    front[i] = (front[i][0], v)
                candidate = canonicalize(
                    Element(tuple(front), candidate.tail_start, candidate.shift)
                )
    if not member(flavor, candidate) or not nbhd_contains(u, candidate):
        raise Unsatisfiable("sampler produced a point outside the neighborhood")
    return candidate


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of a sampled containment check.

    Each violation records the offending inputs and their product; an
    empty tuple means every sampled product and inversion stayed inside
    the expected neighborhood.
    """

    samples: int
    violations: tuple[tuple[tuple[Element, Element], Element], ...]

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "violations": [
                {
                    "pair": [p[0].to_json_dict(), p[1].to_json_dict()],
                    "product": prod.to_json_dict(),
                }
                for p, prod in self.violations
            ],
        }


def check_product_containment(
    a: Element, b: Element, anchors, n_samples: int, seed: int
) -> ContainmentReport:
    """Sampled continuity check for multiplication and inversion in ISO.

    Draws members of the anchored neighborhoods of a and of b, multiplies
    them, and records any product escaping the anchored neighborhood of
    ab; additionally draws members around ab and records any whose
    inverse escapes the image-anchored neighborhood of (ab)^-1.  Expected
    violation count is zero; anything else is reported, not raised.
    """
    if not member(Flavor.ISO, a) or not member(Flavor.ISO, b):
        raise NotMember("containment check is pinned to the iso flavor")
    if n_samples < 0:
        raise BadArguments("sample count must be nonnegative")
    f2, g = product_anchor_data(a, b, anchors)
    pts = frozenset(int(n) for n in anchors)
    u_a = BasicNbhd(a, pts)
    u_b = BasicNbhd(b, f2)
    u_g = BasicNbhd(g, pts)
    g_inv = invert(g)
    u_g_inv = BasicNbhd(g_inv, frozenset(g.apply(n) for n in pts))
    rng = random.Random(seed)
    violations = []
    for _ in range(n_samples):
        sa = sample_nbhd_member(u_a, Flavor.ISO, rng.getrandbits(32))
        sb = sample_nbhd_member(u_b, Flavor.ISO, rng.getrandbits(32))
        prod = compose(sa, sb)
        if not nbhd_contains(u_g, prod):
            violations.append(((sa, sb), prod))
        sc = sample_nbhd_member(u_g, Flavor.ISO, rng.getrandbits(32))
        sc_inv = invert(sc)
        if not nbhd_contains(u_g_inv, sc_inv):
            violations.append(((sc, sc_inv), g_inv))
    return ContainmentReport(n_samples, tuple(violations))
