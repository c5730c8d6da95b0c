"""Congruences: the shift homomorphism onto Z and what it classifies.

The shift of an element is a monoid homomorphism onto the integers, and
its kernel is the least group congruence: two elements are identified
exactly when their shifts agree, and a single ray idempotent witnesses
each identification.  Beyond that, every congruence generated by
finitely many pairs in the flavors containing ISO1 is either the
identity or a group congruence determined by one modulus, so
classification is a gcd computation on shift differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import compose, invert, is_idempotent, member, ray_idempotent
from .core import Element, Flavor, canonicalize
from .errors import (
    BadArguments,
    EqualInputs,
    NotIdempotent,
    NotMember,
    NotRelated,
    UnsupportedFlavor,
)


def shift_index(a: Element) -> int:
    """The eventual displacement; a homomorphism onto Z."""
    return a.shift


def min_group_related(a: Element, b: Element) -> bool:
    """Least group congruence: related iff the shifts agree."""
    return a.shift == b.shift


def min_group_witness(a: Element, b: Element) -> Element:
    """Least ray idempotent e with compose(a, e) == compose(b, e).

    Restricting the range to a ray above both fronts and above both
    shifted ray starts collapses each argument onto the same pure
    shift.  The returned idempotent is the least one produced that way;
    it is verified by composition before being returned.  Raises
    NotRelated when the shifts differ, in which case no idempotent can
    equalize the pair.
    """
    if a.shift != b.shift:
        raise NotRelated("shifts differ; no ray idempotent equalizes the pair")
    cut = [a.tail_start + a.shift, b.tail_start + b.shift, 1]
    cut += [y + 1 for _, y in a.front]
    cut += [y + 1 for _, y in b.front]
    e = ray_idempotent(max(cut))
    if compose(a, e) != compose(b, e):
        raise NotRelated("internal check failed: witness does not equalize")
    return e


@dataclass(frozen=True)
class CongruenceClass:
    """Description of a congruence: the identity, or a group congruence.

    A group congruence relates two elements iff their shifts agree
    modulo ``modulus``; modulus 0 is the least group congruence and
    modulus 1 is the universal relation.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("identity", "group"):
            raise BadArguments(f"unknown congruence kind {self.kind!r}")
        if self.kind == "group" and (self.modulus is None or self.modulus < 0):
            raise BadArguments("group congruence needs a modulus >= 0")
        if self.kind == "identity" and self.modulus is not None:
            raise BadArguments("identity congruence carries no modulus")

    @classmethod
    def identity(cls) -> "CongruenceClass":
        return cls("identity")

    @classmethod
    def group(cls, modulus: int) -> "CongruenceClass":
        return cls("group", modulus)

    def to_json_dict(self) -> dict:
        if self.kind == "identity":
            return {"kind": "identity"}
        return {"kind": "group", "modulus": self.modulus}


def classify_congruence(flavor: Flavor, pairs) -> CongruenceClass:
    """Classify the congruence generated by finitely many pairs.

    Any nontrivial congruence on the flavors containing ISO1 (and on
    the pure-shift flavor) is a group congruence, so the generated
    congruence is determined by the gcd of the shift differences of the
    generating pairs: all pairs equal gives the identity, gcd d > 0
    gives shifts-mod-d, and gcd 0 (some unequal pair, all shifts equal)
    gives the least group congruence.  ISO carries congruences outside
    this dichotomy and is refused.
    """
    if flavor is Flavor.ISO:
        raise UnsupportedFlavor(
            "iso admits congruences that are neither trivial nor group"
        )
    pairs = list(pairs)
    for x, y in pairs:
        if not member(flavor, x) or not member(flavor, y):
            raise NotMember(f"generating pair outside {flavor.value}")
    if all(x == y for x, y in pairs):
        return CongruenceClass.identity()
    d = 0
    for x, y in pairs:
        d = math.gcd(d, abs(x.shift - y.shift))
    return CongruenceClass.group(d)


def related_under(cls: CongruenceClass, a: Element, b: Element) -> bool:
    """Decide one pair under a classified congruence."""
    if cls.kind == "identity":
        return a == b
    if cls.modulus == 0:
        return a.shift == b.shift
    return (a.shift - b.shift) % cls.modulus == 0


def isolated_bump(point: int, ray_start: int) -> Element:
    """Fix the ray [ray_start, oo), move the lone point up by one.

    Needs point + 1 < ray_start so the bumped value stays clear of the
    ray.  The result is monotone and isometric off its least domain
    point, hence an ISO1 member with shift 0.
    """
    if point < 1:
        raise BadArguments("point must be positive")
    if point >= ray_start - 1:
        raise BadArguments(
            f"point {point} must sit strictly below ray_start - 1 = {ray_start - 1}"
        )
    return Element(((point, point + 1),), ray_start, 0)


@dataclass(frozen=True)
class ReductionCertificate:
    """Conjugation certificate for a pair of distinct idempotents.

    ``conjugator`` maps the separating point onto the edge of a ray, so
    conjugating both inputs by it lands on two comparable ray
    idempotents; any congruence containing the input pair contains the
    output pair.
    """

    conjugator: Element
    input_pair: tuple[Element, Element]
    output_pair: tuple[Element, Element]

    def to_json_dict(self) -> dict:
        return {
            "conjugator": self.conjugator.to_json_dict(),
            "input": [e.to_json_dict() for e in self.input_pair],
            "output": [e.to_json_dict() for e in self.output_pair],
        }


def reduce_idempotent_pair(
    flavor: Flavor, e: Element, i: Element
) -> ReductionCertificate:
    """Conjugate two distinct partial identities onto comparable rays.

    Let p be the least point where the domains differ and M the larger
    of the two ray starts.  The single conjugator sigma sends p to
    M - 1 and fixes [M, oo); then sigma^-1 * e * sigma is the ray
    identity at M - 1 when p lies in dom e and at M otherwise, and
    likewise for i.  Exactly one of the two contains p, so the outputs
    are the distinct comparable rays at M - 1 and M.  Both conjugations
    are recomputed by actual composition and checked before returning.
    """
    if flavor not in (Flavor.ISO1, Flavor.MON, Flavor.ALMON):
        raise UnsupportedFlavor(
            f"reduction needs a flavor containing iso1, got {flavor.value}"
        )
    if not is_idempotent(e) or not is_idempotent(i):
        raise NotIdempotent("both inputs must be partial identities")
    if e == i:
        raise EqualInputs("inputs must be distinct")
    p = min(e.domain_missing() ^ i.domain_missing())
    m = max(e.tail_start, i.tail_start)
    sigma = canonicalize(Element(((p, m - 1),), m, 0))
    out = []
    for idem in (e, i):
        conj = compose(compose(invert(sigma), idem), sigma)
        expected = ray_idempotent(m - 1 if idem.apply(p) is not None else m)
        if conj != expected:
            raise NotRelated("internal check failed: conjugation off target")
        out.append(conj)
    if out[0] == out[1] or out[0].front or out[1].front:
        raise NotRelated("internal check failed: outputs not distinct rays")
    return ReductionCertificate(sigma, (e, i), (out[0], out[1]))
