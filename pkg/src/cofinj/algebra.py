"""Monoid arithmetic: composition, inversion, idempotents, Green's relations.

Composition is written left to right throughout: ``compose(a, b)`` is the
map n -> (n a) b, matching the convention that elements act on the right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Element, Flavor, IDENTITY, canonicalize
from .errors import BadArguments, NotIdempotent, NotInCN, NotMember

# The two elementary ray shifts.  SHIFT_UP is total and moves every point
# up by one; SHIFT_DOWN is its inverse, defined from 2 on.  Together they
# generate the pure-shift flavor and satisfy
# compose(SHIFT_UP, SHIFT_DOWN) == IDENTITY.
SHIFT_UP = Element((), 1, 1)
SHIFT_DOWN = Element((), 2, -1)


def compose(a: Element, b: Element) -> Element:
    """Left-to-right composition: apply ``a`` first, then ``b``.

    Rather than scanning a window, the finitely many interesting points
    are evaluated directly: the front of ``a``, plus the stretch of
    ``a``'s ray whose image still lands below ``b``'s ray.  Everything
    above that stretch composes to the pure shift ``a.shift + b.shift``.
    The result is canonical.
    """
    tail_start = max(a.tail_start, b.tail_start - a.shift)
    pairs = []
    for x, y in a.front:
        z = b.apply(y)
        if z is not None:
            pairs.append((x, z))
    for x in range(a.tail_start, tail_start):
        z = b.apply(x + a.shift)
        if z is not None:
            pairs.append((x, z))
    return canonicalize(Element(tuple(pairs), tail_start, a.shift + b.shift))


def invert(a: Element) -> Element:
    """The inverse partial map: swap every pair, flip the shift.

    Canonical input gives canonical output: the pair that would block
    minimality of the inverse is the mirror of the one canonicalization
    already removed.
    """
    front = tuple((y, x) for x, y in a.front)
    return Element(front, a.tail_start + a.shift, -a.shift)


def make_idempotent(missing) -> Element:
    """Identity of N minus the given finite set of points."""
    pts = frozenset(int(n) for n in missing)
    if any(n < 1 for n in pts):
        raise BadArguments("missing points must be positive")
    if not pts:
        return IDENTITY
    top = max(pts)
    front = tuple((x, x) for x in range(1, top) if x not in pts)
    return Element(front, top + 1, 0)


def ray_idempotent(n: int) -> Element:
    """Identity of the ray [n, infinity)."""
    if n < 1:
        raise BadArguments(f"ray start must be >= 1, got {n}")
    return Element((), n, 0)


def is_idempotent(a: Element) -> bool:
    """True exactly for partial identities, regardless of flavor."""
    return a.shift == 0 and all(x == y for x, y in a.front)


def idempotent_factorization(a: Element) -> list[Element]:
    """Write a partial identity as a product of single-gap identities.

    Returns one factor per missing domain point, in increasing order;
    the empty list for the identity itself.
    """
    if not is_idempotent(a):
        raise NotIdempotent("only partial identities factor this way")
    return [make_idempotent({n}) for n in sorted(a.domain_missing())]


def natural_leq(e: Element, f: Element) -> bool:
    """Natural partial order on idempotents: e <= f iff ef == e.

    For partial identities this is containment of domains, i.e. e is
    defined on a smaller cofinite set.
    """
    if not is_idempotent(e) or not is_idempotent(f):
        raise NotIdempotent("natural order is only provided on idempotents")
    return f.domain_missing() <= e.domain_missing()


def member(flavor: Flavor, a: Element) -> bool:
    """Membership of a canonical element in one of the five flavors.

    The ray already moves every large point by the shift, so each test
    only inspects the front:

    * CN     -- no front at all;
    * MON    -- front values strictly increase along increasing points
                (they sit below the ray's range by the element
                invariant, so this is the whole condition);
    * ISO    -- every front pair is moved by exactly the shift;
    * ISO1   -- monotone, and every front pair except possibly the one
                at the least domain point is moved by the shift;
    * ALMON  -- everything.

    These tests order the flavors in a chain:
    CN < ISO < ISO1 < MON < ALMON.
    """
    if flavor is Flavor.ALMON:
        return True
    if flavor is Flavor.CN:
        return not a.front
    if flavor is Flavor.ISO:
        return all(y - x == a.shift for x, y in a.front)
    monotone = all(
        a.front[i][1] < a.front[i + 1][1] for i in range(len(a.front) - 1)
    )
    if flavor is Flavor.MON:
        return monotone
    # ISO1: the pair at the least domain point is exempt.
    return monotone and all(y - x == a.shift for x, y in a.front[1:])


@dataclass(frozen=True)
class Thresholds:
    """Structural markers of an element.

    ray_start  -- first point of the pure-shift ray
    dom_min    -- least point of the domain
    front_max  -- greatest exceptional domain point, None for a pure ray
    """

    ray_start: int
    dom_min: int
    front_max: int | None


def thresholds(a: Element) -> Thresholds:
    if a.front:
        return Thresholds(a.tail_start, a.front[0][0], a.front[-1][0])
    return Thresholds(a.tail_start, a.tail_start, None)


def ray_part(a: Element) -> Element:
    """Forget the front: the pure shift a agrees with on its ray.

    Always a CN member, and always linked to ``a`` by the least group
    congruence since the shift is preserved.
    """
    return Element((), a.tail_start, a.shift)


def cn_element(i: int, j: int) -> Element:
    """The pure-shift element dropping i points then shifting by j - i.

    cn_element(0, 1) is SHIFT_UP, cn_element(1, 0) is SHIFT_DOWN, and
    every CN member is cn_element(i, j) for exactly one pair (i, j).
    """
    if i < 0 or j < 0:
        raise BadArguments("cn indices must be nonnegative")
    return Element((), i + 1, j - i)


def cn_decompose(a: Element) -> tuple[int, int]:
    """Inverse of :func:`cn_element`; raises NotInCN on a nonempty front."""
    if a.front:
        raise NotInCN("element has exceptional points")
    return a.tail_start - 1, a.tail_start - 1 + a.shift


@dataclass(frozen=True)
class GreenReport:
    """Green's relations for one pair.  ``d_related`` is None when the
    library does not decide the D relation for the requested flavor."""

    r_related: bool
    l_related: bool
    h_related: bool
    d_related: bool | None


def _translate_matches(m1: frozenset[int], m2: frozenset[int]) -> bool:
    """Is N minus m2 the translate of N minus m1 by a single offset?

    The offset is forced by counting: a shift bijection between the two
    cofinite sets must move the complement sizes apart by exactly the
    offset.  Checked constructively in whichever direction shifts up.
    """
    k = len(m2) - len(m1)
    if k >= 0:
        expected = set(range(1, k + 1)) | {m + k for m in m1}
        return expected == set(m2)
    expected = set(range(1, -k + 1)) | {m - k for m in m2}
    return expected == set(m1)


def green(flavor: Flavor, a: Element, b: Element) -> GreenReport:
    """Green's R, L, H and (when known) D for a pair in one flavor.

    R and L are equality of domains and of ranges; both are decided by
    comparing the finite missing sets.  D is constant true in the
    bisimple flavors CN, MON and ALMON.  In ISO the D relation holds
    exactly when one missing domain set is the translate of the other
    by the forced offset (a derived criterion: the only candidate
    conjugating maps in ISO are pure offsets).  For ISO1 no description
    is provided, so d_related is reported as None rather than guessed.
    """
    if not member(flavor, a) or not member(flavor, b):
        raise NotMember(f"both elements must lie in {flavor.value}")
    r = a.domain_missing() == b.domain_missing()
    l = a.range_missing() == b.range_missing()
    d: bool | None
    if flavor in (Flavor.CN, Flavor.MON, Flavor.ALMON):
        d = True
    elif flavor is Flavor.ISO:
        d = _translate_matches(a.domain_missing(), b.domain_missing())
    else:
        d = None
    return GreenReport(r, l, r and l, d)
