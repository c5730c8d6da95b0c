"""Canonical forms for cofinite, eventually-shift partial injections of N.

The objects of this package are injective partial maps of the positive
integers whose domain and range are both cofinite and which are monotone
off a finite set.  Any such map is, beyond some point, the pure shift
n -> n + k, so it is captured exactly by three pieces of data:

* ``front``  -- finitely many exceptional pairs ``(x, y)``, meaning x -> y;
* ``tail_start`` -- the first point of the pure-shift ray;
* ``shift``  -- the eventual displacement k, so n -> n + k for
  n >= tail_start.

The representation is canonical once the ray is maximal: either
``tail_start == 1``, or the point just below the ray is missing from the
domain, or it is moved by an amount other than ``shift``.  Canonical forms
are unique, so structural equality of canonical elements coincides with
equality of partial maps.

``TruncatedMap`` is a deliberately naive window view used as an
independent cross-check: compositions computed on windows must agree with
the exact arithmetic wherever the window is wide enough.

All integers here are plain Python ints; arithmetic is exact at any size.
Points and values live in N = {1, 2, 3, ...}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    BadArguments,
    BadFront,
    BadRay,
    RangeCollision,
    WindowMismatch,
    WindowTooSmall,
)


class Flavor(Enum):
    """The five nested submonoids the library distinguishes.

    CN     pure ray shifts: no exceptional pairs at all
    ISO    cofinite partial isometries: every point moved by the shift
    ISO1   monotone maps that are isometric once the least domain
           point is removed
    MON    monotone cofinite partial bijections
    ALMON  almost monotone maps, the full ambient monoid
    """

    CN = "cn"
    ISO = "iso"
    ISO1 = "iso1"
    MON = "mon"
    ALMON = "almon"


@dataclass(frozen=True)
class Element:
    """A cofinite, eventually-shift partial injection in canonical-ready form.

    The constructor checks the representation invariants and sorts the
    front by domain point, but does not shrink the front into the ray;
    use :func:`canonicalize` (or the :func:`element` convenience) to
    obtain the minimal form.  Raises :class:`BadFront`, :class:`BadRay`
    or :class:`RangeCollision` on invalid data.

    >>> Element(((2, 1),), 3, 0).apply(2)
    1
    >>> Element(((2, 1),), 3, 0).apply(1) is None
    True
    """

    front: tuple[tuple[int, int], ...]
    tail_start: int
    shift: int

    def __post_init__(self) -> None:
        front = tuple(sorted((int(x), int(y)) for x, y in self.front))
        object.__setattr__(self, "front", front)
        if self.tail_start < 1:
            raise BadRay(f"tail_start must be >= 1, got {self.tail_start}")
        if self.tail_start + self.shift < 1:
            raise BadRay(
                f"shifted ray would start at {self.tail_start + self.shift} < 1"
            )
        seen_x: set[int] = set()
        seen_y: set[int] = set()
        for x, y in front:
            if x < 1 or x >= self.tail_start:
                raise BadFront(f"front point {x} outside [1, {self.tail_start})")
            if x in seen_x:
                raise BadFront(f"front point {x} repeated")
            if y < 1:
                raise BadFront(f"front value {y} below 1")
            seen_x.add(x)
            if y >= self.tail_start + self.shift:
                raise RangeCollision(
                    f"front value {y} collides with the ray's range"
                )
            if y in seen_y:
                raise RangeCollision(f"front value {y} repeated")
            seen_y.add(y)

    def apply(self, n: int) -> int | None:
        """Image of ``n``, or None when ``n`` is outside the domain."""
        if n < 1:
            raise BadArguments(f"point {n} is not a natural number")
        if n >= self.tail_start:
            return n + self.shift
        for x, y in self.front:
            if x == n:
                return y
        return None

    def domain_missing(self) -> frozenset[int]:
        """The finite complement of the domain in N."""
        present = {x for x, _ in self.front}
        return frozenset(
            n for n in range(1, self.tail_start) if n not in present
        )

    def range_missing(self) -> frozenset[int]:
        """The finite complement of the range in N."""
        present = {y for _, y in self.front}
        return frozenset(
            n for n in range(1, self.tail_start + self.shift) if n not in present
        )

    def is_canonical(self) -> bool:
        """True when the ray cannot be extended downward."""
        if self.tail_start == 1:
            return True
        edge = self.tail_start - 1
        for x, y in self.front:
            if x == edge:
                return y != edge + self.shift
        return True

    def to_json_dict(self) -> dict:
        return {
            "front": [[x, y] for x, y in self.front],
            "tail_start": self.tail_start,
            "shift": self.shift,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Element":
        try:
            front = tuple((int(x), int(y)) for x, y in data["front"])
            tail_start = int(data["tail_start"])
            shift = int(data["shift"])
        except (KeyError, TypeError, ValueError) as exc:
            raise BadArguments(f"malformed element document: {exc}") from exc
        return cls(front, tail_start, shift)


IDENTITY = Element((), 1, 0)


def validate(
    front: tuple[tuple[int, int], ...] | list, tail_start: int, shift: int
) -> Element:
    """Build an element from raw data, checking every invariant.

    The result may still have a non-minimal ray; follow with
    :func:`canonicalize` when a canonical form is needed.
    """
    return Element(tuple(tuple(p) for p in front), tail_start, shift)


def canonicalize(e: Element) -> Element:
    """Shrink the ray downward as far as the front allows.

    A front pair sitting immediately below the ray and moved by exactly
    the shift is absorbed into the ray.  The partial map is unchanged:
    the result agrees with the input at every point of N.
    """
    front = dict(e.front)
    tail_start = e.tail_start
    while tail_start > 1 and front.get(tail_start - 1) == tail_start - 1 + e.shift:
        del front[tail_start - 1]
        tail_start -= 1
    if tail_start == e.tail_start:
        return e
    return Element(tuple(sorted(front.items())), tail_start, e.shift)


def element(
    front: tuple[tuple[int, int], ...] | list, tail_start: int, shift: int
) -> Element:
    """Validate and canonicalize in one step."""
    return canonicalize(validate(front, tail_start, shift))


@dataclass(frozen=True)
class SupportSummary:
    """Finite description of where an element deviates from a total shift."""

    dom_missing: frozenset[int]
    ran_missing: frozenset[int]
    shift: int
    tail_start: int


def support_summary(e: Element) -> SupportSummary:
    """Missing domain points, missing range points, shift and ray start."""
    return SupportSummary(
        dom_missing=e.domain_missing(),
        ran_missing=e.range_missing(),
        shift=e.shift,
        tail_start=e.tail_start,
    )


@dataclass(frozen=True)
class TruncatedMap:
    """A window view of a partial injection: only points <= window.

    Used as the brute-force oracle.  ``entries`` maps each in-window
    domain point to its image; images may exceed the window.
    """

    window: int
    entries: dict[int, int] = field(hash=False)

    def __post_init__(self) -> None:
        if self.window < 1:
            raise BadArguments(f"window must be >= 1, got {self.window}")
        values: set[int] = set()
        for x, y in self.entries.items():
            if x < 1 or x > self.window:
                raise BadArguments(f"entry point {x} outside window")
            if y < 1:
                raise BadArguments(f"entry value {y} below 1")
            if y in values:
                raise BadArguments(f"entry value {y} repeated")
            values.add(y)

    def apply(self, n: int) -> int | None:
        if n < 1 or n > self.window:
            raise BadArguments(f"point {n} outside window [1, {self.window}]")
        return self.entries.get(n)


def truncate(e: Element, window: int) -> TruncatedMap:
    """Restrict ``e`` to domain points <= window.

    The window must reach the ray (window >= tail_start), otherwise the
    view could not see the eventual shift at all and WindowTooSmall is
    raised.
    """
    if window < e.tail_start:
        raise WindowTooSmall(
            f"window {window} does not reach the ray at {e.tail_start}"
        )
    entries = {}
    for x, y in e.front:
        entries[x] = y
    for n in range(e.tail_start, window + 1):
        entries[n] = n + e.shift
    return TruncatedMap(window, entries)


def oracle_compose(t1: TruncatedMap, t2: TruncatedMap) -> TruncatedMap:
    """Window composition, first t1 then t2, by direct point chasing.

    Points whose intermediate image escapes t2's window are silently
    dropped, so the result is only trustworthy away from the window's
    edge; the exact arithmetic is cross-checked against this on the
    region where no escape can happen.
    """
    if t1.window != t2.window:
        raise WindowMismatch(f"windows differ: {t1.window} != {t2.window}")
    entries = {}
    for x, y in t1.entries.items():
        z = t2.entries.get(y)
        if z is not None:
            entries[x] = z
    return TruncatedMap(t1.window, entries)
