"""Shared generators and oracle helpers for the test suite."""

from __future__ import annotations

import itertools

from cofinj.algebra import cn_element, compose, make_idempotent, member
from cofinj.core import Element, Flavor, canonicalize, oracle_compose, truncate


def random_element(rng, flavor=Flavor.ALMON, max_tail=8, max_shift=4):
    """A random canonical member of the flavor, small enough for oracles."""
    if flavor is Flavor.CN:
        return cn_element(
            rng.randint(0, max_tail - 1), rng.randint(0, max_tail - 1)
        )
    tail = rng.randint(1, max_tail)
    shift = rng.randint(max(1 - tail, -max_shift), max_shift)
    points = [x for x in range(1, tail) if rng.random() < 0.6]
    if flavor is Flavor.ISO:
        front = [(x, x + shift) for x in points if x + shift >= 1]
    elif flavor is Flavor.ISO1:
        front = [(x, x + shift) for x in points if x + shift >= 1]
        if front:
            ceiling = front[1][1] if len(front) > 1 else tail + shift
            if ceiling > 1:
                front[0] = (front[0][0], rng.randint(1, ceiling - 1))
    elif flavor is Flavor.MON:
        room = tail + shift - 1
        points = sorted(points)[: max(room, 0)]
        values = sorted(rng.sample(range(1, tail + shift), len(points)))
        front = list(zip(points, values))
    else:
        values = list(range(1, tail + shift))
        rng.shuffle(values)
        points = points[: len(values)]
        front = list(zip(points, values))
    return canonicalize(Element(tuple(front), tail, shift))


def random_idempotent(rng, max_point=8):
    missing = {n for n in range(1, max_point + 1) if rng.random() < 0.4}
    return make_idempotent(missing)


def oracle_window(a: Element, b: Element) -> int:
    """A window wide enough for the composition contract."""
    data = max(
        a.tail_start,
        a.tail_start + a.shift,
        b.tail_start,
        b.tail_start + b.shift,
    )
    return data + abs(a.shift) + abs(b.shift)


def compose_matches_oracle(a: Element, b: Element) -> bool:
    """Exact composition against window chasing on the safe region."""
    w = oracle_window(a, b)
    got = truncate(compose(a, b), w)
    expected = oracle_compose(truncate(a, w), truncate(b, w))
    safe = w - abs(a.shift) - abs(b.shift)
    return all(
        got.entries.get(n) == expected.entries.get(n) for n in range(1, safe + 1)
    )


_BOUNDED_CACHE: dict[tuple[int, int], list[Element]] = {}


def bounded_elements(tail_cap: int, shift: int) -> list[Element]:
    """Every canonical element with the given shift and ray by tail_cap.

    Walks all injections from subsets of [1, tail_cap) into
    [1, tail_cap + shift) extended by the pure shift; each partial map
    below the cap appears exactly once.
    """
    key = (tail_cap, shift)
    if key in _BOUNDED_CACHE:
        return _BOUNDED_CACHE[key]
    out: list[Element] = []
    if tail_cap >= 1 and tail_cap + shift >= 1:
        points = list(range(1, tail_cap))
        values = list(range(1, tail_cap + shift))
        for size in range(min(len(points), len(values)) + 1):
            for chosen in itertools.combinations(points, size):
                for assigned in itertools.permutations(values, size):
                    out.append(
                        canonicalize(
                            Element(tuple(zip(chosen, assigned)), tail_cap, shift)
                        )
                    )
    _BOUNDED_CACHE[key] = out
    return out


def brute_solutions_left(flavor, a, b, slack: int = 1) -> set[Element]:
    """Independent left-solver: filter every bounded candidate.

    Any x with compose(a, x) == b is pure shift b.shift - a.shift from
    max(a.tail_start, b.tail_start) + a.shift on, so walking the bounded
    family with shifts around the forced one is exhaustive; the off
    shifts are negative controls for the filter.
    """
    forced = b.shift - a.shift
    cap = max(max(a.tail_start, b.tail_start) + a.shift, 1)
    found = set()
    for shift in range(forced - slack, forced + slack + 1):
        for x in bounded_elements(cap, shift):
            if member(flavor, x) and compose(a, x) == b:
                found.add(x)
    return found


def brute_solutions_right(flavor, a, b, slack: int = 1) -> set[Element]:
    """Independent right-solver, same strategy with the mirrored bound.

    Any x with compose(x, a) == b is pure shift from
    max(b.tail_start, a.tail_start + a.shift - b.shift) on: a large
    point m of dom b has x(m) in a's ray (a front image would bound
    m + b.shift below a's ray range), forcing x(m) = m + b.shift - a.shift.
    """
    forced = b.shift - a.shift
    cap = max(b.tail_start, a.tail_start + a.shift - b.shift, 1)
    found = set()
    for shift in range(forced - slack, forced + slack + 1):
        for x in bounded_elements(cap, shift):
            if member(flavor, x) and compose(x, a) == b:
                found.add(x)
    return found
