"""Exhaustive desk-scale enumerators for the counted families.

Everything here is deliberately brute force: these are the oracles the
formula routes are judged against, so they share no machinery with the
series or closed-sum modules.  Each family has a hard size cap; exceeding a
cap raises rather than silently truncating.  The ``DEBELL_MAX_ENUM``
environment variable, when set to an integer, replaces every cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial

from .exact import binomial


class EnumerationCapError(ValueError):
    """The requested size exceeds the family's enumeration cap."""


_DEFAULT_CAPS = {
    "set_partitions": 10,
    "r_stirling": 10,
    "ordered": 9,
    "barred": 9,
    "r_derangements": 9,
    "r_deranged_partitions": 8,
}


def _check_cap(family: str, size: int) -> None:
    cap = _DEFAULT_CAPS[family]
    override = os.environ.get("DEBELL_MAX_ENUM")
    if override is not None:
        cap = int(override)
    if size > cap:
        raise EnumerationCapError(f"{family}: size {size} exceeds cap {cap}")


@dataclass(frozen=True)
class BlockPartition:
    """A set partition of [n] in standard form.

    Blocks are tuples of increasing elements, listed in increasing order of
    their minima; together they must cover 1..n without overlap.
    """

    blocks: tuple

    def __post_init__(self):
        seen = set()
        last_min = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError("block elements must be ascending")
            if block[0] <= last_min:
                raise ValueError("blocks must be sorted by strictly increasing minima")
            last_min = block[0]
            for e in block:
                if e in seen:
                    raise ValueError(f"element {e} appears twice")
                seen.add(e)
        if seen and seen != set(range(1, max(seen) + 1)):
            raise ValueError("blocks must cover 1..n exactly")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def text(self) -> str:
        return format_blocks(self.blocks)


@dataclass(frozen=True)
class ArrangementTally:
    family: str
    point: tuple
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be nonnegative")


def format_blocks(blocks) -> str:
    return "".join("{" + ",".join(str(e) for e in b) + "}" for b in blocks)


def format_sections(sections) -> str:
    return "|".join(format_blocks(b) for b in sections)


def format_cycles(perm) -> str:
    """One-line cycle form of a permutation given as a tuple (1-indexed images)."""
    seen = set()
    parts = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        parts.append("(" + " ".join(str(e) for e in cyc) + ")")
    return "".join(parts) if parts else "()"


# -- set partitions -----------------------------------------------------------


def _partitions_raw(n: int):
    """All partitions of [n] as tuples of tuples, in standard form.

    Elements are inserted in increasing order, so blocks are born sorted and
    the block list is automatically ordered by minima; no arrangement is ever
    produced twice.
    """
    if n == 0:
        yield ()
        return

    blocks: list = []

    def rec(i):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def set_partitions(n: int):
    """Yield every set partition of [n] in standard form."""
    _check_cap("set_partitions", n)
    yield from _partitions_raw(n)


@lru_cache(maxsize=None)
def _partition_tally(n: int) -> dict:
    counts: dict = {}
    for p in _partitions_raw(n):
        counts[len(p)] = counts.get(len(p), 0) + 1
    return counts


def set_partitions_count(n: int, k: int) -> int:
    """Number of partitions of [n] into exactly k nonempty blocks, by generation."""
    _check_cap("set_partitions", n)
    if k < 0:
        return 0
    return _partition_tally(n).get(k, 0)


def _block_index(p, e: int) -> int:
    for j, b in enumerate(p):
        if e in b:
            return j
    raise ValueError(f"element {e} not found")


def _first_r_separated(p, r: int) -> bool:
    if r == 0:
        return True
    if len(p) < r:
        return False
    return len({_block_index(p, e) for e in range(1, r + 1)}) == r


@lru_cache(maxsize=None)
def _r_stirling_tally(total: int, r: int) -> dict:
    counts: dict = {}
    for p in _partitions_raw(total):
        if _first_r_separated(p, r):
            counts[len(p)] = counts.get(len(p), 0) + 1
    return counts


def r_stirling_count(n: int, k: int, r: int) -> int:
    """Partitions of [n+r] into k+r blocks with 1..r in pairwise distinct blocks."""
    _check_cap("r_stirling", n + r)
    if k + r < 0:
        return 0
    return _r_stirling_tally(n + r, r).get(k + r, 0)


# -- ordered and barred arrangements ------------------------------------------


def ordered_partitions_count(n: int) -> int:
    """Number of ordered set partitions of [n]: each generated partition
    contributes one arrangement per permutation of its blocks."""
    _check_cap("ordered", n)
    return sum(factorial(k) * c for k, c in sorted(_partition_tally(n).items()))


def barred_count(n: int, lam: int) -> int:
    """Ordered partitions of [n] with lam-1 identical bars inserted between
    blocks (lam sections); the bar placements contribute C(k+lam-1, lam-1)."""
    if lam < 1:
        raise ValueError("lam must be at least 1")
    _check_cap("barred", n)
    return sum(
        binomial(k + lam - 1, lam - 1) * factorial(k) * c
        for k, c in sorted(_partition_tally(n).items())
    )


def iter_ordered_partitions(n: int):
    _check_cap("ordered", n)
    for p in _partitions_raw(n):
        yield from permutations(p)


def iter_barred(n: int, lam: int):
    """Yield barred arrangements as tuples of sections (each a tuple of blocks)."""
    if lam < 1:
        raise ValueError("lam must be at least 1")
    _check_cap("barred", n)
    for p in _partitions_raw(n):
        k = len(p)
        for arranged in permutations(p):
            # a multiset of lam-1 bar slots among the k+1 gaps fixes the sections
            for slots in combinations_with_replacement(range(k + 1), lam - 1):
                cuts = (0,) + slots + (k,)
                yield tuple(arranged[cuts[i]:cuts[i + 1]] for i in range(lam))


# -- derangements -------------------------------------------------------------


def _cycle_ids(perm) -> list:
    """Cycle label per element (1-indexed permutation as tuple of images)."""
    m = len(perm)
    labels = [0] * (m + 1)
    cid = 0
    for start in range(1, m + 1):
        if labels[start]:
            continue
        cid += 1
        e = start
        while not labels[e]:
            labels[e] = cid
            e = perm[e - 1]
    return labels


def _iter_r_derangements(k: int, r: int):
    m = k + r
    if m == 0:
        yield ()
        return
    for perm in permutations(range(1, m + 1)):
        if any(perm[i] == i + 1 for i in range(m)):
            continue
        if r >= 2:
            labels = _cycle_ids(perm)
            if len({labels[e] for e in range(1, r + 1)}) != r:
                continue
        yield perm


def r_derangements_enum(k: int, r: int) -> int:
    """Permutations of [k+r] with no fixed point and 1..r in pairwise
    distinct cycles, counted by explicit generation."""
    _check_cap("r_derangements", k + r)
    return sum(1 for _ in _iter_r_derangements(k, r))


def iter_r_derangements(k: int, r: int):
    _check_cap("r_derangements", k + r)
    yield from _iter_r_derangements(k, r)


# -- deranged partitions ------------------------------------------------------


def _position_derangements(m: int, r: int):
    """Derangements of positions 0..m-1 with positions 0..r-1 in distinct cycles."""
    for sigma in permutations(range(m)):
        if any(sigma[i] == i for i in range(m)):
            continue
        if r >= 2:
            labels = [-1] * m
            cid = 0
            for start in range(m):
                if labels[start] >= 0:
                    continue
                e = start
                while labels[e] < 0:
                    labels[e] = cid
                    e = sigma[e]
                cid += 1
            if len({labels[i] for i in range(r)}) != r:
                continue
        yield sigma


def r_deranged_partitions_enum(n: int, r: int) -> int:
    """Deranged partitions of [n+r]: partitions with 1..r in distinct blocks
    whose standard-form block sequence is permuted with no fixed position and
    the r distinguished blocks in distinct cycles.

    Computed twice, directly and in the factored form (separated-partition
    tallies times derangement counts); the two totals must agree.
    """
    _check_cap("r_deranged_partitions", n + r)
    total = n + r
    direct = 0
    for p in _partitions_raw(total):
        if not _first_r_separated(p, r):
            continue
        direct += sum(1 for _ in _position_derangements(len(p), r))
    factored = sum(
        r_stirling_count(n, i, r) * r_derangements_enum(i, r) for i in range(n + 1)
    )
    if direct != factored:
        raise RuntimeError(
            f"deranged-partition routes disagree at (n={n}, r={r}): "
            f"direct {direct} vs factored {factored}"
        )
    return direct


def iter_r_deranged_partitions(n: int, r: int):
    """Yield each deranged arrangement as the permuted block sequence."""
    _check_cap("r_deranged_partitions", n + r)
    for p in _partitions_raw(n + r):
        if not _first_r_separated(p, r):
            continue
        for sigma in _position_derangements(len(p), r):
            yield tuple(p[sigma[i]] for i in range(len(p)))


# -- CLI-facing tallies --------------------------------------------------------


def tally(family: str, **point) -> ArrangementTally:
    counters = {
        "set-partitions": lambda: set_partitions_count(point["n"], point["k"]),
        "r-stirling": lambda: r_stirling_count(point["n"], point["k"], point["r"]),
        "ordered": lambda: ordered_partitions_count(point["n"]),
        "barred": lambda: barred_count(point["n"], point["lam"]),
        "r-derangements": lambda: r_derangements_enum(point["k"], point["r"]),
        "r-deranged-partitions": lambda: r_deranged_partitions_enum(point["n"], point["r"]),
    }
    if family not in counters:
        raise ValueError(f"unknown family: {family}")
    count = counters[family]()
    return ArrangementTally(family, tuple(sorted(point.items())), count)


def list_arrangements(family: str, **point):
    """Yield canonical text lines for a family's arrangements."""
    if family == "set-partitions":
        k = point["k"]
        for p in set_partitions(point["n"]):
            if len(p) == k:
                yield format_blocks(p)
    elif family == "ordered":
        for arranged in iter_ordered_partitions(point["n"]):
            yield format_blocks(arranged)
    elif family == "barred":
        for sections in iter_barred(point["n"], point["lam"]):
            yield format_sections(sections)
    elif family == "r-derangements":
        for perm in iter_r_derangements(point["k"], point["r"]):
            yield format_cycles(perm)
    elif family == "r-deranged-partitions":
        for arranged in iter_r_deranged_partitions(point["n"], point["r"]):
            yield format_blocks(arranged)
    elif family == "r-stirling":
        k, r = point["k"], point["r"]
        for p in set_partitions(point["n"] + r):
            if len(p) == k + r and _first_r_separated(p, r):
                yield format_blocks(p)
    else:
        raise ValueError(f"unknown family: {family}")
