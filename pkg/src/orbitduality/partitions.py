"""Partition calculus behind the classical nilpotent-orbit posets.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty tuple is the unique partition of 0.  A family letter
selects the parity constraint:

    A  no constraint
    B  partitions of 2n+1, even parts with even multiplicity
    C  partitions of 2n,   odd parts with even multiplicity
    D  partitions of 2n,   even parts with even multiplicity
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

Partition = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D")

# part parity that must occur with even multiplicity
_CONSTRAINED_PARITY = {"B": 0, "C": 1, "D": 0}


def partition(parts) -> Partition:
    """Normalize and validate: drops trailing zeros, rejects bad shapes."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def dominates(p: Partition, q: Partition) -> bool:
    """Prefix-sum dominance; both partitions must have the same size."""
    if sum(p) != sum(q):
        raise ValueError(f"dominance needs equal sizes: {sum(p)} != {sum(q)}")
    a = b = 0
    for i in range(max(len(p), len(q))):
        a += p[i] if i < len(p) else 0
        b += q[i] if i < len(q) else 0
        if a < b:
            return False
    return True


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown partition family {family!r}")
    return family


def size_fits_family(n: int, family: str) -> bool:
    _check_family(family)
    if n < 0:
        return False
    if family == "B":
        return n % 2 == 1
    if family in ("C", "D"):
        return n % 2 == 0
    return True


def is_valid(p: Partition, family: str) -> bool:
    """Whether p satisfies the family's size and multiplicity constraints."""
    _check_family(family)
    if not size_fits_family(sum(p), family):
        return False
    if family == "A":
        return True
    parity = _CONSTRAINED_PARITY[family]
    counts = Counter(p)
    return all(m % 2 == 0 for part, m in counts.items() if part % 2 == parity)


def collapse(p: Partition, family: str) -> Partition:
    """The dominance-greatest family-valid partition dominated by p.

    Walks the partition from the top: while some constrained-parity part
    has odd multiplicity, moves one box from the last occurrence of the
    largest such part down to the first lower slot that stays weakly
    decreasing.  Each move strictly lowers p in dominance order, so the
    loop terminates; maximality is pinned by the exhaustive oracle in the
    test suite.
    """
    _check_family(family)
    if family == "A":
        return p
    if not size_fits_family(sum(p), family):
        raise ValueError(f"partition of {sum(p)} does not fit family {family}")
    parity = _CONSTRAINED_PARITY[family]
    q = list(p)
    while True:
        counts = Counter(q)
        bad = [part for part, m in counts.items() if part % 2 == parity and m % 2 == 1]
        if not bad:
            return tuple(q)
        a = max(bad)
        i = max(k for k, part in enumerate(q) if part == a)
        q[i] -= 1
        if q[i] == 0:  # cannot happen for the supported families
            raise AssertionError("collapse produced a zero part")
        for j in range(i + 1, len(q)):
            if q[j] + 1 <= q[j - 1]:
                q[j] += 1
                break
        else:
            q.append(1)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("partition size must be nonnegative")

    def gen(total: int, cap: int):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def enumerate_valid(n: int, family: str) -> tuple[Partition, ...]:
    """All family-valid partitions of n, in descending lexicographic order."""
    _check_family(family)
    if n < 0:
        raise ValueError("partition size must be nonnegative")
    if not size_fits_family(n, family):
        raise ValueError(f"size {n} does not fit family {family}")
    return tuple(p for p in enumerate_partitions(n) if is_valid(p, family))
