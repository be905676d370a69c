"""Partitions, dominance, and the Spaltenstein map on parity-constrained partitions.

Indices are 1-based throughout, matching the usual notation d = [d_1, ..., d_k];
reading past the last part returns 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("empty partition")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """1-based part lookup, 0 beyond the end."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def compact(self) -> str:
        """Exponent notation, e.g. ``[3,1^3]``."""
        chunks = []
        for value in sorted(set(self.parts), reverse=True):
            m = self.parts.count(value)
            chunks.append(f"{value}^{m}" if m > 1 else str(value))
        return "[" + ",".join(chunks) + "]"


def make_partition(parts: Iterable[int]) -> Partition:
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative entry in {parts}")
    nonzero = sorted((p for p in parts if p), reverse=True)
    if not nonzero:
        raise ValueError("partition of 0 has no orbit")
    return Partition(tuple(nonzero))


def parse_partition(text: str) -> Partition:
    """Parse ``3,2,1`` or the exponent shorthand ``2^3,1^2``."""
    parts: list[int] = []
    for chunk in text.replace(" ", "").strip("[]").split(","):
        if not chunk:
            continue
        if "^" in chunk:
            value, _, mult = chunk.partition("^")
            parts.extend([int(value)] * int(mult))
        else:
            parts.append(int(chunk))
    return make_partition(parts)


def dual(d: Partition) -> Partition:
    return Partition(tuple(sum(1 for p in d.parts if p >= i) for i in range(1, d.parts[0] + 1)))


def ord_partition(p: Iterable[int]) -> Partition:
    """The partition e with e_i = #{j : p_j >= i}."""
    p = list(p)
    if any(x < 0 for x in p):
        raise ValueError(f"negative entry in {p}")
    if not any(p):
        raise ValueError("ord of an all-zero sequence")
    top = max(p)
    return Partition(tuple(sum(1 for x in p if x >= i) for i in range(1, top + 1)))


def dominates(a: Partition, b: Partition) -> bool:
    if a.n != b.n:
        raise ValueError(f"cannot compare partitions of {a.n} and {b.n}")
    length = max(len(a), len(b))
    pa = accumulate(a.part(i) for i in range(1, length + 1))
    pb = accumulate(b.part(i) for i in range(1, length + 1))
    return all(x >= y for x, y in zip(pa, pb))


def strictly_dominates(a: Partition, b: Partition) -> bool:
    return a != b and dominates(a, b)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, starting from [n]."""
    if n < 1:
        return

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def _check_eps(eps: int) -> None:
    if eps not in (0, 1):
        raise ValueError(f"epsilon must be 0 (so) or 1 (sp), got {eps}")


def in_P_epsilon(d: Partition, eps: int) -> bool:
    """Jordan types of nilpotents in so (eps=0) or sp (eps=1).

    Every part l with l = eps (mod 2) must occur an even number of times.
    """
    _check_eps(eps)
    return all(d.multiplicity(l) % 2 == 0 for l in set(d.parts) if l % 2 == eps)


def in_Pai(e: Partition, n: int, q: int, eps: int) -> bool:
    _check_eps(eps)
    if e.n != n:
        raise ValueError(f"partition {e} is not a partition of {n}")
    if q < 0 or (eps == 0 and q == 2):
        return False
    if q > len(e):
        return False
    return all(p % 2 == 1 for p in e.parts[:q]) and all(p % 2 == 0 for p in e.parts[q:])


def pai_index(e: Partition, eps: int) -> int | None:
    """The unique q with e in Pai(e.n, q), or None if there is none."""
    q = 0
    while q < len(e) and e.parts[q] % 2 == 1:
        q += 1
    return q if in_Pai(e, e.n, q, eps) else None


def index_set_I(e: Partition, n: int, eps: int) -> frozenset[int]:
    _check_eps(eps)
    if e.n != n:
        raise ValueError(f"partition {e} is not a partition of {n}")
    return frozenset(
        j
        for j in range(1, len(e) + 1)
        if j % 2 == (n + 1) % 2 and e.part(j) % 2 == eps and e.part(j) >= e.part(j + 1) + 2
    )


def spaltenstein(e: Partition, n: int, eps: int) -> Partition:
    if pai_index(e, eps) is None:
        raise ValueError(f"{e} lies in no Pai({n}, q) for eps={eps}")
    idx = index_set_I(e, n, eps)
    out = []
    for j in range(1, len(e) + 2):
        v = e.part(j)
        if j in idx:
            v -= 1
        elif j - 1 in idx:
            v += 1
        out.append(v)
    # Lowered and raised parts stay in order because of the gap condition.
    return make_partition(out)


def spaltenstein_fiber(d: Partition, eps: int) -> list[tuple[Partition, int]]:
    """All (e, q) with e in Pai(n, q) and S(e) = d, ordered lexicographically on e."""
    if not in_P_epsilon(d, eps):
        raise ValueError(f"{d} is not a Jordan type for eps={eps}")
    found = []
    for e in partitions_of(d.n):
        q = pai_index(e, eps)
        if q is not None and spaltenstein(e, d.n, eps) == d:
            found.append((e, q))
    return sorted(found, key=lambda pair: (pair[0].parts, pair[1]))
