"""Flag types of polarizations, i.e. of the resolutions T*(G/P) -> closure(O)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, permutations

from .orbits import NilpotentOrbit
from .partitions import Partition, dual, in_Pai, ord_partition, spaltenstein, spaltenstein_fiber

SIGNS = ("+", "-")


@dataclass(frozen=True, order=True)
class FlagType:
    """Flag dimension steps.

    For sl, ``half`` is the whole sequence (p_1, ..., p_s) and ``middle_q`` is None.
    For so/sp the flag is the palindrome (p_1..p_k, q, p_k..p_1) with ``half`` =
    (p_1..p_k).  ``sign`` picks one of the two families in so_2k when the flag
    contains a maximal isotropic subspace.
    """

    half: tuple[int, ...]
    middle_q: int | None = None
    sign: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "half", tuple(self.half))
        if any(p < 1 for p in self.half):
            raise ValueError(f"flag steps must be positive: {self.half}")
        if self.sign is not None and self.sign not in SIGNS:
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        if self.sign is not None and self.middle_q != 0:
            raise ValueError("a sign label needs middle_q = 0")

    @property
    def is_symmetric(self) -> bool:
        return self.middle_q is not None

    def expanded(self) -> tuple[int, ...]:
        if self.middle_q is None:
            return self.half
        return self.half + (self.middle_q,) + self.half[::-1]

    def swapped(self, j: int) -> "FlagType":
        """Exchange p_{j-1} and p_j (1-based); for so/sp the mirror pair moves too."""
        if not 2 <= j <= len(self.half):
            raise ValueError(f"swap position {j} outside 2..{len(self.half)}")
        h = list(self.half)
        h[j - 2], h[j - 1] = h[j - 1], h[j - 2]
        return FlagType(tuple(h), self.middle_q, self.sign)

    def with_sign(self, sign: str | None) -> "FlagType":
        return FlagType(self.half, self.middle_q, sign)

    @property
    def label(self) -> str:
        steps = [p for p in self.expanded() if p]
        sep = "," if any(p >= 10 for p in steps) else ""
        text = "Y_" + sep.join(map(str, steps))
        return text + (f"^{self.sign}" if self.sign else "")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Resolution:
    orbit: NilpotentOrbit
    flag: FlagType

    @property
    def label(self) -> str:
        return self.flag.label


def _distinct_orderings(multiset) -> list[tuple[int, ...]]:
    return sorted(set(permutations(sorted(multiset))))


def polarizations_A(d: Partition) -> list[FlagType]:
    return [FlagType(p) for p in _distinct_orderings(dual(d).parts)]


def _half_multiset(e: Partition, q: int) -> list[int] | None:
    cols = list(dual(e).parts)
    if q:
        if q not in cols:
            return None
        cols.remove(q)
    if any(cols.count(v) % 2 for v in set(cols)):
        return None
    return sorted(cols)[::2]


def carries_sign(o: NilpotentOrbit, q: int) -> bool:
    return o.algebra.kind == "so" and o.algebra.n % 2 == 0 and q == 0


def polarizations_BCD(o: NilpotentOrbit) -> list[FlagType]:
    if o.eps is None:
        raise ValueError("polarizations_BCD needs an so or sp orbit")
    flags = []
    for e, q in spaltenstein_fiber(o.jordan_type, o.eps):
        half = _half_multiset(e, q)
        if half is None:
            continue
        for h in _distinct_orderings(half):
            if carries_sign(o, q):
                flags.extend(FlagType(h, q, s) for s in SIGNS)
            else:
                flags.append(FlagType(h, q))
    return sorted(flags, key=lambda f: (f.half, f.middle_q, f.sign or ""))


def polarizations(o: NilpotentOrbit) -> list[FlagType]:
    if o.eps is None:
        return polarizations_A(o.jordan_type)
    return polarizations_BCD(o)


def resolutions(o: NilpotentOrbit) -> list[Resolution]:
    return [Resolution(o, f) for f in polarizations(o)]


def cumulative_dims(f: FlagType, n: int) -> tuple[int, ...]:
    dims = tuple(accumulate(f.expanded()))
    if dims[-1] != n:
        raise ValueError(f"flag {f.label} has total dimension {dims[-1]}, expected {n}")
    return dims


def flag_partition(f: FlagType) -> Partition:
    """ord of the (expanded) flag type."""
    return ord_partition(f.expanded())


def is_polarization(o: NilpotentOrbit, f: FlagType) -> bool:
    """Check the defining property of a flag type for the orbit's Jordan type."""
    if sum(f.expanded()) != o.algebra.n:
        return False
    if o.eps is None:
        return f.middle_q is None and f.sign is None and flag_partition(f) == o.jordan_type
    if f.middle_q is None:
        return False
    e = flag_partition(f)
    if not in_Pai(e, o.algebra.n, f.middle_q, o.eps):
        return False
    if (f.sign is not None) != carries_sign(o, f.middle_q):
        return False
    return spaltenstein(e, o.algebra.n, o.eps) == o.jordan_type
