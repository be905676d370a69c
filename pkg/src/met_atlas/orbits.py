"""Nilpotent orbits in sl_n, so_n, sp_n as data.

Orbit dimensions come from the closed formulas in :func:`orbit_dim`; the
oracle :func:`centralizer_dim_oracle` rebuilds them from an explicit nilpotent
matrix by exact rank computation so the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .linalg import rank
from .partitions import Partition, dominates, dual, in_P_epsilon, make_partition, partitions_of

KINDS = ("sl", "so", "sp")
ORACLE_CAP = 10


@dataclass(frozen=True, order=True)
class AlgebraKind:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown algebra kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 2:
            raise ValueError(f"matrix size must be at least 2, got {self.n}")
        if self.kind == "sp" and self.n % 2:
            raise ValueError(f"sp requires even n, got {self.n}")

    @property
    def eps(self) -> int | None:
        return {"sl": None, "so": 0, "sp": 1}[self.kind]

    @property
    def dimension(self) -> int:
        n = self.n
        return {"sl": n * n - 1, "so": n * (n - 1) // 2, "sp": n * (n + 1) // 2}[self.kind]

    def __str__(self) -> str:
        return f"{self.kind}_{self.n}"


@dataclass(frozen=True, order=True)
class NilpotentOrbit:
    algebra: AlgebraKind
    jordan_type: Partition

    def __post_init__(self):
        if self.jordan_type.n != self.algebra.n:
            raise ValueError(f"{self.jordan_type} is not a partition of {self.algebra.n}")
        eps = self.algebra.eps
        if eps is not None and not in_P_epsilon(self.jordan_type, eps):
            raise ValueError(f"{self.jordan_type} is not a Jordan type in {self.algebra}")

    @property
    def eps(self) -> int | None:
        return self.algebra.eps

    def __str__(self) -> str:
        return f"O_{self.jordan_type.compact()} in {self.algebra}"


def orbit(kind: str, n: int, parts) -> NilpotentOrbit:
    d = parts if isinstance(parts, Partition) else make_partition(parts)
    return NilpotentOrbit(AlgebraKind(kind, n), d)


class EdgeTag(str, Enum):
    ISOMORPHISM = "Isomorphism"
    ISO_CODIM2 = "IsoCodim2"
    MET = "MET"


@dataclass(frozen=True)
class EdgeClass:
    """How two resolutions of the same orbit closure are related.

    ``center`` is the Jordan type of the center orbit and is set exactly for MET.
    """

    tag: EdgeTag
    center: Partition | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "tag", EdgeTag(self.tag))
        if (self.tag is EdgeTag.MET) != (self.center is not None):
            raise ValueError("a center is required for MET and forbidden otherwise")

    @classmethod
    def isomorphism(cls) -> "EdgeClass":
        return cls(EdgeTag.ISOMORPHISM)

    @classmethod
    def iso_codim2(cls) -> "EdgeClass":
        return cls(EdgeTag.ISO_CODIM2)

    @classmethod
    def met(cls, center: Partition) -> "EdgeClass":
        return cls(EdgeTag.MET, center)

    def __str__(self) -> str:
        if self.tag is EdgeTag.MET:
            return f"MET center {self.center.compact()}"
        return self.tag.value


def orbit_dim(o: NilpotentOrbit) -> int:
    n = o.algebra.n
    d = o.jordan_type
    squares = sum(c * c for c in dual(d))
    odd = sum(1 for p in d if p % 2)
    kind = o.algebra.kind
    if kind == "sl":
        return n * n - squares
    if kind == "so":
        return (n * n - n) // 2 - (squares - odd) // 2
    return (n * n + n) // 2 - (squares + odd) // 2


# --- centralizer oracle --------------------------------------------------------


def _zeros(n):
    return [[Fraction(0)] * n for _ in range(n)]


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _bracket(x, y):
    xy, yx = _matmul(x, y), _matmul(y, x)
    return [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(xy, yx)]


def nilpotent_representative(o: NilpotentOrbit):
    """An explicit nilpotent x of the orbit's Jordan type, plus the invariant form.

    Returns ``(x, form)`` where ``form`` is None for sl.  For so/sp, parts of the
    form's own parity get one self-dual block each; the other parts come in
    pairs W + W* with x acting on W* by minus the transposed shift.
    """
    n = o.algebra.n
    x = _zeros(n)
    form = None if o.eps is None else _zeros(n)
    sign = 1 if o.eps == 0 else -1  # symmetric vs alternating pairing of W with W*
    pos = 0
    parts = list(o.jordan_type)
    while parts:
        s = parts.pop(0)
        if o.eps is None or s % 2 != o.eps:
            # single block: x e_i = e_{i+1}
            for i in range(s - 1):
                x[pos + i + 1][pos + i] = Fraction(1)
            if form is not None:
                for i in range(s):
                    form[pos + i][pos + s - 1 - i] = Fraction((-1) ** i)
            pos += s
        else:
            parts.remove(s)
            w, f = pos, pos + s
            for i in range(s - 1):
                x[w + i + 1][w + i] = Fraction(1)
                x[f + i][f + i + 1] = Fraction(-1)
            for i in range(s):
                form[w + i][f + i] = Fraction(1)
                form[f + i][w + i] = Fraction(sign)
            pos += 2 * s
    return x, form


def algebra_basis(alg: AlgebraKind, form=None):
    """Basis of the Lie algebra as explicit matrices.

    For so/sp the algebra is form^{-1} S with S antisymmetric (so) or symmetric (sp).
    """
    n = alg.n
    basis = []
    if alg.kind == "sl":
        for i in range(n):
            for j in range(n):
                if i != j:
                    m = _zeros(n)
                    m[i][j] = Fraction(1)
                    basis.append(m)
        for i in range(n - 1):
            m = _zeros(n)
            m[i][i], m[i + 1][i + 1] = Fraction(1), Fraction(-1)
            basis.append(m)
        return basis
    # form is a signed permutation matrix, so its inverse is its transpose.
    finv = _transpose(form)
    sym_sign = -1 if alg.kind == "so" else 1
    for i in range(n):
        for j in range(i, n):
            if i == j and sym_sign == -1:
                continue
            s = _zeros(n)
            s[i][j] = Fraction(1)
            s[j][i] += Fraction(sym_sign) if i != j else 0
            basis.append(_matmul(finv, s))
    return basis


def centralizer_dim_oracle(o: NilpotentOrbit, cap: int = ORACLE_CAP) -> int:
    """Orbit dimension recomputed as dim g - dim of the centralizer of x in g.

    Builds x explicitly, checks it lies in g with the requested Jordan type, and
    returns the rank of ad(x) restricted to g.
    """
    n = o.algebra.n
    if n > cap:
        raise ValueError(f"oracle capped at n={cap}, got n={n}")
    x, form = nilpotent_representative(o)
    if form is not None:
        check = [[p + q for p, q in zip(r1, r2)] for r1, r2 in zip(_matmul(_transpose(x), form), _matmul(form, x))]
        if any(any(v for v in row) for row in check):
            raise AssertionError(f"representative for {o} does not preserve the form")
    power = x
    for k in range(1, o.jordan_type.parts[0] + 1):
        expected = sum(max(p - k, 0) for p in o.jordan_type)
        if rank(power) != expected:
            raise AssertionError(f"representative for {o} has the wrong Jordan type")
        power = _matmul(power, x)
    basis = algebra_basis(o.algebra, form)
    if len(basis) != o.algebra.dimension:
        raise AssertionError("algebra basis has the wrong size")
    images = [[v for row in _bracket(x, y) for v in row] for y in basis]
    return rank(images)


# --- closure order and the two stratified flops --------------------------------


def closure_strata(o: NilpotentOrbit) -> list[Partition]:
    d = o.jordan_type
    eps = o.eps
    strata = [e for e in partitions_of(d.n) if dominates(d, e) and (eps is None or in_P_epsilon(e, eps))]
    return sorted(strata, key=lambda e: (-orbit_dim(NilpotentOrbit(o.algebra, e)), tuple(-p for p in e)))


def two_column(k: int, n: int) -> Partition:
    return make_partition([2] * k + [1] * (n - 2 * k))


def two_column_classify(k: int, n: int) -> EdgeClass:
    """Birational map T*G(k,n) --> T*G(n-k,n) over the closure of O_[2^k,1^(n-2k)]."""
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k and 2k <= n, got k={k}, n={n}")
    if n == 2 * k:
        return EdgeClass.isomorphism()
    if n == 2 * k + 1:
        return EdgeClass.met(make_partition([2] * (k - 1) + [1] * 3))
    return EdgeClass.iso_codim2()


def type_D_flop_classify(k: int) -> EdgeClass:
    """Flop between the two isotropic Grassmannian components over O_[2^(k-1),1^2] in so_2k."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"type D stratified flop needs odd k >= 3, got {k}")
    return EdgeClass.iso_codim2()


def stratum_fiber_dim(k: int, n: int, i: int) -> int:
    """dim G(k-i, n-2i), the fiber of T*G(k,n) over O_[2^i,1^(n-2i)]."""
    if not 0 <= i <= min(k, n - k):
        raise ValueError(f"stratum index {i} out of range for k={k}, n={n}")
    return (k - i) * (n - k - i)


def two_column_codims(k: int, n: int) -> dict[int, tuple[int, int]]:
    """Codimension of the preimage of each lower stratum i < k, under pi and pi+."""
    top = orbit_dim(orbit("sl", n, two_column(k, n)))
    out = {}
    for i in range(k):
        base = orbit_dim(orbit("sl", n, two_column(i, n)))
        out[i] = (top - base - stratum_fiber_dim(k, n, i), top - base - stratum_fiber_dim(n - k, n, i))
    return out


def two_column_classify_by_dimension(k: int, n: int) -> tuple[EdgeClass, int | None]:
    """Re-derive the two-column classification from a dimension count.

    Returns the class and the stratum index attaining the minimal codimension.
    """
    if k == n - k:
        return EdgeClass.isomorphism(), None
    codims = two_column_codims(k, n)
    worst = min(codims, key=lambda i: (min(codims[i]), i))
    c = min(codims[worst])
    if c < 2:
        raise AssertionError(f"complement of codimension {c} < 2 for k={k}, n={n}")
    if c == 2:
        return EdgeClass.met(two_column(worst, n)), worst
    return EdgeClass.iso_codim2(), worst
