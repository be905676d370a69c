"""Finite subgroups of GL(V) over Q(zeta_m) and the codimension-2 conjugacy test.

For each codimension-2 subspace H of V, collect {g in G : V^g = H} and ask
whether it is exactly one conjugacy class of G.  In dimension 2 the only such H
is {0}, and the answer decides uniqueness of the projective symplectic
resolution of (T*C^2)/G.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .cyclotomic import CycloNumber
from .linalg import nullspace, rref

log = logging.getLogger(__name__)

DEFAULT_CAP = 100_000

Matrix = tuple[tuple[CycloNumber, ...], ...]


class GroupTooLargeError(ValueError):
    pass


def identity(dim: int, m: int) -> Matrix:
    one, zero = CycloNumber(m, [1]), CycloNumber(m)
    return tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    zero = CycloNumber(a[0][0].m)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), zero) for col in cols) for row in a)


def mat_apply(a: Matrix, v) -> tuple[CycloNumber, ...]:
    zero = CycloNumber(a[0][0].m)
    return tuple(sum((x * y for x, y in zip(row, v)), zero) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a), a[0][0].m)
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def mat_str(a: Matrix) -> str:
    return "[" + "; ".join(", ".join(str(x) for x in row) for row in a) + "]"


def make_matrix(rows, m: int) -> Matrix:
    """Matrix from nested entries; each entry is a coefficient list or a single rational."""
    out = []
    for row in rows:
        out.append(tuple(CycloNumber(m, x if isinstance(x, (list, tuple)) else [x]) for x in row))
    if any(len(r) != len(out) for r in out):
        raise ValueError("generators must be square matrices")
    return tuple(out)


@dataclass(frozen=True)
class Subspace:
    """Subspace of V = Q(zeta_m)^dim, stored as a reduced row echelon basis."""

    dim_ambient: int
    basis: tuple[tuple[CycloNumber, ...], ...]

    @classmethod
    def span(cls, dim_ambient: int, vectors) -> "Subspace":
        reduced, _ = rref(vectors)
        return cls(dim_ambient, tuple(tuple(r) for r in reduced))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.dim_ambient - self.dim

    def image(self, g: Matrix) -> "Subspace":
        return Subspace.span(self.dim_ambient, [mat_apply(g, v) for v in self.basis])

    def __str__(self) -> str:
        if not self.basis:
            return "{0}"
        return "span(" + ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis) + ")"

    def to_json(self) -> list:
        return [[x.to_json() for x in v] for v in self.basis]


def fixed_subspace(g: Matrix) -> Subspace:
    """V^g = ker(g - 1)."""
    dim, m = len(g), g[0][0].m
    zero, one = CycloNumber(m), CycloNumber(m, [1])
    shifted = [[x - (one if i == j else zero) for j, x in enumerate(row)] for i, row in enumerate(g)]
    return Subspace.span(dim, nullspace(shifted, dim, zero, one))


@dataclass
class MatrixGroup:
    dim: int
    order_m: int
    generators: list[Matrix]
    elements: list[Matrix]
    orders: list[int]
    inverses: list[int]
    classes: list[list[int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, g: Matrix) -> int:
        return self._where[g]

    def __post_init__(self):
        self._where = {g: i for i, g in enumerate(self.elements)}

    def class_of(self, i: int) -> int:
        return next(k for k, c in enumerate(self.classes) if i in c)


def group_closure(gens: list[Matrix], cap: int = DEFAULT_CAP, dim: int | None = None, m: int | None = None) -> MatrixGroup:
    """Breadth-first closure of the generators under right multiplication.

    Elements are kept in insertion order starting with the identity.  Finiteness
    is not assumed: exceeding ``cap`` elements raises GroupTooLargeError.
    """
    if gens:
        dim, m = len(gens[0]), gens[0][0][0].m
        if any(len(g) != dim or g[0][0].m != m for g in gens):
            raise ValueError("generators must share dimension and cyclotomic order")
    elif dim is None or m is None:
        raise ValueError("an empty generator list needs dim and m")
    one = identity(dim, m)
    elements = [one]
    where = {one: 0}
    i = 0
    while i < len(elements):
        g = elements[i]
        for s in gens:
            h = mat_mul(g, s)
            if h not in where:
                if len(elements) >= cap:
                    raise GroupTooLargeError(f"closure exceeded {cap} elements")
                where[h] = len(elements)
                elements.append(h)
        i += 1
    orders, inverses = [], []
    for g in elements:
        k, power, prev = 1, g, one
        while power != one:
            prev, power = power, mat_mul(power, g)
            k += 1
        orders.append(k)
        inverses.append(where[prev])
    group = MatrixGroup(dim, m, list(gens), elements, orders, inverses)
    group.classes = conjugacy_classes(group)
    return group


def conjugacy_classes(G: MatrixGroup) -> list[list[int]]:
    """Classes as sorted index lists, ordered by their first element."""
    assigned: set[int] = set()
    classes = []
    for i, g in enumerate(G.elements):
        if i in assigned:
            continue
        cls = sorted({G.index(mat_mul(mat_mul(h, g), G.elements[G.inverses[k]])) for k, h in enumerate(G.elements)})
        assigned.update(cls)
        classes.append(cls)
    return classes


def fixed_space_groups(G: MatrixGroup) -> dict[Subspace, list[int]]:
    groups: dict[Subspace, list[int]] = {}
    for i, g in enumerate(G.elements):
        if i == 0:
            continue
        groups.setdefault(fixed_subspace(g), []).append(i)
    return groups


@dataclass
class Witness:
    subspace: Subspace
    class_count: int
    element_count: int
    single_class: bool
    mutually_conjugate: bool
    classes: list[list[int]]


@dataclass
class Verdict:
    condition_holds: bool
    witnesses: list[Witness]
    reflection_single_class: bool
    gl2_uniqueness: bool | None = None
    condition_holds_weak: bool = True

    @property
    def codim2_subspace_count(self) -> int:
        return len(self.witnesses)


def _witness(G: MatrixGroup, H: Subspace, members: list[int]) -> Witness:
    touched = sorted({G.class_of(i) for i in members})
    classes = [G.classes[k] for k in touched]
    single = len(classes) == 1 and set(classes[0]) == set(members)
    mutual = len(touched) == 1
    if single != mutual:
        log.warning("fixed space %s: elements are mutually conjugate but do not fill a class", H)
    return Witness(H, len(touched), len(members), single, mutual, classes)


def mckay_component_count(G: MatrixGroup, H: Subspace) -> int:
    """Number of G-classes meeting {h : V^h = H}."""
    if H.codim != 2:
        raise ValueError(f"expected a codimension-2 subspace, got codimension {H.codim}")
    members = [i for i, g in enumerate(G.elements) if fixed_subspace(g) == H]
    return len({G.class_of(i) for i in members})


def reflection_class_check(G: MatrixGroup) -> bool:
    """True iff the complex reflections (codim-1 fixed space) are absent or one class."""
    reflections = {i for i, g in enumerate(G.elements) if fixed_subspace(g).codim == 1}
    if not reflections:
        return True
    return any(set(c) == reflections for c in G.classes)


def codim2_single_class_check(G: MatrixGroup) -> Verdict:
    witnesses = [
        _witness(G, H, members)
        for H, members in fixed_space_groups(G).items()
        if H.codim == 2
    ]
    return Verdict(
        condition_holds=all(w.single_class for w in witnesses),
        witnesses=witnesses,
        reflection_single_class=reflection_class_check(G),
        gl2_uniqueness=all(w.single_class for w in witnesses) if G.dim == 2 else None,
        condition_holds_weak=all(w.mutually_conjugate for w in witnesses),
    )


def gl2_verdict(G: MatrixGroup) -> Verdict:
    """Uniqueness of the projective symplectic resolution of (T*C^2)/G.

    The elements with no eigenvalue 1 are those with V^g = {0}; uniqueness holds
    when they form a single conjugacy class (vacuously if there are none).
    """
    if G.dim != 2:
        raise ValueError(f"gl2_verdict needs dim 2, got {G.dim}")
    return codim2_single_class_check(G)


# --- input / output -----------------------------------------------------------------


def load_group(data: dict | str | Path, cap: int | None = None) -> MatrixGroup:
    """Read ``{"dim", "cyclotomic_order", "generators", "cap"?}`` and close the group."""
    if isinstance(data, (str, Path)):
        data = json.loads(Path(data).read_text())
    dim, m = int(data["dim"]), int(data["cyclotomic_order"])
    gens = [make_matrix(g, m) for g in data["generators"]]
    if any(len(g) != dim for g in gens):
        raise ValueError(f"generator size does not match dim={dim}")
    if cap is None:
        cap = int(data.get("cap") or DEFAULT_CAP)
    return group_closure(gens, cap=cap, dim=dim, m=m)


def verdict_to_dict(G: MatrixGroup, v: Verdict) -> dict[str, Any]:
    return {
        "dim": G.dim,
        "cyclotomic_order": G.order_m,
        "group_order": len(G),
        "conjugacy_class_count": len(G.classes),
        "condition_holds": v.condition_holds,
        "condition_holds_weak": v.condition_holds_weak,
        "codim2_subspace_count": v.codim2_subspace_count,
        "witnesses": [
            {
                "subspace": w.subspace.to_json(),
                "subspace_text": str(w.subspace),
                "class_count": w.class_count,
                "element_count": w.element_count,
                "single_class": w.single_class,
                "mutually_conjugate": w.mutually_conjugate,
                "classes": [[mat_str(G.elements[i]) for i in c] for c in w.classes],
            }
            for w in v.witnesses
        ],
        "reflection_single_class": v.reflection_single_class,
        "gl2_uniqueness": v.gl2_uniqueness,
    }


def rational_matrix(rows) -> list[list[str]]:
    """Helper for writing input files from plain rational matrices."""
    return [[str(Fraction(x)) for x in row] for row in rows]
