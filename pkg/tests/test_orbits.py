import pytest

from met_atlas.linalg import rank
from met_atlas.orbits import (
    AlgebraKind,
    EdgeClass,
    EdgeTag,
    NilpotentOrbit,
    algebra_basis,
    centralizer_dim_oracle,
    closure_strata,
    nilpotent_representative,
    orbit,
    orbit_dim,
    stratum_fiber_dim,
    two_column,
    two_column_classify,
    two_column_classify_by_dimension,
    two_column_codims,
    type_D_flop_classify,
)
from met_atlas.partitions import Partition, make_partition, partitions_of


def P(*parts):
    return Partition(parts)


def admissible(kind, n):
    for d in partitions_of(n):
        try:
            yield orbit(kind, n, d)
        except ValueError:
            pass


class TestTypes:
    def test_algebra_validation(self):
        with pytest.raises(ValueError):
            AlgebraKind("sp", 5)
        with pytest.raises(ValueError):
            AlgebraKind("so", 1)
        with pytest.raises(ValueError):
            AlgebraKind("e8", 248)

    def test_orbit_validation(self):
        with pytest.raises(ValueError):
            orbit("so", 6, [3, 2, 1])
        with pytest.raises(ValueError):
            orbit("sl", 5, [3, 2, 1])
        assert orbit("so", 10, [4, 4, 1, 1]).eps == 0

    def test_edge_class_center_rules(self):
        with pytest.raises(ValueError):
            EdgeClass(EdgeTag.MET)
        with pytest.raises(ValueError):
            EdgeClass(EdgeTag.ISO_CODIM2, P(1, 1))
        assert str(EdgeClass.met(P(3, 1, 1, 1))) == "MET center [3,1^3]"


class TestOrbitDim:
    def test_examples(self):
        assert orbit_dim(orbit("sl", 3, [1, 1, 1])) == 0
        assert orbit_dim(orbit("sl", 3, [2, 1])) == 4

    @pytest.mark.parametrize("n", range(2, 10))
    def test_two_column_is_cotangent_grassmannian(self, n):
        for k in range(1, n // 2 + 1):
            assert orbit_dim(orbit("sl", n, two_column(k, n))) == 2 * k * (n - k)

    def test_regular_orbits(self):
        # regular nilpotent: dim g - rank
        assert orbit_dim(orbit("sl", 5, [5])) == 24 - 4
        assert orbit_dim(orbit("sp", 6, [6])) == 21 - 3
        assert orbit_dim(orbit("so", 7, [7])) == 21 - 3

    def test_dims_are_even(self):
        for kind in ("sl", "so", "sp"):
            for n in range(2, 13):
                if kind == "sp" and n % 2:
                    continue
                for o in admissible(kind, n):
                    assert orbit_dim(o) % 2 == 0, o


class TestOracle:
    def test_examples(self):
        assert centralizer_dim_oracle(orbit("sl", 3, [2, 1])) == 4
        assert centralizer_dim_oracle(orbit("sl", 4, [1, 1, 1, 1])) == 0
        o = orbit("so", 10, [4, 4, 1, 1])
        assert centralizer_dim_oracle(o) == orbit_dim(o) == 32

    def test_cap(self):
        with pytest.raises(ValueError):
            centralizer_dim_oracle(orbit("sl", 11, [11]))

    @pytest.mark.parametrize("kind", ["so", "sp"])
    def test_representative_preserves_form(self, kind):
        for n in range(2, 9):
            if kind == "sp" and n % 2:
                continue
            for o in admissible(kind, n):
                x, form = nilpotent_representative(o)
                lhs = [[sum(x[k][i] * form[k][j] + form[i][k] * x[k][j] for k in range(n)) for j in range(n)]
                       for i in range(n)]
                assert not any(any(row) for row in lhs)
                sym = all(form[i][j] == (1 if kind == "so" else -1) * form[j][i] for i in range(n) for j in range(n))
                assert sym

    def test_algebra_basis_sizes(self):
        for kind, n in [("sl", 4), ("so", 5), ("so", 6), ("sp", 6)]:
            o = next(admissible(kind, n))
            _, form = nilpotent_representative(o)
            basis = algebra_basis(o.algebra, form)
            assert len(basis) == o.algebra.dimension
            assert rank([[v for row in b for v in row] for b in basis]) == len(basis)

    @pytest.mark.parametrize("kind", ["sl", "so", "sp"])
    def test_formula_matches_oracle_small(self, kind):
        for n in range(2, 7):
            if kind == "sp" and n % 2:
                continue
            for o in admissible(kind, n):
                assert orbit_dim(o) == centralizer_dim_oracle(o), o


class TestStrata:
    def test_two_column_strata(self):
        assert closure_strata(orbit("sl", 5, [2, 2, 1])) == [P(2, 2, 1), P(2, 1, 1, 1), P(1, 1, 1, 1, 1)]

    def test_zero_orbit_always_present(self):
        for kind, n in [("sl", 6), ("so", 7), ("sp", 6)]:
            for o in admissible(kind, n):
                strata = closure_strata(o)
                assert strata[0] == o.jordan_type
                assert strata[-1] == make_partition([1] * n)

    def test_zero_orbit_alone(self):
        assert closure_strata(orbit("sp", 4, [1, 1, 1, 1])) == [P(1, 1, 1, 1)]

    def test_so10_contains_met_center(self):
        assert P(3, 3, 2, 2) in closure_strata(orbit("so", 10, [4, 4, 1, 1]))


class TestTwoColumn:
    def test_examples(self):
        assert two_column_classify(2, 5) == EdgeClass.met(P(2, 1, 1, 1))
        assert two_column_classify(3, 6) == EdgeClass.isomorphism()
        assert two_column_classify(2, 7) == EdgeClass.iso_codim2()

    @pytest.mark.parametrize("k,n", [(0, 3), (3, 5)])
    def test_preconditions(self, k, n):
        with pytest.raises(ValueError):
            two_column_classify(k, n)

    def test_fiber_dims(self):
        assert stratum_fiber_dim(2, 5, 1) == 2
        assert stratum_fiber_dim(3, 7, 3) == 0
        assert stratum_fiber_dim(2, 6, 0) == 8
        with pytest.raises(ValueError):
            stratum_fiber_dim(2, 5, 3)

    def test_codim_formula(self):
        # the deepest non-open stratum i = k-1 has codimension n - 2k + 1 on both sides
        for n in range(3, 13):
            for k in range(1, (n - 1) // 2 + 1):
                codims = two_column_codims(k, n)
                assert codims[k - 1] == (n - 2 * k + 1, n - 2 * k + 1)
                assert all(min(c) >= n - 2 * k + 1 for c in codims.values())

    def test_dimension_recount_names_center_stratum(self):
        cls, stratum = two_column_classify_by_dimension(3, 7)
        assert cls == EdgeClass.met(P(2, 2, 1, 1, 1)) and stratum == 2


class TestTypeD:
    @pytest.mark.parametrize("k", [3, 5, 7])
    def test_odd(self, k):
        assert type_D_flop_classify(k) == EdgeClass.iso_codim2()

    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_rejects(self, k):
        with pytest.raises(ValueError):
            type_D_flop_classify(k)


def test_orbit_dataclass_is_hashable():
    assert len({orbit("sl", 3, [2, 1]), NilpotentOrbit(AlgebraKind("sl", 3), P(2, 1))}) == 1
