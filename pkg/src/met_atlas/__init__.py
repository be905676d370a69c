"""Symplectic resolutions of nilpotent orbit closures and of symplectic quotients.

Enumerates polarizations of nilpotent orbits in classical Lie algebras, classifies
the birational maps between adjacent resolutions, and checks the conjugacy-class
condition on finite subgroups of GL(V).
"""

from .graph import (
    NoPathError,
    NoPolarizationError,
    ResolutionGraph,
    build_graph,
    classify_swap_A,
    classify_swap_BCD,
    connect,
    met_center_A,
    met_center_BCD,
    net_centers,
)
from .orbits import (
    AlgebraKind,
    EdgeClass,
    EdgeTag,
    NilpotentOrbit,
    centralizer_dim_oracle,
    closure_strata,
    orbit,
    orbit_dim,
    stratum_fiber_dim,
    two_column_classify,
    type_D_flop_classify,
)
from .partitions import (
    Partition,
    dominates,
    dual,
    in_P_epsilon,
    in_Pai,
    index_set_I,
    make_partition,
    ord_partition,
    spaltenstein,
    spaltenstein_fiber,
)
from .polarizations import FlagType, Resolution, cumulative_dims, polarizations, polarizations_A, polarizations_BCD

__version__ = "0.1.0"
