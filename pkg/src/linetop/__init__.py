"""Exact workbench for chains of topologies over computable linear orders.

Adjoin a bottom point z to an endpoint-free homogeneous linear order and
topologize with all rays [z,a) plus the punctured rays (z,b) below a
completion cut c.  As c ranges over the completion these topologies form
a chain; the library verifies the chain's structure (inclusion with
witnesses, homeomorphisms from automorphisms, join/meet formulas, gap
obstructions, multiplication by finite-support permutations) by exact
cut arithmetic plus seeded sampling, anchored by an exhaustive oracle on
finite point sets.
"""

from .errors import LinetopError
from .orders import Elem, Lex, OrderExpr, Q, Reverse, Sum, Z, automorphism_moving, cmp
from .completion import (
    CutPoint,
    SequenceFamily,
    SurdGap,
    TopOfCopy,
    cmp_cut,
    complete,
    cut_leq,
    cut_lt,
    extend_automorphism,
    gap_cut,
    point_cut,
    surd_cut,
)
from .topology import (
    BasicOpen,
    RayTopology,
    join,
    left_ray,
    meet,
    punctured_ray,
    ray_topology,
    saturate_sandwich,
    top_leq,
)
from .homeo import (
    FinitePerm,
    HomeoMap,
    chains_equal,
    count_distinct_chains,
    homeo_from_automorphism,
    incomparable_witness,
    perm_image_open,
    same_chain_class,
    verify_homeo,
)
from .finite_explorer import (
    condensation_preorder,
    enumerate_topologies,
    homeo_classes,
    reversibility_census,
)
from .textio import parse_cut, parse_elem, parse_order
from .suites import SuiteConfig, run_suite

__version__ = "0.1.0"
