"""
structctrl.core - リー代数 se(n)、パターングラフ、最疎設計のコア機能を提供するモジュール
"""

from structctrl.core.pattern import Pattern
from structctrl.core.se_algebra import (
    BasisElement, CanonicalSubspace, DenseElement, SignedBasisTerm,
    dense_of, dense_bracket, structural_bracket, derived_step, lie_closure,
    larc_exact, larc_numeric, sample_realization,
)
from structctrl.core.pattern_graph import (
    PatternGraph, ClosureTrace, graph_of_pattern, closure_step, transitive_closure,
    is_complete, is_structurally_controllable, is_structurally_accessible,
    graph_of_subspace, subspace_of_graph,
)
from structctrl.core.sparse_design import (
    CostMatrix, TreePattern, sparsest_pattern, enumerate_minimal,
    min_cost_pattern, brute_force_min_cost,
)
