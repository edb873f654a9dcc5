"""
structctrl/core/sparse_design.py - 最疎な構造的可制御パターンと最小コスト設計

最疎パターンは T_{n+1}（頂点 1..n への制限も全域木になる n+1 頂点の全域木）と
一対一に対応する。重み付き問題は「K_n 上の最小全域木 + 最安の破線辺」で解く。
"""

import heapq
import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Real
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

from structctrl.config import Limits
from structctrl.core.pattern import Pattern
from structctrl.core.pattern_graph import (
    Edge, graph_of_pattern, is_structurally_controllable, solid_connected,
)

logger = logging.getLogger(__name__)


class DisjointSet:
    """経路圧縮付きの素集合データ構造（頂点 1..n）"""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def copy(self) -> "DisjointSet":
        clone = DisjointSet(0)
        clone.parent = self.parent[:]
        return clone


@dataclass(frozen=True)
class CostMatrix:
    """
    コスト行列 C

    solid_costs は i < j <= n の対ごとに c_ij > 0 を1つだけ保持し C(j,i) = C(i,j)。
    broken_costs は k ごとの C(k, n+1)。第 n+1 行と対角はコスト 0。
    permissive=True のときだけ破線コスト 0 を許す。
    """

    n: int
    solid_costs: Mapping[Edge, Real]
    broken_costs: Mapping[int, Real]
    permissive: bool = False

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        object.__setattr__(self, "solid_costs", dict(self.solid_costs))
        object.__setattr__(self, "broken_costs", dict(self.broken_costs))

        expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        if set(self.solid_costs) != expected:
            missing = sorted(expected - set(self.solid_costs))
            extra = sorted(set(self.solid_costs) - expected)
            raise ValueError(f"solid costs must cover exactly i<j≤{n}; missing {missing}, unexpected {extra}")
        if set(self.broken_costs) != set(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - set(self.broken_costs))
            raise ValueError(f"broken costs must cover k=1..{n}; missing {missing}")
        for (i, j), value in self.solid_costs.items():
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"cost of ({i},{j}) must be positive and finite, got {value}")
        for k, value in self.broken_costs.items():
            if not (math.isfinite(value) and (value > 0 or (self.permissive and value == 0))):
                raise ValueError(f"cost of ({k},{n + 1}) must be positive and finite, got {value}")

    @classmethod
    def uniform(cls, n: int, value: Real = 1) -> "CostMatrix":
        """一様コスト（最小化は |Λ| の最小化に帰着する）"""
        solid = {(i, j): value for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        return cls(n, solid, {k: value for k in range(1, n + 1)})

    def cost(self, i: int, j: int) -> Real:
        """C(i, j)"""
        n = self.n
        if i == j or i == n + 1:
            return 0
        if j == n + 1:
            return self.broken_costs[i]
        return self.solid_costs[(min(i, j), max(i, j))]

    def weight(self, i: int, j: int) -> Real:
        """無向辺の重み w(i, j) = C(i, j) + C(j, i)"""
        return self.cost(i, j) + self.cost(j, i)

    def pattern_cost(self, pattern: Pattern) -> Real:
        """目的関数 Σ_{(i,j)∈Λ} C(i, j)"""
        if pattern.n != self.n:
            raise ValueError(f"dimension mismatch: pattern n={pattern.n}, costs n={self.n}")
        return sum((self.cost(i, j) for i, j in pattern.sorted_entries()), 0)

    @property
    def is_exact(self) -> bool:
        values = list(self.solid_costs.values()) + list(self.broken_costs.values())
        return all(isinstance(v, (int, Fraction)) for v in values)


@dataclass(frozen=True)
class TreePattern:
    """T_{n+1} の要素に対応する最疎パターン"""

    pattern: Pattern
    solid_tree: FrozenSet[Edge]
    broken_edge: Edge

    def __post_init__(self):
        n = self.pattern.n
        object.__setattr__(self, "solid_tree", frozenset(self.solid_tree))
        if len(self.solid_tree) != n - 1:
            raise ValueError(f"a spanning tree on {n} vertices needs {n - 1} edges, got {len(self.solid_tree)}")
        if self.broken_edge[1] != n + 1:
            raise ValueError(f"broken edge {self.broken_edge} must be incident to vertex {n + 1}")
        if self.pattern.entries != self.solid_tree | {self.broken_edge}:
            raise ValueError("pattern must consist of the solid tree and the broken edge")
        if not solid_connected(graph_of_pattern(self.pattern)):
            raise ValueError(f"solid edges {sorted(self.solid_tree)} do not span vertices 1..{n}")

    @classmethod
    def build(cls, n: int, solid_tree, broken_vertex: int) -> "TreePattern":
        broken_edge = (broken_vertex, n + 1)
        pattern = Pattern(n, frozenset(solid_tree) | {broken_edge})
        return cls(pattern, frozenset(solid_tree), broken_edge)

    def to_document(self) -> dict:
        return self.pattern.to_document()


def _check_enumeration_range(n: int) -> None:
    if not 1 <= n <= Limits.MAX_ENUMERATION_N:
        raise ValueError(f"n must be within 1..{Limits.MAX_ENUMERATION_N} for enumeration, got {n}")


def sparsest_pattern(n: int) -> TreePattern:
    """
    正準な最疎パターン: 道 (1,2),(2,3),...,(n-1,n) と破線辺 (1, n+1)

    Raises:
        ValueError: n < 1 の場合
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return TreePattern.build(n, [(k, k + 1) for k in range(1, n)], 1)


def enumerate_spanning_trees(n: int) -> Iterator[Tuple[Edge, ...]]:
    """
    K_n（頂点 1..n）の全域木を重複なく列挙する

    辺を正準順に並べ、各辺を「含める／除く」で探索空間を分割する。
    含める枝は閉路を作らない場合のみ、除く枝は残りの辺でまだ全域連結できる
    場合のみ進むので、到達した葉は全て異なる全域木になる。
    """
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]

    def can_still_span(chosen: List[Edge], start: int) -> bool:
        forest = DisjointSet(n)
        components = n
        for a, b in chosen + edges[start:]:
            if forest.union(a, b):
                components -= 1
        return components == 1

    def grow(index: int, chosen: List[Edge], forest: DisjointSet) -> Iterator[Tuple[Edge, ...]]:
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if index == len(edges):
            return
        a, b = edges[index]
        if forest.find(a) != forest.find(b):
            branch = forest.copy()
            branch.union(a, b)
            yield from grow(index + 1, chosen + [(a, b)], branch)
        if can_still_span(chosen, index + 1):
            yield from grow(index + 1, chosen, forest)

    yield from grow(0, [], DisjointSet(n))


@lru_cache(maxsize=None)
def _minimal_patterns(n: int) -> Tuple[TreePattern, ...]:
    trees = list(enumerate_spanning_trees(n))
    found = [TreePattern.build(n, tree, k) for tree in trees for k in range(1, n + 1)]
    found.sort(key=lambda tp: tp.pattern.sorted_entries())
    logger.debug(f"Enumerated {len(trees)} spanning trees and {len(found)} minimal patterns for n={n}")
    return tuple(found)


def enumerate_minimal(n: int) -> List[TreePattern]:
    """
    T_{n+1} の全要素（n^(n-2) 個の全域木 × n 通りの破線辺 = n^(n-1) 個）

    Raises:
        ValueError: n が列挙可能な範囲外の場合
    """
    _check_enumeration_range(n)
    return list(_minimal_patterns(n))


def minimum_spanning_tree(costs: CostMatrix) -> FrozenSet[Edge]:
    """
    Step 1: 重み w(i,j) = 2 c_ij の K_n 上の最小全域木（Prim 法、(重み, i, j) の辞書順で同点処理）
    """
    n = costs.n
    visited = {1}
    tree = set()
    heap = [(costs.weight(1, v), 1, v, v) for v in range(2, n + 1)]
    heapq.heapify(heap)
    while heap and len(visited) < n:
        weight, a, b, vertex = heapq.heappop(heap)
        if vertex in visited:
            continue
        visited.add(vertex)
        tree.add((a, b))
        for other in range(1, n + 1):
            if other not in visited:
                lo, hi = min(vertex, other), max(vertex, other)
                heapq.heappush(heap, (costs.weight(lo, hi), lo, hi, other))
    return frozenset(tree)


def cheapest_broken_edge(costs: CostMatrix) -> Edge:
    """Step 2: 頂点 n+1 に接続する最小コストの辺（同点は添字の小さい方）"""
    k = min(range(1, costs.n + 1), key=lambda v: (costs.broken_costs[v], v))
    return (k, costs.n + 1)


def min_cost_pattern(costs: CostMatrix) -> Tuple[TreePattern, Real]:
    """
    最小コストの構造的可制御パターン

    Returns:
        Tuple[TreePattern, Real]: (パターン, 目的関数値)
    """
    tree = minimum_spanning_tree(costs)
    k, _ = cheapest_broken_edge(costs)
    result = TreePattern.build(costs.n, tree, k)
    total = costs.pattern_cost(result.pattern)
    logger.debug(f"Minimum-cost pattern {result.pattern} with cost {total}")
    return result, total


def brute_force_min_cost(costs: CostMatrix) -> Real:
    """T_{n+1} を全列挙して目的関数の最小値を返す（min_cost_pattern の最適性の検証用）"""
    _check_enumeration_range(costs.n)
    return min(costs.pattern_cost(tp.pattern) for tp in _minimal_patterns(costs.n))


def extract_tree_pattern(pattern: Pattern) -> Optional[TreePattern]:
    """
    可制御なパターンに含まれる T_{n+1} の要素を1つ取り出す

    実線部分グラフの BFS 全域木に、添字最小の破線辺を加える。
    可制御でなければ None。
    """
    if not is_structurally_controllable(pattern):
        return None
    n = pattern.n
    adjacent: Dict[int, List[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in pattern.sorted_entries():
        if b <= n:
            adjacent[a].append(b)
            adjacent[b].append(a)
    tree = []
    seen = {1}
    frontier = [1]
    while frontier:
        following = []
        for v in frontier:
            for w in sorted(adjacent[v]):
                if w not in seen:
                    seen.add(w)
                    tree.append((min(v, w), max(v, w)))
                    following.append(w)
        frontier = following
    k = min(i for i, _ in pattern.broken_entries)
    return TreePattern.build(n, tree, k)
