"""
structctrl/core/pattern_graph.py - 実線／破線辺を持つパターングラフと推移的閉包

頂点は 1..n+1。実線辺は回転生成子 Ω̃_ij（頂点 1..n の間）、
破線辺は並進生成子 E_k(n+1)（頂点 n+1 に接続）に対応する。
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from structctrl.config import DecisionMethods
from structctrl.core.pattern import Pattern
from structctrl.core.se_algebra import BasisElement, CanonicalSubspace

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

__all__ = [
    "Pattern", "PatternGraph", "ClosureTrace",
    "graph_of_pattern", "closure_step", "transitive_closure", "is_complete",
    "solid_connected", "full_connected",
    "is_structurally_controllable", "is_structurally_accessible",
    "graph_of_subspace", "subspace_of_graph", "summarize_pattern", "redundant_entries",
]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PatternGraph:
    """パターングラフ G(B_Λ)"""

    n: int
    solid: FrozenSet[Edge] = frozenset()
    broken: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "solid", frozenset(self.solid))
        object.__setattr__(self, "broken", frozenset(self.broken))
        for i, j in self.solid:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"solid edge ({i},{j}) must join two vertices of 1..{self.n}")
        for i, j in self.broken:
            if not (1 <= i <= self.n and j == self.n + 1):
                raise ValueError(f"broken edge ({i},{j}) must be incident to vertex {self.n + 1}")

    @property
    def vertices(self) -> List[int]:
        return list(range(1, self.n + 2))

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self.solid | self.broken

    def adjacency(self) -> Dict[int, List[Tuple[int, bool]]]:
        """頂点ごとの (隣接頂点, 実線か) のリスト"""
        adjacent: Dict[int, List[Tuple[int, bool]]] = {v: [] for v in self.vertices}
        for i, j in sorted(self.solid):
            adjacent[i].append((j, True))
            adjacent[j].append((i, True))
        for i, j in sorted(self.broken):
            adjacent[i].append((j, False))
            adjacent[j].append((i, False))
        return adjacent

    def to_document(self) -> dict:
        return {
            "solid": [list(e) for e in sorted(self.solid)],
            "broken": [list(e) for e in sorted(self.broken)],
        }


@dataclass(frozen=True)
class ClosureTrace:
    """推移的閉包の各段 G^(0), G^(1), ..., と収束段"""

    steps: Tuple[PatternGraph, ...]
    converged_at: int

    @property
    def initial(self) -> PatternGraph:
        return self.steps[0]

    @property
    def final(self) -> PatternGraph:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps)


def graph_of_pattern(pattern: Pattern) -> PatternGraph:
    """パターン Λ からグラフ G(B_Λ) を作る"""
    return PatternGraph(pattern.n, pattern.solid_entries, pattern.broken_entries)


def closure_step(g: PatternGraph) -> PatternGraph:
    """
    推移的閉包を1段進める

    中間頂点 j を通る長さ2の道 (i, j), (j, k) ごとに:
    実線+実線なら実線 (i, k)、実線+破線なら破線 (i, n+1) を追加し、
    破線+破線なら何も追加しない。

    Args:
        g: パターングラフ

    Returns:
        PatternGraph: 1段閉包を取ったグラフ
    """
    solid: Set[Edge] = set(g.solid)
    broken: Set[Edge] = set(g.broken)
    for middle, incident in g.adjacency().items():
        for idx, (a, a_solid) in enumerate(incident):
            for b, b_solid in incident[idx + 1:]:
                if a == b:
                    continue
                if a_solid and b_solid:
                    solid.add(_edge(a, b))
                elif a_solid or b_solid:
                    # 破線側の端点は n+1、実線側の端点が新しい破線辺の根元になる
                    root = a if a_solid else b
                    broken.add((root, g.n + 1))
    return PatternGraph(g.n, frozenset(solid), frozenset(broken))


def transitive_closure(g: PatternGraph) -> ClosureTrace:
    """
    閉包を不動点まで反復し、各段のグラフを記録する

    Raises:
        AssertionError: 第 n 段が不動点でない場合（実装の不具合）
    """
    steps = [g]
    for _ in range(g.n):
        following = closure_step(steps[-1])
        if following == steps[-1]:
            break
        steps.append(following)
    if closure_step(steps[-1]) != steps[-1]:
        raise AssertionError(f"transitive closure did not converge by step n={g.n}")
    logger.debug(f"Transitive closure converged at step {len(steps) - 1}")
    return ClosureTrace(tuple(steps), len(steps) - 1)


def is_complete(g: PatternGraph) -> bool:
    """実線辺が K_n をなし、破線辺が n 本全て揃っているか（K_{n+1}）"""
    return len(g.solid) == g.n * (g.n - 1) // 2 and len(g.broken) == g.n


def _is_connected(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    """幅優先探索による連結判定（頂点1つのグラフは連結とみなす）"""
    vertices = list(vertices)
    if not vertices:
        return True
    adjacent: Dict[int, List[int]] = {v: [] for v in vertices}
    for a, b in edges:
        adjacent[a].append(b)
        adjacent[b].append(a)
    seen = {vertices[0]}
    queue = deque([vertices[0]])
    while queue:
        v = queue.popleft()
        for w in adjacent[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def solid_connected(g: PatternGraph) -> bool:
    """G(B_Λ(1:n, 1:n)) が頂点 1..n 上で連結か"""
    return _is_connected(range(1, g.n + 1), g.solid)


def full_connected(g: PatternGraph) -> bool:
    """G(B_Λ) が頂点 1..n+1 上で連結か"""
    return _is_connected(g.vertices, g.edges)


def is_structurally_controllable(pattern: Pattern, method: str = DecisionMethods.CLOSURE) -> bool:
    """
    パターンが構造的可制御かを判定する

    Args:
        pattern: パターン Λ
        method: closure（推移的閉包が完全グラフか）または
                connectivity（実線部分と全体がともに連結か）

    Returns:
        bool: 構造的可制御なら True
    """
    g = graph_of_pattern(pattern)
    if method == DecisionMethods.CLOSURE:
        return is_complete(transitive_closure(g).final)
    if method == DecisionMethods.CONNECTIVITY:
        return solid_connected(g) and full_connected(g)
    raise ValueError(f"unknown decision method: {method!r}")


def is_structurally_accessible(pattern: Pattern) -> bool:
    """ドリフト付き系の構造的可到達性（判定基準は閉包の完全性で可制御性と同じ）"""
    return is_complete(transitive_closure(graph_of_pattern(pattern)).final)


def graph_of_subspace(d: CanonicalSubspace) -> PatternGraph:
    """Ω̃_ij を実線 (i, j)、E_k(n+1) を破線 (k, n+1) に写す"""
    solid = frozenset((e.i, e.j) for e in d.generators if e.is_rotation)
    broken = frozenset((e.i, e.j) for e in d.generators if not e.is_rotation)
    return PatternGraph(d.n, solid, broken)


def subspace_of_graph(g: PatternGraph) -> CanonicalSubspace:
    """graph_of_subspace の逆写像 B(G)"""
    return CanonicalSubspace(g.n, frozenset(BasisElement(g.n, i, j) for i, j in g.edges))


def summarize_pattern(pattern: Pattern) -> dict:
    """
    check コマンドが出力する判定レコードを作る

    Returns:
        dict: 可制御性・可到達性・両判定法の一致・閉包段数・連結性
    """
    g = graph_of_pattern(pattern)
    trace = transitive_closure(g)
    by_closure = is_complete(trace.final)
    solid = solid_connected(g)
    full = full_connected(g)
    by_connectivity = solid and full
    if by_closure != by_connectivity:
        logger.error(f"Decision methods disagree on pattern {pattern}")
    return {
        "n": pattern.n,
        "lambda": [list(e) for e in pattern.sorted_entries()],
        "controllable": by_closure,
        # 可到達性の判定基準は閉包の完全性
        "accessible": by_closure,
        "method_agreement": by_closure == by_connectivity,
        "closure_steps": trace.converged_at,
        "solid_connected": solid,
        "full_connected": full,
    }


def redundant_entries(pattern: Pattern) -> List[Edge]:
    """単独で取り除いても構造的可制御性が保たれる要素のリスト"""
    if not is_structurally_controllable(pattern):
        return []
    return [
        entry for entry in pattern.sorted_entries()
        if is_structurally_controllable(pattern.without(entry), DecisionMethods.CONNECTIVITY)
    ]
