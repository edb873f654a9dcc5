"""
structctrl/harness/sweep.py - 全パターン探索によるグラフ判定と厳密 LARC の照合
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple

from structctrl.config import DecisionMethods, Limits
from structctrl.core.pattern import Pattern, candidate_entries
from structctrl.core.pattern_graph import is_structurally_controllable
from structctrl.core.se_algebra import larc_exact
from structctrl.harness.memory_manager import MemoryManager

logger = logging.getLogger(__name__)


class PatternVerdict(NamedTuple):
    """1パターンに対する3つの判定"""
    mask: int
    pattern: Pattern
    closure: bool
    connectivity: bool
    oracle: bool

    @property
    def agrees(self) -> bool:
        return self.closure == self.connectivity == self.oracle


class Disagreement(NamedTuple):
    """グラフ判定と LARC が食い違ったパターン"""
    pattern: Pattern
    graph_verdict: bool
    connectivity_verdict: bool
    oracle_verdict: bool


@dataclass
class SweepReport:
    """全探索の結果"""
    n: int
    patterns_total: int
    agree: int
    disagreements: List[Disagreement] = field(default_factory=list)
    elapsed: float = 0.0
    controllable: int = 0
    rows: List[PatternVerdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def to_dict(self, include_rows: bool = False) -> dict:
        payload = {
            "n": self.n,
            "patterns_total": self.patterns_total,
            "agree": self.agree,
            "controllable": self.controllable,
            "disagreements": [
                {
                    "lambda": [list(e) for e in d.pattern.sorted_entries()],
                    "graph_verdict": d.graph_verdict,
                    "connectivity_verdict": d.connectivity_verdict,
                    "oracle_verdict": d.oracle_verdict,
                }
                for d in self.disagreements
            ],
            "elapsed": round(self.elapsed, 6),
        }
        if include_rows:
            payload["rows"] = [
                {"lambda": [list(e) for e in r.pattern.sorted_entries()],
                 "closure": r.closure, "connectivity": r.connectivity, "oracle": r.oracle}
                for r in self.rows
            ]
        return payload


def evaluate_pattern(n: int, mask: int) -> PatternVerdict:
    """マスク番号のパターンを3つの方法で判定する"""
    pattern = Pattern.from_mask(n, mask)
    return PatternVerdict(
        mask,
        pattern,
        is_structurally_controllable(pattern, DecisionMethods.CLOSURE),
        is_structurally_controllable(pattern, DecisionMethods.CONNECTIVITY),
        larc_exact(pattern),
    )


def _evaluate_chunk(args: Tuple[int, int, int]) -> List[PatternVerdict]:
    n, start, stop = args
    return [evaluate_pattern(n, mask) for mask in range(start, stop)]


def _chunks(total: int, workers: int) -> List[Tuple[int, int]]:
    size = max(1, -(-total // (workers * 4)))
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def sweep(n: int, workers: int = 1, memory_manager: Optional[MemoryManager] = None) -> SweepReport:
    """
    2^(n(n+1)/2) 個の全パターンで closure / connectivity 判定と larc_exact を照合する

    Args:
        n: 次元（1..Limits.MAX_SWEEP_N）
        workers: 並列プロセス数（1 なら逐次）
        memory_manager: メモリ監視（省略時は新規作成）

    Returns:
        SweepReport: パターンのマスク順に並んだ結果

    Raises:
        ValueError: n が範囲外、または workers < 1 の場合
    """
    if not 1 <= n <= Limits.MAX_SWEEP_N:
        raise ValueError(f"sweep supports 1 ≤ n ≤ {Limits.MAX_SWEEP_N}, got n={n}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    memory_manager = memory_manager or MemoryManager(logger=logger)
    total = 1 << len(candidate_entries(n))
    logger.info(f"Sweeping {total} patterns for n={n} with {workers} worker(s)")
    start_time = time.time()

    rows: List[PatternVerdict] = []
    chunks = [(n, start, stop) for start, stop in _chunks(total, workers)]
    if workers == 1:
        for chunk in chunks:
            rows.extend(_evaluate_chunk(chunk))
            memory_manager.tick(chunk[2] - chunk[1])
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for chunk_rows in executor.map(_evaluate_chunk, chunks):
                rows.extend(chunk_rows)
                memory_manager.tick(len(chunk_rows))

    # マスク順に並べて逐次実行と同じ結果にする
    rows.sort(key=lambda r: r.mask)
    report = summarize_rows(n, rows, time.time() - start_time)
    logger.info(f"n={n}: {report.agree}/{report.patterns_total} agree, "
                f"{report.controllable} controllable, {report.elapsed:.2f}s")
    for d in report.disagreements:
        logger.error(f"Disagreement on {d.pattern}: closure={d.graph_verdict}, "
                     f"connectivity={d.connectivity_verdict}, larc={d.oracle_verdict}")
    return report


def summarize_rows(n: int, rows: Sequence[PatternVerdict], elapsed: float) -> SweepReport:
    disagreements = [
        Disagreement(r.pattern, r.closure, r.connectivity, r.oracle) for r in rows if not r.agrees
    ]
    return SweepReport(
        n=n,
        patterns_total=len(rows),
        agree=len(rows) - len(disagreements),
        disagreements=disagreements,
        elapsed=elapsed,
        controllable=sum(1 for r in rows if r.oracle),
        rows=list(rows),
    )


def check_inclusion_monotone(report: SweepReport) -> List[Tuple[Pattern, Pattern]]:
    """
    Λ ⊆ Λ' かつ Λ が可制御なのに Λ' が可制御でない組を返す（空であるべき）

    1要素を追加した上位パターンだけを調べれば推移的に全ての包含をカバーできる。
    """
    verdict = {r.mask: r.closure for r in report.rows}
    width = len(candidate_entries(report.n))
    violations = []
    for r in report.rows:
        if not r.closure:
            continue
        for bit in range(width):
            upper = r.mask | (1 << bit)
            if upper != r.mask and not verdict[upper]:
                violations.append((r.pattern, Pattern.from_mask(report.n, upper)))
    return violations
