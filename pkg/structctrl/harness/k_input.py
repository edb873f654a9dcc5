"""
structctrl/harness/k_input.py - k 入力可制御性の確率1検定と最小入力数の推定

ランダムな実現で数値的 LARC が一度でも成立すれば、そのパターンは m 入力で
可制御な実現を持つ（一方向の検定で、失敗は非可制御の証明にはならない）。
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from structctrl.config import DEFAULT_CONFIG
from structctrl.core.pattern import Pattern
from structctrl.core.pattern_graph import is_structurally_controllable
from structctrl.core.se_algebra import larc_numeric, sample_realizations

logger = logging.getLogger(__name__)

CONTROLLABLE_WHP = "controllable_whp"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class KInputReport:
    """k 入力検定の結果"""
    pattern: Pattern
    m: int
    trials: int
    successes: int
    trials_run: int
    drift: bool = False

    @property
    def verdict(self) -> str:
        return CONTROLLABLE_WHP if self.successes >= 1 else INCONCLUSIVE

    def to_dict(self) -> dict:
        return {
            "lambda": [list(e) for e in self.pattern.sorted_entries()],
            "n": self.pattern.n,
            "m": self.m,
            "drift": self.drift,
            "trials": self.trials,
            "trials_run": self.trials_run,
            "successes": self.successes,
            "verdict": self.verdict,
        }


def k_input_check(pattern: Pattern, m: int, trials: int = DEFAULT_CONFIG["trials"],
                  seed: Optional[int] = DEFAULT_CONFIG["seed"], tol: float = DEFAULT_CONFIG["tol"],
                  drift: bool = False) -> KInputReport:
    """
    m 個のランダムな実現で数値的 LARC を試す

    試行ごとにシードを分割するので、結果はシードだけで決まる。
    drift=True の場合はドリフト項 B_0 として実現を1つ追加する（m 入力 + ドリフト）。

    Args:
        pattern: パターン Λ
        m: 入力数 (>= 1)
        trials: 試行回数 (>= 1)
        seed: 乱数シード
        tol: 数値的階数判定の相対許容誤差
        drift: ドリフト項を生成子に含めるか

    Returns:
        KInputReport: 最初の成功で打ち切った結果

    Raises:
        ValueError: m または trials が 1 未満の場合
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")

    generators = m + 1 if drift else m
    children = np.random.SeedSequence(seed).spawn(trials)
    for trial, child in enumerate(children, 1):
        realizations = sample_realizations(pattern, generators, child)
        if larc_numeric(realizations, tol):
            logger.debug(f"{pattern}: m={m} succeeded on trial {trial}")
            return KInputReport(pattern, m, trials, 1, trial, drift)
    logger.debug(f"{pattern}: m={m} inconclusive after {trials} trials")
    return KInputReport(pattern, m, trials, 0, trials, drift)


def min_inputs(pattern: Pattern, trials: int = DEFAULT_CONFIG["trials"],
               seed: Optional[int] = DEFAULT_CONFIG["seed"], tol: float = DEFAULT_CONFIG["tol"],
               drift: bool = False) -> Optional[int]:
    """
    k_input_check が成功する最小の m ∈ {1, ..., |Λ|}

    ランダムな実現に基づく確率1の推定値。パターンが構造的可制御でない場合や、
    試行予算内でどの m も成功しなかった場合は None。
    """
    if not is_structurally_controllable(pattern):
        logger.info(f"{pattern} is not structurally controllable; no input count suffices")
        return None
    for m in range(1, len(pattern) + 1):
        if k_input_check(pattern, m, trials, seed, tol, drift).verdict == CONTROLLABLE_WHP:
            return m
    logger.warning(f"{pattern}: no m ≤ {len(pattern)} succeeded within {trials} trials")
    return None
