"""
structctrl/harness/reporting.py - 全探索結果のレポート生成機能
"""

import os
import json
import logging
import platform
from datetime import datetime
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from structctrl import __version__
from structctrl.harness.memory_manager import MemoryManager
from structctrl.harness.sweep import SweepReport


def sweep_table(report: SweepReport) -> pd.DataFrame:
    """
    パターンごとの判定を表にする

    Args:
        report: 全探索の結果

    Returns:
        pd.DataFrame: mask, lambda, size, closure, connectivity, oracle, agrees の列
    """
    records = [
        {
            "mask": r.mask,
            "lambda": str(r.pattern),
            "size": len(r.pattern),
            "closure": r.closure,
            "connectivity": r.connectivity,
            "oracle": r.oracle,
            "agrees": r.agrees,
        }
        for r in report.rows
    ]
    columns = ["mask", "lambda", "size", "closure", "connectivity", "oracle", "agrees"]
    return pd.DataFrame.from_records(records, columns=columns)


def controllable_counts_by_size(report: SweepReport) -> Dict[int, int]:
    """パターンサイズごとの可制御パターン数"""
    table = sweep_table(report)
    if table.empty:
        return {}
    counts = table.groupby("size")["oracle"].sum()
    return {int(size): int(count) for size, count in counts.items()}


def _report_stem(log_dir: str, timestamp: str, reports: Sequence[SweepReport]) -> str:
    """同じ秒に書かれたレポートが上書きされないよう、次元の一覧と連番を付けた名前を返す"""
    dims = "-".join(str(r.n) for r in reports) or "none"
    stem = f"{timestamp}_n{dims}"
    counter = 1
    while os.path.exists(os.path.join(log_dir, f"summary_{stem}.json")):
        counter += 1
        stem = f"{timestamp}_n{dims}_{counter}"
    return stem


def create_summary_report(reports: Sequence[SweepReport], log_dir: str) -> Tuple[str, str, List[str]]:
    """
    全探索のサマリーレポートを作成

    Args:
        reports: 次元ごとの全探索結果
        log_dir: 出力ディレクトリ

    Returns:
        Tuple[str, str, List[str]]: (JSONレポートパス, テキストレポートパス, CSVパスのリスト)
    """
    logger = logging.getLogger(__name__)
    os.makedirs(log_dir, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    stem = _report_stem(log_dir, timestamp, reports)

    # 次元ごとの表を CSV に保存
    csv_files = []
    for report in reports:
        csv_file = os.path.join(log_dir, f"sweep_n{report.n}_{stem}.csv")
        sweep_table(report).to_csv(csv_file, index=False)
        csv_files.append(csv_file)

    total_patterns = sum(r.patterns_total for r in reports)
    total_agree = sum(r.agree for r in reports)
    summary = {
        "timestamp": timestamp,
        "structctrl_version": __version__,
        "python_version": platform.python_version(),
        "total_patterns": total_patterns,
        "total_agree": total_agree,
        "all_agree": total_agree == total_patterns,
        "memory_info": MemoryManager.get_memory_usage(),
        "sweeps": [
            dict(r.to_dict(), controllable_by_size=controllable_counts_by_size(r)) for r in reports
        ],
        "csv_files": csv_files,
    }

    summary_file = os.path.join(log_dir, f"summary_{stem}.json")
    with open(summary_file, 'w', encoding='utf-8') as f:
        json.dump(summary, f, indent=2, ensure_ascii=False)

    text_summary_file = os.path.join(log_dir, f"summary_{stem}.txt")
    with open(text_summary_file, 'w', encoding='utf-8') as f:
        # ヘッダー
        f.write("Structural Controllability Sweep Summary\n")
        f.write("========================================\n\n")
        f.write(f"Timestamp: {timestamp}\n")
        f.write(f"structctrl version: {__version__}\n\n")

        # 全体統計
        f.write("Overall Statistics:\n")
        f.write(f"  Patterns Checked: {total_patterns}\n")
        f.write(f"  Agreeing Verdicts: {total_agree}\n")
        f.write(f"  Disagreements: {total_patterns - total_agree}\n\n")

        # 次元別統計
        f.write("Per-dimension Statistics:\n")
        for r in reports:
            f.write(f"  n={r.n}:\n")
            f.write(f"    Patterns: {r.patterns_total}\n")
            f.write(f"    Agree: {r.agree}\n")
            f.write(f"    Controllable: {r.controllable}\n")
            f.write(f"    Elapsed: {r.elapsed:.3f}s\n")
            for size, count in sorted(controllable_counts_by_size(r).items()):
                f.write(f"    |Λ|={size}: {count} controllable\n")

        # 食い違いのあったパターン
        f.write("\nDisagreements:\n")
        for r in reports:
            for d in r.disagreements:
                f.write(f"  n={r.n} {d.pattern}: closure={d.graph_verdict}, "
                        f"connectivity={d.connectivity_verdict}, larc={d.oracle_verdict}\n")

    logger.info(f"Summary reports created:\n  JSON: {summary_file}\n  Text: {text_summary_file}")
    return summary_file, text_summary_file, csv_files
