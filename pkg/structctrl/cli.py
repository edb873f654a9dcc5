#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CLI - パターンファイルから構造的可制御性を判定するコマンドラインインターフェース

終了コード: 0 = 肯定的な判定、1 = 否定的な判定、2 = 入力エラー
"""

import json
import logging
import os
import sys
from typing import Any, Optional, Sequence

from structctrl.config import CommandLineArgs, Limits, parse_args
from structctrl.core.pattern_graph import (
    graph_of_pattern, is_structurally_accessible, redundant_entries, summarize_pattern,
    transitive_closure,
)
from structctrl.core.sparse_design import (
    brute_force_min_cost, enumerate_minimal, extract_tree_pattern, min_cost_pattern, sparsest_pattern,
)
from structctrl.harness.k_input import k_input_check, min_inputs
from structctrl.harness.logging_utils import setup_logging
from structctrl.harness.reporting import create_summary_report
from structctrl.harness.sweep import sweep
from structctrl.utils.dot_writer import write_closure_dot_files
from structctrl.utils.file_handler import FileHandler

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2

logger = logging.getLogger(__name__)


def emit(payload: Any):
    """レポートを JSON として標準出力に書き出す"""
    print(json.dumps(payload, indent=2, ensure_ascii=False, default=_json_default))


def _json_default(value):
    # Fraction などの厳密な数値は文字列で出力する
    return str(value)


def _number(value):
    return value if isinstance(value, (int, float)) else str(value)


def cmd_check(args: CommandLineArgs, files: FileHandler) -> int:
    """構造的可制御性の判定"""
    pattern = files.read_pattern_file(args.input_file)
    summary = summarize_pattern(pattern)
    emit(summary)
    return EXIT_OK if summary["controllable"] else EXIT_NEGATIVE


def cmd_accessible(args: CommandLineArgs, files: FileHandler) -> int:
    """ドリフト付き系の構造的可到達性の判定"""
    pattern = files.read_pattern_file(args.input_file)
    accessible = is_structurally_accessible(pattern)
    payload = {"n": pattern.n, "lambda": pattern.to_document()["lambda"], "accessible": accessible}
    if args.min_inputs:
        payload["min_inputs_with_drift"] = min_inputs(pattern, args.trials, args.seed, args.tol, drift=True)
    emit(payload)
    return EXIT_OK if accessible else EXIT_NEGATIVE


def cmd_closure(args: CommandLineArgs, files: FileHandler) -> int:
    """推移的閉包の各段を出力する"""
    pattern = files.read_pattern_file(args.input_file)
    trace = transitive_closure(graph_of_pattern(pattern))
    payload = {
        "n": pattern.n,
        "lambda": pattern.to_document()["lambda"],
        "converged_at": trace.converged_at,
        "steps": [dict(g.to_document(), step=l) for l, g in enumerate(trace.steps)],
    }
    if args.dot_dir:
        stem = os.path.splitext(os.path.basename(args.input_file))[0]
        payload["dot_files"] = write_closure_dot_files(trace, args.dot_dir, stem)
    emit(payload)
    return EXIT_OK


def cmd_sparsest(args: CommandLineArgs, files: FileHandler) -> int:
    """最疎パターンの出力"""
    if args.enumerate:
        patterns = enumerate_minimal(args.n)
        emit({"n": args.n, "count": len(patterns), "patterns": [tp.to_document() for tp in patterns]})
    else:
        emit(sparsest_pattern(args.n).to_document())
    return EXIT_OK


def cmd_mincost(args: CommandLineArgs, files: FileHandler) -> int:
    """最小コストの可制御パターン"""
    costs = files.read_cost_file(args.input_file, permissive=args.permissive)
    tree, total = min_cost_pattern(costs)
    payload = dict(tree.to_document(), cost=_number(total), exact=costs.is_exact)
    status = EXIT_OK
    if args.verify:
        if costs.n > Limits.MAX_VERIFY_N:
            raise ValueError(f"--verify supports n ≤ {Limits.MAX_VERIFY_N}, got n={costs.n}")
        optimum = brute_force_min_cost(costs)
        matched = optimum == total if costs.is_exact else abs(optimum - total) <= 1e-12 * max(1.0, abs(optimum))
        payload.update(brute_force_cost=_number(optimum), verify_match=bool(matched))
        status = EXIT_OK if matched else EXIT_NEGATIVE
    emit(payload)
    return status


def cmd_sweep(args: CommandLineArgs, files: FileHandler) -> int:
    """全パターン照合"""
    report = sweep(args.n, workers=args.workers)
    payload = report.to_dict()
    if args.report_dir:
        json_file, text_file, csv_files = create_summary_report([report], args.report_dir)
        payload["report_files"] = [json_file, text_file] + csv_files
    emit(payload)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_min_inputs(args: CommandLineArgs, files: FileHandler) -> int:
    """最小入力数の推定"""
    pattern = files.read_pattern_file(args.input_file)
    m = min_inputs(pattern, args.trials, args.seed, args.tol)
    checks = []
    if m is not None:
        checks = [k_input_check(pattern, k, args.trials, args.seed, args.tol).to_dict() for k in range(1, m + 1)]
    emit({
        "n": pattern.n,
        "lambda": pattern.to_document()["lambda"],
        "seed": args.seed,
        "trials": args.trials,
        "tol": args.tol,
        "m": m,
        "checks": checks,
    })
    return EXIT_OK if m is not None else EXIT_NEGATIVE


def cmd_prune(args: CommandLineArgs, files: FileHandler) -> int:
    """冗長な要素と含まれる最疎パターン"""
    pattern = files.read_pattern_file(args.input_file)
    tree = extract_tree_pattern(pattern)
    emit({
        "n": pattern.n,
        "lambda": pattern.to_document()["lambda"],
        "controllable": tree is not None,
        "redundant": [list(e) for e in redundant_entries(pattern)],
        "tree_pattern": tree.to_document() if tree else None,
    })
    return EXIT_OK if tree is not None else EXIT_NEGATIVE


COMMANDS = {
    "check": cmd_check,
    "accessible": cmd_accessible,
    "closure": cmd_closure,
    "sparsest": cmd_sparsest,
    "mincost": cmd_mincost,
    "sweep": cmd_sweep,
    "min-inputs": cmd_min_inputs,
    "prune": cmd_prune,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """コマンドラインからの実行のエントリーポイント"""

    # コマンドライン引数を解析（不正な引数は argparse が終了コード 2 で終了する）
    try:
        args = parse_args(argv)
    except ValueError as e:
        print(f"エラー: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    setup_logging(args.log_dir, f"structctrl_{args.command}", args.verbose)
    files = FileHandler(debug_mode=args.verbose)

    try:
        return COMMANDS[args.command](args, files)
    except (ValueError, OSError) as e:
        print(f"エラー: {e}", file=sys.stderr)
        logger.debug("Command failed", exc_info=True)
        return EXIT_INPUT_ERROR


def entry_point():
    """console_scripts 用のラッパー"""
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
