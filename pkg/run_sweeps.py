#!/usr/bin/env python3
"""
run_sweeps.py - 複数の次元 n で全パターン照合を実行し、サマリーレポートを作成するツール
"""

import argparse
import os
import sys
from multiprocessing import cpu_count

# スクリプトのあるディレクトリをPYTHONPATHに追加
script_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, script_dir)

try:
    from structctrl.config import Limits
    from structctrl.harness import MemoryManager, check_inclusion_monotone, create_summary_report, sweep
    from structctrl.harness.logging_utils import close_logger, setup_logging
except ImportError as e:
    print(f"エラー: モジュールのインポートに失敗しました: {e}")
    print("structctrl パッケージが正しく配置されているか確認してください。")
    sys.exit(1)


def parse_arguments():
    """コマンドライン引数をパースする"""
    parser = argparse.ArgumentParser(description='全パターンでグラフ判定と厳密 LARC を照合するスクリプト')
    parser.add_argument('-n', '--dims', type=int, nargs='+', default=list(range(1, Limits.MAX_SWEEP_N + 1)),
                        help=f'照合する次元のリスト (デフォルト: 1〜{Limits.MAX_SWEEP_N})')
    parser.add_argument('-l', '--log', default='./sweep_logs',
                        help='ログ・レポートディレクトリ (デフォルト: ./sweep_logs)')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='詳細なログを出力する')
    parser.add_argument('--threads', type=int, default=1,
                        help='並列処理のプロセス数 (デフォルト: 1, 0=CPUコア数)')
    parser.add_argument('--memory-limit', type=float, default=80.0,
                        help='メモリ使用率の上限 (%%、デフォルト: 80.0)')
    parser.add_argument('--monotone', action='store_true',
                        help='包含に関する単調性も確認する')
    return parser.parse_args()


def main():
    """メイン関数"""
    args = parse_arguments()
    os.makedirs(args.log, exist_ok=True)

    logger = setup_logging(args.log, "sweep", args.verbose)
    num_threads = cpu_count() if args.threads == 0 else max(1, args.threads)
    logger.info(f"Sweeping dimensions {args.dims} with {num_threads} process(es)")

    memory_manager = MemoryManager(limit_percent=args.memory_limit, logger=logger)
    reports = []
    failed = False
    for n in args.dims:
        try:
            report = sweep(n, workers=num_threads, memory_manager=memory_manager)
        except ValueError as e:
            logger.error(f"Skipping n={n}: {e}")
            failed = True
            continue
        reports.append(report)
        failed = failed or not report.passed

        if args.monotone:
            violations = check_inclusion_monotone(report)
            for lower, upper in violations:
                logger.error(f"Monotonicity violated: {lower} controllable but {upper} is not")
            failed = failed or bool(violations)

    if reports:
        json_file, text_file, _ = create_summary_report(reports, args.log)
        print(f"Summary: {json_file}")
        print(f"Text summary: {text_file}")
    logger.info(f"Peak memory usage: {memory_manager.peak_mb:.1f} MB")
    close_logger(logger)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
