"""
設定管理モジュール - コマンドライン引数やデフォルト設定を管理します。
"""

import os
import argparse
from typing import Dict, Any, NamedTuple, Optional, Sequence


class DecisionMethods:
    """構造的可制御性の判定方法"""
    CLOSURE = "closure"            # 推移的閉包が完全グラフか
    CONNECTIVITY = "connectivity"  # 実線部分グラフと全体グラフの連結性


class Limits:
    """列挙・全探索の上限"""
    MAX_SWEEP_N = 4
    MAX_ENUMERATION_N = 7
    MAX_VERIFY_N = 7


# デフォルト設定
DEFAULT_CONFIG = {
    "seed": 42,
    "tol": 1e-9,
    "trials": 5,
    "workers": 1,
    "log_dir": None,
    "verbose": False,
}

ENV_PREFIX = "STRUCTCTRL_"


class CommandLineArgs(NamedTuple):
    """コマンドライン引数を格納する型付きタプル"""
    command: str
    input_file: Optional[str]
    n: Optional[int]
    dot_dir: Optional[str]
    enumerate: bool
    verify: bool
    permissive: bool
    min_inputs: bool
    trials: int
    seed: int
    tol: float
    workers: int
    report_dir: Optional[str]
    log_dir: Optional[str]
    verbose: bool


def get_config() -> Dict[str, Any]:
    """
    設定値を環境変数とデフォルト値から取得する関数
    環境変数がある場合はそれを優先、ない場合はデフォルト値を使用

    Returns:
        Dict[str, Any]: 設定値の辞書

    Raises:
        ValueError: 環境変数の値を変換できない場合
    """
    config = DEFAULT_CONFIG.copy()

    # 環境変数から設定を読み込む
    for key, default in DEFAULT_CONFIG.items():
        env_key = f"{ENV_PREFIX}{key.upper()}"
        if env_key not in os.environ:
            continue
        env_value = os.environ[env_key]

        # 値の型に応じた変換
        try:
            if isinstance(default, bool):
                config[key] = env_value.lower() in ('true', 'yes', '1', 'y')
            elif isinstance(default, int):
                config[key] = int(env_value)
            elif isinstance(default, float):
                config[key] = float(env_value)
            else:
                config[key] = env_value
        except ValueError:
            raise ValueError(f"environment variable {env_key}={env_value!r} is not a valid {type(default).__name__}")

    return config


def build_parser(config: Dict[str, Any]) -> argparse.ArgumentParser:
    """
    サブコマンド付きの引数パーサを作る

    Args:
        config: get_config() の結果（オプションのデフォルト値）

    Returns:
        argparse.ArgumentParser: 設定済みパーサ
    """
    parser = argparse.ArgumentParser(
        prog='structctrl',
        description='SE(n) 上の双線形系の構造的可制御性・可到達性をパターンから判定します。'
    )
    parser.add_argument('--verbose', '-v', action='store_true', default=config['verbose'],
                        help='詳細なログを出力します')
    parser.add_argument('--log-dir', default=config['log_dir'],
                        help='ログファイルの出力ディレクトリ（省略時はコンソールのみ）')

    subparsers = parser.add_subparsers(dest='command', required=True)

    def add_numeric_options(sub):
        sub.add_argument('--trials', type=int, default=config['trials'],
                         help=f'実現のランダム試行回数（デフォルト: {config["trials"]}）')
        sub.add_argument('--seed', type=int, default=config['seed'],
                         help=f'乱数シード（デフォルト: {config["seed"]}、環境変数 STRUCTCTRL_SEED）')
        sub.add_argument('--tol', type=float, default=config['tol'],
                         help=f'数値的階数判定の相対許容誤差（デフォルト: {config["tol"]}）')

    check = subparsers.add_parser('check', help='構造的可制御性を判定します')
    check.add_argument('input_file', help='パターンファイル (JSON)')

    closure = subparsers.add_parser('closure', help='推移的閉包の各段を出力します')
    closure.add_argument('input_file', help='パターンファイル (JSON)')
    closure.add_argument('--dot', dest='dot_dir', help='各段の DOT ファイルを書き出すディレクトリ')

    accessible = subparsers.add_parser('accessible', help='ドリフト付き系の構造的可到達性を判定します')
    accessible.add_argument('input_file', help='パターンファイル (JSON)')
    accessible.add_argument('--min-inputs', action='store_true',
                            help='ドリフト項込みで必要な最小入力数も推定します')
    add_numeric_options(accessible)

    sparsest = subparsers.add_parser('sparsest', help='最疎な構造的可制御パターンを出力します')
    sparsest.add_argument('--n', type=int, required=True, help='次元 n')
    sparsest.add_argument('--enumerate', action='store_true',
                          help='全ての最疎パターン（n^(n-1) 個）を列挙します')

    mincost = subparsers.add_parser('mincost', help='最小コストの可制御パターンを求めます')
    mincost.add_argument('input_file', help='コストファイル (JSON)')
    mincost.add_argument('--verify', action='store_true', help='全探索の最適値と比較します')
    mincost.add_argument('--permissive', action='store_true', help='破線辺のコスト 0 を許可します')

    sweep = subparsers.add_parser('sweep', help='全パターンでグラフ判定と厳密 LARC を照合します')
    sweep.add_argument('--n', type=int, required=True, help=f'次元 n（1〜{Limits.MAX_SWEEP_N}）')
    sweep.add_argument('--workers', type=int, default=config['workers'],
                       help=f'並列プロセス数（デフォルト: {config["workers"]}）')
    sweep.add_argument('--report-dir', help='サマリーレポートの出力ディレクトリ')

    min_inputs = subparsers.add_parser('min-inputs', help='可制御となる最小入力数を確率1の検定で推定します')
    min_inputs.add_argument('input_file', help='パターンファイル (JSON)')
    add_numeric_options(min_inputs)

    prune = subparsers.add_parser('prune', help='冗長な要素と含まれる最疎パターンを求めます')
    prune.add_argument('input_file', help='パターンファイル (JSON)')

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> CommandLineArgs:
    """
    コマンドライン引数を解析する関数

    Args:
        argv: 引数リスト（None の場合は sys.argv）

    Returns:
        CommandLineArgs: 解析されたコマンドライン引数
    """
    config = get_config()
    args = build_parser(config).parse_args(argv)

    return CommandLineArgs(
        command=args.command,
        input_file=getattr(args, 'input_file', None),
        n=getattr(args, 'n', None),
        dot_dir=getattr(args, 'dot_dir', None),
        enumerate=getattr(args, 'enumerate', False),
        verify=getattr(args, 'verify', False),
        permissive=getattr(args, 'permissive', False),
        min_inputs=getattr(args, 'min_inputs', False),
        trials=getattr(args, 'trials', config['trials']),
        seed=getattr(args, 'seed', config['seed']),
        tol=getattr(args, 'tol', config['tol']),
        workers=getattr(args, 'workers', config['workers']),
        report_dir=getattr(args, 'report_dir', None),
        log_dir=args.log_dir,
        verbose=args.verbose,
    )
