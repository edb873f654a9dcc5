"""
structctrl/harness/logging_utils.py - ロギング関連のユーティリティ
"""

import os
import logging
from datetime import datetime
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
PACKAGE_LOGGER = "structctrl"


def setup_logging(log_dir: Optional[str] = None,
                  log_name: Optional[str] = None,
                  verbose: bool = False) -> logging.Logger:
    """
    パッケージのロガーを設定する

    コンソール（標準エラー出力）には常に出力し、log_dir が指定されていれば
    タイムスタンプ付きのログファイルにも出力する。標準出力は JSON レポート専用。

    Args:
        log_dir: ログディレクトリ（None の場合はファイルに出力しない）
        log_name: ログファイル名の接頭辞
        verbose: 詳細なログを出力するかどうか

    Returns:
        logging.Logger: 設定されたロガーオブジェクト
    """
    level = logging.DEBUG if verbose else logging.INFO

    # パッケージ全体のロガーを設定する（各モジュールは __name__ で子ロガーを取得）
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    logger.propagate = False

    # 既存のハンドラを削除（重複防止）
    close_logger(logger)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    console_handler.setLevel(level if verbose else logging.WARNING)
    logger.addHandler(console_handler)

    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        file_name = f"{log_name or 'structctrl'}_{timestamp}.log"
        file_handler = logging.FileHandler(os.path.join(log_dir, file_name), encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        file_handler.setLevel(level)
        logger.addHandler(file_handler)

    return logger


def close_logger(logger: logging.Logger):
    """
    ロガーのハンドラをクローズして削除する

    Args:
        logger: クローズするロガーオブジェクト
    """
    for handler in logger.handlers[:]:
        handler.close()
        logger.removeHandler(handler)
