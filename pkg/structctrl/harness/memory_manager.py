"""
structctrl/harness/memory_manager.py - 全探索中のメモリ使用状況の監視
"""

import gc
import logging
import psutil
from typing import Dict, Optional


class MemoryManager:
    """パターン全探索のメモリ使用状況を監視するクラス"""

    def __init__(self, limit_percent: float = 80.0, check_interval: int = 256,
                 logger: Optional[logging.Logger] = None):
        """
        初期化

        Args:
            limit_percent: プロセスのメモリ使用率の上限 (%)
            check_interval: チェック間隔（評価したパターン数）
            logger: ロガーオブジェクト
        """
        self.limit_percent = limit_percent
        self.check_interval = check_interval
        self.counter = 0
        self.peak_mb = 0.0
        self.logger = logger or logging.getLogger(__name__)

    def tick(self, count: int = 1) -> bool:
        """
        評価件数を進め、チェック間隔ごとにメモリを確認する

        Returns:
            bool: 上限超過で GC を実行した場合は True
        """
        before = self.counter
        self.counter += count
        if self.counter // self.check_interval == before // self.check_interval:
            return False

        memory = self.get_memory_usage()
        self.peak_mb = max(self.peak_mb, memory['usage_mb'])
        if memory['percent'] > self.limit_percent:
            self.logger.warning(f"Memory usage {memory['usage_mb']:.1f} MB ({memory['percent']:.1f}%) "
                                f"exceeds {self.limit_percent:.0f}% after {self.counter} patterns, collecting garbage")
            gc.collect()
            return True
        self.logger.debug(f"Memory usage after {self.counter} patterns: {memory['usage_mb']:.1f} MB")
        return False

    @staticmethod
    def get_memory_usage() -> Dict[str, float]:
        """
        現在のメモリ使用状況を取得

        Returns:
            Dict[str, float]: メモリ使用状況の辞書
        """
        rss = psutil.Process().memory_info().rss
        system_memory = psutil.virtual_memory()
        return {
            'usage_mb': rss / (1024 * 1024),
            'percent': rss / system_memory.total * 100,
            'system_percent': system_memory.percent,
            'system_available_mb': system_memory.available / (1024 * 1024),
        }
