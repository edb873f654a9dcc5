"""
structctrl/harness/__init__.py - 検証・実験ハーネスのエントリーポイント
"""

from .sweep import SweepReport, PatternVerdict, Disagreement, sweep, check_inclusion_monotone
from .k_input import KInputReport, k_input_check, min_inputs, CONTROLLABLE_WHP, INCONCLUSIVE
from .logging_utils import setup_logging, close_logger
from .memory_manager import MemoryManager
from .reporting import create_summary_report, sweep_table

# 公開API
__all__ = [
    'SweepReport',
    'PatternVerdict',
    'Disagreement',
    'sweep',
    'check_inclusion_monotone',
    'KInputReport',
    'k_input_check',
    'min_inputs',
    'CONTROLLABLE_WHP',
    'INCONCLUSIVE',
    'setup_logging',
    'close_logger',
    'MemoryManager',
    'create_summary_report',
    'sweep_table',
]
