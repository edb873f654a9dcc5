"""
structctrl.utils - 入出力ユーティリティを提供するモジュール
"""

from structctrl.utils.file_handler import FileHandler, load_pattern, load_costs, parse_pattern_document, parse_cost_document
from structctrl.utils.dot_writer import graph_to_dot, write_closure_dot_files
