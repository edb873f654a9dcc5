"""
structctrl - SE(n) 上の双線形系の構造的可制御性・可到達性を判定するツール

このパッケージは行列のスパース性パターンだけから、実線／破線辺を持つグラフの
推移的閉包を用いて構造的可制御性を判定し、リー代数階数条件による独立な検証と、
最疎・最小コストの可制御パターンの設計機能を提供します。
"""

__version__ = "1.0.0"

# 主要コンポーネントをインポート
from structctrl.core.pattern import Pattern
from structctrl.core.pattern_graph import is_structurally_controllable, is_structurally_accessible
from structctrl.config import DEFAULT_CONFIG
