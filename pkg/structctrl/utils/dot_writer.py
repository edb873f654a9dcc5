"""
DOT 出力ユーティリティ - パターングラフを Graphviz の DOT 形式に変換します。
"""

import logging
import os
import re
from typing import List

from structctrl.core.pattern_graph import ClosureTrace, PatternGraph

logger = logging.getLogger(__name__)

SOLID_STYLE = "solid"
BROKEN_STYLE = "dashed"


def graph_to_dot(g: PatternGraph, name: str = "G") -> str:
    """
    パターングラフを無向グラフの DOT 文字列に変換する

    実線辺は style=solid、破線辺は style=dashed で1辺1文を出力する。

    Args:
        g: パターングラフ
        name: グラフ名（英数字とアンダースコア）

    Returns:
        str: DOT 形式の文字列
    """
    name = re.sub(r"\W", "_", name)
    if not name or name[0].isdigit():
        name = f"g_{name}"
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for a, b in sorted(g.solid):
        lines.append(f"  {a} -- {b} [style={SOLID_STYLE}];")
    for a, b in sorted(g.broken):
        lines.append(f"  {a} -- {b} [style={BROKEN_STYLE}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_closure_dot_files(trace: ClosureTrace, output_dir: str, stem: str = "closure") -> List[str]:
    """
    閉包の各段を <stem>_step<l>.dot として書き出す

    Returns:
        List[str]: 書き出したファイルパス

    Raises:
        OSError: 出力先に書き込めない場合
    """
    os.makedirs(output_dir, exist_ok=True)
    paths = []
    for step, g in enumerate(trace.steps):
        path = os.path.join(output_dir, f"{stem}_step{step}.dot")
        with open(path, "w", encoding="utf-8") as f:
            f.write(graph_to_dot(g, name=f"{stem}_step{step}"))
        paths.append(path)
    logger.info(f"Wrote {len(paths)} DOT files to {output_dir}")
    return paths
