"""
ファイル処理ユーティリティ - パターン／コストの JSON 文書の読み込みと検証、レポートの書き出しを行う機能を提供します。
"""

import json
import logging
import os
from fractions import Fraction
from numbers import Real
from typing import Any, Dict, List, Tuple

from structctrl.core.pattern import Pattern, canonical_entry
from structctrl.core.sparse_design import CostMatrix

logger = logging.getLogger(__name__)


class FileHandler:
    """パターンファイルとコストファイルの読み書きを行うクラス"""

    # サポートするエンコーディングのリスト
    SUPPORTED_ENCODINGS = ['utf-8', 'utf-8-sig', 'cp932']

    def __init__(self, debug_mode: bool = False):
        """
        初期化関数

        Args:
            debug_mode: デバッグ情報をログに出すかどうか
        """
        self.debug_mode = debug_mode

    def read_pattern_file(self, file_path: str) -> Pattern:
        """
        パターンファイル {"n": 3, "lambda": [[1,2],[2,3],[1,4]]} を読み込む

        Args:
            file_path: 入力ファイルのパス

        Returns:
            Pattern: 正規化・重複除去済みのパターン

        Raises:
            ValueError: 文書が不正な場合（問題のペアを含む診断メッセージ付き）
        """
        document = self._read_json(file_path)
        return parse_pattern_document(document, source=file_path)

    def read_cost_file(self, file_path: str, permissive: bool = False) -> CostMatrix:
        """
        コストファイル {"n": 3, "costs": [[1,2,1.0], ...]} を読み込む

        Args:
            file_path: 入力ファイルのパス
            permissive: 破線辺のコスト 0 を許すかどうか

        Returns:
            CostMatrix: 検証済みのコスト行列

        Raises:
            ValueError: 文書が不正な場合
        """
        document = self._read_json(file_path)
        return parse_cost_document(document, permissive=permissive, source=file_path)

    def write_json(self, file_path: str, payload: Any) -> str:
        """
        JSON を書き出す（出力ディレクトリは必要に応じて作成）

        Returns:
            str: 書き出したファイルのパス
        """
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(payload, f, indent=2, ensure_ascii=False)
        if self.debug_mode:
            logger.debug(f"Wrote {file_path}")
        return file_path

    def _read_json(self, file_path: str) -> Any:
        """
        複数のエンコーディングを試して JSON を読み込む

        Raises:
            ValueError: 読み込みまたは JSON 解析に失敗した場合
        """
        if not os.path.isfile(file_path):
            raise ValueError(f"input file not found: {file_path}")

        for encoding in self.SUPPORTED_ENCODINGS:
            try:
                with open(file_path, 'r', encoding=encoding) as f:
                    text = f.read()
            except UnicodeDecodeError:
                if self.debug_mode:
                    logger.debug(f"Decoding {file_path} as {encoding} failed")
                continue
            try:
                return json.loads(text)
            except json.JSONDecodeError as e:
                raise ValueError(f"malformed JSON in {file_path}: {e}")

        raise ValueError(f"could not decode {file_path} with any of {self.SUPPORTED_ENCODINGS}")


def _require_dimension(document: Any, source: str) -> int:
    if not isinstance(document, dict):
        raise ValueError(f"{source}: document must be a JSON object")
    n = document.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"{source}: 'n' must be a positive integer, got {n!r}")
    return n


def _as_index(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{where}: indices must be integers, got {value!r}")
    return value


def parse_pattern_document(document: Any, source: str = "<pattern>") -> Pattern:
    """
    パターン文書を検証して Pattern に変換する

    回転成分の (j, i) 表記は (i, j) に正規化して警告を出し、重複は除去する。
    """
    n = _require_dimension(document, source)
    raw = document.get("lambda")
    if not isinstance(raw, list):
        raise ValueError(f"{source}: 'lambda' must be a list of index pairs")

    entries = set()
    for pair in raw:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"{source}: entry {pair!r} must be a 2-element list")
        i, j = (_as_index(v, f"{source}: entry {pair!r}") for v in pair)
        try:
            entry = canonical_entry(n, (i, j))
        except ValueError as e:
            raise ValueError(f"{source}: {e}")
        if entry != (i, j):
            logger.warning(f"{source}: entry [{i},{j}] canonicalised to [{entry[0]},{entry[1]}]")
        if entry in entries:
            logger.debug(f"{source}: duplicate entry {list(entry)} removed")
        entries.add(entry)
    return Pattern(n, frozenset(entries))


def _as_cost(value: Any, where: str) -> Real:
    """JSON の数値を保持する（整数はそのまま、'3/2' のような文字列は有理数）"""
    if isinstance(value, bool):
        raise ValueError(f"{where}: cost must be a number, got {value!r}")
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            pass
    raise ValueError(f"{where}: cost must be a number or a rational string, got {value!r}")


def parse_cost_document(document: Any, permissive: bool = False, source: str = "<costs>") -> CostMatrix:
    """
    コスト文書を検証して CostMatrix に変換する

    全ての実線ペア (i<j≤n) と破線要素 (k, n+1) が揃っている必要があり、重複は拒否する。
    """
    n = _require_dimension(document, source)
    raw = document.get("costs")
    if not isinstance(raw, list):
        raise ValueError(f"{source}: 'costs' must be a list of [i, j, value] triples")

    solid: Dict[Tuple[int, int], Real] = {}
    broken: Dict[int, Real] = {}
    for triple in raw:
        if not isinstance(triple, list) or len(triple) != 3:
            raise ValueError(f"{source}: cost entry {triple!r} must be an [i, j, value] triple")
        where = f"{source}: cost entry {triple!r}"
        i, j = _as_index(triple[0], where), _as_index(triple[1], where)
        try:
            i, j = canonical_entry(n, (i, j))
        except ValueError as e:
            raise ValueError(f"{where}: {e}")
        value = _as_cost(triple[2], where)
        target_key = (i, j) if j <= n else i
        target = solid if j <= n else broken
        if target_key in target:
            raise ValueError(f"{source}: duplicate cost for pair ({i},{j})")
        target[target_key] = value

    missing: List[Tuple[int, int]] = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)
        if ((i, j) not in solid if j <= n else i not in broken)
    ]
    if missing:
        listing = ", ".join(f"({i},{j})" for i, j in missing)
        raise ValueError(f"{source}: missing cost for pair {listing}")

    try:
        return CostMatrix(n, solid, broken, permissive=permissive)
    except ValueError as e:
        raise ValueError(f"{source}: {e}")


def load_pattern(file_path: str) -> Pattern:
    """パターンファイルを読み込む簡易関数"""
    return FileHandler().read_pattern_file(file_path)


def load_costs(file_path: str, permissive: bool = False) -> CostMatrix:
    """コストファイルを読み込む簡易関数"""
    return FileHandler().read_cost_file(file_path, permissive=permissive)
