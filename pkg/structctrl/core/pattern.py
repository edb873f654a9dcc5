"""
structctrl/core/pattern.py - 構造パターン Λ（許可された非ゼロ要素の添字集合）
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

Entry = Tuple[int, int]


def candidate_entries(n: int) -> List[Entry]:
    """
    次元 n で許される全ての添字ペアを正準順で返す

    (i, j) は 1 <= i < j <= n+1 を満たし、j = n+1 は並進成分を表す。

    Args:
        n: 次元

    Returns:
        List[Entry]: 正準順の添字ペアのリスト
    """
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]


@dataclass(frozen=True)
class Pattern:
    """se(n) の構造化行列の非ゼロパターン"""

    n: int
    entries: FrozenSet[Entry]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "entries", frozenset(self.entries))
        for entry in self.entries:
            _validate_entry(self.n, entry)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Pattern":
        """
        添字ペアの列からパターンを作成する（回転成分の (j, i) は (i, j) に正規化）

        Args:
            n: 次元
            pairs: 1始まりの添字ペアの列

        Returns:
            Pattern: 正規化されたパターン
        """
        return cls(n, frozenset(canonical_entry(n, pair) for pair in pairs))

    @classmethod
    def full(cls, n: int) -> "Pattern":
        """全ての要素を許すパターン"""
        return cls(n, frozenset(candidate_entries(n)))

    @classmethod
    def empty(cls, n: int) -> "Pattern":
        return cls(n, frozenset())

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Pattern":
        """candidate_entries(n) 上のビットマスクからパターンを作る"""
        entries = candidate_entries(n)
        return cls(n, frozenset(e for bit, e in enumerate(entries) if mask >> bit & 1))

    @classmethod
    def all_patterns(cls, n: int) -> Iterator["Pattern"]:
        """2^(n(n+1)/2) 個の全パターンをマスク順に列挙する"""
        for mask in range(1 << len(candidate_entries(n))):
            yield cls.from_mask(n, mask)

    @classmethod
    def of_size(cls, n: int, size: int) -> Iterator["Pattern"]:
        for chosen in combinations(candidate_entries(n), size):
            yield cls(n, frozenset(chosen))

    @property
    def solid_entries(self) -> FrozenSet[Entry]:
        """回転成分 (j <= n)"""
        return frozenset(e for e in self.entries if e[1] <= self.n)

    @property
    def broken_entries(self) -> FrozenSet[Entry]:
        """並進成分 (j = n+1)"""
        return frozenset(e for e in self.entries if e[1] == self.n + 1)

    def sorted_entries(self) -> List[Entry]:
        return sorted(self.entries)

    def without(self, entry: Entry) -> "Pattern":
        return Pattern(self.n, self.entries - {entry})

    def issubset(self, other: "Pattern") -> bool:
        return self.n == other.n and self.entries <= other.entries

    def to_document(self) -> dict:
        """パターンファイル形式の辞書 {"n": ..., "lambda": [[i, j], ...]}"""
        return {"n": self.n, "lambda": [list(e) for e in self.sorted_entries()]}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.sorted_entries())

    def __str__(self) -> str:
        body = ", ".join(f"({i},{j})" for i, j in self.sorted_entries())
        return f"{{{body}}}"


def canonical_entry(n: int, pair: Sequence[int]) -> Entry:
    """
    添字ペアを正準形 (i < j) に変換する

    回転成分は Ω_ij = -Ω_ji なので (j, i) は (i, j) と同じ自由度を表す。
    第 n+1 行は常にゼロなので、第1添字が n を超えるペアは正規化せず拒否する。

    Raises:
        ValueError: 添字が範囲外の場合
    """
    if len(pair) != 2:
        raise ValueError(f"entry {list(pair)} must have exactly two indices")
    i, j = int(pair[0]), int(pair[1])
    if i > n:
        raise ValueError(f"entry {list(pair)}: first index must be ≤ n (n={n})")
    if i > j and j >= 1:
        i, j = j, i
    _validate_entry(n, (i, j))
    return (i, j)


def _validate_entry(n: int, entry: Entry) -> None:
    i, j = entry
    if i == j:
        raise ValueError(f"entry ({i},{j}): diagonal entries are not allowed")
    if not 1 <= i <= n:
        raise ValueError(f"entry ({i},{j}): first index must be ≤ n (n={n})")
    if not i < j <= n + 1:
        raise ValueError(f"entry ({i},{j}): second index must satisfy i < j ≤ n+1 (n={n})")
