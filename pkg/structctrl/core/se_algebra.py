"""
structctrl/core/se_algebra.py - リー代数 se(n) の厳密モデルとリー代数階数条件（LARC）

基底要素は添字ペア (i, j) で表す。j <= n なら回転生成子 Ω̃_ij、
j = n+1 なら並進生成子 E_i(n+1) である。構造的な計算は整数係数のみで行い、
数値的な計算は標準基底の座標ベクトル上で行う。
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Union

import numpy as np

from structctrl.core.pattern import Pattern, candidate_entries

logger = logging.getLogger(__name__)

ROTATION = "rotation"
TRANSLATION = "translation"

# サンプリング係数の絶対値の下限
MIN_COEFFICIENT = 1e-3
DEFAULT_TOL = 1e-9


def se_dimension(n: int) -> int:
    """se(n) の次元 n(n+1)/2"""
    return n * (n + 1) // 2


@dataclass(frozen=True, order=True)
class BasisElement:
    """se(n) の標準基底の要素"""

    n: int
    i: int
    j: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 1 <= self.i < self.j <= self.n + 1:
            raise ValueError(f"invalid basis index ({self.i},{self.j}) for n={self.n}")

    @classmethod
    def rotation(cls, n: int, i: int, j: int) -> "BasisElement":
        if j > n:
            raise ValueError(f"rotation index ({i},{j}) exceeds n={n}")
        return cls(n, i, j)

    @classmethod
    def translation(cls, n: int, k: int) -> "BasisElement":
        return cls(n, k, n + 1)

    @property
    def kind(self) -> str:
        return TRANSLATION if self.j == self.n + 1 else ROTATION

    @property
    def is_rotation(self) -> bool:
        return self.j <= self.n

    def __str__(self) -> str:
        if self.is_rotation:
            return f"Ω{self.i}{self.j}"
        return f"E{self.i}({self.n + 1})"


@dataclass(frozen=True)
class SignedBasisTerm:
    """構造的リー括弧の結果: 0 または ±1 倍の基底要素"""

    coefficient: int
    element: Optional[BasisElement] = None

    def __post_init__(self):
        if self.coefficient not in (-1, 0, 1):
            raise ValueError(f"coefficient must be -1, 0 or 1, got {self.coefficient}")
        if (self.coefficient == 0) != (self.element is None):
            raise ValueError("coefficient is zero iff the element is absent")

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __neg__(self) -> "SignedBasisTerm":
        return SignedBasisTerm(-self.coefficient, self.element)


ZERO_TERM = SignedBasisTerm(0)


def signed_rotation(n: int, i: int, j: int) -> SignedBasisTerm:
    """
    Ω̃_ij を正準形の符号付き項として返す（i > j なら符号を反転、i = j ならゼロ）
    """
    if i == j:
        return ZERO_TERM
    if i < j:
        return SignedBasisTerm(1, BasisElement.rotation(n, i, j))
    return SignedBasisTerm(-1, BasisElement.rotation(n, j, i))


class DenseElement:
    """
    se(n) の (n+1)x(n+1) 行列表現

    厳密計算では object 配列（int / Fraction）、数値計算では float 配列を保持する。
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: np.ndarray):
        entries = np.asarray(entries)
        if entries.shape != (n + 1, n + 1):
            raise ValueError(f"expected a {(n + 1, n + 1)} matrix, got {entries.shape}")
        block = entries[:n, :n]
        if entries.dtype == object:
            skew = np.array_equal(block, -block.T)
            last_row_zero = all(x == 0 for x in entries[n, :])
        else:
            skew = np.allclose(block, -block.T, rtol=0.0, atol=1e-12)
            last_row_zero = not np.any(entries[n, :])
        if not skew:
            raise ValueError("top-left block must be skew-symmetric")
        if not last_row_zero:
            raise ValueError("last row must be identically zero")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DenseElement is immutable")

    @classmethod
    def zeros(cls, n: int, exact: bool = True) -> "DenseElement":
        if exact:
            return cls(n, np.full((n + 1, n + 1), 0, dtype=object))
        return cls(n, np.zeros((n + 1, n + 1)))

    @property
    def is_exact(self) -> bool:
        return self.entries.dtype == object

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries.flat)

    def astype_float(self) -> "DenseElement":
        return DenseElement(self.n, self.entries.astype(float))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseElement):
            return NotImplemented
        return self.n == other.n and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def __add__(self, other: "DenseElement") -> "DenseElement":
        _check_same_n(self.n, other.n)
        return DenseElement(self.n, self.entries + other.entries)

    def __rmul__(self, scalar) -> "DenseElement":
        return DenseElement(self.n, scalar * self.entries)

    def __neg__(self) -> "DenseElement":
        return DenseElement(self.n, -self.entries)

    def __repr__(self) -> str:
        return f"DenseElement(n={self.n}, entries={self.entries.tolist()!r})"


def _check_same_n(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: n={a} vs n={b}")


@dataclass(frozen=True)
class CanonicalSubspace:
    """標準基底の部分集合で張られる部分空間"""

    n: int
    generators: FrozenSet[BasisElement] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "generators", frozenset(self.generators))
        for element in self.generators:
            if element.n != self.n:
                raise ValueError(f"basis element {element} does not belong to se({self.n})")

    @classmethod
    def full(cls, n: int) -> "CanonicalSubspace":
        return cls(n, frozenset(standard_basis(n)))

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def union(self, elements: Iterable[BasisElement]) -> "CanonicalSubspace":
        return CanonicalSubspace(self.n, self.generators | frozenset(elements))

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, element) -> bool:
        return element in self.generators

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(sorted(self.generators))

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self) + "}"


def standard_basis(n: int) -> List[BasisElement]:
    """標準基底 BS を正準順で返す"""
    return [BasisElement(n, i, j) for i, j in candidate_entries(n)]


def subspace_of_pattern(pattern: Pattern) -> CanonicalSubspace:
    """B_Λ = Span(BS_Λ) を正準部分空間として返す"""
    return CanonicalSubspace(pattern.n, frozenset(BasisElement(pattern.n, i, j) for i, j in pattern.entries))


def _as_subspace(value: Union[CanonicalSubspace, Pattern]) -> CanonicalSubspace:
    if isinstance(value, Pattern):
        return subspace_of_pattern(value)
    return value


def dense_of(b: BasisElement) -> DenseElement:
    """基底要素の整数行列表現"""
    n = b.n
    entries = np.full((n + 1, n + 1), 0, dtype=object)
    entries[b.i - 1, b.j - 1] = 1
    if b.is_rotation:
        entries[b.j - 1, b.i - 1] = -1
    return DenseElement(n, entries)


def dense_bracket(a: DenseElement, b: DenseElement) -> DenseElement:
    """リー括弧 [A, B] = AB - BA"""
    _check_same_n(a.n, b.n)
    return DenseElement(a.n, a.entries @ b.entries - b.entries @ a.entries)


def structural_bracket(a: BasisElement, b: BasisElement) -> SignedBasisTerm:
    """
    標準基底同士のリー括弧を整数係数で計算する

    [Ω_ij, Ω_kl] = δ_jk Ω_il - δ_jl Ω_ik - δ_ik Ω_jl + δ_il Ω_jk
    [Ω_ij, E_k]  = δ_jk E_i - δ_ik E_j
    [E_i, E_j]   = 0

    Args:
        a: 左の基底要素
        b: 右の基底要素

    Returns:
        SignedBasisTerm: 括弧の値（ゼロまたは符号付き基底要素）
    """
    _check_same_n(a.n, b.n)
    n = a.n
    if not a.is_rotation and not b.is_rotation:
        return ZERO_TERM
    if not a.is_rotation:
        return -structural_bracket(b, a)

    i, j = a.i, a.j
    terms: List[SignedBasisTerm] = []
    if b.is_rotation:
        k, l = b.i, b.j
        if j == k:
            terms.append(signed_rotation(n, i, l))
        if j == l:
            terms.append(-signed_rotation(n, i, k))
        if i == k:
            terms.append(-signed_rotation(n, j, l))
        if i == l:
            terms.append(signed_rotation(n, j, k))
    else:
        k = b.i
        if j == k:
            terms.append(SignedBasisTerm(1, BasisElement.translation(n, i)))
        if i == k:
            terms.append(SignedBasisTerm(-1, BasisElement.translation(n, j)))
    return _collapse(terms)


def _collapse(terms: Sequence[SignedBasisTerm]) -> SignedBasisTerm:
    totals: Dict[BasisElement, int] = {}
    for term in terms:
        if not term.is_zero:
            totals[term.element] = totals.get(term.element, 0) + term.coefficient
    nonzero = [(e, c) for e, c in totals.items() if c != 0]
    if not nonzero:
        return ZERO_TERM
    if len(nonzero) > 1 or abs(nonzero[0][1]) != 1:
        raise AssertionError(f"basis bracket produced a non-basis combination: {nonzero}")
    element, coefficient = nonzero[0]
    return SignedBasisTerm(coefficient, element)


def derived_step(d: Union[CanonicalSubspace, Pattern]) -> CanonicalSubspace:
    """
    導来分布を1段進める: D ∪ {[a, b] | a, b ∈ D}

    基底同士の括弧は単一の基底要素に落ちるので、張る空間の閉包は集合の閉包と一致する。
    """
    d = _as_subspace(d)
    new_elements = set()
    for a, b in combinations(sorted(d.generators), 2):
        term = structural_bracket(a, b)
        if not term.is_zero:
            new_elements.add(term.element)
    return d.union(new_elements)


def derived_series(d: Union[CanonicalSubspace, Pattern]) -> List[CanonicalSubspace]:
    """D^(0), D^(1), ..., D^(n) を返す"""
    d = _as_subspace(d)
    series = [d]
    for _ in range(d.n):
        series.append(derived_step(series[-1]))
    return series


def lie_closure(d: Union[CanonicalSubspace, Pattern]) -> CanonicalSubspace:
    """
    導来分布を不動点まで反復し、生成されるリー部分代数 D̄ を返す

    Raises:
        AssertionError: 第 n 段までに不動点に達しない場合（実装の不具合）
    """
    current = _as_subspace(d)
    initial_size = len(current)
    for step in range(current.n + 1):
        following = derived_step(current)
        if following == current:
            logger.debug(f"Lie closure of {initial_size} generators stabilised at step {step}")
            return current
        if step == current.n:
            break
        current = following
    raise AssertionError(f"derived distributions did not stabilise by step n={current.n}")


def larc_exact(d: Union[CanonicalSubspace, Pattern]) -> bool:
    """生成されるリー代数が se(n) 全体か（厳密判定）"""
    d = _as_subspace(d)
    return len(lie_closure(d)) == se_dimension(d.n)


def coordinates_of(x: DenseElement) -> np.ndarray:
    """標準基底 BS に関する座標ベクトル（長さ n(n+1)/2）"""
    n = x.n
    return np.array([float(x.entries[i - 1, j - 1]) for i, j in candidate_entries(n)])


def element_of_coordinates(n: int, coords: np.ndarray) -> DenseElement:
    """座標ベクトルから float の行列表現を復元する"""
    entries = np.zeros((n + 1, n + 1))
    for (i, j), c in zip(candidate_entries(n), coords):
        entries[i - 1, j - 1] = c
        if j <= n:
            entries[j - 1, i - 1] = -c
    return DenseElement(n, entries)


def _draw_coefficient(rng: np.random.Generator) -> float:
    magnitude = rng.uniform(MIN_COEFFICIENT, 1.0)
    return magnitude if rng.random() < 0.5 else -magnitude


def sample_realization(pattern: Pattern, seed) -> DenseElement:
    """
    B_Λ のランダムな実現を作る

    各基底要素に [-1, -1e-3] ∪ [1e-3, 1] の一様乱数係数を掛けて足し合わせる。

    Args:
        pattern: パターン Λ
        seed: 整数シードまたは numpy.random.SeedSequence

    Returns:
        DenseElement: float の行列表現
    """
    rng = np.random.default_rng(seed)
    entries = np.zeros((pattern.n + 1, pattern.n + 1))
    for i, j in pattern.sorted_entries():
        c = _draw_coefficient(rng)
        entries[i - 1, j - 1] = c
        if j <= pattern.n:
            entries[j - 1, i - 1] = -c
    return DenseElement(pattern.n, entries)


def sample_realizations(pattern: Pattern, m: int, seed) -> List[DenseElement]:
    """独立な m 個の実現（シードを子シードに分割）"""
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return [sample_realization(pattern, child) for child in seed.spawn(m)]


def larc_numeric(mats: Sequence[DenseElement], tol: float = DEFAULT_TOL) -> bool:
    """
    数値的なリー代数階数条件

    座標ベクトルの基底を保持し、全ペアの括弧を取り続け、射影後の残差が
    tol × (最大ノルム) を超えるものだけを追加する。生成子は最大ノルムの生成子を、
    括弧は正規化済みの基底（ノルム 1）を尺度とするので、判定は生成子の定数倍によらない。
    増加が止まった時点の階数が n(n+1)/2 なら True。

    Args:
        mats: 生成子の行列表現
        tol: 相対許容誤差 (> 0)

    Returns:
        bool: 生成されるリー代数が se(n) 全体なら True

    Raises:
        ValueError: 次元の不一致や tol <= 0 の場合
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not mats:
        return False
    n = mats[0].n
    for x in mats:
        _check_same_n(n, x.n)
    dimension = se_dimension(n)

    basis: List[np.ndarray] = []
    elements: List[DenseElement] = []

    def admit(vector: np.ndarray, scale: float) -> bool:
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            return False
        residual = vector.copy()
        for q in basis:
            residual -= np.dot(q, residual) * q
        # 再直交化で丸め誤差を抑える
        for q in basis:
            residual -= np.dot(q, residual) * q
        residual_norm = float(np.linalg.norm(residual))
        if residual_norm <= tol * max(scale, norm):
            return False
        basis.append(residual / residual_norm)
        elements.append(element_of_coordinates(n, vector / norm))
        return True

    generators = [coordinates_of(x) for x in mats]
    generator_scale = max(float(np.linalg.norm(v)) for v in generators)
    frontier = []
    for vector in generators:
        if admit(vector, generator_scale):
            frontier.append(elements[-1])

    while frontier and len(basis) < dimension:
        grown = []
        for new in frontier:
            for old in list(elements):
                if old is new:
                    continue
                if admit(coordinates_of(dense_bracket(new, old)), 1.0):
                    grown.append(elements[-1])
                    if len(basis) == dimension:
                        break
            if len(basis) == dimension:
                break
        frontier = grown

    logger.debug(f"Numeric Lie closure reached rank {len(basis)} of {dimension}")
    return len(basis) == dimension
