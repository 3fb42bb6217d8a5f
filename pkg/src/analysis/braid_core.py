"""
辫群基础模块

Artin 生成元 σ_i 上的辫字（BraidWord）、置换（Permutation）与轮换类型，
以及置换同态 π、阿贝尔化 exp、遗忘第 i 条弦 φ_i、稳定化 B_n → B_{n+1}。

约定：
- 生成元下标从 1 开始，字母为 (i, ±1)；
- 置换按“从左到右”复合：先作用最左边的字母（π(σ1σ2) = (1,3,2)）；
- Permutation.images[k-1] 是从位置 k 出发的弦最终到达的位置。
"""

from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

Letter = Tuple[int, int]


class BraidIndexError(ValueError):
    """生成元或弦的下标越界"""


class StrandMismatchError(ValueError):
    """两个辫字的弦数不一致"""


# ============================================================================
# 置换
# ============================================================================


@dataclass(frozen=True)
class Permutation:
    """
    {1..n} 上的双射

    images[k-1] = k 的像。复合 p.then(q) 表示先作用 p 再作用 q。
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"不是 1..{len(images)} 上的置换: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """由轮换记号构造，(1, 3, 2) 表示 1→3→2→1"""
        images = list(range(1, n + 1))
        for cycle in cycles:
            for idx, point in enumerate(cycle):
                images[point - 1] = cycle[(idx + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """先 self 后 other"""
        if self.n != other.n:
            raise StrandMismatchError(f"置换阶数不一致: {self.n} != {other.n}")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def power(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(e)):
            result = result.then(base)
        return result

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """非平凡轮换列表，每个轮换从其最小元素开始"""
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cycle.append(k)
                seen.add(k)
                k = self(k)
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return lcm(*[len(c) for c in self.cycles()]) if not self.is_identity() else 1

    def one_line(self) -> str:
        return " ".join(str(v) for v in self.images)

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(k) for k in c) + ")" for c in cycles)

    def __str__(self):
        return self.cycle_string()


@dataclass(frozen=True)
class CycleType:
    """轮换类型：非平凡轮换长度的多重集（降序），不动点省略"""

    partition: Tuple[int, ...]
    n: int

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.partition), reverse=True))
        if any(p < 2 for p in parts):
            raise ValueError(f"轮换长度必须 ≥ 2: {parts}")
        if sum(parts) > self.n:
            raise ValueError(f"轮换长度之和 {sum(parts)} 超过 n = {self.n}")
        object.__setattr__(self, "partition", parts)

    def is_empty(self) -> bool:
        return not self.partition

    def __str__(self):
        return ",".join(str(p) for p in self.partition) or "-"


# ============================================================================
# 辫字
# ============================================================================


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """消去相邻的 σ_i σ_i⁻¹"""
    stack: List[Letter] = []
    for index, sign in letters:
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """
    n 条弦上的辫字

    letters 为 (i, ±1) 的有序序列，1 ≤ i ≤ n-1；空序列表示单位元。
    """

    n: int
    letters: Tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise BraidIndexError(f"弦数必须 ≥ 1: {self.n}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for index, sign in letters:
            if not 1 <= index <= self.n - 1:
                raise BraidIndexError(f"生成元 σ_{index} 不在 B_{self.n} 中")
            if sign not in (1, -1):
                raise ValueError(f"字母符号必须为 ±1: {sign}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __pow__(self, e: int) -> "BraidWord":
        return power(self, e)

    def is_empty(self) -> bool:
        return not self.letters

    def indices(self) -> List[int]:
        return [i for i, _ in self.letters]

    def __str__(self):
        from src.utils.word_syntax import format_word

        return format_word(self)


@dataclass(frozen=True)
class InfiniteBraidWord:
    """B_∞ 中的元素：有限个交叉，最小弦数 m = 1 + 最大下标"""

    letters: Tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for index, sign in letters:
            if index < 1:
                raise BraidIndexError(f"生成元下标必须 ≥ 1: {index}")
            if sign not in (1, -1):
                raise ValueError(f"字母符号必须为 ±1: {sign}")
        object.__setattr__(self, "letters", letters)

    @property
    def m(self) -> int:
        return 1 + max((i for i, _ in self.letters), default=0)


def check_same_strands(u: BraidWord, v: BraidWord):
    if u.n != v.n:
        raise StrandMismatchError(f"弦数不一致: B_{u.n} 与 B_{v.n}")


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """u·v，拼接后自由约化"""
    check_same_strands(u, v)
    return BraidWord(u.n, free_reduce(u.letters + v.letters))


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.n, tuple((i, -s) for i, s in reversed(u.letters)))


def power(u: BraidWord, e: int) -> BraidWord:
    base = u if e >= 0 else inverse(u)
    return BraidWord(u.n, free_reduce(base.letters * abs(e)))


def product(words: Sequence[BraidWord], n: Optional[int] = None) -> BraidWord:
    """依次相乘；空列表需给出 n"""
    if not words:
        if n is None:
            raise ValueError("空乘积需要指定弦数")
        return BraidWord.identity(n)
    result = words[0]
    for w in words[1:]:
        result = compose(result, w)
    return result


def permutation_of(u: BraidWord) -> Permutation:
    """置换同态 π：σ_i ↦ (i, i+1)，从左到右复合"""
    positions = list(range(1, u.n + 1))  # positions[k-1]: 弦 k 当前位置
    at = list(range(1, u.n + 1))  # at[p-1]: 当前位置 p 上的弦
    for index, _ in u.letters:
        a, b = at[index - 1], at[index]
        at[index - 1], at[index] = b, a
        positions[a - 1], positions[b - 1] = index + 1, index
    return Permutation(tuple(positions))


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in p.cycles()), p.n)


def exponent_sum(u: BraidWord) -> int:
    """阿贝尔化 exp：B_n → Z，exp(σ_i) = 1"""
    return sum(s for _, s in u.letters)


# ============================================================================
# 基本构造
# ============================================================================


def artin(i: int, n: int, sign: int = 1) -> BraidWord:
    if not 1 <= i <= n - 1:
        raise BraidIndexError(f"σ_{i} 要求 1 ≤ i ≤ n-1 (n = {n})")
    return BraidWord(n, ((i, sign),))


def half_twist(k: int, n: int) -> BraidWord:
    """Δ_k = σ1 (σ2σ1) ⋯ (σ_{k-1}⋯σ1)，作为 B_n 中的元素"""
    if not 2 <= k <= n:
        raise BraidIndexError(f"半扭转 Δ_{k} 要求 2 ≤ k ≤ n (n = {n})")
    letters = []
    for top in range(1, k):
        letters.extend((i, 1) for i in range(top, 0, -1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """Δ_n² = (σ1⋯σ_{n-1})ⁿ"""
    if n < 2:
        raise BraidIndexError(f"全扭转要求 n ≥ 2: {n}")
    return BraidWord(n, tuple((i, 1) for i in range(1, n)) * n)


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """A_{i,j} = (σ_{j-1}⋯σ_{i+1}) σ_i² (σ_{i+1}⁻¹⋯σ_{j-1}⁻¹)"""
    if not 1 <= i < j <= n:
        raise BraidIndexError(f"A_{{{i},{j}}} 要求 1 ≤ i < j ≤ n (n = {n})")
    prefix = tuple((k, 1) for k in range(j - 1, i, -1))
    suffix = tuple((k, -1) for k in range(i + 1, j))
    return BraidWord(n, prefix + ((i, 1), (i, 1)) + suffix)


def cycle_braid(parts: Sequence[int], n: int) -> BraidWord:
    """
    α = ∏_k α_k，α_k = σ_{s+1} ⋯ σ_{s+j_k-1}，s 为前面各段长度之和

    π(α_k) 是作用在 s+1..s+j_k 上的 j_k-轮换，各 α_k 两两交换。
    """
    if sum(parts) > n:
        raise BraidIndexError(f"轮换长度之和 {sum(parts)} 超过 n = {n}")
    letters = []
    offset = 0
    for length in parts:
        if length < 2:
            raise ValueError(f"轮换长度必须 ≥ 2: {length}")
        letters.extend((i, 1) for i in range(offset + 1, offset + length))
        offset += length
    return BraidWord(n, tuple(letters))


def permutation_braid(p: Permutation) -> BraidWord:
    """
    置换 p 对应的正置换辫（每对弦至多交叉一次）

    插入排序式分解：每次取一个 σ_i 前缀（从位置 i, i+1 出发的弦会交叉），
    剥离后继续，直到剩下单位置换。permutation_of(结果) == p。
    """
    images = list(p.images)
    letters = []
    while True:
        for i in range(1, p.n):
            if images[i - 1] > images[i]:
                letters.append((i, 1))
                images[i - 1], images[i] = images[i], images[i - 1]
                break
        else:
            break
    return BraidWord(p.n, tuple(letters))


# ============================================================================
# 遗忘弦与稳定化
# ============================================================================


def forget_strand(u: BraidWord, i: int) -> BraidWord:
    """
    遗忘第 i 条弦 φ_i

    沿辫字追踪从位置 i 出发的弦，删除它参与的交叉，其余字母重新编号。
    在纯辫上即同态 (φ_i)_#。
    """
    if u.n < 2:
        raise BraidIndexError("遗忘弦要求 n ≥ 2")
    if not 1 <= i <= u.n:
        raise BraidIndexError(f"弦下标 {i} 不在 1..{u.n} 中")

    pos = i
    letters = []
    for index, sign in u.letters:
        if index == pos:
            pos = index + 1
        elif index + 1 == pos:
            pos = index
        elif index < pos:
            letters.append((index, sign))
        else:
            letters.append((index - 1, sign))
    return BraidWord(u.n - 1, free_reduce(letters))


def stabilize(u: BraidWord, times: int = 1) -> BraidWord:
    """ι：B_n → B_{n+times}，σ_k ↦ σ_k"""
    return BraidWord(u.n + times, u.letters)


def embed_infinite(u: InfiniteBraidWord) -> BraidWord:
    return BraidWord(u.m, u.letters)
