"""
辫群上的序

- Dehornoy 左序（全序，左不变）：u < v 当且仅当 u⁻¹v 为 σ-正；
- 基于阿贝尔化 exp 的部分双不变序；
- 唯一根性质失效的检测。
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from src.analysis.braid_core import (
    BraidWord,
    check_same_strands,
    compose,
    exponent_sum,
    inverse,
    power,
)
from src.analysis.word_problem import DEFAULT_CONFIG, equal, handle_reduce
from src.config.models import WordProblemConfig


class OrderVerdict(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class PartialVerdict(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def sigma_sign(u: BraidWord, config: Optional[WordProblemConfig] = None) -> int:
    """
    u 的 σ-符号：+1（σ-正）、-1（σ-负）、0（平凡）

    柄约化后最小下标的生成元只以一种符号出现。
    """
    reduced = handle_reduce(u, config or DEFAULT_CONFIG)
    if reduced.is_empty():
        return 0
    lowest = min(reduced.indices())
    return next(s for i, s in reduced.letters if i == lowest)


def is_sigma_positive(u: BraidWord, config: Optional[WordProblemConfig] = None) -> bool:
    return sigma_sign(u, config) > 0


def dehornoy_compare(
    u: BraidWord, v: BraidWord, config: Optional[WordProblemConfig] = None
) -> OrderVerdict:
    """σ-正 ⇒ 大于单位元"""
    check_same_strands(u, v)
    sign = sigma_sign(compose(inverse(u), v), config)
    if sign > 0:
        return OrderVerdict.LESS
    if sign < 0:
        return OrderVerdict.GREATER
    return OrderVerdict.EQUAL


def partial_compare(u: BraidWord, v: BraidWord) -> PartialVerdict:
    """正锥 Q = exp⁻¹(Z_{>0})；在任意中间子群上同样适用"""
    check_same_strands(u, v)
    eu, ev = exponent_sum(u), exponent_sum(v)
    if eu < ev:
        return PartialVerdict.LESS
    if eu > ev:
        return PartialVerdict.GREATER
    if equal(u, v).equal:
        return PartialVerdict.EQUAL
    return PartialVerdict.INCOMPARABLE


def root_clash(x: BraidWord, y: BraidWord, p: int) -> bool:
    """(x, y, p) 是否见证唯一根性质失效：xᵖ = yᵖ 且 x ≠ y"""
    if p < 2:
        raise ValueError(f"p 必须 ≥ 2: {p}")
    check_same_strands(x, y)
    return equal(power(x, p), power(y, p)).equal and not equal(x, y).equal


@dataclass(frozen=True)
class RightInvarianceFailure:
    """u < v 但 uc > vc"""

    u: BraidWord
    v: BraidWord
    c: BraidWord


def _reduced_words(n: int, max_length: int) -> Iterator[BraidWord]:
    """按长度递增枚举 B_n 中自由约化的字"""
    alphabet = [(i, s) for i in range(1, n) for s in (1, -1)]
    yield BraidWord.identity(n)
    for length in range(1, max_length + 1):
        for letters in itertools.product(alphabet, repeat=length):
            if any(a[0] == b[0] and a[1] == -b[1] for a, b in zip(letters, letters[1:])):
                continue
            yield BraidWord(n, letters)


def find_right_invariance_failure(
    n: int = 3, max_length: int = 6, config: Optional[WordProblemConfig] = None
) -> Optional[RightInvarianceFailure]:
    """
    在长度 ≤ max_length 的字中有界搜索右不变性的反例

    由左不变性，只需取 u = 1：1 < v 且 c > vc。n ≥ 3 时必然存在。
    """
    if n < 3:
        raise ValueError(f"B_{n} 可双序，搜索要求 n ≥ 3")
    identity = BraidWord.identity(n)
    for v in _reduced_words(n, max_length):
        if dehornoy_compare(identity, v, config) is not OrderVerdict.LESS:
            continue
        for c in _reduced_words(n, max_length):
            if c.is_empty():
                continue
            if dehornoy_compare(c, compose(v, c), config) is OrderVerdict.GREATER:
                return RightInvarianceFailure(u=identity, v=v, c=c)
    return None
