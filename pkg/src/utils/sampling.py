"""
随机辫字采样

测试与命令行随机检查使用的生成器，全部接受显式的 random.Random 以便复现。
"""

import random
from typing import List, Optional

from src.analysis.braid_core import BraidWord, Letter, compose, inverse, pure_generator


def random_word(
    n: int, length: int, rng: random.Random, reduce: bool = False
) -> BraidWord:
    """B_n 中长度为 length 的随机字（不做自由约化，除非 reduce=True）"""
    if n < 2:
        return BraidWord.identity(n)
    letters = [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)]
    word = BraidWord(n, tuple(letters))
    if reduce:
        return compose(word, BraidWord.identity(n))
    return word


def random_pure_word(n: int, factors: int, rng: random.Random) -> BraidWord:
    """A_{i,j}^{±1} 的随机乘积"""
    result = BraidWord.identity(n)
    if n < 2:
        return result
    for _ in range(factors):
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        gen = pure_generator(i, j, n)
        result = compose(result, gen if rng.random() < 0.5 else inverse(gen))
    return result


def relators(n: int) -> List[List[Letter]]:
    """σ_iσ_i⁻¹、辫关系子与远交换关系子"""
    result: List[List[Letter]] = []
    for i in range(1, n):
        result.append([(i, 1), (i, -1)])
        result.append([(i, -1), (i, 1)])
    for i in range(1, n - 1):
        j = i + 1
        result.append([(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)])
        result.append([(j, 1), (i, 1), (j, 1), (i, -1), (j, -1), (i, -1)])
    for i in range(1, n):
        for j in range(i + 2, n):
            result.append([(i, 1), (j, 1), (i, -1), (j, -1)])
    return result


def insert_relators(
    word: BraidWord, count: int, rng: random.Random, pool: Optional[List[List[Letter]]] = None
) -> BraidWord:
    """在随机位置插入 count 个关系子（或其逆），群元素不变"""
    pool = pool if pool is not None else relators(word.n)
    letters = list(word.letters)
    if not pool:
        return word
    for _ in range(count):
        rel = rng.choice(pool)
        if rng.random() < 0.5:
            rel = [(i, -s) for i, s in reversed(rel)]
        at = rng.randint(0, len(letters))
        letters[at:at] = rel
    return BraidWord(word.n, tuple(letters))
