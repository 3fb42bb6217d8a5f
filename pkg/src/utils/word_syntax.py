"""
辫字文本语法

全仓库统一的文本格式：空白分隔的 `s<k>` / `s<k>^-1`，例如 `s1 s2^-1 s1`；
空串表示单位元。弦数可显式给出，否则取 1 + 最大下标。
"""

import re
from typing import Optional

from src.analysis.braid_core import BraidWord, InfiniteBraidWord

TOKEN_PATTERN = re.compile(r"^s(\d+)(\^-1)?$")


class WordSyntaxError(ValueError):
    """辫字文本无法解析"""


def parse_letters(text: str):
    letters = []
    for token in text.split():
        match = TOKEN_PATTERN.match(token)
        if not match:
            raise WordSyntaxError(f"无法解析的字母: {token!r}")
        index = int(match.group(1))
        if index < 1:
            raise WordSyntaxError(f"生成元下标必须 ≥ 1: {token!r}")
        letters.append((index, -1 if match.group(2) else 1))
    return tuple(letters)


def parse_word(text: str, n: Optional[int] = None) -> BraidWord:
    """
    解析辫字文本

    Args:
        text: 例如 "s1 s2^-1"
        n: 显式弦数；缺省时取 1 + 最大下标

    Returns:
        BraidWord
    """
    letters = parse_letters(text or "")
    max_index = max((i for i, _ in letters), default=0)
    if n is None:
        n = max_index + 1
    elif max_index > n - 1:
        raise WordSyntaxError(f"下标 {max_index} 超出显式弦数 n = {n}")
    if n < 1:
        raise WordSyntaxError(f"弦数必须 ≥ 1: {n}")
    return BraidWord(n, letters)


def parse_infinite_word(text: str) -> InfiniteBraidWord:
    return InfiniteBraidWord(parse_letters(text or ""))


def format_letters(letters) -> str:
    return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in letters)


def format_word(word) -> str:
    return format_letters(word.letters)
