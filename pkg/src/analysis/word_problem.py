"""
字问题：Garside 左贪婪正规形与 Dehornoy 柄约化

- normal_form: Δ^p · s_1 ⋯ s_k，s_i 为左加权的置换辫（以置换存储）；
- handle_reduce: 独立于 Garside 的柄约化，用于交叉验证与 Dehornoy 序；
- run_identity_suite / run_noncommutation_suite: 逐条验证证明中用到的恒等式。
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from src.analysis.braid_core import (
    BraidWord,
    Permutation,
    artin,
    check_same_strands,
    cycle_braid,
    full_twist,
    half_twist,
    inverse,
    permutation_braid,
    permutation_of,
    power,
    product,
    pure_generator,
)
from src.config.models import WordProblemConfig

# 默认配置实例
DEFAULT_CONFIG = WordProblemConfig()

Perm = Tuple[int, ...]


class HandleReductionBudgetError(RuntimeError):
    """柄约化超过步数上限"""


# ============================================================================
# 置换辫（简单元）运算，内部使用 1-based 像的元组
# ============================================================================


@lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _tau(a: Perm) -> Perm:
    """Δ a Δ⁻¹，即 σ_i ↦ σ_{n-i}"""
    n = len(a)
    return tuple(n + 1 - a[n - 1 - k] for k in range(n))


def _inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for k, v in enumerate(a, start=1):
        inv[v - 1] = k
    return tuple(inv)


def _starting_set(b: Perm) -> List[int]:
    """σ_i ≼ b 的 i：从位置 i, i+1 出发的弦交叉"""
    return [i for i in range(1, len(b)) if b[i - 1] > b[i]]


def _finishing_set(a: Perm) -> set:
    """a ≽ σ_i 的 i：结束于位置 i, i+1 的弦交叉"""
    inv = _inverse(a)
    return {i for i in range(1, len(a)) if inv[i - 1] > inv[i]}


def _generator(i: int, n: int) -> Perm:
    images = list(_identity(n))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def _delta_sigma_inverse(i: int, n: int) -> Perm:
    """Δ σ_i⁻¹ 作为置换辫"""
    images = list(_delta(n))
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in images)


def _left_weight(a: Perm, b: Perm) -> Tuple[Perm, Perm]:
    """把 b 的前缀逐个字母移入 a，直到 S(b) ⊆ F(a)"""
    while True:
        finishing = _finishing_set(a)
        for i in _starting_set(b):
            if i not in finishing:
                a = tuple(i + 1 if v == i else i if v == i + 1 else v for v in a)
                b = b[: i - 1] + (b[i], b[i - 1]) + b[i + 1 :]
                break
        else:
            return a, b


def is_left_weighted(a: Perm, b: Perm) -> bool:
    return set(_starting_set(b)) <= _finishing_set(a)


def is_simple_letters(letters: Sequence[Tuple[int, int]], n: int) -> bool:
    """正字且每对弦至多交叉一次"""
    if any(s < 0 for _, s in letters):
        return False
    at = list(range(1, n + 1))
    crossed = set()
    for index, _ in letters:
        a, b = at[index - 1], at[index]
        pair = (min(a, b), max(a, b))
        if pair in crossed:
            return False
        crossed.add(pair)
        at[index - 1], at[index] = b, a
    return True


# ============================================================================
# Garside 正规形
# ============================================================================


@dataclass(frozen=True)
class GarsideNormalForm:
    """Δ^delta_power · factors[0] ⋯ factors[-1]"""

    n: int
    delta_power: int
    factors: Tuple[Permutation, ...] = field(default_factory=tuple)

    def format(self) -> str:
        """文本格式 `D^<p> | <因子单行记号> | ...`"""
        return " | ".join([f"D^{self.delta_power}"] + [f.one_line() for f in self.factors])

    def to_word(self) -> BraidWord:
        n = self.n
        if n == 1:
            return BraidWord.identity(1)
        delta = half_twist(n, n)
        words = [power(delta, self.delta_power)]
        words.extend(permutation_braid(f) for f in self.factors)
        return product(words)

    def permutation(self) -> Permutation:
        result = Permutation.identity(self.n)
        if self.delta_power % 2:
            result = Permutation(_delta(self.n))
        for f in self.factors:
            result = result.then(f)
        return result

    def letter_count(self) -> int:
        """exp 的值：delta_power·n(n−1)/2 + 各因子的字母数"""
        return self.delta_power * self.n * (self.n - 1) // 2 + sum(
            len(permutation_braid(f)) for f in self.factors
        )

    def __str__(self):
        return self.format()


def parse_normal_form(text: str, n: Optional[int] = None) -> GarsideNormalForm:
    """format() 的逆"""
    parts = [p.strip() for p in text.split("|")]
    head = parts[0]
    if not head.startswith("D^"):
        raise ValueError(f"正规形必须以 D^<p> 开头: {text!r}")
    delta_power = int(head[2:])
    factors = tuple(Permutation(tuple(int(v) for v in p.split())) for p in parts[1:])
    if n is None:
        if not factors:
            raise ValueError("无因子时需要显式给出 n")
        n = factors[0].n
    return GarsideNormalForm(n, delta_power, factors)


def _append_factor(factors: List[Perm], b: Perm, twisted: bool):
    """
    在左加权序列末尾追加一个简单元，并从右向左重新加权

    twisted 为真时 factors 中存的是 τ(实际因子)。
    """

    def view(f: Perm) -> Perm:
        return _tau(f) if twisted else f

    factors.append(view(b))
    for j in range(len(factors) - 2, -1, -1):
        left = view(factors[j])
        a, c = _left_weight(left, view(factors[j + 1]))
        if a == left:
            break
        factors[j], factors[j + 1] = view(a), view(c)


def normal_form(u: BraidWord) -> GarsideNormalForm:
    """
    左贪婪正规形

    σ_i⁻¹ 改写为 Δ⁻¹·(Δσ_i⁻¹)，Δ⁻¹ 左移时对已有因子作用 τ；
    τ 是对合，只记录奇偶，输出时统一作用。
    正规形相同当且仅当群元素相同。
    """
    n = u.n
    delta = _delta(n)
    identity = _identity(n)
    delta_power = 0
    twisted = False
    factors: List[Perm] = []

    for index, sign in u.letters:
        if sign > 0:
            _append_factor(factors, _generator(index, n), twisted)
        else:
            delta_power -= 1
            twisted = not twisted
            _append_factor(factors, _delta_sigma_inverse(index, n), twisted)

    if twisted:
        factors = [_tau(f) for f in factors]

    start = 0
    while start < len(factors) and factors[start] == delta:
        start += 1
    end = len(factors)
    while end > start and factors[end - 1] == identity:
        end -= 1

    return GarsideNormalForm(
        n=n,
        delta_power=delta_power + start,
        factors=tuple(Permutation(f) for f in factors[start:end]),
    )


@dataclass(frozen=True)
class EqualityVerdict:
    equal: bool
    left_normal_form: GarsideNormalForm
    right_normal_form: GarsideNormalForm


def equal(u: BraidWord, v: BraidWord) -> EqualityVerdict:
    check_same_strands(u, v)
    left, right = normal_form(u), normal_form(v)
    return EqualityVerdict(equal=left == right, left_normal_form=left, right_normal_form=right)


def is_trivial(u: BraidWord) -> bool:
    nf = normal_form(u)
    return nf.delta_power == 0 and not nf.factors


def commutator(x: BraidWord, y: BraidWord) -> BraidWord:
    """[x, y] = x y x⁻¹ y⁻¹（字面拼接）"""
    check_same_strands(x, y)
    return BraidWord(x.n, x.letters + y.letters + inverse(x).letters + inverse(y).letters)


def conjugate(x: BraidWord, w: BraidWord) -> BraidWord:
    """x^w = w x w⁻¹（字面拼接）"""
    check_same_strands(x, w)
    return BraidWord(x.n, w.letters + x.letters + inverse(w).letters)


# ============================================================================
# Dehornoy 柄约化
# ============================================================================


def _first_handle(letters: List[Tuple[int, int]], start: int = 0):
    """右端最靠左的 σ_j-柄 σ_j^e w σ_j^{-e}（w 中只含 σ_k, k > j）"""
    for r in range(start, len(letters)):
        j, d = letters[r]
        for s in range(r - 1, -1, -1):
            k, e = letters[s]
            if k < j:
                break
            if k == j:
                if e == -d:
                    return s, r
                break
    return None


def handle_reduce(u: BraidWord, config: Optional[WordProblemConfig] = None) -> BraidWord:
    """
    反复约化最左（最内）的柄，直到字中不含柄

    结果为空字、σ-正字或 σ-负字。
    """
    if config is None:
        config = DEFAULT_CONFIG

    letters = list(u.letters)
    steps = 0
    start = 0
    while True:
        found = _first_handle(letters, start)
        if found is None:
            return BraidWord(u.n, tuple(letters))
        steps += 1
        if steps > config.handle_step_budget:
            raise HandleReductionBudgetError(
                f"柄约化超过步数上限 {config.handle_step_budget}（长度 {len(u)} 的字）"
            )
        s, r = found
        j, e = letters[s]
        replaced = []
        for k, d in letters[s + 1 : r]:
            if k == j + 1:
                replaced.extend([(j + 1, -e), (j, d), (j + 1, e)])
            else:
                replaced.append((k, d))
        letters[s : r + 1] = replaced
        start = s


def handle_reduce_trivial(u: BraidWord, config: Optional[WordProblemConfig] = None) -> bool:
    return handle_reduce(u, config).is_empty()


# ============================================================================
# 恒等式验证套件
# ============================================================================


@dataclass
class IdentityCheck:
    """单条恒等式在一组参数下的验证结果"""

    identity: str
    params: str
    passed: bool
    detail: str = ""


@dataclass
class IdentityReport:
    entries: List[IdentityCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> List[IdentityCheck]:
        return [e for e in self.entries if not e.passed]

    def add(self, identity: str, params: str, passed: bool, detail: str = ""):
        self.entries.append(IdentityCheck(identity, params, bool(passed), detail))

    def summary(self) -> dict:
        counts = {}
        for e in self.entries:
            ok, total = counts.get(e.identity, (0, 0))
            counts[e.identity] = (ok + int(e.passed), total + 1)
        return counts

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {"恒等式": e.identity, "参数": e.params, "通过": e.passed, "说明": e.detail}
                for e in self.entries
            ]
        )


def _check_equal(report: IdentityReport, name: str, params: str, lhs: BraidWord, rhs: BraidWord):
    verdict = equal(lhs, rhs)
    detail = "" if verdict.equal else (
        f"{verdict.left_normal_form.format()} != {verdict.right_normal_form.format()}"
    )
    report.add(name, params, verdict.equal, detail)


def long_cycle_data(n_max: int) -> List[Tuple[int, ...]]:
    """所有长度 ≥ 2、和 ≤ n_max、最长段 ≥ 3 的轮换数据（降序）"""
    from src.analysis.intermediate_subgroups import non_pure_cycle_types

    return [t.partition for t in non_pure_cycle_types(n_max) if t.partition[0] >= 3]


def run_identity_suite(n_max: int = 7) -> IdentityReport:
    """
    验证 (σ1σ2²)² = (σ2²σ1)²、(σ1σ2)³ = (σ2σ1)³、(A₁₂Δ_iA₁₂⁻¹)² = Δ_i²、
    σ_i Δ_k = Δ_k σ_{k-i}、Δ_n² 的中心性、长轮换的幂以及 π(Δ_k) 的对换分解
    """
    if n_max < 3:
        raise ValueError(f"n_max 必须 ≥ 3: {n_max}")

    report = IdentityReport()
    N = n_max

    for n in range(3, n_max + 1):
        s1, s2 = artin(1, n), artin(2, n)
        x = product([s1, s2, s2])
        y = product([s2, s2, s1])
        _check_equal(report, "transposition_roots", f"n={n}", power(x, 2), power(y, 2))
        _check_equal(report, "three_cycle_roots", f"n={n}", power(s1 * s2, 3), power(s2 * s1, 3))

    a12 = pure_generator(1, 2, N)
    for i in range(3, n_max + 1):
        delta_i = half_twist(i, N)
        lhs = power(product([a12, delta_i, inverse(a12)]), 2)
        _check_equal(report, "conjugated_half_twist_square", f"i={i}", lhs, power(delta_i, 2))

    for k in range(2, n_max + 1):
        delta_k = half_twist(k, N)
        for i in range(1, k):
            _check_equal(
                report,
                "half_twist_conjugation",
                f"i={i},k={k}",
                artin(i, N) * delta_k,
                delta_k * artin(k - i, N),
            )

    for n in range(2, n_max + 1):
        _check_equal(report, "full_twist_square", f"n={n}", full_twist(n), power(half_twist(n, n), 2))

    for n in range(3, n_max + 1):
        twist = full_twist(n)
        for i in range(1, n):
            report.add("center", f"n={n},i={i}", is_trivial(commutator(twist, artin(i, n))))

    for parts in long_cycle_data(n_max):
        alpha = cycle_braid(parts, N)
        j1 = parts[0]
        lhs = power(product([a12, alpha, inverse(a12)]), j1)
        _check_equal(report, "long_cycle_power", "j=" + ",".join(map(str, parts)), lhs, power(alpha, j1))

    for k in range(2, n_max + 2):
        expected = Permutation.from_cycles(k, [(l, k + 1 - l) for l in range(1, k // 2 + 1)])
        actual = permutation_of(half_twist(k, k))
        report.add(
            "half_twist_permutation",
            f"k={k}",
            actual == expected,
            "" if actual == expected else f"{actual} != {expected}",
        )

    return report


def run_noncommutation_suite(n_max: int = 6) -> IdentityReport:
    """[A_{1,2}, Δ_i] ≠ 1 与 [A_{1,2}, σ1⋯σ_i] = σ1 A_{1,2} A_{1,3}⁻¹ σ1⁻¹ ≠ 1"""
    if n_max < 3:
        raise ValueError(f"n_max 必须 ≥ 3: {n_max}")

    report = IdentityReport()
    N = n_max
    a12 = pure_generator(1, 2, N)
    a13 = pure_generator(1, 3, N)
    s1 = artin(1, N)

    for i in range(3, n_max + 1):
        report.add(
            "a12_delta_noncommuting",
            f"i={i}",
            not is_trivial(commutator(a12, half_twist(i, N))),
        )

    expected = product([s1, a12, inverse(a13), inverse(s1)])
    for i in range(2, n_max):
        c = commutator(a12, BraidWord(N, tuple((k, 1) for k in range(1, i + 1))))
        _check_equal(report, "a12_cycle_commutator", f"i={i}", c, expected)
        report.add("a12_cycle_noncommuting", f"i={i}", not is_trivial(c))

    a23 = pure_generator(2, 3, N)
    for name, u, v in (("A12!=A13", a12, a13), ("A12!=A23", a12, a23), ("A13!=A23", a13, a23)):
        report.add("pure_generators_distinct", name, not equal(u, v).equal)

    return report
