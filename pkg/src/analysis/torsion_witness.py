"""
广义挠元证书

对任意非纯辫 β，按 π(β) 的轮换类型构造 (x, y, p)：
    xᵖ = yᵖ，x ≠ y，g = [x, y] ≠ 1，且 ∏_j c_j g c_j⁻¹ = 1（共 p² 项），
x、y、g、c_j 全部属于 H_β。于是 H_β 不具有唯一根性质且含广义挠元，
从而不可双序。

证书只存辫字，验证时重新计算正规形，独立于构造过程。
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import pandas as pd
from sympy.combinatorics.free_groups import FreeGroupElement, free_group
from tqdm import tqdm

from src.analysis.braid_core import (
    BraidWord,
    CycleType,
    InfiniteBraidWord,
    artin,
    compose,
    cycle_type,
    embed_infinite,
    inverse,
    permutation_of,
    power,
    product,
    pure_generator,
    stabilize,
)
from src.analysis.intermediate_subgroups import (
    canonical_representative,
    conjugacy_witness,
    enumerate_intermediate,
    lift_permutation,
    member,
    non_pure_cycle_types,
    subgroup_of,
)
from src.analysis.order_engine import root_clash
from src.analysis.word_problem import commutator, equal, is_trivial
from src.config.models import WitnessScanConfig
from src.utils.word_syntax import format_word, parse_word

# 默认配置实例
DEFAULT_CONFIG = WitnessScanConfig()

FREE_GROUP, X, Y = free_group("x, y")


class CertificateError(ValueError):
    """无法为给定的辫构造证书（纯辫、n < 3 等）"""


class CertificateCase(str, Enum):
    TRANSPOSITION = "Transposition"
    DISJOINT_TRANSPOSITIONS = "DisjointTranspositions"
    LONG_CYCLE = "LongCycle"
    THREE_CYCLE_N3 = "ThreeCycleN3"


# ============================================================================
# [xᵖ, yᵖ] 的形式展开
# ============================================================================


def free_commutator(a: FreeGroupElement, b: FreeGroupElement) -> FreeGroupElement:
    return a * b * a**-1 * b**-1


def expand_power_commutator(p: int) -> List[FreeGroupElement]:
    """
    [xᵖ, yᵖ] = ∏_j c_j [x, y] c_j⁻¹ 中的共轭元 c_j（自由群 ⟨x, y⟩ 中）

    先用 [x·a, c] = [a, c]^x [x, c] 剥离 x 的幂，再用 [x, y·b] = [x, y]·[x, b]^y
    剥离 y 的幂，得到 c = x^a y^b，a 从 p-1 降到 0，b 从 0 升到 p-1。
    p = 2 时为 (x, xy, 1, y)。
    """
    if p < 2:
        raise CertificateError(f"p 必须 ≥ 2: {p}")
    return [X**a * Y**b for a in range(p - 1, -1, -1) for b in range(p)]


@dataclass(frozen=True)
class ExpansionStep:
    """lhs = ∏ (c · base · c⁻¹)，rhs 为 (c, base) 序列"""

    lhs: FreeGroupElement
    rhs: Tuple[Tuple[FreeGroupElement, FreeGroupElement], ...]

    def product(self) -> FreeGroupElement:
        result = FREE_GROUP.identity
        for c, base in self.rhs:
            result = result * c * base * c**-1
        return result

    def holds(self) -> bool:
        return self.product() == self.lhs

    def describe(self) -> str:
        terms = " ".join(f"[{base}]^({c})" for c, base in self.rhs)
        return f"[{self.lhs}] = {terms}"


def expansion_steps(p: int) -> List[ExpansionStep]:
    """剥离 x 幂、剥离 y 幂、合并三步推导"""
    if p < 2:
        raise CertificateError(f"p 必须 ≥ 2: {p}")
    xp, yp = X**p, Y**p
    base = free_commutator(X, Y)
    peel_x = ExpansionStep(
        lhs=free_commutator(xp, yp),
        rhs=tuple((X**a, free_commutator(X, yp)) for a in range(p - 1, -1, -1)),
    )
    peel_y = ExpansionStep(
        lhs=free_commutator(X, yp),
        rhs=tuple((Y**b, base) for b in range(p)),
    )
    combined = ExpansionStep(
        lhs=free_commutator(xp, yp),
        rhs=tuple((c, base) for c in expand_power_commutator(p)),
    )
    return [peel_x, peel_y, combined]


def instantiate(element: FreeGroupElement, x: BraidWord, y: BraidWord) -> BraidWord:
    """把自由群中的字代入 x、y 得到辫字"""
    result = BraidWord.identity(x.n)
    for symbol, exponent in element.array_form:
        base = x if str(symbol) == "x" else y
        result = compose(result, power(base, exponent))
    return result


# ============================================================================
# 证书
# ============================================================================


@dataclass(frozen=True)
class TorsionCertificate:
    """
    H_β 的非双序证书

    representative 为同轮换类型的典型代表元 γ，transport 为 α₀，
    π(α₀ γ α₀⁻¹) = π(β)；核心对先在 H_γ 中构造再用 α₀ 共轭。
    """

    n: int
    beta: BraidWord
    case: CertificateCase
    x: BraidWord
    y: BraidWord
    p: int
    g: BraidWord
    conjugators: Tuple[BraidWord, ...]
    representative: Optional[BraidWord] = None
    transport: Optional[BraidWord] = None

    def relation_word(self) -> BraidWord:
        """∏_j c_j g c_j⁻¹"""
        return product([product([c, self.g, inverse(c)]) for c in self.conjugators], n=self.n)

    def to_dict(self, verified: Optional[bool] = None) -> dict:
        data = {
            "n": self.n,
            "beta": format_word(self.beta),
            "case": self.case.value,
            "x": format_word(self.x),
            "y": format_word(self.y),
            "p": self.p,
            "commutator": format_word(self.g),
            "conjugators": [format_word(c) for c in self.conjugators],
        }
        if self.representative is not None:
            data["representative"] = format_word(self.representative)
        if self.transport is not None:
            data["transport"] = format_word(self.transport)
        if verified is not None:
            data["verified"] = verified
        return data


CERTIFICATE_FIELDS = ("n", "beta", "case", "x", "y", "p", "commutator", "conjugators")


def certificate_from_dict(data: dict) -> TorsionCertificate:
    """to_dict 的逆；字按统一文本语法解析，缺少字段时抛出 CertificateError"""
    if not isinstance(data, dict):
        raise CertificateError(f"证书必须是 JSON 对象，而不是 {type(data).__name__}")
    missing = [key for key in CERTIFICATE_FIELDS if data.get(key) is None]
    if missing:
        raise CertificateError("证书缺少字段: " + ", ".join(missing))
    n = int(data["n"])

    def word(key: str) -> Optional[BraidWord]:
        return parse_word(data[key], n) if data.get(key) is not None else None

    return TorsionCertificate(
        n=n,
        beta=word("beta"),
        case=CertificateCase(data["case"]),
        x=word("x"),
        y=word("y"),
        p=int(data["p"]),
        g=word("commutator"),
        conjugators=tuple(parse_word(c, n) for c in data["conjugators"]),
        representative=word("representative"),
        transport=word("transport"),
    )


def _core_pair(
    n: int, parts: Tuple[int, ...]
) -> Tuple[CertificateCase, BraidWord, BraidWord, BraidWord, int]:
    """(case, γ, x, y, p)，γ 为典型代表元"""
    gamma = canonical_representative(CycleType(parts, n), n)
    a12 = pure_generator(1, 2, n)

    if all(part == 2 for part in parts):
        if len(parts) == 1:
            s1, s2 = artin(1, n), artin(2, n)
            x, y = product([s1, s2, s2]), product([s2, s2, s1])
            return CertificateCase.TRANSPOSITION, gamma, x, y, 2
        x = product([a12, gamma, inverse(a12)])
        return CertificateCase.DISJOINT_TRANSPOSITIONS, gamma, x, gamma, 2

    if n == 3:
        s1, s2 = artin(1, 3), artin(2, 3)
        return CertificateCase.THREE_CYCLE_N3, gamma, s1 * s2, s2 * s1, 3

    x = product([a12, gamma, inverse(a12)])
    return CertificateCase.LONG_CYCLE, gamma, x, gamma, parts[0]


def build_certificate(beta: BraidWord) -> TorsionCertificate:
    """
    按 π(β) 的轮换类型选择核心对：
        - 单个对换：x = σ1σ2²，y = σ2²σ1，p = 2；
        - m ≥ 2 个不交对换：x = A_{1,2} Δ_{2m} A_{1,2}⁻¹，y = Δ_{2m}，p = 2；
        - n = 3 的 3-轮换：x = σ1σ2，y = σ2σ1，p = 3；
        - 含长度 j_1 ≥ 3 的轮换：x = A_{1,2} α A_{1,2}⁻¹，y = α，p = j_1。
    再用 α₀ 把核心对从 H_γ 共轭到 H_β。
    """
    n = beta.n
    if n < 3:
        raise CertificateError(f"证书要求 n ≥ 3: {n}")
    perm = permutation_of(beta)
    if perm.is_identity():
        raise CertificateError("β 是纯辫，H_β = P_n，不构造证书")

    case, gamma, x0, y0, p = _core_pair(n, cycle_type(perm).partition)
    transport = conjugacy_witness(gamma, beta).conjugator
    transport_inv = inverse(transport)

    x = product([transport, x0, transport_inv])
    y = product([transport, y0, transport_inv])
    conjugators = tuple(instantiate(c, x, y) for c in expand_power_commutator(p))

    return TorsionCertificate(
        n=n,
        beta=beta,
        case=case,
        x=x,
        y=y,
        p=p,
        g=commutator(x, y),
        conjugators=conjugators,
        representative=gamma,
        transport=transport,
    )


@dataclass(frozen=True)
class PositiveLift:
    """α = γβ：α 为 π(β) 的正提升，γ ∈ P_n"""

    beta: BraidWord
    alpha: BraidWord
    gamma: BraidWord

    def holds(self) -> bool:
        """γ 为纯辫、α = γβ 且 H_α = H_β"""
        return (
            permutation_of(self.gamma).is_identity()
            and equal(self.alpha, compose(self.gamma, self.beta)).equal
            and subgroup_of(self.alpha) == subgroup_of(self.beta)
        )


def positive_lift(beta: BraidWord) -> PositiveLift:
    """
    取 α = lift(π(β))，γ = αβ⁻¹。π(γ) = 1，故 ⟨P_n, α⟩ ⊂ H_β，
    在 α 上构造的证书同时是 H_β 的证书。
    """
    alpha = lift_permutation(permutation_of(beta))
    return PositiveLift(beta=beta, alpha=alpha, gamma=compose(alpha, inverse(beta)))


def build_certificate_infinite(beta: InfiniteBraidWord) -> TorsionCertificate:
    """在最小弦数 m 上实现 β（至少 3 条弦）后构造证书"""
    word = embed_infinite(beta)
    if permutation_of(word).is_identity():
        raise CertificateError("β 是纯辫，不构造证书")
    if word.n < 3:
        word = stabilize(word, 3 - word.n)
    return build_certificate(word)


# ============================================================================
# 验证
# ============================================================================


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CertificateReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def get(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"检查项": c.name, "通过": c.passed, "说明": c.detail} for c in self.checks]
        )


def _run_check(report: CertificateReport, name: str, check):
    try:
        passed, detail = check()
    except (ValueError, RuntimeError) as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    report.checks.append(CheckResult(name, bool(passed), detail))


def verify_certificate(c: TorsionCertificate) -> CertificateReport:
    """
    独立验证证书的全部不变量，失败作为报告条目返回而不抛出

    检查项：equal_powers、distinct_roots、nontrivial_commutator、
    commutator_subgroup、torsion_relation、subgroup_membership。
    """
    report = CertificateReport()

    _run_check(
        report,
        "equal_powers",
        lambda: (equal(power(c.x, c.p), power(c.y, c.p)).equal, f"x^{c.p} = y^{c.p}"),
    )
    _run_check(report, "distinct_roots", lambda: (not equal(c.x, c.y).equal, "x ≠ y"))
    _run_check(report, "nontrivial_commutator", lambda: (not is_trivial(c.g), "g ≠ 1"))
    _run_check(
        report,
        "commutator_subgroup",
        lambda: (equal(c.g, commutator(c.x, c.y)).equal, "g = [x, y]"),
    )

    def torsion_relation():
        expected = c.p * c.p
        if len(c.conjugators) != expected:
            return False, f"共轭元个数 {len(c.conjugators)} != p² = {expected}"
        return is_trivial(c.relation_word()), f"∏ c_j g c_j⁻¹ = 1（{expected} 项）"

    _run_check(report, "torsion_relation", torsion_relation)

    def subgroup_membership():
        h = subgroup_of(c.beta)
        outside = [
            name
            for name, w in [("x", c.x), ("y", c.y), ("g", c.g)]
            + [(f"c_{j + 1}", w) for j, w in enumerate(c.conjugators)]
            if not member(h, w)
        ]
        return not outside, "不在 H_β 中: " + ",".join(outside) if outside else "全部属于 H_β"

    _run_check(report, "subgroup_membership", subgroup_membership)
    return report


def is_root_clash_witness(c: TorsionCertificate) -> bool:
    return root_clash(c.x, c.y, c.p)


# ============================================================================
# 扫描
# ============================================================================


@dataclass
class ScanResult:
    n: int
    label: str
    beta: BraidWord
    case: Optional[CertificateCase]
    p: Optional[int]
    passed: bool
    failed_checks: List[str] = field(default_factory=list)
    error: Optional[str] = None


def scan_to_dataframe(results: List[ScanResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "n": r.n,
                "对象": r.label,
                "β": format_word(r.beta),
                "情形": r.case.value if r.case else None,
                "p": r.p,
                "通过": r.passed,
                "失败项": ",".join(r.failed_checks),
                "错误": r.error,
            }
            for r in results
        ]
    )


def _certify(n: int, label: str, beta: BraidWord, verify: bool) -> ScanResult:
    try:
        cert = build_certificate(beta)
    except (ValueError, RuntimeError) as e:
        return ScanResult(n, label, beta, None, None, False, error=str(e))
    if not verify:
        return ScanResult(n, label, beta, cert.case, cert.p, True)
    report = verify_certificate(cert)
    return ScanResult(n, label, beta, cert.case, cert.p, report.all_passed, report.failed())


def _run_tasks(tasks: List[Tuple[str, BraidWord]], n: int, config: WitnessScanConfig, desc: str):
    """并发执行，结果按任务顺序返回"""
    results: List[Optional[ScanResult]] = [None] * len(tasks)
    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        future_to_index = {
            executor.submit(_certify, n, label, beta, config.verify): i
            for i, (label, beta) in enumerate(tasks)
        }
        with tqdm(total=len(tasks), desc=desc, disable=not config.show_progress) as pbar:
            for future in as_completed(future_to_index):
                i = future_to_index[future]
                result = future.result()
                mark = "✓" if result.passed else "✗"
                pbar.set_postfix_str(f"{mark} {result.label}")
                results[i] = result
                pbar.update(1)
    return results


def scan_cycle_types(n: int, config: Optional[WitnessScanConfig] = None) -> List[ScanResult]:
    """对 B_n 的每个非纯轮换类型，在典型代表元上构造并验证证书"""
    if config is None:
        config = DEFAULT_CONFIG
    if not 3 <= n <= 6:
        raise ValueError(f"n 必须在 3..6 之间: {n}")
    tasks = [(str(t), canonical_representative(t, n)) for t in non_pure_cycle_types(n)]
    return _run_tasks(tasks, n, config, f"Certifying cycle types (n={n})")


def scan_intermediate_subgroups(
    n: int, config: Optional[WitnessScanConfig] = None
) -> List[ScanResult]:
    """
    对 S_n 的每个非平凡子群 K（共轭类代表），取 K 中一个非单位生成元的提升 β，
    则 H_β ⊂ π⁻¹(K)，H_β 的证书同时说明 π⁻¹(K) 不可双序
    """
    if config is None:
        config = DEFAULT_CONFIG
    tasks = []
    for d in enumerate_intermediate(n):
        if d.is_trivial():
            continue
        generator = next(g for g in d.generators if not g.is_identity())
        label = f"|K|={d.order} <" + " ".join(g.cycle_string() for g in d.generators) + ">"
        tasks.append((label, lift_permutation(generator)))
    return _run_tasks(tasks, n, config, f"Certifying subgroups (n={n})")
