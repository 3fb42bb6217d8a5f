"""
中间子群 P_n ⊊ H ⊂ B_n

由 Galois 对应 H_β = ⟨P_n, β⟩ = π⁻¹(⟨π(β)⟩)，子群完全由 S_n 中的
循环子群 ⟨π(β)⟩ 决定，成员判定是有限检查。
"""

import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup
from sympy.utilities.iterables import partitions

from src.analysis.braid_core import (
    BraidWord,
    CycleType,
    Permutation,
    StrandMismatchError,
    artin,
    cycle_braid,
    cycle_type,
    half_twist,
    permutation_braid,
    permutation_of,
)


class CycleTypeMismatchError(ValueError):
    """两个置换的轮换类型不同，不存在共轭"""


# ============================================================================
# H_β
# ============================================================================


@dataclass(frozen=True)
class IntermediateSubgroup:
    """
    H_β = π⁻¹(⟨generator_perm⟩)

    cyclic_elements 为 ⟨π(β)⟩ ⊂ S_n，含单位置换。
    """

    n: int
    generator_perm: Permutation
    cyclic_elements: FrozenSet[Permutation]

    @property
    def order(self) -> int:
        """[H_β : P_n]"""
        return len(self.cyclic_elements)

    def is_pure(self) -> bool:
        """H_β = P_n"""
        return self.order == 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "generator_perm": list(self.generator_perm.images),
            "order": self.order,
        }


def to_sympy(p: Permutation) -> SymPermutation:
    """images 为 1 起点，sympy 的 array_form 为 0 起点；两者乘法都是先左后右"""
    return SymPermutation([v - 1 for v in p.images])


def from_sympy(s: SymPermutation, n: int) -> Permutation:
    return Permutation(tuple(s(k) + 1 for k in range(n)))


def cyclic_subgroup(p: Permutation) -> FrozenSet[Permutation]:
    """⟨p⟩ ⊂ S_n"""
    return frozenset(from_sympy(g, p.n) for g in PermutationGroup([to_sympy(p)]).generate())


def subgroup_of(beta: BraidWord) -> IntermediateSubgroup:
    p = permutation_of(beta)
    return IntermediateSubgroup(n=beta.n, generator_perm=p, cyclic_elements=cyclic_subgroup(p))


def member(h: IntermediateSubgroup, w: BraidWord) -> bool:
    if w.n != h.n:
        raise StrandMismatchError(f"弦数不一致: H ⊂ B_{h.n}，字在 B_{w.n}")
    return permutation_of(w) in h.cyclic_elements


def lift_permutation(tau: Permutation) -> BraidWord:
    """τ 的正提升（置换辫），permutation_of(结果) == τ"""
    return permutation_braid(tau)


# ============================================================================
# 共轭
# ============================================================================


@dataclass(frozen=True)
class ConjugacyWitness:
    """π(conjugator · β · conjugator⁻¹) = target"""

    conjugator: BraidWord
    source: Permutation
    target: Permutation

    def verified(self) -> bool:
        a = permutation_of(self.conjugator)
        return a.then(self.source).then(a.inverse()) == self.target


def _fixed_points(p: Permutation) -> List[int]:
    return [k for k in range(1, p.n + 1) if p(k) == k]


def conjugating_permutation(source: Permutation, target: Permutation) -> Permutation:
    """
    a 使得 k ↦ a⁻¹(source(a(k))) 等于 target

    把 target 的每个轮换 (c_1 … c_l) 逐点映到 source 中等长的轮换 (d_1 … d_l)。
    """
    if source.n != target.n:
        raise StrandMismatchError(f"置换阶数不一致: {source.n} != {target.n}")
    if cycle_type(source) != cycle_type(target):
        raise CycleTypeMismatchError(
            f"轮换类型不同: {cycle_type(source)} 与 {cycle_type(target)}"
        )

    by_length: Dict[int, List[Tuple[int, ...]]] = {}
    for c in source.cycles():
        by_length.setdefault(len(c), []).append(c)

    images = [0] * source.n
    for c in target.cycles():
        d = by_length[len(c)].pop(0)
        for ci, di in zip(c, d):
            images[ci - 1] = di
    for ci, di in zip(_fixed_points(target), _fixed_points(source)):
        images[ci - 1] = di
    return Permutation(tuple(images))


def conjugacy_witness(beta: BraidWord, gamma: BraidWord) -> ConjugacyWitness:
    """
    α₀ 使得 H_β^{α₀} = H_γ

    α₀ 取共轭置换的正提升；对 H_β 的任意成员 x 有 α₀ x α₀⁻¹ ∈ H_γ。
    """
    if beta.n != gamma.n:
        raise StrandMismatchError(f"弦数不一致: B_{beta.n} 与 B_{gamma.n}")
    source, target = permutation_of(beta), permutation_of(gamma)
    a = conjugating_permutation(source, target)
    witness = ConjugacyWitness(conjugator=lift_permutation(a), source=source, target=target)
    if not witness.verified():
        raise RuntimeError(f"共轭提升校验失败: {source} -> {target}")
    return witness


# ============================================================================
# 轮换类型与典型代表元
# ============================================================================


def non_pure_cycle_types(n: int) -> List[CycleType]:
    """
    B_n 中非纯辫的全部轮换类型（各段 ≥ 2，和 ≤ n）

    即 n 的分拆去掉所有 1 后非空者，按分拆降序排列。
    """
    result = set()
    for p in partitions(n):
        parts = tuple(sorted((k for k, m in p.items() if k >= 2 for _ in range(m)), reverse=True))
        if parts:
            result.add(parts)
    return [CycleType(parts, n) for parts in sorted(result, reverse=True)]


def canonical_representative(t: CycleType, n: Optional[int] = None) -> BraidWord:
    """
    轮换类型 t 的典型代表元

    - m 个对换：m = 1 时为 σ1，否则为 Δ_{2m}；
    - 含长度 ≥ 3 的轮换：α = ∏ α_k（各段降序排列）。
    """
    n = n if n is not None else t.n
    if t.is_empty():
        raise ValueError("纯辫的轮换类型没有代表元")
    if sum(t.partition) > n:
        raise ValueError(f"轮换类型 {t} 放不进 {n} 条弦")
    if all(part == 2 for part in t.partition):
        m = len(t.partition)
        return artin(1, n) if m == 1 else half_twist(2 * m, n)
    return cycle_braid(t.partition, n)


# ============================================================================
# S_n 的子群（在共轭意义下）
# ============================================================================

# 子群以元素的 array_form（0 起点）集合为键
GroupKey = FrozenSet[Tuple[int, ...]]


def _group_key(group: PermutationGroup) -> GroupKey:
    return frozenset(tuple(g.array_form) for g in group.generate())


def _conjugacy_orbit(key: GroupKey, symmetric: PermutationGroup) -> Set[GroupKey]:
    """K 在 S_n 中的全部共轭子群，只沿 S_n 的生成元做广度优先搜索"""
    orbit = {key}
    frontier = [key]
    while frontier:
        nxt = []
        for k in frontier:
            for h in symmetric.generators:
                conj = frozenset(tuple((~h * SymPermutation(list(x)) * h).array_form) for x in k)
                if conj not in orbit:
                    orbit.add(conj)
                    nxt.append(conj)
        frontier = nxt
    return orbit


@dataclass(frozen=True)
class SubgroupDescriptor:
    """
    S_n 的一个子群 K（共轭类代表），对应中间子群 π⁻¹(K) ⊇ P_n

    generators 为 K 的生成置换，braid_generators 为其正提升。
    """

    n: int
    generators: Tuple[Permutation, ...]
    order: int
    elements: FrozenSet[Permutation] = field(repr=False, compare=False)

    @property
    def braid_generators(self) -> Tuple[BraidWord, ...]:
        return tuple(lift_permutation(g) for g in self.generators)

    def is_trivial(self) -> bool:
        """对应 P_n 本身"""
        return self.order == 1

    def is_full(self) -> bool:
        """对应 B_n 本身"""
        return self.order == math.factorial(self.n)

    def contains(self, p: Permutation) -> bool:
        return p in self.elements

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "generators": [list(g.images) for g in self.generators],
            "order": self.order,
        }


def enumerate_intermediate(n: int) -> List[SubgroupDescriptor]:
    """
    S_n（3 ≤ n ≤ 6）的全部子群，每个共轭类一个代表

    从平凡子群出发，反复与循环子群求并；每得到一个新子群，
    将其整个共轭轨道标记为已见。结果按阶排序。
    """
    if not 3 <= n <= 6:
        raise ValueError(f"n 必须在 3..6 之间: {n}")

    symmetric = SymmetricGroup(n)

    cyclic: Dict[GroupKey, SymPermutation] = {}
    for g in symmetric.generate():
        if g.is_Identity:
            continue
        cyclic.setdefault(_group_key(PermutationGroup([g])), g)
    cyclic_generators = sorted(cyclic.values(), key=lambda g: g.array_form)

    trivial: GroupKey = frozenset([tuple(range(n))])
    seen: Set[GroupKey] = {trivial}
    representatives: List[Tuple[GroupKey, List[SymPermutation]]] = [(trivial, [])]
    index = 0
    while index < len(representatives):
        elements, gens = representatives[index]
        index += 1
        for g in cyclic_generators:
            if tuple(g.array_form) in elements:
                continue
            joined = _group_key(PermutationGroup(gens + [g]))
            if joined in seen:
                continue
            seen |= _conjugacy_orbit(joined, symmetric)
            representatives.append((joined, gens + [g]))

    descriptors = [
        SubgroupDescriptor(
            n=n,
            generators=tuple(from_sympy(g, n) for g in gens),
            order=len(elements),
            elements=frozenset(Permutation(tuple(v + 1 for v in x)) for x in elements),
        )
        for elements, gens in representatives
    ]
    descriptors.sort(key=lambda d: (d.order, [g.images for g in d.generators]))
    return descriptors
