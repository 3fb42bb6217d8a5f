"""
中间子群测试

测试 H_β 的构造、成员判定、共轭、典型代表元与 S_n 子群枚举
"""

import itertools
import random

import pytest
from sympy.combinatorics.named_groups import SymmetricGroup

from src.analysis.braid_core import (
    CycleType,
    Permutation,
    StrandMismatchError,
    artin,
    compose,
    cycle_type,
    half_twist,
    inverse,
    permutation_of,
    power,
    pure_generator,
)
from src.analysis.intermediate_subgroups import (
    CycleTypeMismatchError,
    canonical_representative,
    conjugacy_witness,
    cyclic_subgroup,
    enumerate_intermediate,
    from_sympy,
    lift_permutation,
    member,
    non_pure_cycle_types,
    subgroup_of,
    to_sympy,
)
from src.utils.sampling import random_pure_word, random_word
from src.utils.word_syntax import parse_word


class TestSubgroupOf:
    """H_β = π⁻¹(⟨π(β)⟩)"""

    def test_three_cycle(self):
        h = subgroup_of(parse_word("s1 s2", 3))
        assert h.cyclic_elements == {
            Permutation.identity(3),
            Permutation((3, 1, 2)),
            Permutation((2, 3, 1)),
        }
        assert h.order == 3

    def test_pure_beta(self):
        h = subgroup_of(pure_generator(1, 2, 3))
        assert h.cyclic_elements == {Permutation.identity(3)}
        assert h.is_pure()

    def test_transposition(self):
        h = subgroup_of(artin(1, 3))
        assert h.cyclic_elements == {Permutation.identity(3), Permutation((2, 1, 3))}

    def test_same_permutation_same_subgroup(self):
        """π(β) = π(γ) ⇒ H_β = H_γ"""
        s1 = artin(1, 4)
        assert subgroup_of(s1) == subgroup_of(inverse(s1)) == subgroup_of(power(s1, 3))

    def test_to_dict(self):
        assert subgroup_of(parse_word("s1 s2", 3)).to_dict() == {
            "n": 3,
            "generator_perm": [3, 1, 2],
            "order": 3,
        }


class TestMember:
    """成员判定"""

    def test_examples(self):
        h = subgroup_of(parse_word("s1 s2", 3))
        assert member(h, parse_word("s2 s1", 3))
        assert not member(h, artin(1, 3))
        assert member(h, pure_generator(1, 3, 3))

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            member(subgroup_of(artin(1, 3)), artin(1, 4))

    def test_closure(self):
        """成员对乘法与逆封闭，纯辫与 β 均为成员"""
        rng = random.Random(31)
        for _ in range(100):
            beta = random_word(4, rng.randint(1, 6), rng)
            h = subgroup_of(beta)
            assert member(h, beta)
            x = compose(random_pure_word(4, 2, rng), power(beta, rng.randint(-2, 2)))
            y = compose(power(beta, rng.randint(-2, 2)), random_pure_word(4, 2, rng))
            assert member(h, x) and member(h, y)
            assert member(h, compose(x, y))
            assert member(h, inverse(x))


class TestLift:
    """置换的正提升"""

    def test_examples(self):
        assert lift_permutation(Permutation.identity(3)).is_empty()
        assert lift_permutation(Permutation((2, 1))) == artin(1, 2)
        tau = Permutation.from_cycles(3, [(1, 3, 2)])
        assert permutation_of(lift_permutation(tau)) == tau


class TestConjugacyWitness:
    """同轮换类型的 H_β 共轭"""

    def test_identity_conjugator(self):
        w = conjugacy_witness(artin(1, 3), artin(1, 3))
        assert w.conjugator.is_empty()
        assert w.verified()

    def test_sigma1_to_sigma2(self):
        w = conjugacy_witness(artin(1, 3), artin(2, 3))
        a = permutation_of(w.conjugator)
        assert a.then(Permutation((2, 1, 3))).then(a.inverse()) == Permutation((1, 3, 2))

    def test_three_cycles(self):
        w = conjugacy_witness(parse_word("s1 s2", 3), parse_word("s2 s1", 3))
        assert w.verified()

    def test_cycle_type_mismatch(self):
        with pytest.raises(CycleTypeMismatchError):
            conjugacy_witness(artin(1, 3), parse_word("s1 s2", 3))

    def test_members_are_transported(self):
        """50 个随机成员 x：α₀ x α₀⁻¹ ∈ H_γ"""
        rng = random.Random(37)
        beta = parse_word("s1 s2 s4", 5)
        gamma = parse_word("s4 s3 s1", 5)
        assert cycle_type(permutation_of(beta)) == cycle_type(permutation_of(gamma))
        alpha = conjugacy_witness(beta, gamma).conjugator
        h_gamma = subgroup_of(gamma)
        for _ in range(50):
            x = compose(random_pure_word(5, 3, rng), power(beta, rng.randint(-3, 3)))
            assert member(h_gamma, compose(alpha, compose(x, inverse(alpha))))


class TestCanonicalRepresentative:
    """轮换类型的典型代表元"""

    def test_transposition(self):
        assert canonical_representative(CycleType((2,), 3)) == artin(1, 3)

    def test_disjoint_transpositions(self):
        rep = canonical_representative(CycleType((2, 2), 4))
        assert rep == half_twist(4, 4)
        assert rep.letters == ((1, 1), (2, 1), (1, 1), (3, 1), (2, 1), (1, 1))

    def test_long_cycle(self):
        rep = canonical_representative(CycleType((2, 3), 5))
        assert rep.letters == ((1, 1), (2, 1), (4, 1))

    def test_empty_type(self):
        with pytest.raises(ValueError):
            canonical_representative(CycleType((), 3))

    def test_cycle_type_preserved(self):
        """n ≤ 7 的全部非纯轮换类型"""
        for n in range(2, 8):
            for t in non_pure_cycle_types(n):
                rep = canonical_representative(t, n)
                assert cycle_type(permutation_of(rep)) == t


class TestEnumeration:
    """S_n 子群（共轭类）枚举"""

    def test_non_pure_cycle_type_counts(self):
        assert [len(non_pure_cycle_types(n)) for n in range(3, 7)] == [2, 4, 6, 10]
        assert [t.partition for t in non_pure_cycle_types(4)] == [(4,), (3,), (2, 2), (2,)]

    def test_s3(self):
        descriptors = enumerate_intermediate(3)
        assert [d.order for d in descriptors] == [1, 2, 3, 6]
        assert descriptors[0].is_trivial()
        assert descriptors[-1].is_full()

    def test_s4_s5_counts(self):
        assert len(enumerate_intermediate(4)) == 11
        assert len(enumerate_intermediate(5)) == 19

    def test_lifted_generators(self):
        """提升的辫生成元落在对应子群中"""
        for d in enumerate_intermediate(4):
            for g, w in zip(d.generators, d.braid_generators):
                assert permutation_of(w) == g
                assert d.contains(g)

    def test_descriptor_to_dict(self):
        d = enumerate_intermediate(3)[-1]
        data = d.to_dict()
        assert data["n"] == 3 and data["order"] == 6
        assert all(sorted(g) == [1, 2, 3] for g in data["generators"])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_intermediate(7)

    def test_s4_order_profile(self):
        """S_4 的 11 个共轭类：两类 C2、三类 4 阶子群（C4 与两类 V4）"""
        assert [d.order for d in enumerate_intermediate(4)] == [1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]

    def test_representatives_pairwise_non_conjugate(self):
        """同阶代表元之间不存在共轭"""
        descriptors = enumerate_intermediate(4)
        group = list(SymmetricGroup(4).generate())
        for a, b in itertools.combinations(descriptors, 2):
            if a.order != b.order:
                continue
            target = {to_sympy(p) for p in b.elements}
            for h in group:
                assert {~h * to_sympy(p) * h for p in a.elements} != target


class TestSympyBridge:
    """与 sympy.combinatorics 的置换互转"""

    def test_round_trip(self):
        tau = Permutation((3, 1, 2))
        assert to_sympy(tau).array_form == [2, 0, 1]
        assert from_sympy(to_sympy(tau), 3) == tau

    def test_multiplication_convention(self):
        """sympy 的 p*q 与 then 一样先左后右"""
        rng = random.Random(43)
        for _ in range(50):
            a = permutation_of(random_word(5, 6, rng))
            b = permutation_of(random_word(5, 6, rng))
            assert from_sympy(to_sympy(a) * to_sympy(b), 5) == a.then(b)

    def test_cyclic_subgroup(self):
        """⟨p⟩ 的阶等于 p 的阶"""
        p = permutation_of(parse_word("s1 s2 s4", 5))
        elements = cyclic_subgroup(p)
        assert len(elements) == 6
        assert Permutation.identity(5) in elements and p in elements
