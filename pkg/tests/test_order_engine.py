"""
辫群上的序测试

测试 Dehornoy 左序、指数和部分双序与唯一根失效检测
"""

import random

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from src.analysis.braid_core import (
    BraidWord,
    StrandMismatchError,
    artin,
    compose,
    inverse,
    pure_generator,
)
from src.analysis.intermediate_subgroups import member, subgroup_of
from src.analysis.order_engine import (
    OrderVerdict,
    PartialVerdict,
    dehornoy_compare,
    find_right_invariance_failure,
    is_sigma_positive,
    partial_compare,
    root_clash,
    sigma_sign,
)
from src.analysis.word_problem import equal
from src.utils.sampling import random_word
from src.utils.word_syntax import parse_word

OPPOSITE = {
    OrderVerdict.LESS: OrderVerdict.GREATER,
    OrderVerdict.GREATER: OrderVerdict.LESS,
    OrderVerdict.EQUAL: OrderVerdict.EQUAL,
}


def words(n: int, max_length: int = 8):
    letters = st.tuples(st.integers(1, n - 1), st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_length).map(lambda ls: BraidWord(n, tuple(ls)))


class TestDehornoyOrder:
    """Dehornoy 左序"""

    def test_examples(self):
        identity = BraidWord.identity(3)
        s1, s2 = artin(1, 3), artin(2, 3)
        assert dehornoy_compare(identity, s1) is OrderVerdict.LESS
        assert dehornoy_compare(artin(1, 3, sign=-1), identity) is OrderVerdict.LESS
        assert dehornoy_compare(s2, s1) is OrderVerdict.LESS
        assert dehornoy_compare(s1 * s2, s2 * s1 * s2 * inverse(s1)) is OrderVerdict.EQUAL

    def test_sigma_sign(self):
        assert sigma_sign(parse_word("s2^-1 s1", 3)) == 1
        assert sigma_sign(parse_word("s1^-1 s2 s1", 3)) == 1
        assert sigma_sign(BraidWord.identity(3)) == 0
        assert is_sigma_positive(artin(2, 3))

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            dehornoy_compare(artin(1, 3), artin(1, 4))

    def test_totality(self):
        """500 对随机字：Equal 当且仅当相等，交换参数得到相反结果"""
        rng = random.Random(101)
        for _ in range(500):
            n = rng.randint(2, 4)
            u = random_word(n, rng.randint(0, 8), rng)
            v = random_word(n, rng.randint(0, 8), rng)
            verdict = dehornoy_compare(u, v)
            assert (verdict is OrderVerdict.EQUAL) == equal(u, v).equal
            assert dehornoy_compare(v, u) is OPPOSITE[verdict]

    def test_transitivity(self):
        rng = random.Random(103)
        for _ in range(200):
            u, v, w = (random_word(3, rng.randint(0, 6), rng) for _ in range(3))
            if (
                dehornoy_compare(u, v) is OrderVerdict.LESS
                and dehornoy_compare(v, w) is OrderVerdict.LESS
            ):
                assert dehornoy_compare(u, w) is OrderVerdict.LESS

    def test_left_invariance(self):
        """200 组随机 (w, u, v)：cmp(wu, wv) = cmp(u, v)"""
        rng = random.Random(107)
        for _ in range(200):
            n = rng.randint(3, 4)
            w, u, v = (random_word(n, rng.randint(0, 8), rng) for _ in range(3))
            assert dehornoy_compare(compose(w, u), compose(w, v)) is dehornoy_compare(u, v)

    def test_right_invariance_failure(self):
        """长度 ≤ 6 的 B_3 字中存在 u < v 而 uc > vc"""
        failure = find_right_invariance_failure(3, 6)
        assert failure is not None
        assert dehornoy_compare(failure.u, failure.v) is OrderVerdict.LESS
        assert (
            dehornoy_compare(compose(failure.u, failure.c), compose(failure.v, failure.c))
            is OrderVerdict.GREATER
        )

    def test_known_right_invariance_witness(self):
        """1 < σ2⁻¹σ1，但 σ1 > σ2⁻¹σ1σ1"""
        v = parse_word("s2^-1 s1", 3)
        c = artin(1, 3)
        assert dehornoy_compare(BraidWord.identity(3), v) is OrderVerdict.LESS
        assert dehornoy_compare(c, compose(v, c)) is OrderVerdict.GREATER

    def test_bi_orderable_b2_rejected(self):
        with pytest.raises(ValueError):
            find_right_invariance_failure(2, 4)

    @given(words(3))
    @hyp_settings(max_examples=100, deadline=None)
    def test_sigma_sign_of_inverse(self, u):
        assert sigma_sign(inverse(u)) == -sigma_sign(u)


class TestPartialOrder:
    """指数和部分双序"""

    def test_examples(self):
        s1, s2 = artin(1, 3), artin(2, 3)
        assert partial_compare(s1, s1 * s2) is PartialVerdict.LESS
        assert partial_compare(s1, s2) is PartialVerdict.INCOMPARABLE
        a12 = pure_generator(1, 2, 3)
        assert partial_compare(a12, a12) is PartialVerdict.EQUAL

    def _check_axioms(self, samples):
        for u, v, w, z in samples:
            assert partial_compare(u, u) is PartialVerdict.EQUAL
            verdict = partial_compare(u, v)
            # 两侧乘法与共轭不变
            assert partial_compare(compose(w, compose(u, z)), compose(w, compose(v, z))) is verdict
            assert (
                partial_compare(compose(w, compose(u, inverse(w))), compose(w, compose(v, inverse(w))))
                is verdict
            )
            if verdict is PartialVerdict.LESS:
                assert partial_compare(v, u) is PartialVerdict.GREATER
                if partial_compare(v, z) is PartialVerdict.LESS:
                    assert partial_compare(u, z) is PartialVerdict.LESS

    def test_axioms_in_b4(self):
        """B_4 中 500 组样本"""
        rng = random.Random(109)
        samples = [tuple(random_word(4, rng.randint(0, 8), rng) for _ in range(4)) for _ in range(500)]
        self._check_axioms(samples)

    def test_axioms_in_h_sigma1(self):
        """H_{σ1} ⊂ B_4 中 500 组成员过滤的样本"""
        rng = random.Random(113)
        h = subgroup_of(artin(1, 4))
        pool = []
        while len(pool) < 2000:
            w = random_word(4, rng.randint(0, 8), rng)
            if member(h, w):
                pool.append(w)
        samples = [tuple(pool[4 * k : 4 * k + 4]) for k in range(500)]
        self._check_axioms(samples)

    def test_cone_antisymmetry(self):
        """不存在同时 Less 与 Greater 的比较"""
        rng = random.Random(127)
        for _ in range(200):
            u, v = random_word(4, 8, rng), random_word(4, 8, rng)
            forward, backward = partial_compare(u, v), partial_compare(v, u)
            assert not (forward is PartialVerdict.LESS and backward is PartialVerdict.LESS)


class TestRootClash:
    """唯一根性质失效"""

    def test_transposition_roots(self):
        assert root_clash(parse_word("s1 s2 s2", 3), parse_word("s2 s2 s1", 3), 2)

    def test_three_cycle_roots(self):
        assert root_clash(parse_word("s1 s2", 3), parse_word("s2 s1", 3), 3)

    def test_equal_roots(self):
        assert not root_clash(artin(1, 3), artin(1, 3), 2)

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            root_clash(artin(1, 3), artin(2, 3), 1)
