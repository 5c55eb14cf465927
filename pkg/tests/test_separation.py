import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonotile import bitsets as bs
from zonotile.separation import (
    Permutation,
    SetFamily,
    base_relation,
    chamber_domain,
    chamber_pair_domain,
    enumerate_maximal,
    hypercube_domain,
    hypersimplex_domain,
    interval_collection,
    inversions,
    is_maximal_separated,
    is_separated_family,
    strongly_separated,
    weakly_separated,
)

M = bs.mask_of


class TestBaseRelations:
    def test_global_empty_set_convention(self):
        assert base_relation("global", 0, M([1]), 3) is True
        assert base_relation("global", M([1]), 0, 3) is False

    def test_split_examples(self):
        assert base_relation("split", M([2]), M([1, 3]), 3) is True
        assert base_relation("split", M([1, 3]), M([2, 4]), 4) is False
        assert base_relation("split", M([2, 4]), M([1, 3]), 4) is False

    def test_split_brute_force_oracle(self):
        # oracle: try every 2-part decomposition of B-A into nonempty subsets
        def oracle(a, b, n):
            diff = a & ~b
            rest = b & ~a
            if diff == 0:
                return False
            parts = list(bs.iter_elements(rest))
            for bits in range(1 << len(parts)):
                lo = bs.mask_of(p for i, p in enumerate(parts) if bits >> i & 1)
                hi = rest  # union of the two parts must cover rest; allow overlap
                for bits2 in range(1 << len(parts)):
                    hi = bs.mask_of(p for i, p in enumerate(parts) if bits2 >> i & 1)
                    if lo and hi and (lo | hi) == rest:
                        if bs.max_element(lo) < bs.min_element(diff) and bs.max_element(
                            diff
                        ) < bs.min_element(hi):
                            return True
            return False

        for a in range(16):
            for b in range(16):
                if a == b:
                    continue
                assert base_relation("split", a, b, 4) == oracle(a, b, 4)

    def test_cancel_and_termwise(self):
        assert base_relation("cancel", M([1, 2]), M([2, 3]), 3) is True
        assert base_relation("termwise", M([1, 2]), M([2, 3]), 3) is True

    def test_equal_sets_rejected_outside_global(self):
        for kind in ("termwise", "cancel", "split"):
            with pytest.raises(ValueError):
                base_relation(kind, M([1]), M([1]), 3)
        assert base_relation("global", M([1]), M([1]), 3) is False

    def test_out_of_range_elements(self):
        with pytest.raises(ValueError):
            base_relation("global", M([5]), 0, 3)


class TestSeparation:
    def test_strong_examples(self):
        assert strongly_separated(M([1]), M([2, 3]))
        assert strongly_separated(M([1, 3]), M([1, 3]))
        assert not strongly_separated(M([1, 4]), M([2, 3]))

    def test_weak_examples(self):
        assert weakly_separated(M([1, 4]), M([2, 3]))
        assert not weakly_separated(M([2]), M([1, 3]))
        assert not weakly_separated(M([1, 3]), M([2, 4]))

    @given(st.integers(0, 63), st.integers(0, 63))
    def test_symmetry(self, a, b):
        assert weakly_separated(a, b) == weakly_separated(b, a)
        assert strongly_separated(a, b) == strongly_separated(b, a)

    @given(st.integers(0, 63), st.integers(0, 63))
    def test_strong_implies_weak(self, a, b):
        if strongly_separated(a, b):
            assert weakly_separated(a, b)

    @settings(max_examples=300)
    @given(st.integers(0, 63), st.integers(0, 63))
    def test_complement_duality_with_reversal(self, a, b):
        n = 6
        ra = bs.reverse_mask(bs.complement(a, n), n)
        rb = bs.reverse_mask(bs.complement(b, n), n)
        assert weakly_separated(a, b) == weakly_separated(ra, rb)

    def test_family_checks(self):
        intervals = interval_collection(3)
        assert len(intervals) == 7
        assert is_separated_family(intervals, "weak")
        assert not is_separated_family(SetFamily(3, [M([2]), M([1, 3])]), "weak")
        assert is_separated_family(SetFamily(3, [M([2])]), "weak")


class TestEnumeration:
    def test_hypercube_n3(self):
        report = enumerate_maximal(hypercube_domain(3), "weak")
        assert len(report.maximal_collections) == 2
        assert report.ranks == (7,)
        assert report.pure

    def test_hypercube_n4(self):
        report = enumerate_maximal(hypercube_domain(4), "weak")
        assert report.pure and report.ranks == (11,)

    def test_singleton_domain(self):
        report = enumerate_maximal(SetFamily(3, [0]), "weak")
        assert len(report.maximal_collections) == 1
        assert report.ranks == (1,)

    def test_collections_verified_maximal(self):
        report = enumerate_maximal(hypercube_domain(4), "weak")
        for fam in report.maximal_collections:
            assert is_maximal_separated(fam, "weak")

    def test_complementary_pair_lemma(self):
        # cross-separated split of a pure domain leaves both parts pure
        domain = hypercube_domain(4)
        report = enumerate_maximal(domain, "weak")
        assert report.pure
        left = SetFamily(4, [x for x in domain.members if weakly_separated(x, M([1, 4]))])
        rep_left = enumerate_maximal(left, "weak")
        assert rep_left.pure


class TestDomains:
    def test_chamber_identity(self):
        dom = chamber_domain(Permutation.identity(3))
        assert set(dom.members) == {0, M([1]), M([1, 2]), M([1, 2, 3])}

    def test_chamber_longest_is_hypercube(self):
        dom = chamber_domain(Permutation.longest(3))
        assert len(dom) == 8

    def test_inversions(self):
        assert inversions(Permutation.identity(4)) == frozenset()
        assert inversions(Permutation((3, 2, 4, 1))) == frozenset(
            {(1, 2), (1, 4), (2, 4), (3, 4)}
        )
        assert len(inversions(Permutation.longest(5))) == 10

    def test_chamber_pair_requires_inversion_containment(self):
        with pytest.raises(ValueError):
            chamber_pair_domain(Permutation((2, 1, 3)), Permutation((1, 3, 2)))

    def test_hypersimplex(self):
        dom = hypersimplex_domain(4, 2, 2)
        assert len(dom) == 6
        with pytest.raises(ValueError):
            hypersimplex_domain(4, 3, 2)

    def test_chamber_rank_formula_n3(self):
        for images in ((1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)):
            w = Permutation(images)
            report = enumerate_maximal(chamber_domain(w), "weak")
            assert report.pure
            assert report.ranks == (len(inversions(w)) + 3 + 1,)
