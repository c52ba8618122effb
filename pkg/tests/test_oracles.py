"""The brute-force oracles must agree with each other where they overlap."""

import oracles as orc

from tourlab import cyclic_triangle, transitive_tournament


def test_partition_and_cover_chi_agree_on_corpus(corpus):
    for n in (3, 4, 5):
        for t in corpus[n]:
            assert orc.chi_by_partitions(t) == orc.chi_by_cover_bfs(t)


def test_transitivity_by_degrees_matches_triangle_counting(corpus):
    for t in corpus[5]:
        for mask in range(1 << t.n):
            has_triangle = any(
                t.out_sets[a] >> b & 1 and t.out_sets[b] >> c & 1 and t.out_sets[c] >> a & 1
                for a in range(t.n)
                for b in range(t.n)
                for c in range(t.n)
                if mask >> a & 1 and mask >> b & 1 and mask >> c & 1
            )
            assert orc.transitive_by_degrees(t, mask) == (not has_triangle)


def test_partition_counts_are_bell_numbers():
    assert sum(1 for _ in orc.iter_partitions([])) == 1
    assert sum(1 for _ in orc.iter_partitions([0])) == 1
    assert sum(1 for _ in orc.iter_partitions([0, 1, 2])) == 5
    assert sum(1 for _ in orc.iter_partitions(list(range(5)))) == 52


def test_oracle_values_on_hand_checked_instances():
    c3 = cyclic_triangle()
    assert orc.chi_by_partitions(c3) == 2
    assert orc.dom_by_combinations(c3) == 2
    assert orc.edom_by_combinations(c3, c3.full_mask) == 2
    assert orc.subdom_by_subsets(c3) == 2
    tr = transitive_tournament(5)
    assert orc.chi_by_partitions(tr) == 1
    assert orc.dom_by_combinations(tr) == 1
    assert orc.subdom_by_subsets(tr) == 1


def test_bucketing_oracle_counts():
    assert [len(orc.classes_by_bucketing(n)) for n in range(1, 5)] == [1, 1, 2, 4]


def test_relabelling_canonical_code_is_invariant():
    # both orientations of the triangle land on the same canonical code
    assert orc.canonical_code_by_relabelling(3, 0b010) == orc.canonical_code_by_relabelling(3, 0b101)
