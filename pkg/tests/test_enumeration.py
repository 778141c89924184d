import itertools
import random

import pytest

from subtree_density.enumeration import (
    canonical_form,
    centroids,
    enumerate_trees,
    prufer_to_tree,
    random_labeled_tree,
    rooted_level_sequences,
    sample_series_reduced,
    suppress_degree_two,
    tree_from_level_sequence,
)
from subtree_density.tree import Tree, TreeError, is_series_reduced

from test_tree import path, star

# free trees up to isomorphism on 1..10 vertices
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]

# series-reduced trees on 1..12 vertices
SERIES_REDUCED_COUNTS = [0, 0, 0, 1, 1, 2, 2, 4, 5, 10, 14, 26]


def relabel(tree, perm):
    return Tree(tree.n, [(perm[u], perm[v]) for u, v in tree.edges])


class TestCanonicalForm:
    def test_isomorphism_invariance(self):
        t = path(4)
        assert canonical_form(t) == canonical_form(relabel(t, [2, 0, 1, 3]))

    def test_distinguishes(self):
        assert canonical_form(path(4)) != canonical_form(star(3))

    def test_starfish_arm_permutation(self):
        from subtree_density.families import FamilySpec, make_family
        t = make_family(FamilySpec("starfish", {"k": 3, "r": 2}))
        rng = random.Random(5)
        for _ in range(5):
            perm = list(range(t.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(t, perm)) == canonical_form(t)

    def test_all_relabelings_n6(self):
        # exhaustive: every relabeling of every 6-vertex tree agrees
        for t in enumerate_trees(6):
            code = canonical_form(t)
            for perm in itertools.permutations(range(6)):
                assert canonical_form(relabel(t, list(perm))) == code

    def test_centroids(self):
        assert centroids(path(4)) == [1, 2]
        assert centroids(star(5)) == [0]
        assert centroids(path(1)) == [0]


class TestEnumeration:
    def test_level_sequence_roundtrip(self):
        seqs = list(rooted_level_sequences(4))
        assert seqs[0] == (0, 1, 2, 3)
        trees = [tree_from_level_sequence(s) for s in seqs]
        assert len(trees) == 4  # rooted trees on 4 vertices

    def test_small_census(self):
        for n, expected in enumerate(FREE_TREE_COUNTS, start=1):
            assert sum(1 for _ in enumerate_trees(n)) == expected

    def test_series_reduced_census(self):
        for n, expected in enumerate(SERIES_REDUCED_COUNTS, start=1):
            got = sum(1 for _ in enumerate_trees(n, series_reduced=True))
            assert got == expected

    def test_n4(self):
        trees = list(enumerate_trees(4))
        codes = {canonical_form(t) for t in trees}
        assert codes == {canonical_form(path(4)), canonical_form(star(3))}
        sr = list(enumerate_trees(4, series_reduced=True))
        assert len(sr) == 1 and canonical_form(sr[0]) == canonical_form(star(3))

    def test_no_duplicate_forms(self):
        for n in range(1, 10):
            codes = [canonical_form(t) for t in enumerate_trees(n)]
            assert len(codes) == len(set(codes))

    def test_cap(self):
        with pytest.raises(TreeError, match="1 <= n <="):
            list(enumerate_trees(19))

    def test_prufer_cross_check(self):
        # independent census: canonical dedup over ALL labeled trees of order n
        for n in range(3, 9):
            codes = set()
            for seq in itertools.product(range(n), repeat=n - 2):
                codes.add(canonical_form(prufer_to_tree(list(seq), n)))
            assert len(codes) == FREE_TREE_COUNTS[n - 1]


class TestSampling:
    def test_prufer_decode(self):
        # sequence (3, 3) on 4 vertices is the star centered at 3
        t = prufer_to_tree([3, 3], 4)
        assert t == Tree(4, [(0, 3), (1, 3), (2, 3)])

    def test_random_labeled_tree_valid(self):
        rng = random.Random(1)
        for _ in range(20):
            t = random_labeled_tree(rng.randrange(1, 40), rng)
            assert len(t.edges) == t.n - 1

    def test_suppress_degree_two(self):
        # spider with subdivided legs: interior path vertices get spliced out
        t = Tree(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6)])
        reduced = suppress_degree_two(t)
        assert all(reduced.degree(v) != 2 for v in range(reduced.n))

    def test_suppress_path_two_kept(self):
        assert suppress_degree_two(path(5)) == path(2)

    def test_sample_postconditions(self):
        t = sample_series_reduced(30, seed=42)
        assert t.n >= 30
        assert is_series_reduced(t)
        l = sum(1 for v in range(t.n) if t.degree(v) == 1)
        assert 2 * l >= t.n + 2

    def test_sample_deterministic(self):
        assert sample_series_reduced(25, seed=9) == sample_series_reduced(25, seed=9)

    def test_sample_target_guard(self):
        with pytest.raises(TreeError, match="n_target"):
            sample_series_reduced(3, seed=0)
