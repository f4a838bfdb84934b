# -- coding: utf-8 --
import numpy as np
from seaweedindex import poset
from seaweedindex.checks import InvariantViolation, SizeLimit
from seaweedindex.notation import Composition, compositions
import unittest


def _chain(n):
    return poset.Poset.from_pairs(n, [(k, k + 1) for k in range(1, n)])


def _antichain(n):
    return poset.Poset(n, frozenset())


class TestEverything(unittest.TestCase):

    def test_chain_block_counts(self):
        p = poset.chain_block_poset(Composition((2, 3, 1, 1)))
        self.assertEqual(p.size, 7)
        self.assertEqual(len(p.strict), 17)
        s = poset.poset_stats(poset.chain_block_poset((2, 1, 3)))
        self.assertEqual(s.rel_count, 11)
        self.assertEqual(s.min_set, frozenset({1, 2}))
        self.assertEqual(s.max_set, frozenset({4, 5, 6}))
        self.assertEqual(s.ext_set, frozenset({1, 2, 4, 5, 6}))
        self.assertEqual(s.down(3), 2)
        self.assertEqual(s.up(3), 3)
        self.assertEqual(s.covering_relations,
                         ((1, 3), (2, 3), (3, 4), (3, 5), (3, 6)))

    def test_chain_block_index(self):
        p = poset.chain_block_poset((2, 1, 3))
        self.assertEqual(poset.index_nilpotent_poset(p), 7)
        self.assertEqual(poset.index_chain_block_recursive((2, 1, 3)), 7)
        self.assertEqual(poset.index_chain_block_recursive((4,)), 0)
        self.assertEqual(poset.index_chain_block_recursive((2, 5)), 10)
        with self.assertRaises(ValueError):
            poset.index_chain_block_recursive(())

    def test_recursion_matches_direct_formula(self):
        for n in range(1, 10):
            for c in compositions(n):
                self.assertEqual(
                    poset.index_chain_block_recursive(c),
                    poset.index_nilpotent_poset(poset.chain_block_poset(c)),
                    str(c))

    def test_chain_and_antichain_index(self):
        # the strictly upper triangular algebra has index floor(n / 2)
        for n in range(2, 8):
            self.assertEqual(poset.index_nilpotent_poset(_chain(n)), n // 2)
        self.assertEqual(poset.index_nilpotent_poset(_chain(1)), 0)
        self.assertEqual(poset.index_nilpotent_poset(_antichain(5)), 0)

    def test_from_pairs_closes_transitively(self):
        p = poset.Poset.from_pairs(4, [(1, 2), (2, 3), (3, 4)])
        self.assertEqual(len(p.strict), 6)
        self.assertIn((1, 4), p.strict)
        below = p.below()
        self.assertEqual(below.dtype, np.bool_)
        self.assertTrue(below[0, 3])
        self.assertFalse(below[3, 0])

    def test_invalid_relations(self):
        for strict in ({(1, 1)}, {(1, 2), (2, 1)}, {(1, 2), (2, 3)},
                       {(0, 1)}):
            with self.assertRaises(InvariantViolation):
                poset.Poset(3, frozenset(strict))
        with self.assertRaises(InvariantViolation):
            poset.Poset.from_pairs(3, [(1, 2), (2, 3), (3, 1)])

    def test_components(self):
        p = poset.Poset.from_pairs(6, [(1, 4), (2, 3), (3, 5)])
        comps = poset.connected_components(p)
        self.assertEqual([c[0] for c in comps], [(1, 4), (2, 3, 5), (6,)])
        self.assertEqual(comps[1][1].strict,
                         frozenset({(1, 2), (2, 3), (1, 3)}))
        self.assertEqual(comps[2][1].size, 1)
        self.assertEqual(poset.index_nilpotent_poset(p),
                         sum(poset.index_nilpotent_poset(q)
                             for _, q in comps))

    def test_hasse_heights(self):
        h = poset.hasse_heights(poset.chain_block_poset((2, 1, 3)))
        self.assertEqual(h, {1: 0, 2: 0, 3: 1, 4: 2, 5: 2, 6: 2})
        h = poset.hasse_heights(_antichain(3))
        self.assertEqual(set(h.values()), {0})

    def test_isomorphism(self):
        a = poset.chain_block_poset((2, 1, 3))
        b = poset.chain_block_poset((3, 1, 2))
        self.assertFalse(poset.poset_isomorphic(a, b))
        # relabelling preserves the order type
        perm = {1: 6, 2: 5, 3: 4, 4: 3, 5: 2, 6: 1}
        c = poset.Poset(6, frozenset((perm[q], perm[p])
                                     for p, q in b.strict))
        self.assertTrue(poset.poset_isomorphic(a, c))
        self.assertTrue(poset.poset_isomorphic(_chain(4), _chain(4)))
        self.assertFalse(poset.poset_isomorphic(_chain(4), _chain(3)))
        self.assertFalse(poset.poset_isomorphic(_chain(3), _antichain(3)))
        # two labellings of the N-shaped poset
        n_shape = poset.Poset.from_pairs(4, [(1, 3), (2, 3), (2, 4)])
        v_shape = poset.Poset.from_pairs(4, [(1, 3), (1, 4), (2, 4)])
        self.assertTrue(poset.poset_isomorphic(n_shape, v_shape))
        w_shape = poset.Poset.from_pairs(4, [(1, 4), (2, 4), (3, 4)])
        self.assertFalse(poset.poset_isomorphic(n_shape, w_shape))

    def test_isomorphism_cap(self):
        big = _chain(poset.ISOMORPHISM_CAP + 1)
        with self.assertRaises(SizeLimit):
            poset.poset_isomorphic(big, big)
        self.assertTrue(poset.poset_isomorphic(big, big,
                                               cap=poset.ISOMORPHISM_CAP + 1))
        edge = _chain(poset.ISOMORPHISM_CAP)
        self.assertTrue(poset.poset_isomorphic(edge, edge))


if __name__ == '__main__':
    unittest.main()
