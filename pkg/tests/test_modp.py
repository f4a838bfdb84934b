# -- coding: utf-8 --
import numpy as np
from seaweedindex.oracle import _modp
import unittest

P = 2147483647


class TestEverything(unittest.TestCase):

    def test_echelon(self):
        ech = _modp.echelon(np.array([[2, 4], [1, 2]]), 7)
        self.assertEqual(ech.rank, 1)
        self.assertEqual(ech.pivots, (0,))
        self.assertEqual(ech.rows.tolist(), [[1, 2]])

    def test_rank_depends_on_prime(self):
        a = np.array([[2, 0], [0, 3]])
        self.assertEqual(_modp.rank(a, 3), 1)
        self.assertEqual(_modp.rank(a, 5), 2)
        self.assertEqual(_modp.rank(np.zeros((0, 4), dtype=np.int64), 5), 0)
        self.assertEqual(_modp.rank(np.zeros((3, 3), dtype=np.int64), 5), 0)

    def test_large_prime_entries(self):
        a = np.array([[P - 1, 1], [1, P - 1]])
        self.assertEqual(_modp.rank(a, P), 1)
        rng = np.random.default_rng(0)
        b = rng.integers(0, P, size=(6, 6), dtype=np.int64)
        b[5] = np.mod(b[0] * 3 + b[1] * (P - 2), P)
        self.assertEqual(_modp.rank(b, P), 5)

    def test_residual_and_coordinates(self):
        ech = _modp.echelon(np.array([[1, 0, 0], [0, 1, 0]]), 5)
        self.assertEqual(ech.residual([2, 3, 4]).tolist(), [[0, 0, 4]])
        self.assertFalse(ech.contains([2, 3, 4]))
        self.assertTrue(ech.contains([[2, 3, 0], [-1, 7, 0]]))
        self.assertEqual(ech.coordinates([[2, 3, 0], [-1, 7, 0]]).tolist(),
                         [[2, 3], [4, 2]])

    def test_combine(self):
        out = _modp.combine([1, 2], np.array([[3, 4], [5, 6]]), 7)
        self.assertEqual(out.tolist(), [4, 3])
        out = _modp.combine([P - 1] * 3, np.full((2, 3), P - 1), P)
        self.assertTrue(np.all(out == 3))


if __name__ == '__main__':
    unittest.main()
