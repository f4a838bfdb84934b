# -- coding: utf-8 --
import numpy as np
from sympy import isprime
from seaweedindex import oracle
from seaweedindex.checks import (BracketNotClosed, InvariantViolation,
                                 NotASubspace)
from seaweedindex.invariants import index_center, index_nilradical
from seaweedindex.meander import index_seaweed
from seaweedindex.notation import (Flavor, dim_seaweed, parse_spec,
                                   seaweed_specs)
from seaweedindex.oracle import AlgebraBasis, BasisElement, FieldConfig
from seaweedindex.poset import chain_block_poset, index_nilpotent_poset
import unittest

E = BasisElement.elementary


class TestEverything(unittest.TestCase):

    def test_basis_elements(self):
        self.assertEqual(E(1, 2).to_matrix(2).tolist(), [[0, 1], [0, 0]])
        d = BasisElement.diagonal((1, -1))
        self.assertEqual(d.to_matrix(3).tolist(),
                         [[1, 0, 0], [0, -1, 0], [0, 0, 0]])
        self.assertEqual(d.min_size, 2)
        self.assertEqual(str(E(2, 3)), 'E2,3')
        for bad in ((0, 1), (1, -2)):
            with self.assertRaises(ValueError):
                E(*bad)
        with self.assertRaises(ValueError):
            BasisElement.diagonal((0, 0))
        with self.assertRaises(ValueError):
            E(3, 1).to_matrix(2)

    def test_bracket(self):
        self.assertEqual(oracle.bracket(E(1, 2), E(2, 3)).toarray().tolist(),
                         [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
        h = oracle.bracket(E(1, 2), E(2, 1))
        self.assertEqual(h.toarray().tolist(), [[1, 0], [0, -1]])
        self.assertEqual(oracle.bracket(E(1, 2), E(1, 2)).nnz, 0)
        self.assertEqual(oracle.bracket(E(1, 1), E(2, 2), n=4).shape, (4, 4))

    def test_basis_sizes(self):
        for text in ('p 2|4 / 1|2|3', 'pA 2|4 / 1|2|3', 'p 3 / 3',
                     'pA 1|1 / 1|1', 'p 2|3|1|2|2 / 7|3'):
            s = parse_spec(text)
            self.assertEqual(len(oracle.seaweed_basis(s)), dim_seaweed(s))
        s = parse_spec('p 2|3|1|2|2 / 7|3')
        self.assertEqual(len(oracle.center_basis(s)), 1)
        self.assertEqual(len(oracle.nilradical_basis(s)), 21)
        s = parse_spec('pA 2|2|3|1|1|3 / 4|3|5')
        self.assertEqual(len(oracle.center_basis(s)), 2)

    def test_sl_center_is_traceless(self):
        s = parse_spec('pA 2|2|3|1|1|3 / 4|3|5')
        for m in oracle.center_basis(s).matrices:
            self.assertEqual(int(np.trace(m)), 0)

    def test_dependent_basis(self):
        with self.assertRaises(InvariantViolation):
            AlgebraBasis(2, (E(1, 2), E(1, 2)))
        with self.assertRaises(InvariantViolation):
            AlgebraBasis(2, (E(1, 1), E(2, 2), BasisElement.diagonal((1, 1))))

    def test_index(self):
        gl3 = oracle.seaweed_basis(parse_spec('p 3 / 3'))
        self.assertEqual(oracle.index_randomized(gl3), 3)
        sl3 = oracle.seaweed_basis(parse_spec('pA 3 / 3'))
        self.assertEqual(oracle.index_randomized(sl3), 2)
        for text, expected in (('p 2|3|1|2|2 / 7|3', 7),
                               ('p 3|3|5|2 / 6|2|1|2|2', 16)):
            nil = oracle.nilradical_basis(parse_spec(text))
            self.assertEqual(oracle.index_randomized(nil), expected)

    def test_more_trials_never_raise_the_index(self):
        for text, basis, expected in (
                ('p 3|3|5|2 / 6|2|1|2|2', oracle.nilradical_basis, 16),
                ('p 2|4 / 1|2|3', oracle.seaweed_basis, 1),
                ('pA 3 / 3', oracle.seaweed_basis, 2)):
            b = basis(parse_spec(text))
            indices = [oracle.index_randomized(b, FieldConfig(trials=k))
                       for k in range(1, 7)]
            self.assertEqual(indices, sorted(indices, reverse=True), text)
            self.assertEqual(indices[-1], expected, text)
        b = oracle.seaweed_basis(parse_spec('p 2|4 / 1|2|3'))
        breadths = [oracle.breadth_randomized(b, FieldConfig(trials=k))
                    for k in range(1, 7)]
        self.assertEqual(breadths, sorted(breadths))
        self.assertEqual(breadths[-1], 11)

    def test_poset_algebra_index(self):
        p = chain_block_poset((2, 1, 3))
        b = oracle.poset_algebra_basis(p)
        self.assertEqual(len(b), 11)
        self.assertEqual(oracle.index_randomized(b), 7)

    def test_seed_does_not_change_exact_values(self):
        b = oracle.seaweed_basis(parse_spec('p 2|4 / 1|2|3'))
        values = {oracle.index_randomized(b, FieldConfig(seed=seed))
                  for seed in (0, 1, 2 ** 63)}
        self.assertEqual(values, {1})
        cfg = FieldConfig(seed=5)
        g1 = cfg.generator(b, 0).integers(0, cfg.prime, size=4)
        g2 = cfg.generator(b, 0).integers(0, cfg.prime, size=4)
        g3 = cfg.generator(b, 1).integers(0, cfg.prime, size=4)
        self.assertEqual(g1.tolist(), g2.tolist())
        self.assertNotEqual(g1.tolist(), g3.tolist())

    def test_lower_central_series(self):
        gl2 = oracle.seaweed_basis(parse_spec('p 2 / 2'))
        self.assertEqual(oracle.lower_central_series(gl2), [4, 3, 3])
        self.assertFalse(oracle.is_nilpotent(gl2))
        n3 = oracle.poset_algebra_basis(chain_block_poset((1, 1, 1)))
        self.assertEqual(oracle.lower_central_series(n3), [3, 1, 0])
        self.assertTrue(oracle.is_nilpotent(n3))
        abelian = oracle.nilradical_basis(parse_spec('p 1|1 / 1|1'))
        self.assertEqual(oracle.lower_central_series(abelian), [2, 0])

    def test_is_ideal(self):
        s = parse_spec('p 2|4 / 1|2|3')
        seaweed = oracle.seaweed_basis(s)
        self.assertTrue(oracle.is_ideal(oracle.nilradical_basis(s), seaweed))
        self.assertTrue(oracle.is_ideal(AlgebraBasis(6, ()), seaweed))
        gl2 = oracle.seaweed_basis(parse_spec('p 2 / 2'))
        upper = AlgebraBasis(2, (E(1, 2),))
        self.assertFalse(oracle.is_ideal(upper, gl2))
        with self.assertRaises(NotASubspace):
            oracle.is_ideal(gl2, upper)
        with self.assertRaises(ValueError):
            oracle.is_ideal(upper, seaweed)

    def test_center(self):
        for text, expected in (('p 3 / 3', 1), ('pA 3 / 3', 0),
                               ('p 2|2|3|1|1|3 / 4|3|5', 3),
                               ('pA 1|1 / 1|1', 1), ('p 1|1 / 1|1', 2)):
            b = oracle.seaweed_basis(parse_spec(text))
            self.assertEqual(oracle.center_dim_oracle(b), expected, text)

    def test_breadth(self):
        for text, expected in (('p 2 / 2', 2), ('p 2|4 / 1|2|3', 11),
                               ('p 1|1 / 1|1', 0)):
            b = oracle.seaweed_basis(parse_spec(text))
            self.assertEqual(oracle.breadth_randomized(b), expected, text)

    def test_bracket_not_closed(self):
        b = AlgebraBasis(2, (E(1, 2), E(2, 1)))
        for func in (oracle.index_randomized, oracle.center_dim_oracle,
                     oracle.breadth_randomized, oracle.lower_central_series):
            with self.assertRaises(BracketNotClosed):
                func(b)

    def test_field_config(self):
        for kwargs in ({'prime': 10}, {'prime': 2 ** 31 + 11},
                       {'trials': 0}, {'seed': -1}, {'seed': 2 ** 64}):
            with self.assertRaises(ValueError):
                FieldConfig(**kwargs)
        esc = FieldConfig(seed=7).escalated()
        self.assertLess(esc.prime, oracle.DEFAULT_PRIME)
        self.assertTrue(isprime(esc.prime))
        self.assertEqual(esc.trials, oracle.ESCALATION_TRIALS)
        self.assertEqual(esc.seed, 7)
        self.assertEqual(FieldConfig(trials=40).escalated().trials, 40)
        self.assertEqual(FieldConfig(trials=3).escalated().trials,
                         oracle.ESCALATION_TRIALS)
        FieldConfig(prime=11).check_size(2)
        with self.assertRaises(ValueError):
            FieldConfig(prime=7).check_size(2)
        small = FieldConfig(prime=7)
        with self.assertRaises(ValueError):
            oracle.index_randomized(oracle.seaweed_basis(parse_spec('p 2/2')),
                                    small)

    def test_small_specs_against_formulas(self):
        for n in range(1, 6):
            for flavor in (Flavor.GL, Flavor.SL):
                for s in seaweed_specs(n, flavor):
                    seaweed = oracle.seaweed_basis(s)
                    nil = oracle.nilradical_basis(s)
                    self.assertEqual(oracle.index_randomized(seaweed),
                                     index_seaweed(s), str(s))
                    self.assertEqual(oracle.index_randomized(nil),
                                     index_nilradical(s), str(s))
                    self.assertEqual(oracle.center_dim_oracle(seaweed),
                                     index_center(s), str(s))
                    self.assertTrue(oracle.is_nilpotent(nil), str(s))
                    self.assertTrue(oracle.is_ideal(nil, seaweed), str(s))

    def test_chain_posets_against_formula(self):
        for parts in ((1, 2, 1), (2, 2), (3, 1, 1), (1, 1, 1, 1)):
            p = chain_block_poset(parts)
            self.assertEqual(
                oracle.index_randomized(oracle.poset_algebra_basis(p)),
                index_nilpotent_poset(p), str(parts))


if __name__ == '__main__':
    unittest.main()
