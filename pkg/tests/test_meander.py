# -- coding: utf-8 --
from seaweedindex import meander
from seaweedindex.checks import InvariantViolation
from seaweedindex.meander import Edge, Side
from seaweedindex.notation import Flavor, parse_spec, seaweed_specs
import unittest


def pairs(edges):
    return [(e.i, e.j) for e in edges]


class TestEverything(unittest.TestCase):

    def test_build_meander(self):
        m = meander.build_meander(parse_spec('p 2|4/1|2|3'))
        self.assertEqual(m.n_vertices, 6)
        self.assertEqual(pairs(m.top_edges), [(1, 2), (3, 6), (4, 5)])
        self.assertEqual(pairs(m.bottom_edges), [(2, 3), (4, 6)])
        self.assertTrue(all(e.side is Side.TOP for e in m.top_edges))
        m = meander.build_meander(parse_spec('p 2/2'))
        self.assertEqual(pairs(m.top_edges), [(1, 2)])
        self.assertEqual(pairs(m.bottom_edges), [(1, 2)])
        m = meander.build_meander(parse_spec('p 1|1/1|1'))
        self.assertEqual(m.edges, ())

    def test_meander_rejects_bad_edges(self):
        with self.assertRaises(InvariantViolation):
            meander.Meander(3, (Edge(Side.TOP, 1, 2), Edge(Side.TOP, 2, 3)),
                            ())
        with self.assertRaises(InvariantViolation):
            meander.Meander(3, (Edge(Side.BOTTOM, 1, 2),), ())

    def test_cycles_and_paths(self):
        cases = {'p 2/2': (1, 0), 'p 2|4/1|2|3': (0, 1), 'p 1|1/1|1': (0, 2),
                 'p 4/4': (2, 0), 'p 1|2|1/4': (1, 1)}
        for text, expected in cases.items():
            m = meander.build_meander(parse_spec(text))
            self.assertEqual(meander.cycles_and_paths(m), expected)

    def test_index_seaweed(self):
        cases = {'p 4/4': 4, 'pA 4/4': 3, 'p 2|4/1|2|3': 1, 'p 1|2|1/4': 3,
                 'p 1|2/2|1': 1, 'pA 1|1/1|1': 1}
        for text, expected in cases.items():
            self.assertEqual(meander.index_seaweed(parse_spec(text)),
                             expected)

    def test_gl_index_of_full_algebra(self):
        for n in range(1, 9):
            s = parse_spec('p ' + str(n) + '/' + str(n))
            self.assertEqual(meander.index_seaweed(s), n)

    def test_central_components(self):
        cc = meander.central_components(parse_spec('p 2|2|3|1|1|3/4|3|5'))
        self.assertEqual(cc.intervals, ((1, 4), (5, 7), (8, 12)))
        self.assertEqual(cc.component_of(6), 1)
        cc = meander.central_components(parse_spec('p 2|4/1|2|3'))
        self.assertEqual(cc.intervals, ((1, 6),))
        cc = meander.central_components(parse_spec('p 1|1/1|1'))
        self.assertEqual(cc.intervals, ((1, 1), (2, 2)))

    def test_count_central_by_gaps(self):
        cases = {'p 2|2|3|1|1|3/4|3|5': 3, 'p 1|1/1|1': 2, 'p 2|4/1|2|3': 1}
        for text, expected in cases.items():
            m = meander.build_meander(parse_spec(text))
            self.assertEqual(meander.count_central_by_gaps(m), expected)

    def test_simple_edges(self):
        m = meander.build_meander(parse_spec('p 2/2'))
        self.assertEqual(meander.simple_edges(m), [])
        m = meander.build_meander(parse_spec('p 2|3|1|2|2/7|3'))
        simple = meander.simple_edges(m)
        self.assertEqual(len(simple), 6)
        self.assertNotIn((3, 5), pairs(simple))
        m = meander.build_meander(parse_spec('p 1|1/1|1'))
        self.assertEqual(meander.simple_edges(m), [])

    def test_component_vertices(self):
        m = meander.build_meander(parse_spec('p 1|2|1/4'))
        comps = sorted(sorted(c) for c in meander.component_vertices(m))
        self.assertEqual(comps, [[1, 4], [2, 3]])

    def test_structure_all_small_specs(self):
        for n in range(1, 7):
            for s in seaweed_specs(n, Flavor.GL):
                m = meander.build_meander(s)
                g = m.to_graph()
                self.assertTrue(all(d <= 2 for _, d in g.degree()))
                cc = meander.central_components(s)
                for e in m.edges:
                    self.assertEqual(cc.component_of(e.i),
                                     cc.component_of(e.j))
                self.assertEqual(meander.count_central_by_gaps(m), len(cc))
                c, p = meander.cycles_and_paths(m)
                self.assertEqual(c + p, len(meander.component_vertices(m)))


if __name__ == '__main__':
    unittest.main()
