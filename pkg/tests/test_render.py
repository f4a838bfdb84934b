# -- coding: utf-8 --
import re
from seaweedindex import render
from seaweedindex.notation import parse_spec
from seaweedindex.poset import build_block_diagram, poset_from_diagram
import unittest

FIG = parse_spec('p 2|3|1|2|2 / 7|3')


class TestEverything(unittest.TestCase):

    def test_meander_dot(self):
        src = render.meander_dot(parse_spec('p 2|4 / 1|2|3'))
        self.assertTrue(src.startswith('graph meander {'))
        self.assertEqual(src.count(' -- '), 5)
        self.assertEqual(src.count('side=top'), 3)
        self.assertEqual(src.count('side=bottom'), 2)
        self.assertNotIn('label=', src)
        self.assertIn('rank=same', src)

    def test_weighted_labels(self):
        src = render.render(FIG, 'weighted')
        labels = re.findall(r'label=(\d+)', src)
        self.assertEqual(sorted(labels), ['0'] * 4 + ['1'] * 2 + ['2'] * 2)
        tikz = render.render(FIG, 'weighted', 'tikz')
        labels = re.findall(r'node\[midway, (?:above|below)\] \{\$(\d+)\$\}',
                            tikz)
        self.assertEqual(sorted(labels), ['0'] * 4 + ['1'] * 2 + ['2'] * 2)

    def test_meander_tikz(self):
        tikz = render.meander_tikz(parse_spec('p 2|4 / 1|2|3'))
        self.assertTrue(tikz.startswith('\\begin{tikzpicture}'))
        self.assertTrue(tikz.endswith('\\end{tikzpicture}\n'))
        self.assertEqual(tikz.count('\\node'), 6)
        self.assertEqual(tikz.count('out=90, in=90'), 3)
        self.assertEqual(tikz.count('out=-90, in=-90'), 2)

    def test_blocks(self):
        src = render.blocks_dot(FIG)
        self.assertTrue(src.startswith('digraph blocks {'))
        self.assertEqual(src.count(' -> '), 5)
        self.assertIn('C5 -> C4', src)
        self.assertIn('C1 -> C2', src)
        tikz = render.blocks_tikz(FIG)
        self.assertEqual(tikz.count('\\draw[->]'), 5)
        self.assertIn('(C5) -- (C4)', tikz)
        # a shared cut draws no arrow
        src = render.blocks_dot(parse_spec('p 1|1 / 1|1'))
        self.assertNotIn(' -> ', src)

    def test_hasse(self):
        p = poset_from_diagram(build_block_diagram(FIG))
        src = render.hasse_dot(p)
        self.assertTrue(src.startswith('digraph hasse {'))
        self.assertEqual(src.count(' -> '), 13)
        self.assertIn('rankdir=BT', src)
        tikz = render.hasse_tikz(p)
        self.assertEqual(tikz.count('\\draw'), 13)
        self.assertEqual(tikz.count('\\node'), 10)
        self.assertEqual(render.render(FIG, 'hasse'), src)

    def test_deterministic(self):
        for kind in render.KINDS:
            for fmt in render.FORMATS:
                self.assertEqual(render.render(FIG, kind, fmt),
                                 render.render(FIG, kind, fmt))

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            render.render(FIG, 'poster')
        with self.assertRaises(ValueError):
            render.render(FIG, 'hasse', 'png')


if __name__ == '__main__':
    unittest.main()
