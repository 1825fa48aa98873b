import tempfile
import unittest
from math import exp, inf, sqrt

from numpy import array_equal

from geocomm.errors import InfeasibleError, InputError
from geocomm.graph import edge_lengths, load_network
from geocomm.locality import locality_report
from geocomm.maps import FILES
from geocomm.metrics import load_labels
from geocomm.synth import (
    SynthConfig,
    assign_labels,
    calibrate_alpha,
    generate,
    lattice,
    parse_omega,
    write_synth,
)


class TestSynthConfig(unittest.TestCase):

    def test_defaults(self):
        cfg = SynthConfig()
        self.assertEqual(cfg.grid_side, 50)
        self.assertEqual(cfg.node_count, 2500)
        self.assertEqual(cfg.label_count, 10)
        self.assertEqual((cfg.p_same, cfg.p_diff), (0.5, 0.1))
        self.assertEqual(cfg.target_avg_degree, 15.0)
        self.assertIsNone(cfg.alpha)

    def test_omega_tokens(self):
        self.assertEqual(parse_omega("inf"), inf)
        self.assertEqual(parse_omega(" +Infinity "), inf)
        self.assertEqual(parse_omega("3"), 3.0)
        with self.assertRaises(InputError):
            parse_omega("far")
        cfg = SynthConfig(omega="inf")
        self.assertEqual(cfg.inv_omega, 0.0)
        self.assertEqual(cfg.header()["omega"], "inf")

    def test_invalid(self):
        bad = [
            {"p_same": 0.1, "p_diff": 0.5},
            {"p_same": 0.5, "p_diff": 0.5},
            {"p_diff": 0.0},
            {"p_same": 1.5},
            {"omega": 0.0},
            {"omega": -2.0},
            {"omega": "nowhere"},
            {"grid_side": 3, "node_count": 10},
            {"label_count": 0},
            {"target_avg_degree": -1.0},
        ]
        for kwargs in bad:
            with self.assertRaises(InputError, msg=str(kwargs)):
                SynthConfig.create(**kwargs)

    def test_create_ignores_none(self):
        cfg = SynthConfig.create(grid_side=10, node_count=None, alpha=None)
        self.assertEqual(cfg.node_count, 100)


class TestLattice(unittest.TestCase):

    def test_layout(self):
        ids, xy = lattice(SynthConfig(grid_side=4, node_count=6))
        self.assertEqual(ids, ("0", "1", "2", "3", "4", "5"))
        self.assertEqual(xy.tolist(), [[0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1]])

    def test_max_distance(self):
        _, xy = lattice(SynthConfig())
        corner = sqrt(((xy[-1] - xy[0]) ** 2).sum())
        self.assertAlmostEqual(corner, sqrt(2 * 49 ** 2), places=12)
        self.assertAlmostEqual(corner, 69.296, places=3)

    def test_ids_sort_numerically(self):
        ids, _ = lattice(SynthConfig(grid_side=11))
        self.assertEqual(list(ids), sorted(ids))
        self.assertEqual(ids[7], "007")


class TestCalibration(unittest.TestCase):

    def test_single_label_closed_form(self):
        cfg = SynthConfig(omega="inf", label_count=1)
        self.assertAlmostEqual(calibrate_alpha(cfg), 15 / (2499 * 0.5), places=12)
        self.assertAlmostEqual(calibrate_alpha(cfg), 0.012005, places=6)

    def test_zero_target(self):
        cfg = SynthConfig(grid_side=5, target_avg_degree=0)
        self.assertEqual(calibrate_alpha(cfg), 0.0)
        self.assertEqual(generate(cfg).network.m, 0)

    def test_expected_degree_matches_target(self):
        cfg = SynthConfig(grid_side=12, omega=2.0, target_avg_degree=6.0)
        labels = assign_labels(cfg)
        alpha = calibrate_alpha(cfg, labels)
        _, xy = lattice(cfg)
        n = cfg.node_count
        total = 0.0
        for v in range(n):
            for w in range(v + 1, n):
                d = sqrt(((xy[v] - xy[w]) ** 2).sum())
                p_c = cfg.p_same if labels[v] == labels[w] else cfg.p_diff
                p = alpha * p_c * exp(-d / cfg.omega)
                self.assertLessEqual(p, 1.0)
                total += p
        self.assertAlmostEqual(2 * total / n, 6.0, delta=1e-6)

    def test_unreachable(self):
        with self.assertRaises(InfeasibleError):
            calibrate_alpha(SynthConfig(grid_side=3, target_avg_degree=100))


class TestGenerate(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.local = [generate(SynthConfig(omega=3.0, seed=s)) for s in range(5)]
        cls.flat = [generate(SynthConfig(omega="inf", seed=s)) for s in range(5)]

    def test_mean_degree(self):
        for synth in self.local + self.flat:
            net = synth.network
            self.assertGreaterEqual(2 * net.m / net.n, 14.0)
            self.assertLessEqual(2 * net.m / net.n, 16.0)

    def test_same_label_rate(self):
        synth = self.flat[0]
        labels = synth.true_labels
        src, dst = synth.network.edge_arrays
        same_edges = int((labels[src] == labels[dst]).sum())
        counts = [int((labels == c).sum()) for c in range(10)]
        same_pairs = sum(c * (c - 1) // 2 for c in counts)
        n = synth.network.n
        diff_pairs = n * (n - 1) // 2 - same_pairs
        ratio = (same_edges / same_pairs) / ((synth.network.m - same_edges) / diff_pairs)
        self.assertGreater(ratio, 4.5)
        self.assertLess(ratio, 5.5)

    def test_geography_shortens_edges(self):
        for local, flat in zip(self.local, self.flat):
            self.assertLess(edge_lengths(local.network).mean(), edge_lengths(flat.network).mean())

    def test_locality_diagnostic(self):
        self.assertGreater(locality_report(self.local[0].network).tvd, 0.25)
        self.assertTrue(locality_report(self.local[1].network).suitable)
        self.assertLess(abs(locality_report(self.flat[0].network).tvd), 0.05)

    def test_labels(self):
        labels = self.local[0].true_labels
        self.assertEqual(labels.size, 2500)
        self.assertEqual(sorted(set(labels.tolist())), list(range(10)))

    def test_reproducible(self):
        again = generate(SynthConfig(omega=3.0, seed=0))
        self.assertEqual(again.network, self.local[0].network)
        self.assertTrue(array_equal(again.true_labels, self.local[0].true_labels))
        self.assertEqual(again.alpha, self.local[0].alpha)
        self.assertNotEqual(self.local[0].network, self.local[1].network)

    def test_thread_count_independent(self):
        cfg = SynthConfig(grid_side=25, omega=4.0, seed=9)
        self.assertEqual(generate(cfg, threads=1).network, generate(cfg, threads=2).network)

    def test_explicit_alpha(self):
        cfg = SynthConfig(grid_side=10, alpha=0.0)
        synth = generate(cfg)
        self.assertEqual(synth.alpha, 0.0)
        self.assertEqual(synth.network.m, 0)

    def test_partial_grid(self):
        synth = generate(SynthConfig(grid_side=10, node_count=37, target_avg_degree=4))
        self.assertEqual(synth.network.n, 37)
        self.assertEqual(synth.true_labels.size, 37)


class TestWriteSynth(unittest.TestCase):

    def test_round_trip(self):
        synth = generate(SynthConfig(grid_side=8, omega=2.0, target_avg_degree=4, seed=3))
        with tempfile.TemporaryDirectory() as tmp:
            out = write_synth(synth, tmp)
            net = load_network(out / FILES["edges"], out / FILES["locations"])
            labels = load_labels(out / FILES["labels"], net)
            header = (out / FILES["labels"]).read_text(encoding="utf-8").splitlines()[0]
        self.assertEqual(net.ids, synth.network.ids)
        self.assertEqual(net.m, synth.network.m)
        self.assertEqual(net, synth.network)
        self.assertTrue(header.startswith("#"))
        same = labels[:, None] == labels[None, :]
        truth = synth.true_labels[:, None] == synth.true_labels[None, :]
        self.assertTrue(array_equal(same, truth))


if __name__ == '__main__':
    unittest.main()
