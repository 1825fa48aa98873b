import tempfile
import unittest
from math import sqrt
from pathlib import Path

from numpy import arange, repeat
from numpy.random import default_rng

from geocomm.errors import InputError
from geocomm.graph import load_network
from geocomm.metrics import (
    accuracy,
    average_internal_degree,
    centroid,
    community_records,
    community_scores,
    geographic_span,
    load_labels,
    load_partition,
    random_partition,
    size_profile,
    write_partition,
)
from geocomm.modularity import Partition
from geocomm.tests.helpers import make_net, random_graph, two_triangles


class TestGeographicSpan(unittest.TestCase):

    def test_singleton(self):
        net = make_net([(3, 4), (0, 0)], [(0, 1)])
        self.assertEqual(geographic_span(net, [0]), 0.0)

    def test_two_nodes(self):
        net = make_net([(0, 0), (6, 8)], [(0, 1)])
        self.assertAlmostEqual(geographic_span(net, [0, 1]), 5.0, places=12)

    def test_unit_square(self):
        net = make_net([(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 1)])
        self.assertAlmostEqual(geographic_span(net, [0, 1, 2, 3]), sqrt(2) / 2, places=12)

    def test_translation_and_order_invariant(self):
        rng = default_rng(0)
        xy = rng.random((12, 2)) * 50
        a = make_net(xy, [(0, 1)])
        b = make_net(xy + [250.0, -80.0], [(0, 1)])
        members = [0, 3, 5, 7, 11]
        span = geographic_span(a, members)
        self.assertAlmostEqual(geographic_span(b, members), span, places=9)
        self.assertAlmostEqual(geographic_span(a, members[::-1]), span, places=12)

    def test_empty(self):
        net = make_net([(0, 0), (1, 0)], [(0, 1)])
        with self.assertRaises(InputError):
            geographic_span(net, [])

    def test_antimeridian(self):
        net = make_net([(179.0, 0.0), (-179.0, 0.0)], [(0, 1)], metric="geodesic")
        c = centroid(net, [0, 1])
        self.assertAlmostEqual(abs(c.x), 180.0, places=9)
        self.assertAlmostEqual(c.y, 0.0, places=12)
        self.assertAlmostEqual(geographic_span(net, [0, 1]), 111.19492664455873, places=6)

    def test_geodesic_matches_planar_scale(self):
        net = make_net([(10.0, 0.0), (10.0, 2.0)], [(0, 1)], metric="geodesic")
        self.assertAlmostEqual(geographic_span(net, [0, 1]), 111.19492664455873, places=6)


class TestAverageInternalDegree(unittest.TestCase):

    def test_complete_graph(self):
        n = 5
        net = make_net([(i, 0) for i in range(n)],
            [(a, b) for a in range(n) for b in range(a + 1, n)])
        self.assertEqual(average_internal_degree(net, Partition.single(n), 0), n - 1)

    def test_singleton(self):
        net = two_triangles()
        p = Partition.singletons(6)
        self.assertEqual(average_internal_degree(net, p, 4), 0.0)

    def test_bridge_not_counted(self):
        net = two_triangles(bridge=True)
        p = Partition.from_labels([0, 0, 0, 1, 1, 1])
        self.assertEqual(average_internal_degree(net, p, 0), 2.0)
        self.assertEqual(average_internal_degree(net, p, 1), 2.0)

    def test_weighted_sum_is_twice_internal_edges(self):
        rng = default_rng(1)
        for _ in range(10):
            net = random_graph(rng)
            p = Partition.from_labels(rng.integers(0, 4, size=net.n))
            src, dst = net.edge_arrays
            internal = int((p.labels[src] == p.labels[dst]).sum())
            total = sum(
                p.sizes[c] * average_internal_degree(net, p, c)
                for c in range(p.community_count)
            )
            self.assertAlmostEqual(total, 2 * internal, places=9)

    def test_unknown_community(self):
        with self.assertRaises(InputError):
            average_internal_degree(two_triangles(), Partition.single(6), 1)


class TestAccuracy(unittest.TestCase):

    def setUp(self):
        self.truth = repeat(arange(10), 250)

    def test_exact(self):
        self.assertEqual(accuracy(Partition.from_labels(self.truth), self.truth), 100.0)

    def test_singletons(self):
        self.assertAlmostEqual(accuracy(Partition.singletons(2500), self.truth), 0.4, places=12)

    def test_single_community(self):
        self.assertAlmostEqual(accuracy(Partition.single(2500), self.truth), 10.0, places=12)

    def test_relabel_invariant(self):
        rng = default_rng(2)
        labels = rng.integers(0, 14, size=2500)
        perm = rng.permutation(14)
        a = accuracy(Partition.from_labels(labels), self.truth)
        b = accuracy(Partition.from_labels(perm[labels]), self.truth)
        self.assertEqual(a, b)
        self.assertGreaterEqual(a, 0.0)
        self.assertLessEqual(a, 100.0)

    def test_unmatched_communities_count_nothing(self):
        truth = [0, 0, 1, 1]
        p = Partition.from_labels([0, 1, 2, 2])
        self.assertEqual(accuracy(p, truth), 75.0)

    def test_length_mismatch(self):
        with self.assertRaises(InputError):
            accuracy(Partition.single(3), [0, 1])


class TestRandomPartition(unittest.TestCase):

    def test_single(self):
        net = random_graph(default_rng(3), n=20)
        self.assertEqual(random_partition(net, 1, seed=4).community_count, 1)

    def test_seeded(self):
        net = random_graph(default_rng(3), n=40)
        self.assertEqual(random_partition(net, 5, seed=8), random_partition(net, 5, seed=8))

    def test_multinomial_sizes(self):
        net = make_net([(0, 0)] * 2500, [(0, 1)])
        p = random_partition(net, 10, seed=0)
        self.assertEqual(p.community_count, 10)
        sigma = sqrt(2500 * 0.1 * 0.9)
        for size in p.sizes.tolist():
            self.assertLess(abs(size - 250), 4 * sigma)

    def test_invalid_count(self):
        with self.assertRaises(InputError):
            random_partition(two_triangles(), 0)


class TestScores(unittest.TestCase):

    def test_community_scores(self):
        net = two_triangles(gap=10.0, bridge=True)
        p = Partition.from_labels([0, 0, 0, 1, 1, 1])
        scores = community_scores(net, p)
        self.assertEqual(list(scores.columns),
            ["community", "size", "span_km", "avg_internal_degree", "centroid_x", "centroid_y"])
        self.assertEqual(scores["size"].tolist(), [3, 3])
        self.assertEqual(scores["avg_internal_degree"].tolist(), [2.0, 2.0])
        self.assertAlmostEqual(scores["span_km"].iloc[0], scores["span_km"].iloc[1], places=12)
        self.assertAlmostEqual(scores["centroid_x"].iloc[1] - scores["centroid_x"].iloc[0], 10.0,
            places=12)

    def test_community_records(self):
        net = two_triangles(gap=10.0, bridge=True)
        records = community_records(net, Partition.from_labels([0, 0, 1, 1, 1, 1]))
        self.assertEqual([r.size for r in records], [2, 4])
        self.assertEqual(records[0].avg_internal_degree, 1.0)
        self.assertAlmostEqual(records[0].span_km, 0.5, places=12)
        self.assertAlmostEqual(records[0].centroid.x, 0.5, places=12)
        for r in records:
            self.assertGreaterEqual(r.span_km, 0.0)
            self.assertLessEqual(r.avg_internal_degree, r.size - 1)

    def test_size_profile_singletons(self):
        net = two_triangles()
        profile = size_profile(net, Partition.singletons(6))
        self.assertEqual(len(profile), 1)
        row = profile.iloc[0]
        self.assertEqual((row["size"], row["communities"]), (1, 6))
        self.assertEqual((row["mean_span_km"], row["mean_internal_degree"]), (0.0, 0.0))

    def test_size_profile_buckets(self):
        net = make_net([(float(i), 0.0) for i in range(8)], [(0, 1), (1, 2), (3, 4)])
        p = Partition.from_labels([0, 0, 0, 1, 1, 1, 1, 1])
        profile = size_profile(net, p)
        self.assertEqual(profile["size"].tolist(), [3, 5])
        self.assertEqual(profile["communities"].tolist(), [1, 1])
        self.assertAlmostEqual(profile["mean_internal_degree"].iloc[0], 4 / 3, places=12)
        self.assertAlmostEqual(profile["mean_internal_degree"].iloc[1], 2 / 5, places=12)
        self.assertAlmostEqual(profile["mean_span_km"].iloc[1], 6 / 5, places=12)


class TestPartitionFiles(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        (self.dir / "e.tsv").write_text("a\tb\nb\tc\nc\td\n", encoding="utf-8")
        (self.dir / "l.tsv").write_text("a\t0\t0\nb\t1\t0\nc\t2\t0\nd\t3\t0\n", encoding="utf-8")
        self.net = load_network(self.dir / "e.tsv", self.dir / "l.tsv")

    def tearDown(self):
        self.tmp.cleanup()

    def test_round_trip(self):
        p = Partition.from_labels([1, 1, 0, 0])
        write_partition(p, self.net, self.dir / "p.tsv", {"variant": "locality"})
        text = (self.dir / "p.tsv").read_text(encoding="utf-8")
        self.assertTrue(text.startswith("# variant=locality\n"))
        self.assertEqual(load_partition(self.dir / "p.tsv", self.net), p)

    def test_string_labels(self):
        (self.dir / "t.tsv").write_text("d\tred\nc\tred\nb\tblue\na\tblue\n", encoding="utf-8")
        labels = load_labels(self.dir / "t.tsv", self.net)
        self.assertEqual(labels.tolist(), [0, 0, 1, 1])

    def test_bad_files(self):
        cases = {
            "unknown.tsv": "a\t0\nb\t0\nc\t0\nd\t0\nz\t1\n",
            "twice.tsv": "a\t0\na\t1\nb\t0\nc\t0\nd\t0\n",
            "missing.tsv": "a\t0\nb\t0\nc\t0\n",
        }
        for name, text in cases.items():
            (self.dir / name).write_text(text, encoding="utf-8")
            with self.assertRaises(InputError, msg=name):
                load_partition(self.dir / name, self.net)


if __name__ == '__main__':
    unittest.main()
