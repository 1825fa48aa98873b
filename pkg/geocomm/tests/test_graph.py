import tempfile
import unittest
from math import pi
from pathlib import Path

from numpy import array, array_equal, column_stack
from numpy.random import default_rng

from geocomm.errors import InputError
from geocomm.graph import (
    Network,
    common_neighbor_count,
    distance,
    edge_lengths,
    infer_home_locations,
    load_checkins,
    load_network,
    write_edges,
    write_locations,
)
from geocomm.maps import Metric
from geocomm.tests.helpers import make_net, triangle_edges


class TestNetwork(unittest.TestCase):

    def test_self_loops_and_duplicates_dropped(self):
        with self.assertLogs("geocomm.graph.network", level="WARNING") as logs:
            net = make_net([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 0), (1, 1), (1, 2)])
        self.assertEqual(net.m, 2)
        self.assertEqual(list(net.degrees), [1, 2, 1])
        self.assertTrue(any("self-loop" in line for line in logs.output))
        self.assertTrue(any("duplicate" in line for line in logs.output))

    def test_adjacency_sorted_and_symmetric(self):
        net = make_net([(0, 0)] * 4, [(3, 0), (2, 0), (1, 0), (2, 3)])
        self.assertEqual(net.adjacency(0).tolist(), [1, 2, 3])
        self.assertEqual(net.adjacency(3).tolist(), [0, 2])
        for v in range(net.n):
            for w in net.adjacency(v):
                self.assertIn(v, net.adjacency(int(w)).tolist())

    def test_degree_sum_is_twice_edges(self):
        net = make_net([(0, 0)] * 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
        self.assertEqual(int(net.degrees.sum()), 2 * net.m)

    def test_arrays_read_only(self):
        net = make_net([(0, 0), (1, 1)], [(0, 1)])
        with self.assertRaises(ValueError):
            net.xy[0, 0] = 5.0

    def test_edge_arrays_ordered(self):
        net = make_net([(0, 0)] * 4, [(2, 3), (0, 2), (1, 0)])
        src, dst = net.edge_arrays
        self.assertEqual(list(zip(src.tolist(), dst.tolist())), [(0, 1), (0, 2), (2, 3)])

    def test_index_out_of_range(self):
        net = make_net([(0, 0), (1, 1)], [(0, 1)])
        with self.assertRaises(InputError):
            net.location(2)
        with self.assertRaises(InputError):
            make_net([(0, 0), (1, 1)], [(0, 2)])

    def test_geodesic_range(self):
        with self.assertRaises(InputError):
            make_net([(190.0, 0.0), (0.0, 0.0)], [(0, 1)], metric="geodesic")

    def test_equality(self):
        a = make_net([(0, 0), (1, 1)], [(0, 1)])
        b = make_net([(0, 0), (1, 1)], [(1, 0)])
        self.assertEqual(a, b)


class TestDistance(unittest.TestCase):

    def test_planar(self):
        net = make_net([(0, 0), (3, 4)], [(0, 1)])
        self.assertEqual(distance(net, 0, 1), 5.0)
        self.assertEqual(distance(net, 1, 0), 5.0)
        self.assertEqual(distance(net, 0, 0), 0.0)

    def test_geodesic_one_degree(self):
        net = make_net([(0, 0), (0, 1)], [(0, 1)], metric="geodesic")
        self.assertAlmostEqual(distance(net, 0, 1), 111.19492664455873, places=9)

    def test_geodesic_antipodes(self):
        net = make_net([(0, 0), (180, 0)], [(0, 1)], metric="geodesic")
        self.assertAlmostEqual(distance(net, 0, 1), 6371.0 * 3.141592653589793, places=6)

    def test_quarter_meridian(self):
        net = make_net([(0, 0), (0, 90)], [(0, 1)], metric="geodesic")
        self.assertAlmostEqual(distance(net, 0, 1), 6371.0 * pi / 2, places=6)
        self.assertAlmostEqual(distance(net, 0, 1), 10007.543, places=3)

    def test_symmetry_and_identity(self):
        rng = default_rng(5)
        for metric, points in (
            ("planar", rng.uniform(-50.0, 50.0, size=(30, 2))),
            ("geodesic", column_stack([rng.uniform(-180.0, 180.0, 30),
                rng.uniform(-90.0, 90.0, 30)])),
        ):
            net = make_net([tuple(p) for p in points.tolist()], [(0, 1)], metric=metric)
            for _ in range(100):
                v, w = rng.integers(0, net.n, size=2).tolist()
                self.assertEqual(distance(net, v, w), distance(net, w, v))
                self.assertGreaterEqual(distance(net, v, w), 0.0)
                self.assertEqual(distance(net, v, v), 0.0)

    def test_triangle_inequality(self):
        rng = default_rng(6)
        net = make_net([tuple(p) for p in rng.uniform(0.0, 10.0, size=(40, 2)).tolist()],
            [(0, 1)])
        for _ in range(200):
            u, v, w = rng.integers(0, net.n, size=3).tolist()
            self.assertLessEqual(
                distance(net, u, w), distance(net, u, v) + distance(net, v, w) + 1e-12
            )

    def test_edge_lengths(self):
        net = make_net([(0, 0), (3, 0), (0, 4)], triangle_edges())
        self.assertEqual(sorted(edge_lengths(net).tolist()), [3.0, 4.0, 5.0])


class TestCommonNeighbors(unittest.TestCase):

    def test_counts(self):
        k4 = make_net([(0, 0)] * 4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        self.assertEqual(common_neighbor_count(k4, 0, 1), 2)
        path = make_net([(0, 0)] * 3, [(0, 1), (1, 2)])
        self.assertEqual(common_neighbor_count(path, 0, 1), 0)
        self.assertEqual(common_neighbor_count(path, 0, 2), 1)

    def test_same_node_rejected(self):
        net = make_net([(0, 0)] * 3, [(0, 1), (1, 2)])
        with self.assertRaises(InputError):
            common_neighbor_count(net, 1, 1)


class TestLoader(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text, encoding="utf-8")
        return path

    def test_load(self):
        edges = self.write("e.tsv", "# comment\nb\ta\n\nc\tb\n")
        locs = self.write("l.tsv", "a\t0\t0\nb\t1\t0\nc\t2\t0\nd\t5\t5\n")
        net = load_network(edges, locs)
        self.assertEqual(net.ids, ("a", "b", "c", "d"))
        self.assertEqual(net.m, 2)
        self.assertEqual(net.degrees.tolist(), [1, 2, 1, 0])

    def test_missing_location_names_line(self):
        edges = self.write("e.tsv", "a\tb\nb\tz\n")
        locs = self.write("l.tsv", "a\t0\t0\nb\t1\t0\n")
        with self.assertRaises(InputError) as ctx:
            load_network(edges, locs)
        self.assertIn(":2:", str(ctx.exception))
        self.assertIn("'z'", str(ctx.exception))

    def test_malformed_and_non_finite(self):
        edges = self.write("e.tsv", "a\tb\n")
        with self.assertRaises(InputError):
            load_network(edges, self.write("l1.tsv", "a\t0\nb\t1\t0\n"))
        with self.assertRaises(InputError):
            load_network(edges, self.write("l2.tsv", "a\tnan\t0\nb\t1\t0\n"))
        with self.assertRaises(InputError):
            load_network(edges, self.write("l3.tsv", "a\tx\t0\nb\t1\t0\n"))

    def test_duplicate_location(self):
        edges = self.write("e.tsv", "a\tb\n")
        locs = self.write("l.tsv", "a\t0\t0\na\t1\t0\nb\t1\t0\n")
        with self.assertRaises(InputError):
            load_network(edges, locs)

    def test_geodesic_out_of_range(self):
        edges = self.write("e.tsv", "a\tb\n")
        locs = self.write("l.tsv", "a\t0\t95\nb\t1\t0\n")
        load_network(edges, locs, "planar")
        with self.assertRaises(InputError):
            load_network(edges, locs, Metric.GEODESIC)

    def test_missing_file(self):
        with self.assertRaises(InputError):
            load_network(self.dir / "none.tsv", self.dir / "none2.tsv")

    def test_invalid_utf8_names_line(self):
        edges = self.dir / "e.tsv"
        edges.write_bytes(b"a\tb\n\xff\xfe\tb\n")
        locs = self.write("l.tsv", "a\t0\t0\nb\t1\t0\n")
        with self.assertRaises(InputError) as ctx:
            load_network(edges, locs)
        self.assertIn(":2:", str(ctx.exception))
        self.assertIn("UTF-8", str(ctx.exception))

    def test_write_round_trip(self):
        net = make_net([(0.1, 0.2), (1.0 / 3.0, 7.0), (2.5, -1.0)], [(0, 1), (1, 2)])
        write_edges(net, self.dir / "e.tsv", {"seed": 1})
        write_locations(net, self.dir / "l.tsv")
        self.assertEqual(load_network(self.dir / "e.tsv", self.dir / "l.tsv"), net)

    def test_load_twice_identical(self):
        edges = self.write("e.tsv", "x\ty\ny\tz\n")
        locs = self.write("l.tsv", "z\t2\t0\ny\t1\t0\nx\t0\t0\n")
        self.assertEqual(load_network(edges, locs), load_network(edges, locs))


class TestHomes(unittest.TestCase):

    def test_most_visited_cell(self):
        from pandas import DataFrame
        checkins = DataFrame({
            "id": ["u", "u", "u", "v"],
            "x": [10.0, 10.01, 50.0, -70.0],
            "y": [45.0, 45.01, 10.0, -30.0],
        })
        homes = infer_home_locations(checkins, cell_km=25)
        self.assertEqual(homes["id"].tolist(), ["u", "v"])
        u = homes.iloc[0]
        self.assertAlmostEqual(u["x"], 10.0, delta=0.5)
        self.assertAlmostEqual(u["y"], 45.0, delta=0.25)

    def test_empty(self):
        from pandas import DataFrame
        with self.assertRaises(InputError):
            infer_home_locations(DataFrame(columns=["id", "x", "y"]))

    def test_load_checkins(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "c.tsv"
            path.write_text("u\t1.5\t2.5\textra\nv\t3\t4\n", encoding="utf-8")
            frame = load_checkins(path)
        self.assertEqual(frame["id"].tolist(), ["u", "v"])
        self.assertTrue(array_equal(frame[["x", "y"]].to_numpy(), array([[1.5, 2.5], [3, 4]])))


if __name__ == '__main__':
    unittest.main()
