import math
import os

import pytest

import hmotif


def data_file(name):
    path = os.path.join(os.environ.get("HMOTIF_DATA_DIR", "data"), name)
    if not os.path.exists(path):
        pytest.skip(f"dataset {name} not available")
    return path


def test_toy_triple_counts():
    g = hmotif.Hypergraph.from_edges([["1", "2", "3"], ["2", "3", "4"], ["3", "4", "5"]])
    p = hmotif.project(g)
    counts = hmotif.count_exact(g, p)
    assert sum(counts) == 1
    assert counts[15 - 1] == 1  # the one closed instance

    instances = hmotif.enumerate_instances(g, p)
    assert instances == [(0, 1, 2, 15)]


def test_load_and_stats():
    g = hmotif.Hypergraph.load(data_file("toy-a.txt"))
    stats = hmotif.degree_stats(g)
    assert stats["num_edges"] == g.num_edges
    p = hmotif.project(g, workers=2)
    counts = hmotif.count_exact(g, p, workers=2)
    assert sum(counts) == 290


def test_motif_table_shape():
    table = hmotif.motif_table()
    assert len(table) == 26
    opens = [row["motif"] for row in table if row["open"]]
    assert opens == [17, 18, 19, 20, 21, 22]
    assert hmotif.is_open(17) and not hmotif.is_open(16)


def test_sampler_determinism_and_accuracy():
    g = hmotif.Hypergraph.load(data_file("toy-a.txt"))
    p = hmotif.project(g)
    exact = hmotif.count_exact(g, p)

    a = hmotif.count_approx_wedge(g, p, samples=200, seed=7)
    b = hmotif.count_approx_wedge(g, p, samples=200, seed=7)
    assert a == b

    # average several independent estimates: should land near the exact counts
    trials = 40
    mean = [0.0] * 26
    for trial in range(trials):
        est = hmotif.count_approx_wedge(g, p, samples=150, seed=1000 + trial)
        mean = [m + e / trials for m, e in zip(mean, est)]
    assert hmotif.relative_error(exact, mean) < 0.25


def test_profile_pipeline():
    g = hmotif.Hypergraph.load(data_file("toy-a.txt"))
    p = hmotif.project(g)
    real = [float(c) for c in hmotif.count_exact(g, p)]
    null = hmotif.null_counts(g, trials=3, seed=5)["mean"]
    delta = hmotif.significance(real, null)
    assert all(-1.0 < d < 1.0 for d in delta)
    cp = hmotif.characteristic_profile(delta)
    norm = math.sqrt(sum(x * x for x in cp))
    assert norm == pytest.approx(1.0)

    sim = hmotif.cp_similarity_matrix([cp, [-x for x in cp]])
    assert sim[0][1] == pytest.approx(-1.0)
    assert sim[0][0] == 1.0


def test_randomize_valid():
    g = hmotif.Hypergraph.load(data_file("toy-b.txt"))
    r = hmotif.randomize(g, seed=3)
    assert r.num_edges > 0
    for i in range(r.num_edges):
        edge = r.edge(i)
        assert len(edge) == len(set(edge))
        assert list(edge) == sorted(edge)


def test_bounds_checks():
    g = hmotif.Hypergraph.from_edges([["1", "2"], ["2", "3"]])
    p = hmotif.project(g)
    with pytest.raises(IndexError):
        g.edge(99)
    with pytest.raises(IndexError):
        g.token(99)
    with pytest.raises(IndexError):
        p.neighbors(99)
    with pytest.raises(ValueError):
        hmotif.significance([0.0] * 25, [0.0] * 25)
