"""Smoke tests for the Python bindings and the installed CLI."""

import json
import os
import subprocess

import pytest

import netdeploy as nd


def test_presets_expose_experiment_constants():
    assert set(nd.preset_names()) == {
        "independent",
        "clique",
        "random_graph",
        "preferential",
        "tree",
        "tree_small_alpha",
        "tree_tiny_alpha",
    }
    assert nd.preset("clique").dynamics.alpha == 1.25e7
    assert nd.preset("tree_tiny_alpha").dynamics.alpha == 39.0
    assert nd.preset("independent").dynamics.mode == nd.Mode.independent
    assert nd.preset("random_graph").graph.edge_prob == 0.001
    for name in nd.preset_names():
        cfg = nd.preset(name)
        assert cfg.node_count == 10000
        assert cfg.dynamics.beta == 3.0
        assert cfg.stop_fraction == 0.99
    with pytest.raises(ValueError):
        nd.preset("bogus")


def test_graph_generators():
    clique = nd.Graph.clique(10)
    assert clique.edge_count == 45
    assert clique.degree(3) == 9

    tree = nd.Graph.binary_tree(7)
    assert tree.depth_of(6) == 2
    assert sorted(tree.neighbors(0)) == [1, 2]

    er_a = nd.Graph.erdos_renyi(200, 0.05, seed=4)
    er_b = nd.Graph.erdos_renyi(200, 0.05, seed=4)
    assert er_a.to_edge_list() == er_b.to_edge_list()

    ba = nd.Graph.barabasi_albert(300, ring_size=100, m=1, seed=9)
    assert ba.edge_count == 100 + 200

    round_trip = nd.Graph.from_edge_list(tree.to_edge_list())
    assert round_trip.to_edge_list() == tree.to_edge_list()


def test_run_is_deterministic_and_monotone():
    cfg = nd.preset("clique")
    cfg.rng_seed = 7
    a = nd.run(cfg)
    b = nd.run(cfg)
    assert a.curve.counts == b.curve.counts
    assert a.reached_stop
    counts = a.curve.counts
    assert counts[0] == 1
    assert all(x <= y for x, y in zip(counts, counts[1:]))
    assert counts[-1] >= 9900


def test_ensemble_and_analysis():
    cfg = nd.preset("independent")
    summary, runs = nd.run_ensemble(cfg, num_runs=5, seed_stream=11, jobs=2)
    assert summary.num_runs == 5
    assert len(runs) == 5
    assert summary.mean[0] == 1.0

    rates = nd.growth_rate(runs[0].curve.counts, cfg.node_count)
    assert sum(rates) == runs[0].curve.counts[-1] - 1
    smoothed = nd.smooth(rates, 11)
    assert len(smoothed) == len(rates)

    report = json.loads(nd.analyze_runs(runs, cfg.stop_fraction, label="independent"))
    assert report["runs"] == 5
    assert 0.0 <= report["flattening_frequency"] <= 1.0


def test_analysis_primitives():
    assert nd.count_bursts([0, 5, 10, 5, 1, 5, 10, 5, 0], 0.2) == 2
    assert nd.count_bursts([1, 1, 1, 1], 0.25) == 0
    assert nd.detect_early_flattening([4, 3, 2, 3, 8, 20, 8, 2])
    assert not nd.detect_early_flattening([1, 2, 3, 4, 5])
    assert nd.saturation_step([1, 50, 100], 100, 0.99) == 2
    assert nd.saturation_step([1, 50, 98], 100, 0.99) is None
    assert nd.transition_probability(3.0, 3.0) == 0.5


def test_config_json_round_trip():
    cfg = nd.preset("preferential")
    cfg.rng_seed = 99
    back = nd.SimulationConfig.from_json(cfg.to_json())
    assert back.to_json() == cfg.to_json()
    assert back.digest() == cfg.digest()


@pytest.fixture()
def cli():
    path = os.environ.get("NETDEPLOY_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("NETDEPLOY_CLI not set")
    return path


def test_cli_run_matches_bindings(cli, tmp_path):
    out = tmp_path / "curve.csv"
    proc = subprocess.run(
        [cli, "run", "--preset", "independent", "--seed", "3", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "step,adopted,fraction"
    assert lines[1] == "0,1,0.0001"

    cfg = nd.preset("independent")
    cfg.rng_seed = 3
    counts = nd.run(cfg).curve.counts
    assert len(lines) - 1 == len(counts)
    assert int(lines[-1].split(",")[1]) == counts[-1]


def test_cli_preset_dump_parses(cli):
    proc = subprocess.run([cli, "preset-dump", "tree"], capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["dynamics"]["alpha"] == 312.5
    assert doc["graph"]["kind"] == "binary_tree"
