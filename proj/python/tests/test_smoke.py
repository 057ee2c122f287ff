import os
import subprocess

import pytest

import oriclique as oc

CLI = os.environ.get("ORICLIQUE_CLI")
needs_cli = pytest.mark.skipif(not CLI, reason="ORICLIQUE_CLI not set")


def run_cli(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=300
    )


def test_graph_basics():
    g = oc.Graph(3, [(0, 1), (1, 2)])
    assert g.order == 3
    assert g.arc_count == 2
    assert g.arcs() == [(0, 1), (1, 2)]
    assert g.has_arc(0, 1) and not g.has_arc(1, 0)
    with pytest.raises(oc.Error, match="Antisymmetry"):
        oc.Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(oc.Error, match="SelfLoop"):
        oc.Graph(2, [(1, 1)])


def test_round_trip():
    c5 = oc.directed_cycle(5)
    assert oc.parse_graph(oc.format_ograph(c5)) == c5
    assert oc.parse_graph(oc.format_compact(c5)) == c5
    assert oc.format_ograph(c5).startswith("5 5\n")


def test_chi_and_criticality():
    c5 = oc.directed_cycle(5)
    assert oc.chi_o(c5) == 5
    chi, classes = oc.colouring(c5)
    assert chi == 5 and len(classes) == 5
    assert oc.find_colouring(c5, 4) is None
    assert oc.is_absolute_clique(c5)
    assert oc.is_deeply_critical(c5)
    assert oc.is_dcoc(c5)
    rep = oc.criticality_report(c5)
    assert rep["chi"] == 5 and rep["deeply_critical"]
    assert all(drop == 2 for (_, _, drop) in rep["arcs"])
    # the transitive triangle is a clique but not critical
    t3 = oc.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert oc.chi_o(t3) == 3
    assert not oc.is_deeply_critical(t3)


def test_extensions():
    c3 = oc.directed_cycle(3)
    parts = oc.find_extending_partition(c3)
    assert parts == [[0], [1], [2]]
    assert oc.check_extending_partition(c3, parts)["ok"]
    g9, parts9 = oc.six_extension(c3, parts)
    assert g9.order == 9 and g9.arc_count == 15
    assert oc.is_dcoc(g9)
    assert oc.isomorphic(g9, oc.generate_odd_dcoc(9))
    assert oc.two_extension(c3, parts).order == 5
    assert oc.four_extension(c3, parts).order == 7
    # the five-cycle admits no extending partition (no order-7 example exists)
    assert oc.find_extending_partition(oc.directed_cycle(5)) is None


def test_generate_odd():
    for n in (5, 9, 11, 13):
        g = oc.generate_odd_dcoc(n)
        assert g.order == n and oc.is_dcoc(g)
    with pytest.raises(oc.Error, match="NoSuchOrder"):
        oc.generate_odd_dcoc(7)
    with pytest.raises(oc.Error, match="EvenOrder"):
        oc.generate_odd_dcoc(8)


def test_circulants():
    assert oc.circulant_dcoc_check(5, [1])
    assert not oc.circulant_dcoc_check(7, [1, 2])
    assert oc.isomorphic(oc.build_circulant(5, [1]), oc.directed_cycle(5))
    diag = oc.circulant_conditions(9, [1, 2, 5])
    assert diag["ok"] == oc.is_dcoc(oc.build_circulant(9, [1, 2, 5]))
    assert oc.multiplier_canonical(5, [4]) == [1]
    scan = oc.scan_circulants(9, mode="exhaustive")
    pruned = oc.scan_circulants(9)
    assert scan["found"] == pruned["found"]
    assert scan["completed"] and pruned["completed"]


def test_scans():
    census = oc.census_dcoc(5, jobs=2)
    assert census["generated"] == 582
    assert census["dcoc"] == 1
    probe = oc.random_probe(5, 5000, 7)
    assert probe["generated"] == 5000
    again = oc.random_probe(5, 5000, 7)
    for key in ("generated", "cliques", "dcoc", "witnesses"):
        assert probe[key] == again[key]


@needs_cli
def test_cli_gen_odd():
    done = run_cli("gen-odd", "--n", "9")
    assert done.returncode == 0
    assert done.stdout.startswith("9 15\n")
    assert oc.parse_graph(done.stdout).order == 9


@needs_cli
def test_cli_domain_verdict_exit_1():
    done = run_cli("gen-odd", "--n", "7")
    assert done.returncode == 1
    assert "NoSuchOrder" in done.stderr


@needs_cli
def test_cli_usage_error_exit_2():
    assert run_cli("gen-odd").returncode == 2          # missing --n
    assert run_cli("no-such-command").returncode == 2
    assert run_cli("scan", "--n", "5", "--probe", "10").returncode == 2  # no --seed


@needs_cli
def test_cli_chi_stdin():
    done = run_cli("chi", "-", stdin="5:0>1,1>2,2>3,3>4,4>0")
    assert done.returncode == 0
    assert "chi_o = 5" in done.stdout


@needs_cli
def test_cli_circulant_check():
    done = run_cli("circulant", "check", "--n", "5", "--set", "1")
    assert done.returncode == 0
    assert "deeply critical clique: true" in done.stdout
    done = run_cli("circulant", "check", "--n", "7", "--set", "1,2")
    assert done.returncode == 1
    done = run_cli("circulant", "check", "--n", "6", "--set", "3")
    assert done.returncode == 2  # invalid set, not a verdict


@needs_cli
def test_cli_json():
    import json

    done = run_cli("check", "-", "--json", stdin="5:0>1,1>2,2>3,3>4,4>0")
    assert done.returncode == 0
    payload = json.loads(done.stdout)
    assert payload["deeply_critical_clique"] is True
    done = run_cli("scan", "--n", "4", "--json", "--no-checkpoint")
    payload = json.loads(done.stdout)
    assert payload["generated"] == 42
    assert payload["dcoc"] == 0
