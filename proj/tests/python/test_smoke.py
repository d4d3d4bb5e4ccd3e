import json
import os
import subprocess

import pytest

import liecheck


def test_registry_order():
    names = liecheck.registry()
    assert names[0] == "axioms" and names[-1] == "dump-sc"
    assert len(names) == 16


def test_root_system_counts():
    rs = liecheck.RootSystem("C", 3)
    assert len(rs) == 18
    assert rs.num_positive == 9
    top = rs.highest_root
    assert rs.coords(top) == [2, 0, 0]
    assert rs.is_long(top)
    assert sum(rs.is_long(i) for i in range(len(rs))) == 6


def test_bracket_matches_structure_constants():
    a = liecheck.Algebra("C", 2, 5)
    rs = a.root_system
    for x in range(len(rs)):
        for y in range(len(rs)):
            n = a.structure_constant(x, y)
            ex = [0] * a.dim
            ey = [0] * a.dim
            ex[a.root_basis(x)] = 1
            ey[a.root_basis(y)] = 1
            br = a.bracket(ex, ey)
            assert br == [-c % 5 for c in a.bracket(ey, ex)]
            if n:
                s = [u + v for u, v in zip(rs.coords(x), rs.coords(y))]
                assert br[a.root_basis(rs.index_of(s))] == n % 5


def test_long_root_cone_size():
    a = liecheck.Algebra("C", 2, 3)
    assert len(a.cone()) == 3**4


def test_p_power_of_root_vector_vanishes():
    a = liecheck.Algebra("A", 2, 3)
    x = [0] * a.dim
    x[a.root_basis(0)] = 1
    assert a.p_power(x) == [0] * a.dim


def test_run_report_fields():
    r = liecheck.run("kraft-wallach", rank=2, p=3)
    assert r["status"] == "pass"
    assert r["counts"]["nonzero_values"] == 0
    assert {"claim", "params", "seed", "version", "elapsed_ms", "witnesses"} <= set(r)


def test_run_is_deterministic():
    a = liecheck.run("lemma32", samples=10, seed=5)
    b = liecheck.run("lemma32", samples=10, seed=5)
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_usage_and_resource_errors():
    with pytest.raises(liecheck.UsageError):
        liecheck.run("no-such-scenario")
    with pytest.raises(liecheck.UsageError):
        liecheck.run("kraft-wallach", type="A", rank=2)
    with pytest.raises(liecheck.ResourceError):
        liecheck.run("freeness-heisenberg", rank=3, p=5)


@pytest.mark.skipif("LIECHECK_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_bindings():
    out = subprocess.run(
        [os.environ["LIECHECK_CLI"], "run", "heisenberg", "--seed", "9"], capture_output=True, text=True, check=True
    ).stdout
    cli = json.loads(out)
    py = liecheck.run("heisenberg", seed=9)
    cli.pop("elapsed_ms")
    py.pop("elapsed_ms")
    assert cli == py
