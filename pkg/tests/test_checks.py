import json
import random

import pytest

from bhnotation.checks import (PoolSampler, PropertyResult, Report, SUITES, order_suite,
                               psi_suite, run_suite, veblen_suite)
from bhnotation.errors import ResourceError
from bhnotation.terms import BaseOrder, Psi, complexity, validate

from conftest import BASE2, POOL2


def test_property_result_keeps_smallest_examples():
    r = PropertyResult("p")
    for size in (9, 3, 7, 1, 5):
        r.record(False, lambda s=size: f"ex{s}", size)
    r.record(True)
    assert (r.trials, r.failures) == (6, 5)
    assert r.to_json()["counterexamples"] == ["ex1", "ex3", "ex5"]
    assert not r.ok


def test_report_access_and_json():
    rep = Report("demo", info={"seed": 1})
    rep.prop("a").record(True)
    assert rep["a"].trials == 1 and rep.ok
    with pytest.raises(KeyError):
        rep["b"]
    doc = rep.to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert rep.lines()[0] == "suite demo: ok"


def test_sampler_draws_pool_members():
    s = PoolSampler(BASE2, 2, 2)
    rng = random.Random(0)
    pool = set(POOL2)
    for _ in range(500):
        t = s.draw(rng)
        assert validate(t, BASE2) == t
        assert complexity(t) <= 2
        assert t in pool


def test_sampler_psi_terms_exact():
    s = PoolSampler(BASE2, 2, 2)
    assert sorted(map(str, s.psi_terms())) == sorted(str(t) for t in POOL2 if isinstance(t, Psi))


@pytest.mark.parametrize("suite,args", [
    (order_suite, dict(triples=2000)),
    (psi_suite, dict(samples=2000)),
    (veblen_suite, dict(samples=5000)),
])
def test_small_suites_pass(suite, args):
    rep = suite(BaseOrder.finite(1), 1, 1, seed=3, **args)
    assert rep.ok, rep.lines()
    assert all(r.trials > 0 for r in rep.results)


def test_veblen_all_triples_guard():
    rep = veblen_suite(BaseOrder.finite(0), 1, 0)
    assert rep.ok and rep.info["mode"] == "all triples"
    with pytest.raises(ResourceError, match="max_triples"):
        veblen_suite(BASE2, 2, 2, max_triples=10**6)


@pytest.mark.parametrize("name", ["arith-oracle", "fgh", "hf"])
def test_named_suites(name):
    (rep,) = run_suite(name, seed=1, samples=200)
    assert rep.ok, rep.lines()


def test_rank_suite_small():
    (rep,) = run_suite("rank", BaseOrder.finite(2), seed=7, samples=500)
    assert rep.ok, rep.lines()
    names = [r.name for r in rep.results]
    assert "substitution-invariance" in names and "decomposition-rank-decrease" in names


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
    assert "all" not in SUITES
