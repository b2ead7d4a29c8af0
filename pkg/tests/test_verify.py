import pytest

from snstab import verify
from snstab.config import RunConfig
from snstab.report import envelope, render, to_jsonable


def small(**kw):
    base = dict(samples=40, boundary_samples=200, trials=20, exhaustive_cap=7, jobs=1)
    base.update(kw)
    return RunConfig(**base)


@pytest.mark.parametrize("name", verify.SUITE_NAMES)
def test_each_suite_passes_small(name):
    (res,) = verify.run(name, small())
    assert res.name == name
    failed = [c.name for c in res.checks if not c.passed]
    assert failed == []
    assert res.checks


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        verify.run("nope", small())


def _doc(results):
    return render(envelope("v", {}, {r.name: r.results for r in results},
                           [c for r in results for c in r.checks]), "json")


def test_parallel_matches_serial():
    cfg1, cfg2 = small(), small(jobs=3)
    assert _doc(verify.run("all", cfg1)) == _doc(verify.run("all", cfg2))


def test_seed_changes_random_results():
    a = verify.run("diaconis", small(seed=1))[0]
    b = verify.run("diaconis", small(seed=2))[0]
    assert to_jsonable(a.results) != to_jsonable(b.results)


def test_cap_limits_work():
    (res,) = verify.run("lemma-h2h3", small(exhaustive_cap=5))
    assert all("n=6" not in c.name and "n=7" not in c.name for c in res.checks)
