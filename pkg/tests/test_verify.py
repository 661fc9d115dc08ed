import time

from gcob import verify


def test_quick_level_is_fast_and_green():
    t = time.perf_counter()
    results = verify.run("quick")
    assert time.perf_counter() - t < 10
    assert verify.passed(results), [c.line() for c in results if not c.passed]


def test_full_level():
    results = verify.run("full")
    assert verify.passed(results), [c.line() for c in results if not c.passed]
    diag = [c for c in results if not c.blocking]
    assert len(diag) == 1 and "r2 = 2" in diag[0].detail
