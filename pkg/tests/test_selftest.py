import random

from radsup.selftest import (
    all_multidegrees,
    iter_supports,
    random_radical_support,
    random_support,
    run_all,
    suite_polarized_dual_exhaustive,
)
from radsup.support import is_radical_support


def test_all_multidegrees_count():
    assert len(all_multidegrees(4)) == 15
    assert len(all_multidegrees(2)) == 3


def test_corpus_size():
    # multisets of at most 4 of the 15 non-empty subsets of {1..4}
    assert sum(1 for _ in iter_supports(4, 4)) == 15 + 120 + 680 + 3060


def test_random_radical_sampler_is_radical_and_bounded():
    for idx in range(50):
        rng = random.Random(f"sampler:{idx}")
        support = random_radical_support(rng, 5, 6, max_generator_product=14)
        assert is_radical_support(support).is_radical_support
        prod = 1
        for a in support.sets:
            prod *= len(a)
        assert prod <= 14
        assert support.s <= 5 and support.n <= 6


def test_random_support_sampler_bounds():
    for idx in range(20):
        support = random_support(random.Random(idx), 6, 6)
        assert 1 <= support.s <= 6 and 1 <= support.n <= 6


def test_polarized_dual_suite_counts_antichains():
    result = suite_polarized_dual_exhaustive()
    assert result.passed
    assert result.cases == 20  # antichains of the 3x3 exponent grid


def test_run_all_small_smoke():
    results = run_all(max_s=2, max_n=2, seed=1, trials=2)
    assert all(r.passed for r in results)
    names = [r.name for r in results]
    assert "oracle-equivalence" in names and "radical-trials" in names
