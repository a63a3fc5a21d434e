import threading

import pytest
from hypothesis import given, strategies as st

from pascalsums import core
from pascalsums.core import CellIndex, TriangleCache, binomial, fibonacci, pow2, row

from oracles import binom, fib, pascal_rows


@pytest.mark.parametrize(
    "n, k, expected",
    [(5, 2, 10), (7, 0, 1), (4, 7, 0), (30, 15, 155117520)],
)
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n, k", [(-1, 0), (-3, -1), (3, -1), (0, 1), (-2, -2)])
def test_binomial_zero_convention(n, k):
    assert binomial(n, k) == 0


def test_row_examples():
    assert list(row(0)) == [1]
    assert list(row(5)) == [1, 5, 10, 10, 5, 1]
    assert list(row(8)) == pascal_rows(8)[8]


def test_negative_arguments_are_usage_errors():
    for fn in (row, fibonacci, pow2):
        with pytest.raises(ValueError):
            fn(-1)


def test_fibonacci_and_pow2():
    assert [fibonacci(n) for n in (0, 1, 6)] == [1, 1, 13]
    assert [pow2(n) for n in (0, 5, 10)] == [1, 32, 1024]
    assert all(fibonacci(n) == fib(n) for n in range(60))


def test_cache_against_multiplicative_formula():
    for n in range(0, 201):
        r = row(n)
        assert len(r) == n + 1
        for k in range(n + 1):
            assert r[k] == binom(n, k)


def test_recurrence_symmetry_and_row_sums():
    for n in range(0, 201):
        assert sum(row(n)) == pow2(n)
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n, n - k)
            if n >= 1:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(-50, 400), st.integers(-50, 400))
def test_binomial_matches_oracle_everywhere(n, k):
    assert binomial(n, k) == binom(n, k)


def test_cell_index():
    assert CellIndex(5, 2).in_triangle
    assert not CellIndex(2, 5).in_triangle
    assert not CellIndex(-1, 0).in_triangle
    assert binomial(*CellIndex(5, 2)) == 10


def test_cache_is_append_only():
    cache = TriangleCache()
    cache.extend_to(10)
    published = cache.rows[7]
    cache.extend_to(50)
    assert cache.rows[7] is published
    assert isinstance(published, tuple)
    assert cache.high_water == 50
    cache.extend_to(20)
    assert cache.high_water == 50


def test_presized_cache():
    assert TriangleCache(presize=30).high_water == 30


def test_concurrent_readers_and_writers_agree():
    cache = TriangleCache()
    errors = []

    def work(offset):
        try:
            for n in range(offset, 300, 7):
                assert cache.binomial(n, n // 2) == binom(n, n // 2)
        except AssertionError as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(7)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert [len(r) for r in cache.rows] == list(range(1, len(cache.rows) + 1))


def test_module_presize():
    core.presize_cache(40)
    assert core.default_cache().high_water >= 40
