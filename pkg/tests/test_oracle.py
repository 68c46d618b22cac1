"""Brute-force oracles: enumeration, orbit classification, cycle refutation."""

from __future__ import annotations

import random
from fractions import Fraction as Q

import pytest

from quasiaffine import (
    UNRESOLVED,
    OmegaLimit,
    OracleVerdict,
    Params,
    Unresolved,
    Window,
    brute_fixed_points,
    brute_omega,
    brute_two_cycles,
    check_no_long_cycles,
    cross_check,
    random_rational,
)


@pytest.mark.parametrize(
    "lam, mu, window, expected",
    [
        (Q(3, 2), Q(13, 10), Window(-100, 100), [-2, -1]),
        (Q(1), Q(1, 2), Window(-3, 3), [-3, -2, -1, 0, 1, 2, 3]),
        (Q(5, 2), Q(13, 10), Window(-100, 100), []),
    ],
)
def test_brute_fixed_points_examples(lam, mu, window, expected):
    assert brute_fixed_points(Params(lam, mu), window) == expected


@pytest.mark.parametrize(
    "lam, mu, window, expected",
    [
        (Q(-7, 10), Q(1, 2), Window(-100, 100), [(-1, 1)]),
        (Q(-1), Q(1, 2), Window(-2, 2), [(-2, 2), (-1, 1)]),
        (Q(2), Q(0), Window(-50, 50), []),
    ],
)
def test_brute_two_cycles_examples(lam, mu, window, expected):
    assert brute_two_cycles(Params(lam, mu), window) == expected


@pytest.mark.parametrize(
    "lam, mu, x, expected",
    [
        (Q(3, 2), Q(13, 10), Q(-1, 2), OmegaLimit.plus_inf()),
        (Q(-1), Q(1, 2), Q(5, 2), OmegaLimit.two_cycle(-2, 2)),
        (Q(0), Q(1), Q(-7, 2), OmegaLimit.fixed(1)),
        (Q(-23, 10), Q(-14, 5), Q(0), OmegaLimit.plus_minus_inf()),
        (Q(5, 2), Q(13, 10), Q(-7, 10), OmegaLimit.minus_inf()),
    ],
)
def test_brute_omega_examples(lam, mu, x, expected):
    assert brute_omega(Params(lam, mu), x, max_steps=128, escape_bound=10**6) == expected


def test_brute_omega_unresolved_when_budget_too_small():
    # unit slope with positive drift walks upward by floor(mu) per step:
    # it cannot clear a 10^9 bound within 64 steps
    out = brute_omega(Params(Q(1), Q(2)), Q(0), max_steps=64, escape_bound=10**9)
    assert isinstance(out, Unresolved)
    assert out == UNRESOLVED
    # with a desk-scale bound the same orbit resolves
    assert brute_omega(Params(Q(1), Q(2)), Q(0), max_steps=64, escape_bound=50) == OmegaLimit.plus_inf()


def test_brute_omega_rejects_tiny_budget():
    with pytest.raises(ValueError):
        brute_omega(Params(Q(1), Q(0)), Q(0), max_steps=1)


@pytest.mark.parametrize(
    "lam, mu, window, n_max",
    [
        (Q(-3, 2), Q(7, 10), Window(-200, 200), 6),
        (Q(-1), Q(0), Window(-50, 50), 5),
        (Q(1, 2), Q(0), Window(-10, 10), 3),
    ],
)
def test_check_no_long_cycles_examples(lam, mu, window, n_max):
    assert check_no_long_cycles(Params(lam, mu), window, n_max).agrees


def test_check_no_long_cycles_counts_skipped_points():
    verdict = check_no_long_cycles(Params(Q(-3, 2), Q(7, 10)), Window(-200, 200), 6)
    assert verdict.agrees and "unchecked" in verdict.detail
    # everything stays inside the padding for a contraction
    calm = check_no_long_cycles(Params(Q(1, 2), Q(0)), Window(-10, 10), 3)
    assert calm == OracleVerdict(True, "")


def test_check_no_long_cycles_rejects_small_n_max():
    with pytest.raises(ValueError):
        check_no_long_cycles(Params(Q(1), Q(0)), Window(0, 1), 2)


@pytest.mark.parametrize(
    "lam, mu",
    [
        (Q(3, 2), Q(13, 10)),
        (Q(-7, 10), Q(-1, 2)),
        (Q(-23, 10), Q(-19, 5)),
    ],
)
def test_cross_check_examples(lam, mu):
    samples = [Q(-5, 2), Q(-1, 3), Q(0), Q(7, 5), Q(31, 7)]
    verdict = cross_check(Params(lam, mu), Window(-100, 100), samples)
    assert verdict == OracleVerdict(True, "")


def test_cross_check_over_random_params():
    rng = random.Random(31)
    w = Window(-80, 80)
    for _ in range(60):
        p = Params(Q(rng.randint(-30, 30), rng.randint(1, 10)), Q(rng.randint(-30, 30), rng.randint(1, 10)))
        samples = [random_rational(rng, -40, 40) for _ in range(4)]
        assert cross_check(p, w, samples).agrees


def test_window_validation():
    with pytest.raises(ValueError):
        Window(3, 2)
    assert list(Window(-1, 1).members()) == [-1, 0, 1]


def test_verdict_validation():
    with pytest.raises(ValueError):
        OracleVerdict(False, "")
    assert OracleVerdict(True, "").to_json() == {"agrees": True, "detail": ""}


def test_random_rational_stays_in_window_and_is_seeded():
    rng = random.Random(99)
    xs = [random_rational(rng, -50, 50) for _ in range(200)]
    assert all(-50 <= x <= 50 for x in xs)
    rng2 = random.Random(99)
    assert xs == [random_rational(rng2, -50, 50) for _ in range(200)]
    with pytest.raises(ValueError):
        random_rational(rng, 5, 4)
