"""Brute-force verification oracles, independent of every closed form.

Nothing here consults the formulas in :mod:`quasiaffine.periodic` or the
classification in :mod:`quasiaffine.omega` (except in
:func:`cross_check`, whose whole job is to compare the two routes). The
oracles only ever apply the map itself: windowed enumeration for
periodic points, plain orbit iteration with pattern detection for limit
sets, and a bounded search refuting cycles of length >= 3.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .core import Params, Rational, RationalLike, as_rational, ceil_rat, eval_map, integer_step
from .omega import OmegaLimit, omega_limit
from .periodic import fixed_points, two_cycles

DEFAULT_MAX_STEPS = 512
DEFAULT_ESCAPE_BOUND = 10**9


@dataclass(frozen=True)
class Window:
    """An inclusive integer window [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("window requires lo <= hi")

    def members(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of a verification pass. A disagreement always says what
    mismatched (parameters, point, expected vs found); an agreement may
    still note points the check had to skip."""

    agrees: bool
    detail: str = ""

    def __post_init__(self) -> None:
        if not self.agrees and not self.detail:
            raise ValueError("a disagreement must describe the mismatch")

    def to_json(self) -> dict:
        return {"agrees": self.agrees, "detail": self.detail}


@dataclass(frozen=True)
class Unresolved:
    """Budget exhausted before any orbit pattern emerged. A value, not an
    error: tests treat it as their failure signal."""


UNRESOLVED = Unresolved()

BruteOmega = Union[OmegaLimit, Unresolved]


def brute_fixed_points(p: Params, w: Window) -> list[int]:
    """All z in the window with f(z) = z, by direct scan (f maps into Z,
    so no fixed point inside the window can be missed)."""
    step = integer_step(p)
    return [z for z in w.members() if step(z) == z]


def brute_two_cycles(p: Params, w: Window) -> list[tuple[int, int]]:
    """All pairs {z, f(z)} with both members in the window, f(z) != z and
    f(f(z)) = z, canonically ordered."""
    lo, hi = w.lo, w.hi
    step = integer_step(p)
    image = [step(z) for z in w.members()]
    pairs = []
    for z in w.members():
        y = image[z - lo]
        if z < y <= hi and image[y - lo] == z:
            pairs.append((z, y))
    return pairs


def brute_omega(
    p: Params,
    x: RationalLike,
    max_steps: int = DEFAULT_MAX_STEPS,
    escape_bound: int = DEFAULT_ESCAPE_BOUND,
) -> BruteOmega:
    """Estimate the limit set by iterating the integer tail.

    Detects eventual constancy (Fixed), period-2 alternation (TwoCycle),
    a monotone exit with two consecutive iterates beyond +-escape_bound
    (PlusInfinity / MinusInfinity), and an alternating-sign exit
    (PlusMinusInfinity). Anything else within max_steps is UNRESOLVED.
    """
    if max_steps < 2:
        raise ValueError("max_steps must be >= 2")
    step = integer_step(p)
    before: int | None = None
    prev = eval_map(p, as_rational(x))
    cur = step(prev)
    for _ in range(max_steps - 1):
        if cur == prev:
            return OmegaLimit.fixed(cur)
        if before is not None and cur == before:
            return OmegaLimit.two_cycle(min(prev, cur), max(prev, cur))
        if abs(prev) > escape_bound and abs(cur) > escape_bound:
            if prev > 0 and cur > prev:
                return OmegaLimit.plus_inf()
            if prev < 0 and cur < prev:
                return OmegaLimit.minus_inf()
            if (prev > 0) != (cur > 0):
                return OmegaLimit.plus_minus_inf()
        before, prev, cur = prev, cur, step(cur)
    return UNRESOLVED


def check_no_long_cycles(p: Params, w: Window, n_max: int) -> OracleVerdict:
    """Search the window for a point of minimal period 3..n_max; finding
    one falsifies the no-long-cycles claim.

    Orbits are followed inside a padded window [lo - P, hi + P] with
    P = ceil((|lam| + 1)*(hi - lo)); a point whose orbit leaves the
    padding is skipped and counted in the verdict detail as unchecked.
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    pad = ceil_rat((abs(p.lam) + 1) * (w.hi - w.lo))
    lo, hi = w.lo - pad, w.hi + pad
    step = integer_step(p)
    unchecked = 0
    for z in w.members():
        v = z
        for m in range(1, n_max + 1):
            v = step(v)
            if v < lo or v > hi:
                unchecked += 1
                break
            if v == z:
                if m >= 3:
                    return OracleVerdict(
                        False,
                        f"lambda={p.lam} mu={p.mu}: z={z} has minimal period {m}",
                    )
                break
    detail = ""
    if unchecked:
        detail = f"unchecked: {unchecked} points left the padded window [{lo}, {hi}]"
    return OracleVerdict(True, detail)


def cross_check(
    p: Params,
    w: Window,
    samples: Sequence[RationalLike],
    max_steps: int = DEFAULT_MAX_STEPS,
    escape_bound: int = DEFAULT_ESCAPE_BOUND,
) -> OracleVerdict:
    """Compare every closed form against brute force on one parameter pair.

    Fixed points and 2-cycles are compared window-clipped and exactly.
    For each sample x the classification must match the iterated verdict;
    an UNRESOLVED brute verdict is accepted only when the classification
    says the orbit escapes (the one situation a finite budget cannot
    certify).
    """
    got = fixed_points(p).clip(w.lo, w.hi)
    want = brute_fixed_points(p, w)
    if got != want:
        return OracleVerdict(
            False,
            f"lambda={p.lam} mu={p.mu}: fixed points {got} != brute {want} on [{w.lo}, {w.hi}]",
        )
    got_pairs = list(two_cycles(p).clip(w.lo, w.hi))
    want_pairs = brute_two_cycles(p, w)
    if got_pairs != want_pairs:
        return OracleVerdict(
            False,
            f"lambda={p.lam} mu={p.mu}: 2-cycles {got_pairs} != brute {want_pairs} on [{w.lo}, {w.hi}]",
        )
    for raw in samples:
        x = as_rational(raw)
        claimed = omega_limit(p, x)
        observed = brute_omega(p, x, max_steps, escape_bound)
        if isinstance(observed, Unresolved):
            if not claimed.is_escape:
                return OracleVerdict(
                    False,
                    f"lambda={p.lam} mu={p.mu} x={x}: claimed {claimed.kind} "
                    f"but iteration was unresolved after {max_steps} steps",
                )
        elif claimed != observed:
            return OracleVerdict(
                False,
                f"lambda={p.lam} mu={p.mu} x={x}: claimed {claimed.to_json()} "
                f"!= observed {observed.to_json()}",
            )
    return OracleVerdict(True, "")


def random_rational(rng: random.Random, lo: int, hi: int, max_den: int = 64) -> Rational:
    """Seeded rational sample in [lo, hi]: a denominator up to max_den,
    then a numerator spanning the window at that resolution."""
    if lo > hi:
        raise ValueError("sample window requires lo <= hi")
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * d, hi * d), d)
