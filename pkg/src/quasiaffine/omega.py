"""Exact limit-set classification for f(x) = floor(lam*x + mu).

The limit set of any forward orbit here is one of: a single fixed point,
a 2-cycle, {+inf}, {-inf}, or {-inf, +inf}. For lam >= 0, and for the
central slab when lam < 0, the answer has a closed form in x and the
parameters. The remaining negative-slope starts are settled by an exact
decision procedure on the (monotone non-decreasing) second iterate: its
integer orbit either stops on a periodic point or strictly passes every
periodic point of the map, after which it can never return. No
tolerances, no iteration caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Params, Rational, RationalLike, as_rational, eval_map, floor_rat, integer_step
from .periodic import fixed_points, two_cycles


@dataclass(frozen=True)
class OmegaLimit:
    """Tagged limit set: Fixed(z), TwoCycle(a, b) with a < b, or an escape
    to {+inf}, {-inf}, or {-inf, +inf}."""

    kind: str  # "fixed" | "two_cycle" | "plus_inf" | "minus_inf" | "plus_minus_inf"
    z: int | None = None
    a: int | None = None
    b: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "fixed":
            if self.z is None or self.a is not None or self.b is not None:
                raise ValueError("fixed limit carries exactly z")
        elif self.kind == "two_cycle":
            if self.z is not None or self.a is None or self.b is None or self.a >= self.b:
                raise ValueError("two-cycle limit carries a < b")
        elif self.kind in ("plus_inf", "minus_inf", "plus_minus_inf"):
            if self.z is not None or self.a is not None or self.b is not None:
                raise ValueError(f"{self.kind} carries no payload")
        else:
            raise ValueError(f"unknown limit kind {self.kind!r}")

    @classmethod
    def fixed(cls, z: int) -> OmegaLimit:
        return cls("fixed", z=z)

    @classmethod
    def two_cycle(cls, a: int, b: int) -> OmegaLimit:
        return cls("two_cycle", a=a, b=b)

    @classmethod
    def plus_inf(cls) -> OmegaLimit:
        return cls("plus_inf")

    @classmethod
    def minus_inf(cls) -> OmegaLimit:
        return cls("minus_inf")

    @classmethod
    def plus_minus_inf(cls) -> OmegaLimit:
        return cls("plus_minus_inf")

    @property
    def is_escape(self) -> bool:
        return self.kind in ("plus_inf", "minus_inf", "plus_minus_inf")

    def to_json(self) -> dict:
        if self.kind == "fixed":
            return {"kind": "fixed", "z": self.z}
        if self.kind == "two_cycle":
            return {"kind": "two_cycle", "a": self.a, "b": self.b}
        return {"kind": self.kind}


class CaseTag(Enum):
    """The nine mutually exclusive parameter/threshold regimes of the
    classification; siblings (i)/(ii), (vi)/(vii) and (viii)/(ix) are told
    apart by whether a fixed point exists."""

    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"
    VII = "vii"
    VIII = "viii"
    IX = "ix"

    def to_json(self) -> dict:
        return {"case": self.value}


def floor_affine_fixpoint(p: Params) -> int:
    """floor(mu / (1 - lam)): the floor of the unique fixed point of the
    inducing affine map (lam != 1). For lam < 0 every image of f is this
    value plus a slab index."""
    if p.lam == 1:
        raise ValueError("the affine map has no unique fixed point at lambda = 1")
    return floor_rat(-p.mu / (p.lam - 1))


def interval_bounds(p: Params, n: int) -> tuple[Rational, Rational]:
    """Endpoints (left, right) of the n-th half-open slab (left, right]:
    exactly the points whose image under f is floor_affine_fixpoint(p) + n.
    Requires lam < 0; the slabs tile the whole line, drifting leftward as
    n grows."""
    if p.lam >= 0:
        raise ValueError("slab partition is defined only for lambda < 0")
    base = floor_affine_fixpoint(p) - p.mu
    return (base + n + 1) / p.lam, (base + n) / p.lam


def interval_index(p: Params, x: RationalLike) -> int:
    """Index n of the slab containing x, i.e. f(x) - floor_affine_fixpoint(p).

    Requires lam < 0 (the partition does not exist otherwise).
    """
    if p.lam >= 0:
        raise ValueError("slab partition is defined only for lambda < 0")
    return eval_map(p, x) - floor_affine_fixpoint(p)


def classify_case(p: Params) -> CaseTag:
    """The unique regime tag for (lam, mu), by exact threshold comparisons."""
    lam = p.lam
    has_fix = fixed_points(p).kind != "empty"
    if lam > 1:
        return CaseTag.I if has_fix else CaseTag.II
    if lam == 1:
        return CaseTag.III
    if lam > 0:
        return CaseTag.IV
    if lam == 0:
        return CaseTag.V
    if lam > -1:
        return CaseTag.VI if has_fix else CaseTag.VII
    return CaseTag.VIII if has_fix else CaseTag.IX


def omega_limit(p: Params, x: RationalLike) -> OmegaLimit:
    """Exact limit set of the forward orbit of x.

    Closed-form regimes answer without iteration:

      lam > 1, fixed run [lo, hi] : +inf for x >= (hi + 1 - mu)/lam,
        -inf for x < (lo - mu)/lam, else the orbit lands on Fixed(f(x));
      lam > 1, no fixed point     : +inf iff x >= (floor(-mu/(lam-1)) - mu + 1)/lam;
      lam = 1  : +inf when mu >= 1, -inf when mu < 0, else Fixed(f(x));
      0 < lam < 1 : Fixed at the nearest end of the run, or Fixed(f(x))
        inside the central band;
      lam = 0  : Fixed(floor(mu));
      lam = -1 : the third iterate equals the first, so the limit is
        {floor(mu - x), floor(mu) - floor(mu - x)} (a fixed point when the
        two coincide);
      lam < 0 with a fixed point, x in the central slab : Fixed there.

    Every other negative-slope start is settled by :func:`resolve_negative`.
    """
    x = as_rational(x)
    lam, mu = p.lam, p.mu
    if lam > 1:
        fs = fixed_points(p)
        if fs.kind == "range":
            if x >= (fs.hi + 1 - mu) / lam:
                return OmegaLimit.plus_inf()
            if x < (fs.lo - mu) / lam:
                return OmegaLimit.minus_inf()
            return OmegaLimit.fixed(eval_map(p, x))
        threshold = (floor_rat(-mu / (lam - 1)) - mu + 1) / lam
        return OmegaLimit.plus_inf() if x >= threshold else OmegaLimit.minus_inf()
    if lam == 1:
        if mu >= 1:
            return OmegaLimit.plus_inf()
        if mu < 0:
            return OmegaLimit.minus_inf()
        return OmegaLimit.fixed(eval_map(p, x))
    if lam > 0:
        band_lo = -(mu - 1) / (lam - 1)
        band_hi = -mu / (lam - 1)
        if x <= band_lo:
            return OmegaLimit.fixed(floor_rat(band_lo) + 1)
        if x > band_hi:
            return OmegaLimit.fixed(floor_rat(band_hi))
        return OmegaLimit.fixed(eval_map(p, x))
    if lam == 0:
        return OmegaLimit.fixed(floor_rat(mu))
    if lam == -1:
        first = floor_rat(mu - x)
        second = floor_rat(mu) - first
        if first == second:
            return OmegaLimit.fixed(first)
        return OmegaLimit.two_cycle(min(first, second), max(first, second))
    fs = fixed_points(p)
    if fs.kind == "range":
        left, right = interval_bounds(p, 0)
        if left < x <= right:
            return OmegaLimit.fixed(fs.lo)
    return resolve_negative(p, x)


def resolve_negative(p: Params, x: RationalLike) -> OmegaLimit:
    """Decide the limit set for lam < 0, lam != -1 by exact iteration of the
    second iterate g = f o f on the integer z = f(x).

    g is monotone non-decreasing, so the orbit z, g(z), g(g(z)), ... is
    monotone; its fixed points are precisely the fixed points of f plus
    the members of its 2-cycles, all finitely many here. Hence the orbit
    either stops (f(z) = z gives Fixed, otherwise the pair {z, f(z)} is
    the limiting 2-cycle) or, once it strictly passes every periodic
    point in its direction of travel, can never stop: the even iterates
    run to one infinity and the odd ones to the other. Both outcomes are
    reached in finitely many steps, so no iteration cap is needed.
    """
    lam = p.lam
    if lam >= 0:
        raise ValueError("resolution procedure requires lambda < 0")
    if lam == -1:
        raise ValueError("lambda = -1 is answered in closed form, not by iteration")
    bound = 0
    fs = fixed_points(p)
    if fs.kind == "range":
        bound = max(abs(fs.lo), abs(fs.hi))
    for a, b in two_cycles(p).pairs:
        bound = max(bound, abs(a), abs(b))
    step = integer_step(p)
    z = eval_map(p, x)
    while True:
        w = step(step(z))
        if w == z:
            fz = step(z)
            if fz == z:
                return OmegaLimit.fixed(z)
            return OmegaLimit.two_cycle(min(z, fz), max(z, fz))
        if (w > z and w > bound) or (w < z and w < -bound):
            return OmegaLimit.plus_minus_inf()
        z = w
