"""Digit-producing engine for (a/a')*v1 + (b/b')*v2 + c/c' on [0, 1].

The engine holds six non-negative integer coefficients (denominators
strictly positive) and two input digit streams, and alternates two kinds
of step:

* production: when the coefficients alone prove the value sits in the
  left, right or centered half of the current interval, emit that digit
  and rescale the state so it denotes the value relative to the emitted
  sub-interval;
* consumption: otherwise read one digit from each input, fold those
  digits into the constant term, and double both input denominators.

Writing V = (a/a')p + (b/b')q + c/c' for input values p, q in [0, 1],
the production tests are, in priority order:

* R  when c/c' >= 1/2           (then V >= 1/2);
* L  when V's upper bound a/a' + b/b' + c/c' <= 1/2;
* C  when the upper bound is <= 3/4 and c/c' >= 1/4
  (then 1/4 <= V <= 3/4).

When all three fail, a/a' > 1/8 or b/b' > 1/8 must hold, so the measure
``f(a, a') + f(b, b')`` (f counts the denominator doublings needed to
reach q >= 8p) is positive, and it strictly drops on every consumption.
Consumption runs are therefore finite and the output stream productive,
for any positive-coefficient state.

All tests and rewrites are exact integer arithmetic; nothing here touches
floating point.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Tuple

from .digits import Digit
from .errors import DomainError
from .streams import Stream, unfold

__all__ = [
    "AffineData",
    "Decision",
    "positive_coefficients",
    "state_value",
    "state_bounds",
    "decide",
    "prod_R",
    "prod_L",
    "prod_C",
    "consume",
    "measure",
    "normalize",
    "production_step",
    "engine_states",
    "produce_stream",
]


@dataclass(frozen=True)
class AffineData:
    """Engine state: coefficients of (a/a_den)*v1 + (b/b_den)*v2 + c/c_den.

    Construction enforces the sign discipline the step functions rely on:
    numerators non-negative, denominators strictly positive.
    """

    a: int
    a_den: int
    b: int
    b_den: int
    c: int
    c_den: int
    v1: Stream
    v2: Stream

    def __post_init__(self):
        if not (self.a >= 0 and self.b >= 0 and self.c >= 0):
            raise DomainError("coefficient numerators must be non-negative: %s" % (self.coefficients,))
        if not (self.a_den > 0 and self.b_den > 0 and self.c_den > 0):
            raise DomainError("coefficient denominators must be positive: %s" % (self.coefficients,))

    @property
    def coefficients(self) -> Tuple[int, int, int, int, int, int]:
        return (self.a, self.a_den, self.b, self.b_den, self.c, self.c_den)

    def with_coefficients(self, a, a_den, b, b_den, c, c_den) -> "AffineData":
        return AffineData(a, a_den, b, b_den, c, c_den, self.v1, self.v2)

    def __repr__(self):
        return "AffineData(%d/%d, %d/%d, %d/%d)" % self.coefficients


class Decision(Enum):
    """Outcome of the production test on a state."""

    EMIT_R = "R"
    EMIT_L = "L"
    EMIT_C = "C"
    CONSUME = "consume"


def positive_coefficients(x: AffineData) -> bool:
    a, a_den, b, b_den, c, c_den = x.coefficients
    return a >= 0 and b >= 0 and c >= 0 and a_den > 0 and b_den > 0 and c_den > 0


def state_value(x: AffineData, p: Fraction, q: Fraction) -> Fraction:
    """Exact value of the state at input values p and q (the test oracle)."""
    return (
        Fraction(x.a, x.a_den) * p
        + Fraction(x.b, x.b_den) * q
        + Fraction(x.c, x.c_den)
    )


def state_bounds(x: AffineData) -> Tuple[Fraction, Fraction]:
    """Range of the state value over all inputs p, q in [0, 1]."""
    lo = Fraction(x.c, x.c_den)
    hi = Fraction(x.a, x.a_den) + Fraction(x.b, x.b_den) + lo
    return lo, hi


def decide(x: AffineData) -> Decision:
    """Which digit the coefficients justify emitting, if any.

    Tests R, then L, then C, then falls back to consumption. The tests
    overlap (a state can pass both L and C); the fixed order makes the
    output deterministic. All three are scale-invariant in each
    coefficient pair, so ``decide`` commutes with ``normalize``.
    """
    a, a_den, b, b_den, c, c_den = x.coefficients
    if c_den <= 2 * c:
        return Decision.EMIT_R
    weighted = a * b_den * c_den + b * a_den * c_den + a_den * b_den * c
    den_prod = a_den * b_den * c_den
    if 2 * weighted <= den_prod:
        return Decision.EMIT_L
    if 4 * weighted <= 3 * den_prod and c_den <= 4 * c:
        return Decision.EMIT_C
    return Decision.CONSUME


def prod_R(x: AffineData) -> AffineData:
    """Rescale after emitting R: V' = 2V - 1. Requires c_den <= 2c."""
    if x.c_den > 2 * x.c:
        raise DomainError("prod_R needs c_den <= 2c, got c=%d c_den=%d" % (x.c, x.c_den))
    return x.with_coefficients(
        2 * x.a, x.a_den, 2 * x.b, x.b_den, 2 * x.c - x.c_den, x.c_den
    )


def prod_L(x: AffineData) -> AffineData:
    """Rescale after emitting L: V' = 2V."""
    return x.with_coefficients(2 * x.a, x.a_den, 2 * x.b, x.b_den, 2 * x.c, x.c_den)


def prod_C(x: AffineData) -> AffineData:
    """Rescale after emitting C: V' = 2V - 1/2. Requires c_den <= 4c."""
    if x.c_den > 4 * x.c:
        raise DomainError("prod_C needs c_den <= 4c, got c=%d c_den=%d" % (x.c, x.c_den))
    return x.with_coefficients(
        2 * x.a, x.a_den, 2 * x.b, x.b_den, 4 * x.c - x.c_den, 2 * x.c_den
    )


def _carry(d1: Digit, d2: Digit, a, a_den, b, b_den, c, c_den):
    """New constant term after absorbing one digit from each input.

    Each row restates V = (a/a')p + (b/b')q + c/c' in terms of the tail
    values p', q', where reading digit d turns p into emit_value(d, p'):
    L contributes nothing, R adds the half-step a/(2a') (resp. b/(2b')),
    C adds the quarter-step a/(4a') (resp. b/(4b')).
    """
    match d1, d2:
        case Digit.L, Digit.L:
            return c, c_den
        case Digit.L, Digit.R:
            return b * c_den + 2 * c * b_den, 2 * b_den * c_den
        case Digit.R, Digit.L:
            return a * c_den + 2 * c * a_den, 2 * a_den * c_den
        case Digit.L, Digit.C:
            return b * c_den + 4 * c * b_den, 4 * b_den * c_den
        case Digit.C, Digit.L:
            return a * c_den + 4 * c * a_den, 4 * a_den * c_den
        case Digit.R, Digit.C:
            return (
                2 * a * b_den * c_den + b * a_den * c_den + 4 * c * a_den * b_den,
                4 * a_den * b_den * c_den,
            )
        case Digit.C, Digit.R:
            return (
                2 * b * a_den * c_den + a * b_den * c_den + 4 * c * b_den * a_den,
                4 * b_den * a_den * c_den,
            )
        case Digit.R, Digit.R:
            return (
                a * b_den * c_den + b * a_den * c_den + 2 * c * a_den * b_den,
                2 * a_den * b_den * c_den,
            )
        case Digit.C, Digit.C:
            return (
                b * a_den * c_den + a * b_den * c_den + 4 * c * b_den * a_den,
                4 * b_den * a_den * c_den,
            )
    raise TypeError("digit pair expected, got %r, %r" % (d1, d2))


def consume(x: AffineData) -> AffineData:
    """Read one digit from each input and fold both into the constant term.

    Both input denominators double; the tails become the new inputs. The
    rewrite satisfies, for all tail values p', q' in [0, 1]:

        state_value(consume(x), p', q')
            == state_value(x, emit_value(d1, p'), emit_value(d2, q'))
    """
    d1, t1 = x.v1.force()
    d2, t2 = x.v2.force()
    a, a_den, b, b_den, c, c_den = x.coefficients
    c1, c1_den = _carry(d1, d2, a, a_den, b, b_den, c, c_den)
    return AffineData(a, 2 * a_den, b, 2 * b_den, c1, c1_den, t1, t2)


def _doublings_to_dominate(p: int, q: int) -> int:
    """Smallest n >= 0 with (2**n) * q >= 8 * p."""
    n = 0
    target = 8 * p
    while (q << n) < target:
        n += 1
    return n


def measure(x: AffineData) -> int:
    """Termination measure: total doublings until both ratios are <= 1/8.

    Positive whenever ``decide`` says consume, strictly decreasing under
    ``consume`` (which doubles both denominators), and zero only on
    states where some production test holds. Scale-invariant per pair,
    so normalization never disturbs it.
    """
    return _doublings_to_dominate(x.a, x.a_den) + _doublings_to_dominate(x.b, x.b_den)


def normalize(x: AffineData) -> AffineData:
    """Divide each coefficient pair by its gcd; value and decisions unchanged.

    Without this, coefficient bit-length grows linearly with output depth.
    """
    a, a_den, b, b_den, c, c_den = x.coefficients
    ga = gcd(a, a_den) or 1
    gb = gcd(b, b_den) or 1
    gc = gcd(c, c_den) or 1
    return x.with_coefficients(a // ga, a_den // ga, b // gb, b_den // gb, c // gc, c_den // gc)


_PRODUCERS = {
    Decision.EMIT_R: (Digit.R, prod_R),
    Decision.EMIT_L: (Digit.L, prod_L),
    Decision.EMIT_C: (Digit.C, prod_C),
}


def engine_states(x: AffineData, normalize_steps: bool = True) -> Iterator[Tuple[Optional[Digit], AffineData]]:
    """Every engine step from ``x`` on: ``(emitted digit or None, state)``.

    Consumption steps yield None. Infinite; mainly for tests and
    diagnostics that need to watch coefficients evolve.
    """
    if normalize_steps:
        x = normalize(x)
    while True:
        decision = decide(x)
        if decision is Decision.CONSUME:
            emitted = None
            x = consume(x)
        else:
            emitted, producer = _PRODUCERS[decision]
            x = producer(x)
        if normalize_steps:
            x = normalize(x)
        yield emitted, x


def production_step(x: AffineData, normalize_steps: bool = True) -> Tuple[Digit, AffineData]:
    """Run consumptions until a digit comes out; at most measure(x) of them."""
    for emitted, state in engine_states(x, normalize_steps):
        if emitted is not None:
            return emitted, state
    raise AssertionError("unreachable: engine_states is infinite")


def produce_stream(x: AffineData, normalize_steps: bool = True) -> Stream:
    """The digit stream of the state's value, produced lazily.

    Productive for every positive-coefficient state. The digits denote
    the actual value only when that value lies in [0, 1] (and the input
    streams denote values in [0, 1]); the stream is well defined but
    meaningless otherwise. Callers wanting the checked guarantee go
    through the real-number layer.
    """
    seed = normalize(x) if normalize_steps else x
    return unfold(lambda state: production_step(state, normalize_steps), seed)
