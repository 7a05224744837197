"""User-facing exact reals on [0, 1].

An ``ExactReal`` wraps an infinite digit stream. Every query is a finite
refinement: asking for depth n yields an interval of width exactly 2**-n
guaranteed to contain the value. Nothing here can decide equality of two
reals; ``compare`` bounds its search and says so when it gives up.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .digits import Digit, Interval, digits_to_str, prefix_interval, refine
from .engine import AffineData, produce_stream
from .errors import DomainError
from .streams import Stream, take, unfold

__all__ = [
    "ExactReal",
    "LESS",
    "GREATER",
    "Indistinguishable",
    "from_rational",
    "average",
    "affine",
    "compare",
]


class ExactReal:
    """A real number in [0, 1] as a lazy digit stream.

    Well-formed instances denote the single point in the intersection of
    their prefix intervals; that the value lies in [0, 1] is a promise of
    the constructor used, not something checkable from the stream.
    """

    __slots__ = ("digits",)

    def __init__(self, digits: Stream):
        self.digits = digits

    def to_interval(self, depth: int) -> Interval:
        """Enclosing interval after ``depth`` digits; width is 2**-depth."""
        return prefix_interval(take(self.digits, depth))

    def digit_string(self, count: int) -> str:
        """The first ``count`` digits as text like "LRLR"."""
        return digits_to_str(take(self.digits, count))

    def to_decimal(self, places: int) -> str:
        """Decimal rendering within 10**-places of the true value.

        Expands enough digits that the interval midpoint is pinned to a
        quarter of the requested precision, then rounds half-up. Not
        correctly rounded (that is undecidable at representation
        boundaries); the error bound is the contract.
        """
        if places < 1:
            raise ValueError("to_decimal: places must be >= 1")
        scale = 10 ** places
        depth = scale.bit_length() + 2
        mid = self.to_interval(depth).midpoint
        units = math.floor(mid * scale + Fraction(1, 2))
        return "%d.%0*d" % (units // scale, places, units % scale)

    def __repr__(self):
        return "ExactReal(%s...)" % self.digit_string(8)


def from_rational(r: Fraction) -> ExactReal:
    """Exact representation of a rational in [0, 1].

    Long division by halving: with numerator state a over fixed
    denominator b, emit L and double a while 2a <= b, else emit R and
    continue with 2a - b. Only L and R digits ever appear.
    """
    r = Fraction(r)
    if r < 0 or r > 1:
        raise DomainError("from_rational needs a value in [0, 1], got %s" % r)
    b = r.denominator

    def halve(a):
        doubled = 2 * a
        if doubled <= b:
            return Digit.L, doubled
        return Digit.R, doubled - b

    return ExactReal(unfold(halve, r.numerator))


def average(x: ExactReal, y: ExactReal) -> ExactReal:
    """Midpoint of two reals; always lands back in [0, 1]."""
    return affine(Fraction(1, 2), Fraction(1, 2), Fraction(0), x, y)


def affine(
    ca: Fraction,
    cb: Fraction,
    cc: Fraction,
    x: ExactReal,
    y: ExactReal,
    checked: bool = True,
) -> ExactReal:
    """The combination ca*x + cb*y + cc as an exact real.

    Coefficients must be non-negative rationals. In checked mode,
    ca + cb + cc <= 1 is required, which guarantees the result stays in
    [0, 1] whatever the inputs. Unchecked mode drops that guard; the
    caller then promises the true value is in [0, 1], and gets a
    meaningless digit stream if the promise is broken.
    """
    ca, cb, cc = Fraction(ca), Fraction(cb), Fraction(cc)
    if ca < 0 or cb < 0 or cc < 0:
        raise DomainError("affine coefficients must be non-negative")
    if checked and ca + cb + cc > 1:
        raise DomainError(
            "checked affine needs ca + cb + cc <= 1, got %s" % (ca + cb + cc)
        )
    state = AffineData(
        ca.numerator, ca.denominator,
        cb.numerator, cb.denominator,
        cc.numerator, cc.denominator,
        x.digits, y.digits,
    )
    return ExactReal(produce_stream(state))


#: ``compare`` verdicts: strict orderings, or a bound on how close they are.
LESS = "less"
GREATER = "greater"


@dataclass(frozen=True)
class Indistinguishable:
    """Both intervals still overlap at the search limit.

    ``resolution`` is the interval width reached (2**-max_depth); the two
    values therefore differ by less than twice it. They may or may not be
    equal, and no finite refinement can promote this to equality.
    """

    resolution: Fraction


CompareResult = Union[str, Indistinguishable]


def compare(x: ExactReal, y: ExactReal, max_depth: int) -> CompareResult:
    """Order two reals by refining until their intervals separate.

    Returns LESS or GREATER at the first depth <= max_depth where the
    intervals are disjoint, else Indistinguishable(2**-max_depth). Never
    claims equality; equality of exact reals is undecidable.
    """
    if max_depth < 0:
        raise ValueError("compare: max_depth must be >= 0")
    ix, iy = x.to_interval(0), y.to_interval(0)
    sx, sy = x.digits, y.digits
    for _ in range(max_depth):
        dx, sx = sx.force()
        dy, sy = sy.force()
        ix = refine(ix, dx)
        iy = refine(iy, dy)
        if ix.hi < iy.lo:
            return LESS
        if iy.hi < ix.lo:
            return GREATER
    return Indistinguishable(Fraction(1, 2 ** max_depth))
