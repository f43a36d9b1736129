"""Arbitrary-precision interval scalars with certified outward rounding.

A :class:`BigReal` is an interval [lo, hi] whose endpoints are dyadic
fixed-point numbers lo/2**bits and hi/2**bits stored as Python integers.
Every operation rounds the lower endpoint down and the upper endpoint up, so
the true real value of any expression is guaranteed to stay inside the
returned interval.  That containment is what lets a floor be *certified*
rather than guessed: if both endpoints share the same integer part, the floor
of the enclosed real number is known exactly.

pi comes from the Machin identity pi = 16 arctan(1/5) - 4 arctan(1/239) and
arctangents from the alternating Taylor series, whose remainder is bounded by
the first omitted term.
"""

from __future__ import annotations

_GUARD_BITS = 48


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class BigReal:
    __slots__ = ("lo", "hi", "bits")

    def __init__(self, lo: int, hi: int, bits: int):
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        if bits <= 0:
            raise ValueError("precision must be positive")
        self.lo = lo
        self.hi = hi
        self.bits = bits

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, value: int, bits: int) -> "BigReal":
        return cls(value << bits, value << bits, bits)

    @classmethod
    def from_fraction(cls, num: int, den: int, bits: int) -> "BigReal":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        scaled = num << bits
        return cls(scaled // den, _ceil_div(scaled, den), bits)

    # -- helpers -----------------------------------------------------------

    def _require_same_precision(self, other: "BigReal") -> None:
        if self.bits != other.bits:
            raise ValueError("mixed-precision interval arithmetic")

    def round_to(self, bits: int) -> "BigReal":
        if bits == self.bits:
            return self
        if bits < self.bits:
            shift = self.bits - bits
            return BigReal(self.lo >> shift, _ceil_div(self.hi, 1 << shift), bits)
        shift = bits - self.bits
        return BigReal(self.lo << shift, self.hi << shift, bits)

    def width(self) -> float:
        return (self.hi - self.lo) / (1 << self.bits)

    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2 / (1 << self.bits)

    def contains(self, other: "BigReal") -> bool:
        """True if ``other`` (any precision) lies inside this interval."""
        # compare lo/2^a <= olo/2^b via cross-multiplication
        a, b = self.bits, other.bits
        return (self.lo << b) <= (other.lo << a) and (other.hi << a) <= (self.hi << b)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "BigReal") -> "BigReal":
        self._require_same_precision(other)
        return BigReal(self.lo + other.lo, self.hi + other.hi, self.bits)

    def __sub__(self, other: "BigReal") -> "BigReal":
        self._require_same_precision(other)
        return BigReal(self.lo - other.hi, self.hi - other.lo, self.bits)

    def __mul__(self, other: "BigReal") -> "BigReal":
        self._require_same_precision(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        scale = 1 << self.bits
        return BigReal(min(products) // scale, _ceil_div(max(products), scale), self.bits)

    def scale_int(self, k: int) -> "BigReal":
        """Exact multiplication by an integer."""
        if k >= 0:
            return BigReal(self.lo * k, self.hi * k, self.bits)
        return BigReal(self.hi * k, self.lo * k, self.bits)

    def divide(self, other: "BigReal") -> "BigReal":
        self._require_same_precision(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        quotients = []
        for a in (self.lo, self.hi):
            for b in (other.lo, other.hi):
                scaled = a << self.bits
                quotients.append(scaled // b)
                quotients.append(_ceil_div(scaled, b))
        return BigReal(min(quotients), max(quotients), self.bits)

    # -- certified queries ----------------------------------------------------

    def floor_certified(self):
        """Floor of the enclosed real number, or None if the interval straddles
        an integer boundary and the floor cannot be certified at this precision."""
        lo_floor = self.lo >> self.bits
        hi_floor = self.hi >> self.bits
        return int(lo_floor) if lo_floor == hi_floor else None

    # -- transcendental constants ----------------------------------------------

    @classmethod
    def atan_fraction(cls, num: int, den: int, bits: int) -> "BigReal":
        """arctan(num/den) for 0 <= num/den < 1.

        Alternating series x - x^3/3 + x^5/5 - ...; the truncation error is
        bounded by the first omitted term, and every partial operation rounds
        outward, so the result interval rigorously contains arctan(num/den).
        """
        if num == 0:
            return cls.from_int(0, bits)
        if num < 0 or den <= 0 or num >= den:
            raise ValueError("atan_fraction requires 0 <= num/den < 1")
        work = bits + _GUARD_BITS
        mag_lo = (num << work) // den
        mag_hi = _ceil_div(num << work, den)
        num2, den2 = num * num, den * den
        total_lo = total_hi = 0
        k = 0
        while True:
            d = 2 * k + 1
            term_lo = mag_lo // d
            term_hi = _ceil_div(mag_hi, d)
            if k % 2 == 0:
                total_lo += term_lo
                total_hi += term_hi
            else:
                total_lo -= term_hi
                total_hi -= term_lo
            mag_lo = (mag_lo * num2) // den2
            mag_hi = _ceil_div(mag_hi * num2, den2)
            k += 1
            if _ceil_div(mag_hi, 2 * k + 1) <= 1:
                # remainder no larger than one working-scale ulp either way
                total_lo -= 2
                total_hi += 2
                break
        return cls(total_lo, total_hi, work).round_to(bits)

    @classmethod
    def pi(cls, bits: int) -> "BigReal":
        """pi = 16 arctan(1/5) - 4 arctan(1/239), certified."""
        work = bits + _GUARD_BITS
        a = cls.atan_fraction(1, 5, work)
        b = cls.atan_fraction(1, 239, work)
        return (a.scale_int(16) - b.scale_int(4)).round_to(bits)

    def __repr__(self):
        return f"BigReal([{self.lo}, {self.hi}] / 2**{self.bits})"
