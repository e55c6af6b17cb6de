"""Truncated formal power series over a chosen ring.

A TruncatedSeries of order N stores the coefficients of t^0..t^N exactly;
binary operations between series of different orders truncate to the smaller
order, so the finitely-determined property can be exercised directly.
Storage is dense: orders stay small (<= ~64) at the scales this engine
targets, and plain convolution beats sparse bookkeeping there.
"""

from __future__ import annotations

from typing import List, Sequence

from .rings import Ring


class RingMismatchError(ValueError):
    """Binary operation on series over different rings."""


class NonUnitError(ValueError):
    """Inversion or decomposition of a series whose constant term is not 1."""


class TruncatedSeries:
    __slots__ = ("ring", "coefficients")

    def __init__(self, ring: Ring, coefficients: Sequence):
        if not coefficients:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "coefficients", tuple(ring.coerce(c) for c in coefficients)
        )

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    # -- constructors ----------------------------------------------------

    @classmethod
    def one(cls, ring: Ring, order: int) -> "TruncatedSeries":
        return cls(ring, [ring.one] + [ring.zero] * order)

    @classmethod
    def zero(cls, ring: Ring, order: int) -> "TruncatedSeries":
        return cls(ring, [ring.zero] * (order + 1))

    @classmethod
    def geometric(cls, ring: Ring, order: int) -> "TruncatedSeries":
        """(1 - t)^{-1} = 1 + t + t^2 + ..."""
        return cls(ring, [ring.one] * (order + 1))

    @classmethod
    def one_plus_t(cls, ring: Ring, order: int) -> "TruncatedSeries":
        coeffs = [ring.one] + [ring.zero] * order
        if order >= 1:
            coeffs[1] = ring.one
        return cls(ring, coeffs)

    def coefficient(self, j: int):
        return self.coefficients[j]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.ring, self.coefficients[: order + 1])

    def is_unit(self) -> bool:
        return self.ring.eq(self.coefficients[0], self.ring.one)

    # -- arithmetic -----------------------------------------------------

    def _common(self, other: "TruncatedSeries") -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatchError(
                f"series over {self.ring.name} and {other.ring.name}"
            )
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        ring = self.ring
        return TruncatedSeries(
            ring,
            [ring.add(self.coefficients[j], other.coefficients[j]) for j in range(n + 1)],
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        ring = self.ring
        return TruncatedSeries(
            ring,
            [ring.sub(self.coefficients[j], other.coefficients[j]) for j in range(n + 1)],
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        ring = self.ring
        out: List = []
        for j in range(n + 1):
            acc = ring.zero
            for i in range(j + 1):
                ci, cj = self.coefficients[i], other.coefficients[j - i]
                if ring.is_zero(ci) or ring.is_zero(cj):
                    continue
                acc = ring.add(acc, ring.mul(ci, cj))
            out.append(acc)
        return TruncatedSeries(ring, out)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if not self.is_unit():
            raise NonUnitError(
                f"cannot invert a series with constant term {self.ring.format_element(self.coefficients[0])}"
            )
        ring = self.ring
        inv: List = [ring.one]
        for j in range(1, self.order + 1):
            acc = ring.zero
            for i in range(1, j + 1):
                ci = self.coefficients[i]
                if ring.is_zero(ci):
                    continue
                acc = ring.add(acc, ring.mul(ci, inv[j - i]))
            inv.append(ring.neg(acc))
        return TruncatedSeries(ring, inv)

    def rescale(self, k: int) -> "TruncatedSeries":
        """Substitute t -> t^k, truncated at the original order."""
        if k < 1:
            raise ValueError(f"rescale factor must be >= 1, got {k}")
        ring = self.ring
        out = [ring.zero] * (self.order + 1)
        for j, c in enumerate(self.coefficients):
            if j * k > self.order:
                break
            out[j * k] = c
        return TruncatedSeries(ring, out)

    def int_pow(self, n: int) -> "TruncatedSeries":
        """Integer power: repeated multiplication, inverting first if n < 0."""
        if n < 0:
            base = self.invert()
            n = -n
        else:
            base = self
        result = TruncatedSeries.one(self.ring, self.order)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eq_mod(self, other: "TruncatedSeries", k: int) -> bool:
        """True iff the coefficients of t^0..t^{k-1} agree."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k > min(self.order, other.order) + 1:
            raise ValueError(f"k={k} exceeds the stored order")
        if self.ring != other.ring:
            raise RingMismatchError(
                f"series over {self.ring.name} and {other.ring.name}"
            )
        return all(
            self.ring.eq(self.coefficients[j], other.coefficients[j]) for j in range(k)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.ring == other.ring
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.coefficients))

    def __str__(self) -> str:
        ring = self.ring
        pieces = []
        for j, c in enumerate(self.coefficients):
            if ring.is_zero(c):
                continue
            cs = ring.format_element(c)
            if j == 0:
                pieces.append(cs)
                continue
            tpow = "t" if j == 1 else f"t^{j}"
            if cs == "1":
                pieces.append(tpow)
            elif " " in cs or cs.startswith("-"):
                pieces.append(f"({cs})*{tpow}")
            else:
                pieces.append(f"{cs}*{tpow}")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.ring.name}, N={self.order}, {self})"
