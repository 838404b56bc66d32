from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Number = int | Fraction


@dataclass(frozen=True)
class PowerSeries:
    """Formal power series truncated after z^N, with exact rational coefficients.

    Binary operations keep the smaller of the two truncation orders.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("A power series needs at least the constant coefficient")

    @classmethod
    def of(cls, values: Iterable[Number], N: int | None = None) -> PowerSeries:
        coeffs = [Fraction(v) for v in values]
        if N is not None:
            coeffs = (coeffs + [Fraction(0)] * (N + 1))[: N + 1]
        return cls(tuple(coeffs))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.N:
            raise ValueError(f"Coefficient z^{n} is beyond truncation order {self.N}")
        return self.coeffs[n]

    def truncate(self, N: int) -> PowerSeries:
        if N > self.N:
            raise ValueError(f"Cannot extend a series known to order {self.N} up to {N}")
        return PowerSeries(self.coeffs[: N + 1])

    def integers(self) -> list[int]:
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"Coefficient of z^{n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def __add__(self, other: PowerSeries | Number) -> PowerSeries:
        other = _coerce(other, self.N)
        n = min(self.N, other.N)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: PowerSeries | Number) -> PowerSeries:
        return self + (-_coerce(other, self.N))

    def __rsub__(self, other: Number) -> PowerSeries:
        return _coerce(other, self.N) - self

    def __mul__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            factor = Fraction(other)
            return PowerSeries(tuple(c * factor for c in self.coeffs))
        n = min(self.N, other.N)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        return self * other.recip()

    def __rtruediv__(self, other: Number) -> PowerSeries:
        return _coerce(other, self.N) * self.recip()

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return self.recip() ** (-k)
        out = _coerce(1, self.N)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int = 1) -> PowerSeries:
        """Multiply by z^k, keeping the truncation order."""
        padded = (Fraction(0),) * k + self.coeffs
        return PowerSeries(padded[: self.N + 1])

    def div_z(self) -> PowerSeries:
        """Divide by z; the result is known one order less."""
        if self.coeffs[0] != 0:
            raise ValueError("div_z needs a zero constant term")
        if self.N == 0:
            raise ValueError("div_z of a series truncated at z^0 has no coefficients left")
        return PowerSeries(self.coeffs[1:])

    def recip(self) -> PowerSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("Reciprocal needs a nonzero constant term")
        out = [Fraction(0)] * (self.N + 1)
        out[0] = 1 / c0
        for n in range(1, self.N + 1):
            acc = sum((self.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out[n] = -acc / c0
        return PowerSeries(tuple(out))

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """self(inner(z)) by Horner's scheme."""
        if inner.coeffs[0] != 0:
            raise ValueError("Composition needs an inner series with zero constant term")
        n = min(self.N, inner.N)
        out = _coerce(self.coeffs[n], n)
        inner = inner.truncate(n)
        for c in reversed(self.coeffs[:n]):
            out = out * inner + c
        return out

    def sqrt(self) -> PowerSeries:
        """Square root with constant term 1, by Newton iteration doubling the precision."""
        if self.coeffs[0] != 1:
            raise ValueError("Square root needs constant term 1")
        root = _coerce(1, 0)
        known = 0
        while known < self.N:
            known = min(2 * known + 1, self.N)
            target = self.truncate(known)
            root = _pad(root, known)
            root = (root + target / root) * Fraction(1, 2)
        return _pad(root, self.N)


def _pad(s: PowerSeries, N: int) -> PowerSeries:
    return PowerSeries.of(s.coeffs, N)


def _coerce(value: PowerSeries | Number, N: int) -> PowerSeries:
    if isinstance(value, PowerSeries):
        return value
    return PowerSeries.of([value], N)


def constant(value: Number, N: int) -> PowerSeries:
    return PowerSeries.of([value], N)


def z(N: int) -> PowerSeries:
    return PowerSeries.of([0, 1], N)


def geometric(N: int) -> PowerSeries:
    return PowerSeries.of([1] * (N + 1))


def from_counts(counts: Iterable[int]) -> PowerSeries:
    return PowerSeries.of(counts)
