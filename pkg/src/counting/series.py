# src/counting/series.py
"""
Truncated formal power series over exact rationals.

SeriesTable is bivariate in (x, y) with coefficients that are polynomials in the
markers a, b, t; UniSeries is univariate. No floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Tuple

Monomial = Tuple[int, int, int]  # degrees of (a, b, t)


class MarkerPoly:
    """Sparse polynomial in the markers a, b, t: {(deg_a, deg_b, deg_t): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Fraction] | None = None):
        self.terms: Dict[Monomial, Fraction] = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c) -> MarkerPoly:
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, t: int = 0, coeff=1) -> MarkerPoly:
        return cls({(a, b, t): Fraction(coeff)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MarkerPoly) and self.terms == other.terms

    def __add__(self, other: MarkerPoly) -> MarkerPoly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MarkerPoly(out)

    def __neg__(self) -> MarkerPoly:
        return MarkerPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: MarkerPoly) -> MarkerPoly:
        return self + (-other)

    def __mul__(self, other: MarkerPoly) -> MarkerPoly:
        out: Dict[Monomial, Fraction] = {}
        for (a1, b1, t1), c1 in self.terms.items():
            for (a2, b2, t2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2, t1 + t2)
                out[m] = out.get(m, 0) + c1 * c2
        return MarkerPoly(out)

    def scale(self, factor) -> MarkerPoly:
        return MarkerPoly({m: c * factor for m, c in self.terms.items()})

    def constant_term(self) -> Fraction:
        if any(m != (0, 0, 0) for m in self.terms):
            raise ValueError("Marker polynomial is not a constant")
        return self.terms.get((0, 0, 0), Fraction(0))

    def evaluate(self, a=1, b=1, t=1) -> Fraction:
        return sum((c * Fraction(a) ** da * Fraction(b) ** db * Fraction(t) ** dt
                    for (da, db, dt), c in self.terms.items()), Fraction(0))

    def as_integers(self) -> Dict[Monomial, int]:
        out = {}
        for m, c in self.terms.items():
            if c.denominator != 1:
                raise ArithmeticError(f"Coefficient {c} of {m} is not an integer")
            out[m] = c.numerator
        return out

    def __repr__(self) -> str:
        return f"MarkerPoly({dict(sorted(self.terms.items()))})"


@dataclass
class SeriesTable:
    """
    Bivariate series Σ coeff[i, j] x^i y^j truncated at i <= max_n, j <= max_k.

    `entry(n, k)` reads it as an exponential generating function: n!·k!·coeff[n, k].
    """

    max_n: int
    max_k: int
    coeffs: Dict[Tuple[int, int], MarkerPoly] = field(default_factory=dict)

    def __getitem__(self, ij: Tuple[int, int]) -> MarkerPoly:
        return self.coeffs.get(ij, MarkerPoly())

    def indices(self) -> Iterator[Tuple[int, int]]:
        for i in range(self.max_n + 1):
            for j in range(self.max_k + 1):
                yield i, j

    def _same_shape(self, other: SeriesTable) -> Tuple[int, int]:
        return min(self.max_n, other.max_n), min(self.max_k, other.max_k)

    def __add__(self, other: SeriesTable) -> SeriesTable:
        mn, mk = self._same_shape(other)
        out = SeriesTable(mn, mk)
        for ij in out.indices():
            s = self[ij] + other[ij]
            if s:
                out.coeffs[ij] = s
        return out

    def __neg__(self) -> SeriesTable:
        return SeriesTable(self.max_n, self.max_k, {ij: -c for ij, c in self.coeffs.items()})

    def __sub__(self, other: SeriesTable) -> SeriesTable:
        return self + (-other)

    def __mul__(self, other: SeriesTable) -> SeriesTable:
        mn, mk = self._same_shape(other)
        out = SeriesTable(mn, mk)
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i <= mn and j <= mk:
                    out.coeffs[(i, j)] = out[(i, j)] + c1 * c2
        out.coeffs = {ij: c for ij, c in out.coeffs.items() if c}
        return out

    def reciprocal(self) -> SeriesTable:
        """1/f for a series whose constant term is a nonzero constant (no markers)."""
        f00 = self[(0, 0)].constant_term()
        if f00 == 0:
            raise ZeroDivisionError("Series has no reciprocal: constant term is 0")
        inv = 1 / f00
        out = SeriesTable(self.max_n, self.max_k)
        for i, j in out.indices():
            if (i, j) == (0, 0):
                out.coeffs[(0, 0)] = MarkerPoly.constant(inv)
                continue
            acc = MarkerPoly()
            for (p, q), c in self.coeffs.items():
                if (p, q) != (0, 0) and p <= i and q <= j:
                    acc = acc + c * out[(i - p, j - q)]
            if acc:
                out.coeffs[(i, j)] = acc.scale(-inv)
        return out

    @classmethod
    def constant(cls, max_n: int, max_k: int, c=1) -> SeriesTable:
        return cls(max_n, max_k, {(0, 0): MarkerPoly.constant(c)})

    @classmethod
    def exp_x(cls, max_n: int, max_k: int, marker: MarkerPoly) -> SeriesTable:
        """e^(marker·x)."""
        out, power = cls(max_n, max_k), MarkerPoly.constant(1)
        for i in range(max_n + 1):
            out.coeffs[(i, 0)] = power.scale(Fraction(1, factorial(i)))
            power = power * marker
        return out

    @classmethod
    def exp_y(cls, max_n: int, max_k: int, marker: MarkerPoly) -> SeriesTable:
        """e^(marker·y)."""
        out, power = cls(max_n, max_k), MarkerPoly.constant(1)
        for j in range(max_k + 1):
            out.coeffs[(0, j)] = power.scale(Fraction(1, factorial(j)))
            power = power * marker
        return out

    def entry(self, n: int, k: int) -> MarkerPoly:
        """n!·k!·[x^n y^k]."""
        return self[(n, k)].scale(factorial(n) * factorial(k))

    def refined(self, n: int, k: int) -> Dict[Monomial, int]:
        """Integer marker polynomial of entry (n, k) as {(r_e, c_e, r_t): count}."""
        return self.entry(n, k).as_integers()

    def evaluate(self, n: int, k: int, a=1, b=1, t=1) -> int:
        value = self.entry(n, k).evaluate(a, b, t)
        if value.denominator != 1:
            raise ArithmeticError(f"Entry ({n},{k}) evaluates to the non-integer {value}")
        return value.numerator


def egf_gamma_free(max_n: int, max_k: int) -> SeriesTable:
    """e^(ax)·e^(by) / (1 - t(e^x - 1)(e^y - 1)), truncated."""
    if max_n < 0 or max_k < 0:
        raise ValueError("Truncation orders must be non-negative")
    a = MarkerPoly.monomial(a=1)
    b = MarkerPoly.monomial(b=1)
    one = MarkerPoly.constant(1)

    ex_minus_1 = SeriesTable.exp_x(max_n, max_k, one) - SeriesTable.constant(max_n, max_k)
    ey_minus_1 = SeriesTable.exp_y(max_n, max_k, one) - SeriesTable.constant(max_n, max_k)
    marked = SeriesTable.constant(max_n, max_k)
    marked.coeffs[(0, 0)] = MarkerPoly.monomial(t=1)
    denominator = SeriesTable.constant(max_n, max_k) - marked * ex_minus_1 * ey_minus_1

    numerator = SeriesTable.exp_x(max_n, max_k, a) * SeriesTable.exp_y(max_n, max_k, b)
    return numerator * denominator.reciprocal()


# ---------------------------------------------------------------------- #
# Univariate series
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class UniSeries:
    """
    Σ coeffs[n] x^n truncated at len(coeffs) - 1.

    With `factorial_squared` set, counts() reads the coefficients against n!² denominators.
    """

    coeffs: Tuple[Fraction, ...]
    factorial_squared: bool = False

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _wrap(self, coeffs) -> UniSeries:
        return UniSeries(tuple(Fraction(c) for c in coeffs), self.factorial_squared)

    def __add__(self, other: UniSeries) -> UniSeries:
        return self._wrap(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> UniSeries:
        return self._wrap(-c for c in self.coeffs)

    def __mul__(self, other: UniSeries) -> UniSeries:
        size = min(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * size
        for i, a in enumerate(self.coeffs[:size]):
            if a:
                for j, b in enumerate(other.coeffs[: size - i]):
                    out[i + j] += a * b
        return self._wrap(out)

    def reciprocal(self) -> UniSeries:
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError("Series has no reciprocal: constant term is 0")
        inv = 1 / self.coeffs[0]
        out = [inv]
        for n in range(1, len(self.coeffs)):
            acc = sum((self.coeffs[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
            out.append(-acc * inv)
        return self._wrap(out)

    def derivative(self) -> UniSeries:
        return self._wrap(n * c for n, c in enumerate(self.coeffs) if n > 0)

    def integral(self) -> UniSeries:
        return self._wrap([Fraction(0)] + [c / (n + 1) for n, c in enumerate(self.coeffs)])

    def log(self) -> UniSeries:
        """ln f for a series with constant term 1, via ln f = ∫ f'/f."""
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("Logarithm needs a series with constant term 1")
        if len(self.coeffs) == 1:
            return self._wrap([0])
        quotient = self.derivative() * UniSeries(self.coeffs[:-1]).reciprocal()
        return self._wrap(quotient.integral().coeffs)

    def counts(self, offset: int = 0) -> List[int]:
        """Integers n!²·[x^n] (or plain [x^n]) for n = offset .. order."""
        out = []
        for n in range(offset, len(self.coeffs)):
            value = self.coeffs[n] * (factorial(n) ** 2 if self.factorial_squared else 1)
            if value.denominator != 1:
                raise ArithmeticError(f"Coefficient of x^{n} does not clear to an integer: {value}")
            out.append(value.numerator)
        return out


def bessel_j0_series(max_n: int) -> UniSeries:
    """J₀(2√x) = Σ (-1)^n x^n / n!²."""
    return UniSeries(tuple(Fraction((-1) ** n, factorial(n) ** 2) for n in range(max_n + 1)), True)


def omega_series(max_n: int) -> UniSeries:
    """Σ ω(n) x^n / n!² = (Σ (-1)^n x^n / n!²)^(-1)."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    return bessel_j0_series(max_n).reciprocal()


def bessel_tree_series(max_n: int) -> UniSeries:
    """-ln J₀(2√x) up to x^(max_n+1); b_n = (n+1)!²·[x^(n+1)], i.e. counts(offset=1)."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    return -bessel_j0_series(max_n + 1).log()
