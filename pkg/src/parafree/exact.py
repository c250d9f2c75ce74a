"""Exact arithmetic substrate: rationals, 2x2 rational matrices, dense
integer polynomials in tau, and evaluation of alternating words in the two
parabolic generators g = (1 1; 0 1) and h = (1 0; tau 1).

Everything here is immutable and pure; safe for concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Rational = Fraction

G = "G"
H = "H"

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form "p/q" or "p" (sign on the numerator only)."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r} (expected 'p' or 'p/q')")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def other_tag(tag: str) -> str:
    return H if tag == G else G


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix with exact rational entries."""

    e11: Fraction
    e12: Fraction
    e21: Fraction
    e22: Fraction

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def det(self) -> Fraction:
        return self.e11 * self.e22 - self.e12 * self.e21

    def transpose(self) -> "Mat2":
        return Mat2(self.e11, self.e21, self.e12, self.e22)

    def inverse(self) -> "Mat2":
        d = self.det()
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        return Mat2(self.e22 / d, -self.e12 / d, -self.e21 / d, self.e11 / d)

    def is_identity(self) -> bool:
        return self == Mat2.identity()

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.e11, self.e12, self.e21, self.e22)


def gen_power(tag: str, a: int, tau: Fraction) -> Mat2:
    """g^a or h^a in closed form (both generators are parabolic)."""
    if tag == G:
        return Mat2(Fraction(1), Fraction(a), Fraction(0), Fraction(1))
    if tag == H:
        return Mat2(Fraction(1), Fraction(0), a * tau, Fraction(1))
    raise ValueError(f"unknown generator tag {tag!r}")


@dataclass(frozen=True)
class ExpWord:
    """Alternating word: a starting generator tag plus the exponent list.

    Letter i (0-based) uses `start` if i is even, the other generator if odd;
    the strict alternation is implied by the representation.
    """

    start: str
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.start not in (G, H):
            raise ValueError(f"bad start tag {self.start!r}")
        if len(self.exponents) < 1:
            raise ValueError("word must have at least one letter")
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def end(self) -> str:
        return self.start if len(self.exponents) % 2 == 1 else other_tag(self.start)

    def letters(self) -> Iterator[tuple[str, int]]:
        tag = self.start
        for a in self.exponents:
            yield tag, a
            tag = other_tag(tag)

    def inverse(self) -> "ExpWord":
        return ExpWord(self.end, tuple(-a for a in reversed(self.exponents)))

    def concat(self, other: "ExpWord") -> "ExpWord":
        if other.start != other_tag(self.end):
            raise ValueError("concatenation would break alternation")
        return ExpWord(self.start, self.exponents + other.exponents)

    @property
    def is_reduced(self) -> bool:
        return all(a != 0 for a in self.exponents)

    @property
    def is_positive(self) -> bool:
        return all(a > 0 for a in self.exponents)


def eval_word(word: ExpWord, tau: Fraction) -> Mat2:
    """Left-to-right product of generator powers; always has determinant 1."""
    m = Mat2.identity()
    for tag, a in word.letters():
        m = m * gen_power(tag, a, tau)
    return m


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial in tau with integer coefficients,
    lowest degree first, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @staticmethod
    def const(c: int) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def var() -> "UniPoly":
        return UniPoly((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return UniPoly(tuple(out))

    def scale(self, c: int) -> "UniPoly":
        return UniPoly(tuple(c * x for x in self.coeffs))

    def evaluate(self, tau: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * tau + c
        return acc

    def divide_by_var(self) -> "UniPoly":
        """Exact division by tau; the constant term must be zero."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ArithmeticError(
                f"polynomial {self.coeffs} has nonzero constant term; "
                "not divisible by tau"
            )
        return UniPoly(self.coeffs[1:])

    def render(self, var: str = "tau") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = (f"-{first_term}" if first_sign == "-" else first_term)
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


@dataclass(frozen=True)
class MatPoly:
    """2x2 matrix of UniPoly entries (symbolic carrier for word products)."""

    e11: UniPoly
    e12: UniPoly
    e21: UniPoly
    e22: UniPoly

    @staticmethod
    def identity() -> "MatPoly":
        one, zero = UniPoly.const(1), UniPoly.zero()
        return MatPoly(one, zero, zero, one)

    def __mul__(self, other: "MatPoly") -> "MatPoly":
        return MatPoly(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def det(self) -> UniPoly:
        return self.e11 * self.e22 - self.e12 * self.e21

    def specialize(self, tau: Fraction) -> Mat2:
        return Mat2(
            self.e11.evaluate(tau),
            self.e12.evaluate(tau),
            self.e21.evaluate(tau),
            self.e22.evaluate(tau),
        )


def gen_power_symbolic(tag: str, a: int) -> MatPoly:
    one, zero = UniPoly.const(1), UniPoly.zero()
    if tag == G:
        return MatPoly(one, UniPoly.const(a), zero, one)
    if tag == H:
        return MatPoly(one, zero, UniPoly((0, a)), one)
    raise ValueError(f"unknown generator tag {tag!r}")


def eval_word_symbolic(word: ExpWord) -> MatPoly:
    """Word product with tau left as the polynomial indeterminate."""
    m = MatPoly.identity()
    for tag, a in word.letters():
        m = m * gen_power_symbolic(tag, a)
    return m


def word_from_exponents(exponents: Sequence[int], start: str = G) -> ExpWord:
    return ExpWord(start, tuple(exponents))
