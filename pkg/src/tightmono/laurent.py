"""Exact arithmetic in a single indeterminate v.

Laurent polynomials over arbitrary-precision integers, their fraction
field, q-integers and q-factorials, brace factorials and binomials, and
evaluation at v^-1 = 0 (the limit v -> infinity).

Every value is immutable and every operation is a pure function, so the
module can be used from any number of concurrent workers without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping


class LaurentPoly:
    """An element of Z[v, v^-1], stored sparsely as {exponent: coefficient}.

    Canonical form never stores a zero coefficient, so two values are equal
    exactly when their coefficient maps are equal.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        self._coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def term(coeff: int, exp: int = 0) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def from_dense(valuation: int, coeffs: list[int]) -> "LaurentPoly":
        return LaurentPoly({valuation + i: c for i, c in enumerate(coeffs)})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_one(self) -> bool:
        return self._coeffs == {0: 1}

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms in descending order of exponent."""
        return iter(sorted(self._coeffs.items(), reverse=True))

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient; undefined for 0."""
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    def valuation(self) -> int:
        """Smallest exponent with a nonzero coefficient; undefined for 0."""
        if not self._coeffs:
            raise ValueError("the zero polynomial has no valuation")
        return min(self._coeffs)

    def leading_coefficient(self) -> int:
        return self._coeffs[self.degree()]

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self._coeffs.values()) if self._coeffs else 0

    def dense(self) -> list[int]:
        """Coefficients from the valuation up to the degree, inclusive."""
        lo, hi = self.valuation(), self.degree()
        return [self._coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _as_poly(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._coeffs) == 1:
                ((e, c),) = self._coeffs.items()
                if c in (1, -1):
                    return LaurentPoly({n * e: c if n % 2 else 1})
            raise ValueError("only monomials with unit coefficient can be inverted")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _as_poly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "v" if e == 1 else f"v^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _as_poly(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})


def v_power(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})


# -- dense integer polynomial helpers for gcd reduction ----------------------
#
# Lists are coefficient vectors from the constant term up, always trimmed.
# Powers of v are units of the Laurent ring, so gcds are taken on the
# valuation-0 polynomial parts only.


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_content(c: list[int]) -> int:
    return math.gcd(*c) if c else 0


def _primitive(c: list[int]) -> list[int]:
    g = _dense_content(c)
    if g > 1:
        c = [x // g for x in c]
    if c and c[-1] < 0:
        c = [-x for x in c]
    return c


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g over Z (g nonzero, both trimmed)."""
    r = list(f)
    dg, lg = len(g) - 1, g[-1]
    while r and len(r) - 1 >= dg:
        dr, lead = len(r) - 1, r[-1]
        r = [lg * c for c in r]
        for j in range(dg + 1):
            r[dr - dg + j] -= lead * g[j]
        _trim(r)
    return r


def _poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd of two nonzero integer polynomials (primitive PRS)."""
    a, b = _primitive(list(f)), _primitive(list(g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


def _div_exact(f: list[int], g: list[int]) -> list[int]:
    """Exact quotient f / g for polynomials over Z with g | f."""
    work = [Fraction(c) for c in f]
    dg, lg = len(g) - 1, Fraction(g[-1])
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = work[k + dg] / lg
        q[k] = c
        if c:
            for j in range(dg + 1):
                work[k + j] -= c * g[j]
    if any(work) or any(c.denominator != 1 for c in q):
        raise ArithmeticError("inexact polynomial division")
    return [int(c) for c in q]


class RatFunc:
    """An element of Q(v) in canonical reduced form.

    The denominator is a polynomial in v with nonzero constant term and
    positive leading coefficient; numerator and denominator share no
    polynomial factor and no integer content. Equality and hashing are
    therefore plain syntactic comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: "LaurentPoly | int", den: "LaurentPoly | int" = 1) -> None:
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = ZERO, ONE
            return
        k = den.valuation()
        num, den = num.shift(-k), den.shift(-k)
        nval = num.valuation()
        npoly = num.shift(-nval).dense()
        dpoly = den.dense()
        if len(npoly) > 1 and len(dpoly) > 1:
            g = _poly_gcd(npoly, dpoly)
            if len(g) > 1:
                npoly = _div_exact(npoly, g)
                dpoly = _div_exact(dpoly, g)
        c = math.gcd(_dense_content(npoly), _dense_content(dpoly))
        if dpoly[-1] < 0:
            c = -c
        self.num = LaurentPoly.from_dense(nval, [x // c for x in npoly])
        self.den = LaurentPoly.from_dense(0, [x // c for x in dpoly])

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        other = _as_rat(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return self + (-_as_rat(other))

    def __rsub__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return _as_rat(other) + (-self)

    def __mul__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        other = _as_rat(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        other = _as_rat(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return _as_rat(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = _as_rat(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"


def _as_rat(x: "RatFunc | LaurentPoly | int") -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(_as_poly(x))


@dataclass(frozen=True)
class Regularity:
    """Behaviour of a rational function at v^-1 = 0.

    ``regular`` means the limit as v -> infinity exists; ``value`` carries
    that limit when it does and is None otherwise.
    """

    regular: bool
    value: Fraction | None


def eval_at_vinv0(f: RatFunc) -> Regularity:
    """Evaluate f at v^-1 = 0.

    f is regular there exactly when the numerator's top degree does not
    exceed the denominator's; the value is then the ratio of leading
    coefficients (equal degrees) or 0 (strictly smaller).
    """
    if f.num.is_zero:
        return Regularity(True, Fraction(0))
    dn, dd = f.num.degree(), f.den.degree()
    if dn > dd:
        return Regularity(False, None)
    if dn < dd:
        return Regularity(True, Fraction(0))
    return Regularity(True, Fraction(f.num.leading_coefficient(), f.den.leading_coefficient()))


def qint(n: int) -> LaurentPoly:
    """The q-integer [n] = v^(n-1) + v^(n-3) + ... + v^(1-n); [0] = 0."""
    if n < 0:
        raise ValueError("q-integer of a negative integer")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def qfact(n: int) -> LaurentPoly:
    """The q-factorial [n]! = [1][2]...[n]; [0]! = 1."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for h in range(2, n + 1):
        out = out * qint(h)
    return out


def brace(a: int) -> RatFunc:
    """{a} = (1 - v^(-2a)) / (1 - v^(-2)); in particular {0} = 0 here."""
    return RatFunc(ONE - v_power(-2 * a), ONE - v_power(-2))


def brace_fact(b: int) -> RatFunc:
    """{b}! = {b}{b-1}...{1} with {0}! = 1, extended by {-b}! = (-1)^b {b}!."""
    if b < 0:
        f = brace_fact(-b)
        return -f if b % 2 else f
    out = RatFunc(1)
    for h in range(1, b + 1):
        out = out * brace(h)
    return out


def brace_binom(a: int, b: int) -> RatFunc:
    """Brace binomial: product over h=1..b of (1-v^(-2(a-h+1)))/(1-v^(-2h))."""
    if b < 0:
        raise ValueError("brace binomial needs a nonnegative lower entry")
    out = RatFunc(1)
    for h in range(1, b + 1):
        out = out * RatFunc(ONE - v_power(-2 * (a - h + 1)), ONE - v_power(-2 * h))
    return out
