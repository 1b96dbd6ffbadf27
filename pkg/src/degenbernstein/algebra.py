"""Exact scalars, bivariate polynomials in (x, lambda), and truncated series in t.

Scalars are :class:`fractions.Fraction`.  Polynomials are sparse maps from
exponent pairs ``(deg_x, deg_lambda)`` to nonzero coefficients, so equality of
two :class:`BiPoly` values is plain structural comparison.

Every operation here is written against the ring interface only, which lets
the higher modules pass either formal symbols (``X``, ``LAM``) or rational
points through the same code path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

from .errors import NotInvertibleError, OrderMismatchError

Rational = Fraction

DEFAULT_ORDER = 32

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (q > 0) into a Fraction.

    Decimal and float notation is rejected on purpose.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational literal {text!r}; expected p or p/q")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class BiPoly:
    """Immutable polynomial in the formal symbols x and lambda over Q.

    >>> p = X**2 - LAM * X
    >>> p.to_text()
    '-1*x^1*l^1 + 1*x^2*l^0'
    >>> bipoly_eval(p, Fraction(3), Fraction(1, 2))
    Fraction(15, 2)
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError("exponents must be nonnegative")
                c = Fraction(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Fraction]) -> "BiPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def degree_x(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return max((a for a, _ in self._terms), default=-1)

    def degree_lam(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    # ring operations

    @staticmethod
    def _coerce(other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in o._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({key: -c for key, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return BiPoly._raw({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly._raw({key: c for key, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; polynomial division is never needed
        if isinstance(other, BiPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of BiPoly by zero")
        inv = 1 / Fraction(other)
        return self * inv

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def substitute(self, x=None, lam=None):
        """Replace x and/or lambda by ring elements (rationals or BiPoly)."""
        xv = X if x is None else x
        lv = LAM if lam is None else lam
        xpow: dict[int, object] = {0: 1}
        lpow: dict[int, object] = {0: 1}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = base**e
            return cache[e]

        total = zero_like(xv, lv)
        for (a, b), c in sorted(self._terms.items()):
            total = total + c * power(xpow, xv, a) * power(lpow, lv, b)
        return total

    # canonical text form

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{format_rational(c)}*x^{a}*l^{b}" for (a, b), c in sorted(self._terms.items())
        )

    @classmethod
    def from_text(cls, text: str) -> "BiPoly":
        text = text.strip()
        if text == "0":
            return ZERO
        terms: dict[tuple[int, int], Fraction] = {}
        for chunk in text.split(" + "):
            try:
                coef, xs, ls = chunk.split("*")
                if not (xs.startswith("x^") and ls.startswith("l^")):
                    raise ValueError
                key = (int(xs[2:]), int(ls[2:]))
            except ValueError:
                raise ValueError(f"malformed BiPoly term {chunk!r}") from None
            if key in terms:
                raise ValueError(f"duplicate exponent pair {key}")
            terms[key] = parse_rational(coef)
        return cls(terms)

    def __repr__(self):
        return f"BiPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


ZERO = BiPoly()
ONE = BiPoly.constant(1)
X = BiPoly({(1, 0): 1})
LAM = BiPoly({(0, 1): 1})

Scalar = Union[int, Fraction, BiPoly]


def is_symbolic(*args) -> bool:
    return any(isinstance(a, BiPoly) for a in args)


def one_like(*args) -> Scalar:
    """Multiplicative identity of the ring the arguments live in."""
    return ONE if is_symbolic(*args) else Fraction(1)


def zero_like(*args) -> Scalar:
    return ZERO if is_symbolic(*args) else Fraction(0)


def as_bipoly(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    return BiPoly.constant(v)


def bipoly_eval(p: BiPoly, x_val, lam_val) -> Fraction:
    """Evaluate ``p`` at rational x and lambda."""
    return Fraction(p.substitute(x=Fraction(x_val), lam=Fraction(lam_val)))


@dataclass(frozen=True)
class TruncSeries:
    """Power series in t truncated after ``t**order``.

    ``coeffs[m]`` is the coefficient of ``t**m``; entries are BiPoly values or,
    on the numeric path, Fractions.
    """

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int, fill=ZERO) -> "TruncSeries":
        cs = list(coeffs)[: order + 1]
        cs += [fill] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        _check_orders(self, other)
        return TruncSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        _check_orders(self, other)
        return TruncSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries(self.order, tuple(c * other for c in self.coeffs))

    def scale(self, c) -> "TruncSeries":
        return TruncSeries(self.order, tuple(a * c for a in self.coeffs))

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``t**k`` and truncate."""
        z = zero_like(*self.coeffs)
        return TruncSeries.from_coeffs([z] * k + list(self.coeffs), self.order, fill=z)

    def egf_coefficient(self, n: int):
        """``n! * [t^n]``, the exponential-generating-function reading."""
        return self.coeffs[n] * factorial(n)


def _check_orders(a: TruncSeries, b: TruncSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"series orders differ: {a.order} vs {b.order}")


def series_one(order: int, like=ONE) -> TruncSeries:
    one = one_like(like)
    return TruncSeries.from_coeffs([one], order, fill=zero_like(like))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = []
    for m in range(n + 1):
        acc = a.coeffs[0] * b.coeffs[m]
        for j in range(1, m + 1):
            aj = a.coeffs[j]
            if aj:
                acc = acc + aj * b.coeffs[m - j]
        out.append(acc)
    return TruncSeries(n, tuple(out))


def _unit_inverse(c0) -> Fraction:
    if isinstance(c0, BiPoly):
        if not c0.is_constant():
            raise NotInvertibleError("constant term depends on x or lambda")
        c0 = c0.constant_value()
    c0 = Fraction(c0)
    if not c0:
        raise NotInvertibleError("constant term is zero")
    return 1 / c0


def series_invert(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    inv0 = _unit_inverse(a.coeffs[0])
    symbolic = is_symbolic(*a.coeffs)
    b = [ONE * inv0 if symbolic else inv0]
    for m in range(1, a.order + 1):
        acc = zero_like(*a.coeffs)
        for j in range(1, m + 1):
            aj = a.coeffs[j]
            if aj:
                acc = acc + aj * b[m - j]
        b.append(-acc * inv0)
    return TruncSeries(a.order, tuple(b))


def series_pow(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = series_one(a.order, like=one_like(*a.coeffs))
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def binomial_series(exponent, order: int = DEFAULT_ORDER, lam=LAM) -> TruncSeries:
    """Series of ``(1 + lam*t)**(exponent/lam)``.

    The t^n coefficient is ``(exponent)_{n,lam} / n!``, built by the running
    product ``c_{n+1} = c_n * (exponent - n*lam) / (n + 1)``.
    """
    c = one_like(exponent, lam)
    coeffs = [c]
    for n in range(order):
        c = c * (exponent - n * lam) / (n + 1)
        coeffs.append(c)
    return TruncSeries(order, tuple(coeffs))
