"""Dense univariate polynomials in the curve parameter ``t``."""
from fractions import Fraction
from math import gcd, lcm

from ..errors import BothZero, ZeroColumn
from .field import GF, format_scalar, scalar


class UniPoly:
    """Dense univariate polynomial with exact coefficients, lowest degree first.

    Instances are immutable and hashable.  Trailing zeros are trimmed, so the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        while cs and not cs[-1]:
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, n, c=1):
        return cls((0,) * n + (c,))

    @classmethod
    def from_roots(cls, roots):
        p = cls.const(1)
        for a in roots:
            p = p * cls((-scalar(a), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            try:
                other = UniPoly.const(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, GF)):
            return UniPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return UniPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GF)):
            return UniPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                cs[i + j] += x * y
        return UniPoly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        inv = 1 / other.lc()
        if len(rem) - 1 < d:
            return UniPoly(), self
        quo = [0] * (len(rem) - d)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = rem[k + d] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly._raw(quo), UniPoly._raw(rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GF)):
            inv = 1 / scalar(other)
            return UniPoly._raw([c * inv for c in self.coeffs])
        if isinstance(other, UniPoly):
            return self.exact_div(other)
        return NotImplemented

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self:
            return self
        return self / self.lc()

    def compose(self, inner):
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __repr__(self):
        return f"UniPoly({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        return format_unipoly(self)


def format_unipoly(p, var="t"):
    """Human-readable form, highest degree first, e.g. ``t^2 - 2``."""
    if not p:
        return "0"
    parts = []
    for n in range(p.degree, -1, -1):
        c = p.coeffs[n]
        if not c:
            continue
        neg = not isinstance(c, GF) and c < 0
        a = -c if neg else c
        mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
        if not mono:
            body = format_scalar(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_scalar(a)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def unipoly_gcd(a, b):
    """Monic greatest common divisor of ``a`` and ``b``.

    >>> str(unipoly_gcd(UniPoly((-1, 0, 1)), UniPoly((-1, 1))))
    't - 1'
    """
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def unipoly_gcdex(a, b):
    """Return ``(s, u, g)`` with ``s*a + u*b == g`` and ``g`` the monic gcd."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1), UniPoly()
    u0, u1 = UniPoly(), UniPoly.const(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    inv = 1 / r0.lc()
    return s0 * inv, u0 * inv, r0 * inv


def gcd_many(polys):
    """Monic gcd of a collection; zero polynomials are ignored.  Returns 0 if all vanish."""
    g = UniPoly()
    for p in polys:
        if p:
            g = p.monic() if not g else unipoly_gcd(g, p)
            if g.degree == 0:
                break
    return g


def squarefree_part(p):
    """Monic product of the distinct irreducible factors of ``p`` (characteristic zero)."""
    if not p:
        raise ValueError("squarefree part of zero")
    if p.degree <= 0:
        return UniPoly.const(1)
    return (p // unipoly_gcd(p, p.derivative())).monic()


def column_primitive_part(column):
    """Divide a polynomial column by the monic gcd of its entries.

    Returns ``(primitive_column, content)`` with ``primitive * content``
    reproducing the input exactly.

    >>> t = UniPoly((0, 1))
    >>> prim, content = column_primitive_part((t, t * t))
    >>> [str(e) for e in prim], str(content)
    (['1', 't'], 't')
    """
    column = tuple(column)
    content = gcd_many(column)
    if not content:
        raise ZeroColumn("column is identically zero")
    return tuple(e.exact_div(content) for e in column), content


def integer_normalize(column):
    """Scale a rational polynomial column to coprime integer coefficients.

    The sign is fixed so the leading coefficient of the first nonzero entry
    is positive.  Prime-field columns are made monic in that entry instead.
    """
    column = tuple(column)
    first = next((e for e in column if e), None)
    if first is None:
        return column
    if isinstance(first.lc(), GF):
        inv = 1 / first.lc()
        return tuple(e * inv for e in column)
    den = 1
    num = 0
    for e in column:
        for c in e.coeffs:
            den = lcm(den, c.denominator)
    for e in column:
        for c in e.coeffs:
            num = gcd(num, (c * den).numerator)
    factor = Fraction(den, num)
    if first.lc() < 0:
        factor = -factor
    return tuple(e * factor for e in column)
