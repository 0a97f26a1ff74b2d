"""Sparse multivariate polynomials over an exact field.

Terms are kept in a dict mapping exponent tuples to nonzero coefficients.
The canonical term order is degree-lexicographic, which fixes the printed
and serialized form of every polynomial.
"""
from fractions import Fraction
from math import comb

from .field import GF, format_scalar, scalar


def deglex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Polynomial in ``nvars`` variables ``x1..xg``.

    >>> x1, x2, x3, x4 = MultiPoly.variables(4)
    >>> str(x1 * x4 - x2 * x3)
    'x1*x4 - x2*x3'
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            c = scalar(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def variables(cls, nvars):
        return [cls.variable(nvars, i) for i in range(nvars)]

    @classmethod
    def linear(cls, coeffs):
        """The linear form ``sum(coeffs[i] * x_{i+1})``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = scalar(c)
        return cls._raw(n, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, GF)):
            return self == MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction, GF)):
            return MultiPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GF)):
            if not other:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    @property
    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self):
        e = max(self.terms, key=deglex_key)
        return e, self.terms[e]

    def exact_div(self, other):
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        le, lc = other.leading_term()
        inv = 1 / lc
        rem = dict(self.terms)
        quo = {}
        while rem:
            e = max(rem, key=deglex_key)
            diff = tuple([a - b for a, b in zip(e, le)])
            if any(d < 0 for d in diff):
                raise ArithmeticError("inexact multivariate division")
            q = rem[e] * inv
            quo[diff] = q
            for oe, oc in other.terms.items():
                te = tuple([a + b for a, b in zip(oe, diff)])
                v = rem.get(te, 0) - q * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return MultiPoly._raw(self.nvars, quo)

    def homogeneous_component(self, d):
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def __call__(self, point):
        """Evaluate at a point given as a sequence of ``nvars`` scalars."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def shift(self, point):
        """The recentred polynomial ``x -> f(x + point)``."""
        point = [scalar(x) for x in point]
        terms = {}
        for e, c in self.terms.items():
            # expand prod (x_i + p_i)^{e_i} one variable at a time
            partial = {(): c}
            for i, k in enumerate(e):
                nxt = {}
                for head, v in partial.items():
                    for j in range(k + 1):
                        w = v * comb(k, j) * point[i] ** (k - j) if point[i] or j == k else 0
                        if w:
                            key = head + (j,)
                            nxt[key] = nxt.get(key, 0) + w
                partial = nxt
            for ee, v in partial.items():
                terms[ee] = terms.get(ee, 0) + v
        return MultiPoly._raw(self.nvars, {e: c for e, c in terms.items() if c})

    def substitute(self, values, one=1):
        """Compose with ``values``: a list of ring elements (e.g. UniPolys), one per variable."""
        total = None
        cache = {}
        for e, c in self.terms.items():
            v = None
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = values[i] ** k
                    v = cache[key] if v is None else v * cache[key]
            term = c * one if v is None else v * c
            total = term if total is None else total + term
        return total if total is not None else one * 0

    def sorted_terms(self):
        """Terms in descending degree-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {str(self)!r})"

    def __str__(self):
        return format_multipoly(self)


def format_multipoly(p, names=None):
    if not p:
        return "0"
    names = names or [f"x{i + 1}" for i in range(p.nvars)]
    out = []
    for e, c in p.sorted_terms():
        neg = not isinstance(c, GF) and c < 0
        a = -c if neg else c
        factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
        if not factors:
            body = format_scalar(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_scalar(a)] + factors)
        if out:
            out.append(("- " if neg else "+ ") + body)
        else:
            out.append(("-" if neg else "") + body)
    return " ".join(out)
