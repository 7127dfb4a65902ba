"""Sparse multivariate Laurent polynomials and rational pairs over QQ.

Just enough symbolic machinery for the fixed-point index identities:
polynomials in a handful of named variables with Fraction coefficients,
where the first variable (the eigenvalue delta) may carry negative
exponents.  Identities between rational expressions are checked by
cross-multiplication, never by simplification heuristics.
"""

from __future__ import annotations

from fractions import Fraction


class MPoly:
    """Sparse multivariate Laurent polynomial: {exponent tuple: Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        object.__setattr__(self, "nvars", nvars)
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MPoly is immutable")

    def __reduce__(self):
        return (MPoly, (self.nvars, self.terms))

    @staticmethod
    def const(nvars: int, c) -> "MPoly":
        return MPoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def var(nvars: int, i: int, power: int = 1) -> "MPoly":
        e = [0] * nvars
        e[i] = power
        return MPoly(nvars, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = [f"{c}*x^{e}" for e, c in sorted(self.terms.items())]
        return "MPoly(" + " + ".join(bits) + ")"


class MRat:
    """Rational pair num/den of MPoly; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("MRat is immutable")

    def __reduce__(self):
        return (MRat, (self.num, self.den))

    @staticmethod
    def of(value, nvars: int) -> "MRat":
        if isinstance(value, MRat):
            return value
        if isinstance(value, MPoly):
            return MRat(value)
        return MRat(MPoly.const(nvars, value))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MRat):
            other = MRat.of(other, self.num.nvars)
        return (self.num * other.den - other.num * self.den).is_zero()

    def __add__(self, other) -> "MRat":
        o = MRat.of(other, self.num.nvars)
        return MRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return MRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-MRat.of(other, self.num.nvars))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "MRat":
        o = MRat.of(other, self.num.nvars)
        return MRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MRat":
        o = MRat.of(other, self.num.nvars)
        if o.num.is_zero():
            raise ZeroDivisionError
        return MRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return MRat.of(other, self.num.nvars) / self

    def __repr__(self):
        return f"MRat({self.num!r}, {self.den!r})"
