"""Dense exact univariate polynomials over ZZ and QQ.

A polynomial is stored as a tuple of coefficients in ascending degree
order with no trailing zeros, so ``IntPoly([1, -1, -1, -1, 1])`` is
``z^4 - z^3 - z^2 - z + 1``.  Everything here is bit-exact: resultants
go through the subresultant remainder sequence, cyclotomic polynomials
through recursive exact division of ``z^n - 1``, and the palindromic /
anti-palindromic trace-polynomial transform is verified by
back-substitution.  These polynomials are the common currency of the
whole package (Salem factors, cyclotomic factors, characteristic
polynomials, trace polynomials).
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Sequence


class PolynomialDomainError(ValueError):
    """Raised when an operation's domain precondition fails."""


def _strip(coeffs: Sequence) -> tuple:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _strip(tuple(int(c) for c in coeffs))
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def leading(self) -> int:
        if not self.coeffs:
            raise PolynomialDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise PolynomialDomainError("negative power")
        result, base = IntPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Exact quotient/remainder; requires divisibility of leading terms
        at every step (always holds for monic divisors)."""
        if other.is_zero():
            raise PolynomialDomainError("division by zero polynomial")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = other.degree
        lc = other.leading()
        quo = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            head = rem[k + dd]
            if head == 0:
                continue
            q, r = divmod(head, lc)
            if r != 0:
                raise PolynomialDomainError("inexact integer polynomial division")
            quo[k] = q
            for i, c in enumerate(dv):
                rem[k + i] -= q * c
        return IntPoly(quo), IntPoly(rem)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolynomialDomainError("polynomial division is not exact")
        return q

    def divides(self, other: "IntPoly") -> bool:
        try:
            _, r = other.divmod(self)
        except PolynomialDomainError:
            return False
        return r.is_zero()

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd_int(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def to_rat(self) -> "RatPoly":
        return RatPoly([Fraction(c) for c in self.coeffs])

    def text(self) -> str:
        """Bracketed ascending coefficient list, e.g. "[1,-1,-1,-1,1]"."""
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    @staticmethod
    def from_text(s: str) -> "IntPoly":
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise PolynomialDomainError(f"bad polynomial text {s!r}")
        body = s[1:-1].strip()
        if not body:
            return IntPoly()
        return IntPoly([int(t) for t in body.split(",")])


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class RatPoly:
    """Polynomial with exact rational coefficients (ascending order)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = _strip(tuple(Fraction(c) for c in coeffs))
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("RatPoly is immutable")

    def __reduce__(self):
        return (RatPoly, (self.coeffs,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise PolynomialDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise PolynomialDomainError("division by zero polynomial")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = other.degree
        lc = other.leading()
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            head = rem[k + dd]
            if head == 0:
                continue
            q = head / lc
            quo[k] = q
            for i, c in enumerate(dv):
                rem[k + i] -= q * c
        return RatPoly(quo), RatPoly(rem)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        lc = self.leading()
        return RatPoly([c / lc for c in self.coeffs])

    def clear_denominators(self) -> IntPoly:
        """Primitive integer multiple of self by a positive rational, so
        the sign is preserved everywhere (needed by exact sign tests)."""
        if self.is_zero():
            return IntPoly()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _gcd_int(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = _gcd_int(g, c)
        return IntPoly([c // g for c in ints])


def rat_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd in QQ[z] by the Euclidean algorithm."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if not a.is_zero() else a


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in ZZ[z] (positive leading coefficient)."""
    g = rat_gcd(a.to_rat(), b.to_rat())
    if g.is_zero():
        return IntPoly()
    return g.clear_denominators().primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise PolynomialDomainError("zero polynomial")
    g = gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    q, _ = p.to_rat().divmod(g.to_rat())
    return q.clear_denominators().primitive()


# ---------------------------------------------------------------------------
# reciprocal / palindromic structure
# ---------------------------------------------------------------------------

PALINDROMIC = "palindromic"
ANTI_PALINDROMIC = "anti-palindromic"
NEITHER = "neither"


def reciprocal(u: IntPoly) -> IntPoly:
    """The reciprocal z^deg(u) * u(1/z), i.e. coefficients reversed."""
    if u.is_zero():
        raise PolynomialDomainError("reciprocal of zero polynomial")
    return IntPoly(tuple(reversed(u.coeffs)))


def palindrome_kind(u: IntPoly) -> str:
    """Classify u as palindromic (u† = u), anti-palindromic (u† = -u) or neither."""
    r = reciprocal(u)
    if r == u:
        return PALINDROMIC
    if r == -u:
        return ANTI_PALINDROMIC
    return NEITHER


def trace_polynomial(u: IntPoly) -> IntPoly:
    """Trace polynomial U(w) of a (anti-)palindromic polynomial of even degree.

    For palindromic u of degree 2m this is the unique U of degree m with
    u(z) = z^m U(z + 1/z); for anti-palindromic u of degree 2m the unique
    U of degree m-1 with u(z) = (z-1)(z+1) z^(m-1) U(z + 1/z).  The result
    is verified by back-substitution.
    """
    kind = palindrome_kind(u)
    if u.degree % 2 != 0:
        raise PolynomialDomainError("trace polynomial needs even degree")
    if kind == ANTI_PALINDROMIC:
        v = u // IntPoly([-1, 0, 1])  # divide out (z-1)(z+1)
        return trace_polynomial(v)
    if kind != PALINDROMIC:
        raise PolynomialDomainError("polynomial is neither palindromic nor anti-palindromic")
    m = u.degree // 2
    rem = list(u.coeffs) + [0] * (2 * m + 1 - len(u.coeffs))
    out = [0] * (m + 1)
    # peel off U_k * z^(m-k) (z^2+1)^k from the top coefficient downwards
    zz1 = IntPoly([1, 0, 1])
    for k in range(m, -1, -1):
        c = rem[m + k]
        out[k] = c
        if c:
            term = (zz1 ** k).shift(m - k) * c
            for i, t in enumerate(term.coeffs):
                rem[i] -= t
    if any(rem):
        raise PolynomialDomainError("trace polynomial back-substitution failed")
    return IntPoly(out)


def from_trace_polynomial(tr: IntPoly) -> IntPoly:
    """Palindromic z^m U(z + 1/z) for U = tr of degree m."""
    m = tr.degree
    if m < 0:
        raise PolynomialDomainError("zero trace polynomial")
    zz1 = IntPoly([1, 0, 1])
    acc = IntPoly()
    for k, c in enumerate(tr.coeffs):
        if c:
            acc = acc + (zz1 ** k).shift(m - k) * c
    return acc


def unramified(u: IntPoly) -> bool:
    """True iff |u(1)| = |u(-1)| = 1 (for palindromic u).

    For palindromic even degree 2m this additionally asserts the sign
    relation u(1) u(-1) = (-1)^m, a classical constraint on unramified
    palindromic polynomials.
    """
    if palindrome_kind(u) != PALINDROMIC:
        raise PolynomialDomainError("unramifiedness is defined for palindromic polynomials")
    v1, v2 = u(1), u(-1)
    ok = abs(v1) == 1 and abs(v2) == 1
    if ok and u.degree % 2 == 0:
        m = u.degree // 2
        assert v1 * v2 == (-1) ** m, "sign relation u(1)u(-1) = (-1)^m violated"
    return ok


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    ds = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            ds.append(d)
            if d != n // d:
                ds.append(n // d)
        d += 1
    return sorted(ds)


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial C_n(z), classical convention
    (C_1 = z - 1, C_2 = z + 1)."""
    if n < 1:
        raise PolynomialDomainError("cyclotomic index must be >= 1")
    num = IntPoly([-1] + [0] * (n - 1) + [1])  # z^n - 1
    for d in _divisors(n)[:-1]:
        num = num // cyclotomic(d)
    return num


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            phi -= phi // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        phi -= phi // m
    return phi


def cyclotomic_indices_up_to_degree(bound: int) -> list[int]:
    """All n >= 1 with euler_phi(n) <= bound.  Uses phi(n) >= sqrt(n/2)."""
    out = [n for n in range(1, 2 * bound * bound + 2) if euler_phi(n) <= bound]
    return out


def cyclotomic_salem_split(u: IntPoly) -> tuple[dict[int, int], IntPoly]:
    """Divide out every cyclotomic factor to maximal multiplicity.

    Returns ({index: multiplicity}, cyclotomic-free residual).  Candidate
    indices are the finitely many n with euler_phi(n) <= deg u.
    """
    if not u.is_monic():
        raise PolynomialDomainError("cyclotomic/Salem split needs a monic polynomial")
    part: dict[int, int] = {}
    residual = u
    for n in cyclotomic_indices_up_to_degree(u.degree):
        cn = cyclotomic(n)
        while cn.degree <= residual.degree and cn.divides(residual):
            part[n] = part.get(n, 0) + 1
            residual = residual // cn
    return part, residual


# ---------------------------------------------------------------------------
# resultants (subresultant PRS) and Newton traces
# ---------------------------------------------------------------------------

def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over ZZ."""
    d = a.degree - b.degree
    rem = a * (b.leading() ** (d + 1))
    _, r = rem.divmod(b)
    return r


def resultant(u: IntPoly, v: IntPoly) -> int:
    """Exact resultant Res(u, v) over ZZ via the subresultant PRS.

    Sign convention: Res(u, v) = lc(u)^deg(v) * prod v(alpha_i) over the
    roots of u, so Res(u, v) = (-1)^(deg u * deg v) Res(v, u).  All
    intermediate divisions are exact integer divisions; no floating
    point is involved anywhere.
    """
    if u.is_zero() or v.is_zero():
        raise PolynomialDomainError("resultant of zero polynomial")
    a, b = u, v
    s = 1
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            s = -1
        a, b = b, a
    if b.degree == 0:
        return s * b.coeffs[0] ** a.degree
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        r = _prem(a, b)
        if r.is_zero():
            return 0
        den = g * h ** delta
        a, b = b, IntPoly([c // den for c in r.coeffs])
        g = a.leading()
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta // h ** (delta - 1)
        if b.degree == 0:
            num = b.coeffs[0] ** a.degree
            if a.degree > 1:
                num //= h ** (a.degree - 1)
            return s * num


def newton_traces(phi: IntPoly, n_terms: int) -> list[int]:
    """Power sums sum(lambda_i^n) for n = 1..n_terms of the roots of phi.

    Computed from the logarithmic derivative of the reciprocal polynomial:
    -z d/dz log(phi†(z)) = sum_n Tr(F^n) z^n for the companion F of phi.
    """
    if not phi.is_monic():
        raise PolynomialDomainError("newton_traces needs a monic polynomial")
    rec = reciprocal(phi)  # constant term 1
    # series inverse of rec up to z^n_terms
    inv = [Fraction(1)] + [Fraction(0)] * n_terms
    rc = [Fraction(c) for c in rec.coeffs]
    for k in range(1, n_terms + 1):
        s = Fraction(0)
        for j in range(1, min(k, len(rc) - 1) + 1):
            s += rc[j] * inv[k - j]
        inv[k] = -s
    # -z * rec'(z) * inv(z), coefficients 1..n_terms
    drc = [Fraction((i + 1) * rec[i + 1]) for i in range(len(rc) - 1)]
    out = []
    for n in range(1, n_terms + 1):
        s = Fraction(0)
        for j in range(min(n, len(drc))):
            s += drc[j] * inv[n - 1 - j]
        val = -s
        assert val.denominator == 1
        out.append(int(val))
    return out
