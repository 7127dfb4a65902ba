"""Salem polynomial recognition and the curated Salem data store.

A Salem polynomial is the minimal polynomial of a Salem number: a real
algebraic integer lambda > 1 conjugate to 1/lambda whose remaining
conjugates lie on the unit circle.  Recognition works entirely through
the trace polynomial: lambda and 1/lambda contribute the single real
trace root > 2, unit-circle pairs contribute simple trace roots in
(-2, 2), and irreducibility follows from cyclotomic-freeness by
Kronecker's theorem (any proper palindromic factor with all roots on
the unit circle would be a product of cyclotomics).

The embedded store carries the trace polynomials of every Salem factor
used by the searches in this package; further entries (for example the
large census lists available online) can be merged from a text file,
one entry per line::

    # comment
    d i : c_m c_(m-1) ... c_0

with descending trace-polynomial coefficients, m = d/2.  Every entry,
embedded or external, is re-validated on load.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .intpoly import (
    IntPoly,
    PolynomialDomainError,
    cyclotomic,
    cyclotomic_indices_up_to_degree,
    cyclotomic_salem_split,
    from_trace_polynomial,
    palindrome_kind,
    squarefree_part,
    trace_polynomial,
    unramified,
    PALINDROMIC,
)
from .algnum import AlgebraicReal, algebraic_compare, count_roots_in, isolate_real_roots


class SalemDataError(ValueError):
    """Malformed or invalid Salem list data."""


def is_salem(u: IntPoly) -> bool:
    """True iff u is a Salem polynomial.

    Checks: monic palindromic of even degree >= 4; the trace polynomial
    has exactly one simple real root > 2 and all its other roots simple
    in (-2, 2); and u has no cyclotomic factor.
    """
    if not u.is_monic():
        raise PolynomialDomainError("is_salem expects a monic polynomial")
    if u.degree < 4 or u.degree % 2 != 0:
        return False
    if palindrome_kind(u) != PALINDROMIC:
        return False
    tr = trace_polynomial(u)
    m = tr.degree
    if squarefree_part(tr) != tr.primitive():
        return False
    if count_roots_in(tr, Fraction(2), Fraction(2) + _trace_bound(tr)) != 1:
        return False
    if count_roots_in(tr, Fraction(-2), Fraction(2)) != m - 1:
        return False
    if tr(2) == 0 or tr(-2) == 0:
        return False
    cyclo_part, _ = cyclotomic_salem_split(u)
    return not cyclo_part


def _trace_bound(tr: IntPoly) -> Fraction:
    lc = abs(tr.leading())
    mx = max(abs(c) for c in tr.coeffs)
    return Fraction(mx, lc) + 2


def is_unramified_salem(u: IntPoly) -> bool:
    """Salem and unramified (|u(1)| = |u(-1)| = 1); such polynomials
    necessarily have degree congruent to 2 mod 4, which is asserted."""
    if u.degree < 4 or u.degree % 2 != 0 or palindrome_kind(u) != PALINDROMIC:
        return False
    if not is_salem(u):
        return False
    if not unramified(u):
        return False
    assert u.degree % 4 == 2, "unramified Salem polynomial of degree not 2 mod 4"
    return True


def compute_L0(degree_bound: int = 16) -> set[int]:
    """Indices l >= 3 of unramified cyclotomic polynomials with
    euler_phi(l) <= degree_bound."""
    out = set()
    for l in cyclotomic_indices_up_to_degree(degree_bound):
        if l < 3:
            continue
        c = cyclotomic(l)
        if abs(c(1)) == 1 and abs(c(-1)) == 1:
            out.add(l)
    return out


@dataclass
class SalemEntry:
    """One Salem polynomial, keyed by (degree, index-within-degree)."""

    degree: int
    index: int
    trace_poly: IntPoly
    provenance: str = "embedded-appendix"
    salem_poly: IntPoly = field(init=False)
    lam: AlgebraicReal = field(init=False)

    def __post_init__(self):
        self.salem_poly = from_trace_polynomial(self.trace_poly)
        if self.salem_poly.degree != self.degree:
            raise SalemDataError(
                f"entry ({self.degree},{self.index}): trace polynomial degree mismatch")
        if not is_salem(self.salem_poly):
            raise SalemDataError(
                f"entry ({self.degree},{self.index}): not a Salem polynomial")
        if trace_polynomial(self.salem_poly) != self.trace_poly:
            raise SalemDataError(
                f"entry ({self.degree},{self.index}): trace round-trip failed")
        roots = [r for r in isolate_real_roots(self.salem_poly) if r.sign() > 0]
        lam = [r for r in roots if sign_greater_one(r)]
        assert len(lam) == 1, "Salem polynomial must have a unique root > 1"
        self.lam = lam[0]

    @property
    def key(self) -> tuple[int, int]:
        return (self.degree, self.index)


def sign_greater_one(x: AlgebraicReal) -> bool:
    from .algnum import sign_at

    return sign_at(IntPoly([-1, 1]), x) > 0


# Trace polynomials ST_i^(d)(w), descending coefficients, of the Salem
# factors used explicitly by the searches (i is the rank of the Salem
# number among all Salem numbers of that degree, smallest first).
_EMBEDDED: dict[tuple[int, int], list[int]] = {
    (4, 1): [1, -1, -3],
    (6, 1): [1, 0, -4, -1],
    (8, 1): [1, 0, -4, -1, 1],
    (8, 2): [1, -1, -3, 1, 1],
    (8, 15): [1, -2, -4, 7, 1],
    (8, 16): [1, 0, -5, -2, 1],
    (10, 1): [1, 1, -5, -5, 4, 3],
    (12, 1): [1, -1, -5, 4, 5, -2, -1],
    (14, 1): [1, 0, -7, -1, 13, 4, -4, -1],
    (16, 1): [1, -1, -8, 7, 20, -14, -16, 7, 1],
    (16, 2): [1, 1, -8, -8, 19, 18, -13, -10, 1],
    (16, 3): [1, 0, -8, -1, 20, 4, -16, -3, 2],
    (16, 4): [1, -1, -8, 7, 20, -14, -17, 7, 4],
    (16, 5): [1, 0, -9, -1, 26, 5, -25, -5, 4],
    (18, 22): [1, 1, -10, -11, 32, 38, -33, -42, 4, 7],
    (20, 1): [1, -1, -10, 9, 35, -28, -49, 35, 21, -15, 1],
}


class SalemStore:
    """Validated collection of Salem entries keyed by (degree, index).

    Immutable after load.  Within each degree the indices must agree
    with the ordering of the Salem numbers themselves (index order =
    lambda order), which is enforced on the available subset.
    """

    def __init__(self, entries: list[SalemEntry]):
        self.entries: dict[tuple[int, int], SalemEntry] = {}
        for e in entries:
            if e.key in self.entries:
                if self.entries[e.key].trace_poly != e.trace_poly:
                    raise SalemDataError(f"conflicting data for entry {e.key}")
                continue
            self.entries[e.key] = e
        self._validate_order()

    def _validate_order(self):
        by_degree: dict[int, list[SalemEntry]] = {}
        for e in self.entries.values():
            by_degree.setdefault(e.degree, []).append(e)
        for d, es in by_degree.items():
            es.sort(key=lambda e: e.index)
            for a, b in zip(es, es[1:]):
                if algebraic_compare(a.lam, b.lam) >= 0:
                    raise SalemDataError(
                        f"degree {d}: lambda order disagrees with index order "
                        f"between i={a.index} and i={b.index}")

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self.entries

    def __getitem__(self, key: tuple[int, int]) -> SalemEntry:
        return self.entries[key]

    def get(self, key, default=None):
        return self.entries.get(key, default)

    def __len__(self) -> int:
        return len(self.entries)

    def keys(self):
        return sorted(self.entries)

    def of_degree(self, d: int) -> list[SalemEntry]:
        return [self.entries[k] for k in sorted(self.entries) if k[0] == d]

    def unramified_entries(self) -> list[SalemEntry]:
        return [e for k, e in sorted(self.entries.items())
                if unramified(e.salem_poly)]


def parse_salem_file(text: str, provenance: str = "user-supplied") -> list[SalemEntry]:
    """Parse the Salem list format: `d i : c_m c_(m-1) ... c_0`."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, _, tail = line.partition(":")
            d_s, i_s = head.split()
            d, i = int(d_s), int(i_s)
            coeffs_desc = [int(t) for t in tail.split()]
        except ValueError as exc:
            raise SalemDataError(f"line {lineno}: cannot parse {raw!r}") from exc
        if len(coeffs_desc) != d // 2 + 1:
            raise SalemDataError(
                f"line {lineno}: expected {d // 2 + 1} coefficients for degree {d}")
        tr = IntPoly(list(reversed(coeffs_desc)))
        entries.append(SalemEntry(d, i, tr, provenance=provenance))
    return entries


def load_store(external_path: str | None = None) -> SalemStore:
    """The embedded entries, optionally merged with an external list file."""
    entries = [SalemEntry(d, i, IntPoly(list(reversed(cs))))
               for (d, i), cs in sorted(_EMBEDDED.items())]
    if external_path is not None:
        with open(external_path, "r", encoding="utf-8") as fh:
            entries.extend(parse_salem_file(fh.read()))
    return SalemStore(entries)


LEHMER_KEY = (10, 1)
