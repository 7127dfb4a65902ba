"""Salem polynomials and their trace polynomials.

A Salem number is a real algebraic integer lambda > 1, conjugate to
1/lambda, whose other conjugates all lie on the unit circle.  Its
minimal polynomial is palindromic, and dividing by z^(deg/2) turns it
into a polynomial in w = z + 1/z -- the trace polynomial -- with one
real root > 2 (carrying lambda) and the rest in (-2, 2) (carrying the
unit-circle pairs).  Everything here is exact integer arithmetic.
"""

from k3siegel.intpoly import IntPoly, cyclotomic, from_trace_polynomial, trace_polynomial
from k3siegel.salemlib import compute_L0, is_salem, is_unramified_salem, load_store

# Lehmer's polynomial: the smallest known Salem number
lehmer = IntPoly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
print("Lehmer's polynomial:", lehmer.text())
print("is a Salem polynomial:", is_salem(lehmer))
print("unramified (|u(1)| = |u(-1)| = 1):", is_unramified_salem(lehmer))
print("trace polynomial:", trace_polynomial(lehmer).text())

# the embedded store carries every Salem factor the searches use,
# keyed by (degree, rank of the Salem number within that degree)
store = load_store()
print("\nembedded Salem entries:", store.keys())
lam = store[(10, 1)].lam
print("Lehmer's number  ~", lam.approx(10))
print("degree-20 lambda ~", store[(20, 1)].lam.approx(10))

# trace polynomial round trip
st = store[(20, 1)].trace_poly
assert from_trace_polynomial(st) == store[(20, 1)].salem_poly
print("\ntrace round-trip holds for the degree-20 entry")

# cyclotomic polynomials are never Salem (all roots on the circle)
print("C12 =", cyclotomic(12).text(), "is Salem:", is_salem(cyclotomic(12)))

# the unramified cyclotomic indices up to degree 16
print("\nunramified cyclotomic indices (degree <= 16):", sorted(compute_L0(16)))
