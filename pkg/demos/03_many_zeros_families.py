#!/usr/bin/env python3
"""Hypersurfaces with many rational zeros.

The product family mu0 * mu1 * prod_i (M0 - t_i M1), built from a primitive
pair of monomials, has a closed-form zero count.  On P(2,3,5) it beats the
generic lower-bound construction, showing that products of binary forms need
not be extremal once the dimension exceeds one.
"""

from wprm import (GF, FamilySpec, PrimitivePair, build_family, count_zeros,
                  family_zero_count, format_polynomial, lower_bound_witness,
                  max_zeros, max_zeros_lower_bound, space, torus_closed_form,
                  torus_count)

F5 = GF(5)
ws = (2, 3, 5)
sp = space(ws, F5)

# X0*X1*X2 * prod over all nonzero t of (X0 X1 - t X2): degree 30
spec = FamilySpec(PrimitivePair((1, 1, 0), (0, 0, 1)),
                  t=(1, 2, 3, 4), mu0=(1, 1, 0), mu1=(0, 0, 1))
F = build_family(spec, ws, F5)
print("F =", format_polynomial(F), " degree", F.degree)
print("zeros:", count_zeros(F, sp), "= closed form",
      family_zero_count(spec, ws, 5), "= 7q - 4")

# the binary-form product of the same degree has fewer zeros: 5q + 1
spec2 = FamilySpec(PrimitivePair((3, 0, 0), (0, 2, 0)),
                   t=(1, 2, 3), mu0=(3, 0, 0), mu1=(0, 2, 0))
print("binary-form product zeros:", count_zeros(build_family(spec2, ws, F5), sp),
      "= 5q + 1 =", 5 * 5 + 1)
print("generic lower bound for degree 30:",
      max_zeros_lower_bound(ws, 30, 5))

# closed-form counts rest on a torus count: coprime exponents give
# (q-1)^(s0+s1-1) solutions regardless of the coefficients
print("\ntorus count, x^3 = 2 y^2 over GF(7):",
      torus_count((3,), (2,), 1, 2, GF(7)),
      "= closed form", torus_closed_form((3,), (2,), 7))

# exhaustive search certifies small maxima exactly
res = max_zeros((1, 1, 2), GF(2), 2)
print(f"\nmax zeros of a degree-2 form on P(1,1,2)(F_2): {res.value} "
      f"(searched {res.candidates} classes)")
print("a maximiser:", format_polynomial(res.witness))

# witness polynomials attain the lower bound exactly
W = lower_bound_witness((1, 1, 2), 4, GF(3))
print("\nwitness of degree 4 on P(1,1,2)(F_3):", format_polynomial(W))
print("zeros:", count_zeros(W, space((1, 1, 2), GF(3))),
      "= bound", max_zeros_lower_bound((1, 1, 2), 4, 3))
