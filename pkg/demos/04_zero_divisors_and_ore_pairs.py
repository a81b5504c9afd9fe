# Zero-divisor certificates and Ore pairs
# =======================================
#
# If multiplication by a restricted to a window has a kernel vector, that
# vector IS an algebra element annihilated by a -- an explicit zero-divisor
# witness. Conversely, windows with small boundary force kernels by a
# counting argument, which is what the constructive Ore solver exploits.

from fractions import Fraction

from folnerlab import algebra_for, kernel_dim_sequence, ore_pair, zero_divisor_search

# e - t is a zero divisor in C[Z x Z/2]: (e - t)(e + t) = e - t^2 = 0.
A = algebra_for("group:ZxZ/2")
e = A.group_element((0, 0))
t = A.group_element((0, 1))
cert = zero_divisor_search(e - t, side="left", max_radius=2)
print("witness for e - t found at radius", cert.radius)
print("  b =", cert.witness.terms())
print("  (e - t) * b == 0:", ((e - t) * cert.witness).is_zero())

# 1 - g over Z is regular; the search reports the all-zero kernel
# dimension sequence instead of inventing a witness.
AZ = algebra_for("group:Z")
report = zero_divisor_search(AZ.group_element({0: 1, 1: -1}), max_radius=6)
print("\n1 - g over Z:", type(report).__name__,
      "dims", [str(d) for _, d in report.kernel_dims])

# The kernel-dimension sequence of the projection (e + t)/2 locks onto 1/2
# with bracket width zero from the first useful window on.
p = (e + t).scale(Fraction(1, 2))
print("\n(e + t)/2 brackets:",
      [(N, str(est.lower), str(est.upper))
       for N, est in kernel_dim_sequence(p, side="left", radii=range(1, 4))])

# Ore pairs: given a and s, find t != 0 and b with a t = s b. The solver
# picks a window with |bd_S F| < 1/2 |F| (so the map (x, y) -> ax - sy has
# more columns than rows) and extracts a kernel vector. On the Heisenberg
# group algebra -- a noncommutative domain -- this is genuinely nontrivial.
AH = algebra_for("group:heisenberg")
one = AH.one()
x = AH.group_element((1, 0, 0))
y = AH.group_element((0, 1, 0))
pair = ore_pair(one - x, one - y, max_radius=10)
print("\nOre pair for a = 1 - x, s = 1 - y on Heisenberg:")
print("  window radius", pair.radius, "with", len(pair.window), "labels")
print("  t has", len(pair.t.terms()), "terms, b has", len(pair.b.terms()))
print("  a t - s b == 0 exactly:", pair.residual().is_zero())
