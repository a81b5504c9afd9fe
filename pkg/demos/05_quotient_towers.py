# Quotient towers and dimension approximation
# ===========================================
#
# Reducing Z mod an increasing chain of moduli (or Z^d, Z x Z/2, the
# Heisenberg group mod m) gives a tower of finite quotients. Once a map is
# injective on the relevant finite label set, the local picture transports
# verbatim: Haar values stabilize, supports and boundaries push forward,
# and the finite-quotient kernel dimension approximates the one upstairs
# within an explicit boundary-ratio bound.

from folnerlab import (MatrixOverPol, algebra_for, ball, group_quotient_tower,
                       haar_approx_sequence, local_injectivity_check,
                       tower_kernel_dims)

AZ = algebra_for("group:Z")

# Injectivity on a window {-N..N} needs the modulus to exceed 2N.
tower = group_quotient_tower(AZ, [3, 9, 27, 81])
print("injective on {-4..4}? ",
      [local_injectivity_check(m, range(-4, 5)) for m in tower])

# Haar approximation: h(g^3) = 0, but the level m = 3 sees g^3 = e and
# reports 1 -- the pre-injectivity values may be anything. From the first
# level injective on supp(a) u {e} all values equal h(a).
a = AZ.group_element({3: 1})
rep = haar_approx_sequence(a, group_quotient_tower(AZ, [3, 9]))
print("haar values of g^3 along {3, 9}:", [str(v) for v in rep.values],
      "stable from index", rep.first_injective_index)

# The approximation theorem at desk scale: T = 1 - g, window {-10..10}.
# Quotient kernel dimensions are exactly 1/m (one vanishing DFT eigenvalue)
# and converge to the true dimension 0; at every omega-injective level the
# transport identities and the 2n|bd|/|F| bound are verified exactly.
T = MatrixOverPol.from_element(AZ.group_element({0: 1, 1: -1}))
F = ball(AZ.ring, T.support(), 10)
report = tower_kernel_dims(T, tower, F)
print("\nomega set:", list(report.omega)[:3], "...", list(report.omega)[-3:])
print("source bracket: [%s, %s], transport bound %s"
      % (report.source_estimate.lower, report.source_estimate.upper,
         report.transport_bound))
for level in report.levels:
    print("  %-12s dim = %-5s omega-injective = %-5s transport gap = %s"
          % (level.target, level.quotient_dim, level.omega_injective,
             level.transport_gap))

# The same machinery runs on Z x Z/2 (where the projection (e + t)/2 keeps
# dimension exactly 1/2 at every level) and on the Heisenberg group.
AXZ = algebra_for("group:ZxZ/2")
from fractions import Fraction

p = (AXZ.group_element((0, 0)) + AXZ.group_element((0, 1))).scale(Fraction(1, 2))
rep2 = tower_kernel_dims(MatrixOverPol.from_element(p),
                         group_quotient_tower(AXZ, [3, 9, 27]),
                         ball(AXZ.ring, p.support(), 1))
print("\n(e+t)/2 quotient dims:", [str(l.quotient_dim) for l in rep2.levels])
print("omega =", list(rep2.omega))
