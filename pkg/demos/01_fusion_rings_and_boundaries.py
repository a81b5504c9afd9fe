# Fusion rings and weighted isoperimetry
# ======================================
#
# A fusion ring is the integral representation ring of a compact quantum
# group of Kac type: a basis of irreducible labels with integer dimensions,
# a conjugation, and a tensor-product decomposition. Three provider
# families are built in, selected by tag:
#
#   "su2"               labels 0, 1, 2, ... (twice the spin), n_k = k + 1
#   "group:<name>"      group elements, all dimensions 1 (Z, Z^2, Z/m,
#                       ZxZ/2, heisenberg, ...)
#   "finite:S3"         the representation ring of S3: triv, sgn, std

from folnerlab import (ball, boundary_decomposition, check_axioms,
                       conjugate_set, ring_from_tag, weighted_size)

su2 = ring_from_tag("su2")

# The Clebsch-Gordan rule: spin-1/2 times spin-1/2 is spin 0 plus spin 1.
print("1 x 1 in su2:", su2.product_support(1, 1))

# Weighted size |F| = sum of n_u^2. For su2 the window {0..2} weighs
# 1 + 4 + 9 = 14.
print("|{0,1,2}| =", weighted_size(su2, [0, 1, 2]))

# Interior, boundary, outer boundary and symmetric boundary of a window
# relative to a generating set. For su2 with S = {1} the window {0..5}
# loses only its top label to the boundary, and the outer boundary is the
# next label up -- computed via Frobenius reciprocity, never by touching
# the (infinite) complement.
dec = boundary_decomposition(su2, range(6), [1])
print("interior  :", sorted(dec.interior))
print("boundary  :", sorted(dec.boundary))
print("coboundary:", sorted(dec.coboundary))
print("symmetric :", sorted(dec.symmetric_boundary))

# Balls are the canonical exhaustion: supports of bounded products of
# S u conj(S) u {e}. They are monotone and conjugation-closed.
print("ball(S={1}, r=3) in su2:", sorted(ball(su2, [1], 3)))

heis = ring_from_tag("group:heisenberg")
print("heisenberg ball sizes:",
      [len(ball(heis, [(1, 0, 0), (0, 1, 0)], r)) for r in range(6)])

# Conjugation is inversion on group labels and trivial for self-conjugate
# irreducibles.
Z = ring_from_tag("group:Z")
print("conj {1, 2} in Z:", sorted(conjugate_set(Z, [1, 2])))

# The fusion axioms (dimension multiplicativity and Frobenius reciprocity)
# are machine-checkable on any finite label set.
report = check_axioms(su2, range(13))
print("su2 axioms ok on labels <= 12:", report["ok"],
      f"({report['pairs_checked']} pairs)")
