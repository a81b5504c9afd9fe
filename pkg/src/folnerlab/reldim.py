"""Relative dimension of coefficient subspaces and certified kernel estimates.

For a finite conjugation-closed window F, the dimension of a subspace
K <= W_F^n relative to F is |F|^{-1} dim_C(K), a number in [0, n]. For a
nonzero matrix T over the algebra with support S, the kernel of the
restricted multiplication operator W_{int_S(F)}^n -> W_F^n gives a certified
two-sided estimate of the Murray-von Neumann kernel dimension:

    lower = |F|^{-1} nullity,   upper = lower + n |bd_S(F)| / |F|,

all weighted counts exact integers, so the bracket is an exact rational
interval. On finite providers the full multiplication operator gives the
dimension outright, which serves as the brute-force oracle for the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactla
from .fusion import boundary_decomposition, conjugate_set, weighted_size
from .polalg import (AlgebraElement, AlgebraError, MatrixOverPol,
                     full_mult_matrix, restricted_mult_matrix)


@dataclass(frozen=True)
class DimensionEstimate:
    """Certified interval [lower, upper] for a Murray-von Neumann dimension."""

    lower: Fraction
    upper: Fraction
    window: tuple
    n: int
    boundary_ratio: Fraction
    window_weight: int
    boundary_weight: int
    interior_weight: int
    nullity: int
    rank: int
    side: str
    degenerate: bool = False
    rank_sum_ok: bool = True

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper

    def width(self) -> Fraction:
        return self.upper - self.lower

    def to_json(self) -> dict:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "n": self.n,
            "boundary_ratio": str(self.boundary_ratio),
            "window_weight": self.window_weight,
            "boundary_weight": self.boundary_weight,
            "interior_weight": self.interior_weight,
            "nullity": self.nullity,
            "rank": self.rank,
            "side": self.side,
            "degenerate": self.degenerate,
            "window": list(self.window),
        }


def _require_conj_closed(ring, F):
    F = ring.label_set(F)
    if conjugate_set(ring, F) != F:
        raise ValueError("window must be conjugation-closed")
    return F


def coordinates_in_window(algebra, vectors, F, n: int):
    """Coordinate rows of vectors of W_F^n in the orthonormal window basis.

    Vectors may be AlgebraElements (n = 1) or n-tuples of them; raw
    coordinate rows of the right length pass through unchanged. A component
    supported outside F is a precondition error.
    """
    from .polalg import _basis_triples

    ring = algebra.ring
    triples = _basis_triples(ring, F)
    index = {(comp, *t): k for comp in range(n)
             for k, t in enumerate(triples, start=comp * len(triples))}
    dim = n * len(triples)
    rows = []
    for v in vectors:
        if isinstance(v, AlgebraElement):
            v = (v,)
        if isinstance(v, (tuple, list)) and v and isinstance(v[0], AlgebraElement):
            if len(v) != n:
                raise ValueError(f"expected {n} components, got {len(v)}")
            row = [None] * dim
            for comp, elem in enumerate(v):
                if elem.algebra is not algebra:
                    raise AlgebraError("vector component in a different algebra")
                for key, c in elem._coeffs.items():
                    k = index.get((comp, *key))
                    if k is None:
                        raise ValueError(
                            f"vector supported outside the window at {key[0]!r}")
                    row[k] = c
            rows.append([c if c is not None else 0 for c in row])
        else:
            if len(v) != dim:
                raise ValueError(f"coordinate vector has length {len(v)}, expected {dim}")
            rows.append(list(v))
    return rows


def relative_dimension(algebra, vectors, F, n: int = 1) -> Fraction:
    """dim_F of the span of the given vectors of W_F^n: |F|^{-1} dim_C(span)."""
    ring = algebra.ring
    F = _require_conj_closed(ring, F)
    rows = coordinates_in_window(algebra, vectors, F, n)
    if not rows:
        return Fraction(0)
    M = exactla.ScalarMatrix.from_rows(rows, algebra.mode)
    rank, _ = exactla.rank_nullity(M)
    return Fraction(rank, weighted_size(ring, F))


def kernel_dim_estimate(T: MatrixOverPol, F, side: str = "right") -> DimensionEstimate:
    """The error sandwich for dim ker of multiplication by T over window F."""
    if T.is_zero():
        raise AlgebraError("kernel estimate needs a nonzero matrix")
    ring = T.algebra.ring
    F = _require_conj_closed(ring, F)
    S = T.support()
    dec = boundary_decomposition(ring, F, S, side=side)
    fw = weighted_size(ring, F)
    bw = weighted_size(ring, dec.boundary)
    iw = weighted_size(ring, dec.interior)
    n = T.n
    window = ring.sorted_labels(F)
    if not dec.interior:
        return DimensionEstimate(
            lower=Fraction(0), upper=Fraction(n), window=window, n=n,
            boundary_ratio=Fraction(bw, fw), window_weight=fw,
            boundary_weight=bw, interior_weight=0, nullity=0, rank=0,
            side=side, degenerate=True)
    op = restricted_mult_matrix(T, F, side=side)
    rank, nullity = exactla.rank_nullity(op.matrix)
    lower = Fraction(nullity, fw)
    ratio = Fraction(bw, fw)
    # dimension theorem on W_{int}^n, in weighted counts
    rank_sum_ok = (nullity + rank == n * iw)
    if not rank_sum_ok:
        raise RuntimeError("rank-sum identity violated; kernel backend is broken")
    return DimensionEstimate(
        lower=lower, upper=lower + n * ratio, window=window, n=n,
        boundary_ratio=ratio, window_weight=fw, boundary_weight=bw,
        interior_weight=iw, nullity=nullity, rank=rank, side=side,
        rank_sum_ok=rank_sum_ok)


def exact_mvn_dim_finite(T: MatrixOverPol, side: str = "right") -> Fraction:
    """Exact kernel dimension of multiplication by T on a finite provider."""
    ring = T.algebra.ring
    if not ring.is_finite:
        raise AlgebraError(f"ring {ring.tag} is infinite; use kernel_dim_estimate")
    if T.is_zero():
        return Fraction(T.n)
    op = full_mult_matrix(T, side=side)
    _, nullity = exactla.rank_nullity(op.matrix)
    return Fraction(nullity, weighted_size(ring, ring.irreducibles()))
