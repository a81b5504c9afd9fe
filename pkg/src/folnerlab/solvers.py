"""Constructive solvers built on the restricted multiplication matrices.

* zero_divisor_search: a nonzero kernel vector of multiplication by ``a``
  restricted to a window is itself an algebra element annihilated by ``a``
  on that side, so it is returned as an explicit certificate. An exhausted
  search returns the (all zero so far) kernel-dimension sequence instead.

* kernel_dim_sequence: the certified brackets of the kernel dimension along
  growing ball windows.

* ore_pair: solves a t = s b by finding a window F with
  |bd_S F| < 1/2 |F| (S the joint support), where the map
  (x, y) -> a x - s y out of W_int + W_int into W_F has more columns than
  rows in weighted counts and therefore a nonzero kernel. If the kernel
  vector found has t = 0, then s b = 0 with b != 0 is itself a zero-divisor
  certificate and is returned instead (pass prefer_ore=True to scan the
  whole kernel basis for a usable t first). Every returned object is
  re-verified by a full multiplication, exactly in exact mode.

Left multiplications use the left-sided interior throughout; on commutative
providers it coincides with the right one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactla
from .folner import ExhaustionReport, ProfileRow
from .fusion import ball, boundary_decomposition, weighted_size
from .polalg import (AlgebraElement, AlgebraError, MatrixOverPol,
                     restricted_mult_matrix)
from .reldim import DimensionEstimate, kernel_dim_estimate
from .scalars import EXACT

FLOAT_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class ZeroDivisorCertificate:
    a: AlgebraElement
    witness: AlgebraElement
    side: str          # "left": a * witness = 0; "right": witness * a = 0
    window: tuple
    radius: int

    def product_is_zero(self) -> bool:
        a, b = self.a, self.witness
        prod = a * b if self.side == "left" else b * a
        if a.algebra.mode == EXACT:
            return prod.is_zero()
        return prod.norm_max() < FLOAT_ZERO_TOL


@dataclass(frozen=True)
class NotFoundReport:
    side: str
    max_radius: int
    kernel_dims: tuple  # (radius, Fraction) pairs, all zero so far

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "max_radius": self.max_radius,
            "kernel_dims": [[r, str(d)] for r, d in self.kernel_dims],
        }


@dataclass(frozen=True)
class OrePair:
    a: AlgebraElement
    s: AlgebraElement
    t: AlgebraElement
    b: AlgebraElement
    window: tuple
    radius: int

    def residual(self) -> AlgebraElement:
        return self.a * self.t - self.s * self.b


def _mult_side(side: str) -> str:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return side


def zero_divisor_search(a: AlgebraElement, side: str = "left",
                        max_radius: int = 8):
    """Search growing ball windows for b != 0 with a b = 0 (or b a = 0)."""
    _mult_side(side)
    if a.is_zero():
        raise AlgebraError("zero element is a trivial zero-divisor; need a != 0")
    algebra = a.algebra
    S = a.support()
    T = MatrixOverPol.from_element(a)
    dims = []
    for radius in range(max_radius + 1):
        F = ball(algebra.ring, S, radius)
        op = restricted_mult_matrix(T, F, side=side)
        kernel = op.kernel_elements()
        if kernel:
            b = kernel[0][0]
            cert = ZeroDivisorCertificate(
                a=a, witness=b, side=side,
                window=algebra.ring.sorted_labels(F), radius=radius)
            if b.is_zero() or not cert.product_is_zero():
                raise RuntimeError("kernel vector failed certificate verification")
            return cert
        dims.append((radius, Fraction(0)))
    return NotFoundReport(side=side, max_radius=max_radius,
                          kernel_dims=tuple(dims))


def kernel_dim_sequence(a: AlgebraElement, side: str = "left",
                        radii=(0, 1, 2, 3, 4)) -> list[tuple[int, DimensionEstimate]]:
    """Certified kernel-dimension brackets over the ball windows at ``radii``."""
    _mult_side(side)
    if a.is_zero():
        raise AlgebraError("need a != 0")
    algebra = a.algebra
    S = a.support()
    T = MatrixOverPol.from_element(a)
    out = []
    for radius in radii:
        F = ball(algebra.ring, S, radius)
        out.append((radius, kernel_dim_estimate(T, F, side=side)))
    return out


def ore_pair(a: AlgebraElement, s: AlgebraElement, max_radius: int = 16,
             prefer_ore: bool = False):
    """Find (t, b) with a t = s b and t != 0, or a zero-divisor certificate.

    The window grows radius by radius until |bd_S F| < 1/2 |F| (left-sided
    boundary, since both multiplications act on the left); the resulting
    column surplus guarantees a nonzero kernel before any solving happens.
    """
    if a.is_zero() or s.is_zero():
        raise AlgebraError("ore_pair needs nonzero a and s")
    if a.algebra is not s.algebra:
        raise AlgebraError("a and s live in different algebras")
    algebra = a.algebra
    ring = algebra.ring
    S = a.support() | s.support()
    profile = []
    chosen = None
    for radius in range(max_radius + 1):
        F = ball(ring, S, radius)
        dec = boundary_decomposition(ring, F, S, side="left")
        fw = weighted_size(ring, F)
        bw = weighted_size(ring, dec.boundary)
        profile.append(ProfileRow(
            radius=radius, window_weight=fw, boundary_weight=bw,
            symmetric_boundary_weight=bw, ratio=Fraction(bw, fw)))
        if 2 * bw < fw:
            chosen = (radius, F, dec, fw, bw)
            break
    if chosen is None:
        return ExhaustionReport(
            ring=ring.tag, S=ring.sorted_labels(S), epsilon=Fraction(1, 2),
            max_radius=max_radius, strategy="ore-ball", profile=tuple(profile))
    radius, F, dec, fw, bw = chosen
    iw = weighted_size(ring, dec.interior)
    if not 2 * iw > fw:  # the counting guarantee behind the kernel
        raise RuntimeError("window bookkeeping is broken: 2|int| <= |F|")

    ra = restricted_mult_matrix(MatrixOverPol.from_element(a), F, side="left", S=S)
    rs = restricted_mult_matrix(MatrixOverPol.from_element(s), F, side="left", S=S)
    alpha = _hstack(ra.matrix, _negate(rs.matrix))
    kernel = exactla.nullspace_basis(alpha)
    if not kernel:
        raise RuntimeError("column surplus did not produce a kernel; backend broken")
    d = ra.matrix.shape[1]
    picked = None
    for vec in kernel if prefer_ore else kernel[:1]:
        (t,) = ra.elements_from_coords(vec[:d])
        (b,) = rs.elements_from_coords(vec[d:])
        if not t.is_zero():
            picked = (t, b)
            break
        fallback = (t, b)
    if picked is None:
        # t = 0 forces s b = 0 with b != 0, an explicit certificate that s
        # is a zero divisor (impossible when the algebra is a domain)
        _, b = fallback
        cert = ZeroDivisorCertificate(
            a=s, witness=b, side="left",
            window=ring.sorted_labels(F), radius=radius)
        if b.is_zero() or not cert.product_is_zero():
            raise RuntimeError("zero-divisor fallback failed verification")
        return cert
    t, b = picked
    pair = OrePair(a=a, s=s, t=t, b=b, window=ring.sorted_labels(F), radius=radius)
    residual = pair.residual()
    ok = residual.is_zero() if algebra.mode == EXACT \
        else residual.norm_max() < FLOAT_ZERO_TOL
    if not ok:
        raise RuntimeError("ore pair failed residual verification")
    return pair


def _negate(M: exactla.ScalarMatrix) -> exactla.ScalarMatrix:
    if M.mode == EXACT:
        return exactla.ScalarMatrix(EXACT, M.shape,
                                    entries={k: -v for k, v in M.entries.items()})
    return exactla.ScalarMatrix(M.mode, M.shape, array=-M.array)


def _hstack(A: exactla.ScalarMatrix, B: exactla.ScalarMatrix) -> exactla.ScalarMatrix:
    if A.mode != B.mode or A.shape[0] != B.shape[0]:
        raise ValueError("incompatible blocks")
    rows = A.shape[0]
    cols = A.shape[1] + B.shape[1]
    if A.mode == EXACT:
        entries = dict(A.entries)
        for (r, c), v in B.entries.items():
            entries[(r, c + A.shape[1])] = v
        return exactla.ScalarMatrix(EXACT, (rows, cols), entries=entries)
    import numpy as np

    return exactla.ScalarMatrix(A.mode, (rows, cols),
                                array=np.hstack([A.array, B.array]))
