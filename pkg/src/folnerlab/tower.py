"""Quotient towers onto finite group providers and dimension approximation.

A quotient map pushes a group provider onto a finite one by reducing normal
forms (Z^d onto (Z/m)^d, Z x Z/2 onto (Z/m) x Z/2, Heisenberg onto Heisenberg
mod m); a tower is an increasing chain of such maps whose moduli divide each
other, so the connecting reductions exist and commute.

The map is injective on a finite label set F when F pushes forward without
collisions. On the omega set

    Omega = F u S u  U_{x in F, s in S} supp(x * s)

injectivity transports the whole local picture: supports, boundaries and
weighted sizes push forward unchanged, the restricted operators become
unitarily equivalent, and the finite-quotient kernel dimension lands within
2 n |bd_S F| / |F| of the window estimate upstairs. ``tower_kernel_dims``
computes all of this per level and re-checks each identity exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fusion import GroupFusionRing, boundary_decomposition, weighted_size
from .groups import CyclicProductGroup, HeisenbergGroup
from .polalg import (AlgebraElement, AlgebraError, MatrixOverPol, algebra_for)
from .reldim import (DimensionEstimate, exact_mvn_dim_finite,
                     kernel_dim_estimate)
from .util import map_ordered


class QuotientMap:
    """Surjection of a group provider onto a finite group provider."""

    def __init__(self, source, target):
        self.source = source          # PolAlgebra
        self.target = target          # PolAlgebra, finite provider
        sring, tring = source.ring, target.ring
        if not isinstance(sring, GroupFusionRing) or not isinstance(tring, GroupFusionRing):
            raise AlgebraError("quotient maps are implemented for group providers")
        if not tring.is_finite:
            raise AlgebraError("quotient target must be finite")
        _check_reduction_compatible(sring.group, tring.group)
        if self.push_label(sring.unit) != tring.unit:
            raise AlgebraError("quotient map does not preserve the unit")

    def push_label(self, u):
        return self.target.ring.normalize(u)

    def push_set(self, F) -> frozenset:
        return frozenset(self.push_label(u) for u in F)

    def push_element(self, a: AlgebraElement) -> AlgebraElement:
        if a.algebra is not self.source:
            raise AlgebraError("element does not live in the tower source")
        out = {}
        for (g, _, _), c in a._coeffs.items():
            k = (self.push_label(g), 1, 1)
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return AlgebraElement(self.target, out)

    def push_matrix(self, T: MatrixOverPol) -> MatrixOverPol:
        return MatrixOverPol(self.target,
                             [[self.push_element(e) for e in row] for row in T.entries])

    def injective_on(self, F) -> bool:
        F = self.source.ring.label_set(F)
        return len(self.push_set(F)) == len(F)

    def __repr__(self):
        return f"<QuotientMap {self.source.tag} ->> {self.target.tag}>"


def _check_reduction_compatible(sg, tg):
    if isinstance(sg, HeisenbergGroup) and isinstance(tg, HeisenbergGroup):
        if sg.modulus and tg.modulus and sg.modulus % tg.modulus:
            raise AlgebraError(
                f"no reduction heisenberg/{sg.modulus} -> heisenberg/{tg.modulus}")
        return
    if isinstance(sg, CyclicProductGroup) and isinstance(tg, CyclicProductGroup):
        if len(sg.moduli) != len(tg.moduli):
            raise AlgebraError("factor counts differ")
        for ms, mt in zip(sg.moduli, tg.moduli):
            if mt == 0 or (ms and ms % mt):
                raise AlgebraError(f"no reduction of factor Z/{ms or 'Z'} -> Z/{mt}")
        return
    raise AlgebraError("source and target group families differ")


class QuotientTower:
    """Increasing chain of quotient maps with commuting connecting reductions."""

    def __init__(self, maps: list[QuotientMap]):
        if not maps:
            raise AlgebraError("tower needs at least one level")
        src = maps[0].source
        if any(m.source is not src for m in maps):
            raise AlgebraError("all levels must share one source algebra")
        for low, high in zip(maps, maps[1:]):
            # the connecting map exists iff the lower level is a reduction
            # of the higher one
            _check_reduction_compatible(high.target.ring.group, low.target.ring.group)
        self.source = src
        self.maps = list(maps)

    def connecting_label_map(self, i: int, j: int):
        """Reduction from level j down to level i (i <= j), on labels."""
        if not 0 <= i <= j < len(self.maps):
            raise IndexError("levels out of range")
        target = self.maps[i].target.ring
        return target.normalize

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)


def group_quotient_tower(source, moduli) -> QuotientTower:
    """Built-in towers: Z^d -> (Z/m)^d, Z x Z/2 -> (Z/m) x Z/2, Heisenberg mod m."""
    algebra = algebra_for(source) if isinstance(source, str) else source
    ring = algebra.ring
    if not isinstance(ring, GroupFusionRing):
        raise AlgebraError("towers are implemented for group providers")
    moduli = [int(m) for m in moduli]
    if any(m < 2 for m in moduli):
        raise AlgebraError("moduli must be >= 2")
    for low, high in zip(moduli, moduli[1:]):
        if high % low:
            raise AlgebraError(f"moduli must form a divisibility chain, {low} does not divide {high}")
    maps = []
    for m in moduli:
        g = ring.group
        if isinstance(g, HeisenbergGroup):
            tag = f"group:heisenberg/{m}"
        else:
            tag = "group:" + "x".join(
                f"Z/{m}" if ms == 0 else f"Z/{ms}" for ms in g.moduli)
        maps.append(QuotientMap(algebra, algebra_for(tag)))
    return QuotientTower(maps)


def omega_set(ring, F, S) -> frozenset:
    """Omega = F u S u union of supp(x * s) over x in F, s in S."""
    F = ring.label_set(F)
    S = ring.label_set(S)
    out = set(F) | set(S)
    for x in F:
        for s in S:
            out.update(ring.product(x, s))
    return frozenset(out)


def local_injectivity_check(qmap: QuotientMap, F) -> bool:
    """True iff the map pushes F injectively into the target's labels."""
    return qmap.injective_on(F)


@dataclass(frozen=True)
class HaarReport:
    values: tuple                 # per-level Haar values of the pushforward
    source_value: object          # h(a)
    first_injective_index: int | None  # w.r.t. supp(a) u {e}
    eventually_equal: bool

    def to_json(self) -> dict:
        from .serialize import scalar_to_json

        return {
            "values": [scalar_to_json(v) for v in self.values],
            "source_value": scalar_to_json(self.source_value),
            "first_injective_index": self.first_injective_index,
            "eventually_equal": self.eventually_equal,
        }


def haar_approx_sequence(a: AlgebraElement, tower: QuotientTower) -> HaarReport:
    """Haar values of the pushforwards, with the eventual-equality marker.

    The marker is the first level injective on supp(a) u {e}: from there on
    no term of a can collide with another or land on the trivial label, so
    every later value equals h(a) (and this is asserted).
    """
    if a.algebra is not tower.source:
        raise AlgebraError("element does not live in the tower source")
    h = a.haar()
    marker_set = a.support() | {a.algebra.ring.unit}
    values = []
    first_idx = None
    for idx, qmap in enumerate(tower):
        values.append(qmap.push_element(a).haar())
        if first_idx is None and qmap.injective_on(marker_set):
            first_idx = idx
    eventually = first_idx is not None and all(
        v == h for v in values[first_idx:])
    if first_idx is not None and not eventually:
        raise RuntimeError("Haar eventual-equality violated; pushforward broken")
    return HaarReport(values=tuple(values), source_value=h,
                      first_injective_index=first_idx, eventually_equal=eventually)


@dataclass(frozen=True)
class LevelReport:
    target: str
    omega_injective: bool
    quotient_dim: Fraction
    support_pushforward_ok: bool | None
    boundary_pushforward_ok: bool | None
    weighted_sizes_ok: bool | None
    transport_ok: bool | None
    transport_gap: Fraction | None

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "omega_injective": self.omega_injective,
            "quotient_dim": str(self.quotient_dim),
            "support_pushforward_ok": self.support_pushforward_ok,
            "boundary_pushforward_ok": self.boundary_pushforward_ok,
            "weighted_sizes_ok": self.weighted_sizes_ok,
            "transport_ok": self.transport_ok,
            "transport_gap": None if self.transport_gap is None else str(self.transport_gap),
        }


@dataclass(frozen=True)
class TowerReport:
    ring: str
    window: tuple
    omega: tuple
    source_estimate: DimensionEstimate
    transport_bound: Fraction     # 2 n |bd_S F| / |F|
    levels: tuple

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "window": list(self.window),
            "omega": list(self.omega),
            "source_estimate": self.source_estimate.to_json(),
            "transport_bound": str(self.transport_bound),
            "levels": [lv.to_json() for lv in self.levels],
            "quotient_dims": [str(lv.quotient_dim) for lv in self.levels],
        }


def tower_kernel_dims(T: MatrixOverPol, tower: QuotientTower, F,
                      side: str = "right") -> TowerReport:
    """Per-level exact quotient kernel dimensions with all transport checks."""
    if T.is_zero():
        raise AlgebraError("tower approximation needs a nonzero matrix")
    if T.algebra is not tower.source:
        raise AlgebraError("matrix does not live in the tower source")
    ring = T.algebra.ring
    F = ring.label_set(F)
    S = T.support()
    omega = omega_set(ring, F, S)
    estimate = kernel_dim_estimate(T, F, side=side)
    dec = boundary_decomposition(ring, F, S, side=side)
    bound = 2 * T.n * Fraction(weighted_size(ring, dec.boundary),
                               weighted_size(ring, F))

    def level(qmap: QuotientMap) -> LevelReport:
        injective = qmap.injective_on(omega)
        Ti = qmap.push_matrix(T)
        qdim = exact_mvn_dim_finite(Ti, side=side)
        if not injective:
            return LevelReport(target=qmap.target.tag, omega_injective=False,
                               quotient_dim=qdim, support_pushforward_ok=None,
                               boundary_pushforward_ok=None, weighted_sizes_ok=None,
                               transport_ok=None, transport_gap=None)
        tring = qmap.target.ring
        Si = qmap.push_set(S)
        Fi = qmap.push_set(F)
        supp_ok = Ti.support() == Si
        dec_i = boundary_decomposition(tring, Fi, Si, side=side)
        bd_ok = qmap.push_set(dec.boundary) == dec_i.boundary
        sizes_ok = all(
            weighted_size(tring, qmap.push_set(E)) == weighted_size(ring, E)
            for E in (F, S, dec.boundary, omega))
        gap = abs(estimate.lower - qdim)
        transport_ok = gap <= bound
        if not (supp_ok and bd_ok and sizes_ok and transport_ok):
            raise RuntimeError(
                f"transport identities failed at level {qmap.target.tag}: "
                f"supp={supp_ok} bd={bd_ok} sizes={sizes_ok} transport={transport_ok}")
        return LevelReport(target=qmap.target.tag, omega_injective=True,
                           quotient_dim=qdim, support_pushforward_ok=supp_ok,
                           boundary_pushforward_ok=bd_ok, weighted_sizes_ok=sizes_ok,
                           transport_ok=transport_ok, transport_gap=gap)

    levels = map_ordered(level, tower.maps)
    return TowerReport(ring=ring.tag, window=ring.sorted_labels(F),
                       omega=ring.sorted_labels(omega),
                       source_estimate=estimate, transport_bound=bound,
                       levels=tuple(levels))
