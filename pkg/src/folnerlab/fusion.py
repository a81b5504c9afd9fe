"""Fusion rings of Kac-type compact quantum groups and weighted isoperimetry.

A fusion ring here is the based ring Z[Irred(G)]: a distinguished basis of
irreducible labels with a unit, an integer dimension for each label, an
involutive conjugation, and a product returning finite multiplicity maps
{w: N_uv^w}. The weighted size of a finite label set F is
|F| = sum_{u in F} n_u^2, and the interior/boundary of F relative to a
finite S are

    int_S(F) = {u in F | for all v in S: supp(u x v) subset of F},
    bd_S(F)  = F \\ int_S(F),

with the symmetric boundary adding the outer boundary bd_S(F^c). The outer
boundary is computed without touching the infinite complement via Frobenius
reciprocity: bd_S(F^c) = (U_{w in F, v in S} supp(w x conj(v))) \\ F.

Three provider families are built in:

* ``su2``        -- labels k = 0, 1, 2, ... (twice the spin), n_k = k + 1,
                    Clebsch-Gordan fusion k x l = |k-l|, |k-l|+2, ..., k+l;
* ``group:<G>``  -- the group fusion ring of a discrete group: labels are
                    group elements, all dimensions 1, product is the group
                    law, conjugation is inversion;
* ``finite:S3``  -- the representation ring of S3: labels triv, sgn, std
                    with dimensions 1, 1, 2.

Rings are immutable after construction; the ball/product caches are pure
and only ever grow, so concurrent readers are safe.
"""

from __future__ import annotations

from typing import Iterable

from .groups import parse_group_name


class InvalidLabelError(ValueError):
    """A label does not belong to the ambient fusion ring."""


class FusionRing:
    """Base class; subclasses provide unit, dim, conj and product."""

    tag: str
    is_finite = False

    def __init__(self):
        self._ball_cache: dict[tuple, list[frozenset]] = {}

    # subclass surface ------------------------------------------------------

    def normalize(self, u):
        raise NotImplementedError

    def dim(self, u) -> int:
        raise NotImplementedError

    def conj(self, u):
        raise NotImplementedError

    def product(self, u, v) -> dict:
        """Multiplicity map {w: N_uv^w} of u x v; all values >= 1."""
        raise NotImplementedError

    def sort_key(self, u):
        return u

    def irreducibles(self) -> list:
        raise ValueError(f"ring {self.tag} has infinitely many irreducibles")

    # shared operations ------------------------------------------------------

    def check_label(self, u):
        """Canonicalize a label, raising InvalidLabelError if it is not one."""
        try:
            return self.normalize(u)
        except ValueError as exc:
            raise InvalidLabelError(f"{u!r} is not a label of {self.tag}: {exc}") from None

    def label_set(self, labels: Iterable) -> frozenset:
        return frozenset(self.check_label(u) for u in labels)

    def sorted_labels(self, labels: Iterable) -> tuple:
        return tuple(sorted(labels, key=self.sort_key))

    def product_support(self, u, v) -> tuple:
        """supp(u x v) with multiplicities, in deterministic label order."""
        u = self.check_label(u)
        v = self.check_label(v)
        prod = self.product(u, v)
        return tuple((w, prod[w]) for w in self.sorted_labels(prod))

    def __repr__(self):
        return f"<FusionRing {self.tag}>"


class SU2FusionRing(FusionRing):
    """Fusion of SU(2): labels are twice the spin, n_k = k + 1."""

    tag = "su2"
    unit = 0

    def normalize(self, u):
        if not isinstance(u, int) or u < 0:
            raise ValueError(f"{u!r} is not a nonnegative integer")
        return u

    def dim(self, u):
        self.check_label(u)
        return u + 1

    def conj(self, u):
        self.check_label(u)
        return u

    def product(self, u, v):
        return {w: 1 for w in range(abs(u - v), u + v + 1, 2)}


class GroupFusionRing(FusionRing):
    """Group fusion ring: one 1-dimensional label per group element."""

    def __init__(self, group):
        super().__init__()
        self.group = group
        self.tag = f"group:{group.name}"
        self.unit = group.identity()
        self.is_finite = group.is_finite

    def normalize(self, u):
        return self.group.normalize(u)

    def dim(self, u):
        self.check_label(u)
        return 1

    def conj(self, u):
        self.check_label(u)
        return self.group.inv(u)

    def product(self, u, v):
        return {self.group.mul(u, v): 1}

    def irreducibles(self):
        return self.sorted_labels(self.group.elements())


class S3FusionRing(FusionRing):
    """Representation ring of S3: triv, sgn, std with the usual fusion."""

    tag = "finite:S3"
    unit = "triv"
    is_finite = True
    labels = ("triv", "sgn", "std")
    _dims = {"triv": 1, "sgn": 1, "std": 2}
    _table = {
        ("triv", "triv"): {"triv": 1},
        ("triv", "sgn"): {"sgn": 1},
        ("triv", "std"): {"std": 1},
        ("sgn", "sgn"): {"triv": 1},
        ("sgn", "std"): {"std": 1},
        ("std", "std"): {"triv": 1, "sgn": 1, "std": 1},
    }

    def normalize(self, u):
        if u not in self.labels:
            raise ValueError(f"{u!r} is not one of {self.labels}")
        return u

    def dim(self, u):
        self.check_label(u)
        return self._dims[u]

    def conj(self, u):
        self.check_label(u)
        return u

    def product(self, u, v):
        key = (u, v) if (u, v) in self._table else (v, u)
        return dict(self._table[key])

    def sort_key(self, u):
        return self.labels.index(u)

    def irreducibles(self):
        return self.labels


# ---------------------------------------------------------------------------
# ring registry

_REGISTRY: dict[str, FusionRing] = {}


def ring_from_tag(tag: str) -> FusionRing:
    """Resolve a ring selection string; instances are shared singletons."""
    if tag not in _REGISTRY:
        if tag == "su2":
            ring = SU2FusionRing()
        elif tag == "finite:S3":
            ring = S3FusionRing()
        elif tag.startswith("group:"):
            ring = GroupFusionRing(parse_group_name(tag[len("group:"):]))
        else:
            raise ValueError(f"unknown ring tag {tag!r}")
        _REGISTRY.setdefault(ring.tag, ring)
        if tag != ring.tag:
            _REGISTRY[tag] = _REGISTRY[ring.tag]
    return _REGISTRY[tag]


# ---------------------------------------------------------------------------
# weighted isoperimetry

class BoundaryData:
    """The four sets of a boundary decomposition, as frozensets."""

    __slots__ = ("interior", "boundary", "coboundary", "symmetric_boundary")

    def __init__(self, interior, boundary, coboundary):
        self.interior = frozenset(interior)
        self.boundary = frozenset(boundary)
        self.coboundary = frozenset(coboundary)
        self.symmetric_boundary = self.boundary | self.coboundary


def weighted_size(ring: FusionRing, F: Iterable) -> int:
    """|F| = sum of n_u^2 over F; exact integer."""
    return sum(ring.dim(u) ** 2 for u in ring.label_set(F))


def conjugate_set(ring: FusionRing, F: Iterable) -> frozenset:
    return frozenset(ring.conj(u) for u in F)


def conjugation_closure(ring: FusionRing, F: Iterable) -> frozenset:
    F = frozenset(F)
    return F | conjugate_set(ring, F)


def boundary_decomposition(ring: FusionRing, F: Iterable, S: Iterable,
                           side: str = "right") -> BoundaryData:
    """Interior, boundary, outer boundary and symmetric boundary of F.

    side="right" is the definition above (products u x v, v in S); it is
    what restriction of right multiplication needs. side="left" mirrors it
    (products v x u), which is what restriction of left multiplication
    needs; the two agree whenever the ring is commutative.

    The outer boundary bd_S(F^c) is always computed through the Frobenius
    shortcut, so the infinite complement is never enumerated.
    """
    F = ring.label_set(F)
    S = ring.label_set(S)
    if not S:
        raise ValueError("boundary decomposition needs a non-empty S")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")

    def mul(u, v):
        return ring.product(u, v) if side == "right" else ring.product(v, u)

    interior = {u for u in F if all(set(mul(u, v)) <= F for v in S)}
    boundary = F - interior
    # Frobenius: u in bd_S(F^c) iff u not in F and some supp(u x v) meets F,
    # iff u lies in supp(w x conj(v)) for some w in F, v in S (right side);
    # mirrored to supp(conj(v) x w) on the left.
    reach = set()
    for w in F:
        for v in S:
            vb = ring.conj(v)
            prod = ring.product(w, vb) if side == "right" else ring.product(vb, w)
            reach.update(prod)
    coboundary = reach - F
    return BoundaryData(interior, boundary, coboundary)


def ball(ring: FusionRing, S: Iterable, radius: int) -> frozenset:
    """Supports of all products of at most ``radius`` factors from S, its
    conjugate set and the unit; radius 0 gives {e}. Monotone in the radius
    and automatically conjugation-closed. Cached per (ring, S)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    S = ring.label_set(S)
    key = ring.sorted_labels(S)
    balls = ring._ball_cache.get(key)
    if balls is None or len(balls) <= radius:
        # grow a local copy, then publish atomically: racing readers either
        # see the old list or an extension of it, never a partial update
        balls = list(balls) if balls is not None else [frozenset({ring.unit})]
        gens = ring.sorted_labels(conjugation_closure(ring, S) - {ring.unit})
        while len(balls) <= radius:
            prev = balls[-1]
            frontier = prev if len(balls) == 1 else prev - balls[-2]
            new = set()
            for u in frontier:
                for v in gens:
                    new.update(ring.product(u, v))
            balls.append(prev | new)
        ring._ball_cache[key] = balls
    return balls[radius]


def check_axioms(ring: FusionRing, labels: Iterable) -> dict:
    """Verify the fusion-ring axioms on every pair from ``labels``.

    Checks, exactly: unit laws, conjugation involutivity and dimension
    invariance, dimension multiplicativity sum_w N_uv^w n_w = n_u n_v, and
    Frobenius reciprocity N_uv^w = N_{w conj(v)}^u = N_{conj(u) w}^v.
    Returns a report dict with any failures listed.
    """
    labels = ring.sorted_labels(ring.label_set(labels))
    failures = []
    for u in labels:
        if ring.conj(ring.conj(u)) != u:
            failures.append(("conj_involution", u))
        if ring.dim(ring.conj(u)) != ring.dim(u):
            failures.append(("conj_dimension", u))
        if dict(ring.product(ring.unit, u)) != {u: 1}:
            failures.append(("unit_law", u))
        if dict(ring.product(u, ring.unit)) != {u: 1}:
            failures.append(("unit_law_right", u))
    pairs = 0
    for u in labels:
        for v in labels:
            pairs += 1
            prod = ring.product(u, v)
            if any(n < 1 for n in prod.values()):
                failures.append(("nonpositive_multiplicity", (u, v)))
            if sum(n * ring.dim(w) for w, n in prod.items()) != ring.dim(u) * ring.dim(v):
                failures.append(("dimension_multiplicativity", (u, v)))
            ub, vb = ring.conj(u), ring.conj(v)
            for w, n in prod.items():
                if ring.product(w, vb).get(u, 0) != n:
                    failures.append(("frobenius_right", (u, v, w)))
                if ring.product(ub, w).get(v, 0) != n:
                    failures.append(("frobenius_left", (u, v, w)))
    return {
        "ring": ring.tag,
        "labels_checked": len(labels),
        "pairs_checked": pairs,
        "ok": not failures,
        "failures": failures,
    }
