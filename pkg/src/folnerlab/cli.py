"""Command-line front end.

Subcommands: folner, profile, kernel-dim, zero-divisor, ore-pair, tower,
check-axioms. Reports are JSON (stdout or --out); profiles can also be CSV.
Exit codes: 0 success or certificate, 2 verified negative or exhaustion,
1 error. Exact rationals in flags are "p/q" strings; decimal floats are
rejected where exactness is required.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .folner import FolnerCertificate, folner_search, isoperimetric_profile
from .fusion import ball, check_axioms, conjugation_closure, ring_from_tag
from .polalg import AlgebraError, MatrixOverPol
from .reldim import kernel_dim_estimate
from .serialize import (SchemaError, canonical_dumps, element_to_json,
                        label_from_json, label_to_json, load_element)
from .solvers import OrePair, ZeroDivisorCertificate, ore_pair, zero_divisor_search
from .tower import group_quotient_tower, tower_kernel_dims

OK, NEGATIVE, ERROR = 0, 2, 1


class CliError(Exception):
    pass


def _fraction_flag(text: str) -> Fraction:
    if "." in text:
        raise CliError(f"exact rational required: write p/q, not {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"cannot parse {text!r} as p/q") from None


def _labels_flag(ring, text: str) -> list:
    """A JSON label or JSON list of labels, provider-aware."""
    try:
        val = json.loads(text)
    except json.JSONDecodeError:
        val = text  # bare string label (finite:S3)
    if isinstance(val, list):
        try:
            return [label_from_json(ring, x) for x in val]
        except SchemaError:
            pass  # the whole list is one tuple label
    try:
        return [label_from_json(ring, val)]
    except SchemaError as exc:
        raise CliError(str(exc)) from None


def _load_matrix(path: str, ring_tag: str | None) -> MatrixOverPol:
    try:
        with open(path) as fh:
            obj = load_element(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    if not isinstance(obj, MatrixOverPol):
        obj = MatrixOverPol.from_element(obj)
    if ring_tag and ring_from_tag(ring_tag) is not obj.algebra.ring:
        raise CliError(f"--ring {ring_tag} does not match file algebra {obj.algebra.tag}")
    return obj


def _window_from_radius(T: MatrixOverPol, radius: int) -> frozenset:
    ring = T.algebra.ring
    return conjugation_closure(ring, ball(ring, T.support(), radius))


def _emit(payload: dict, out_path: str | None) -> None:
    text = canonical_dumps(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommand runners -----------------------------------------------------

def _run_folner(args) -> int:
    ring = ring_from_tag(args.ring)
    S = _labels_flag(ring, args.S)
    result = folner_search(ring, S, _fraction_flag(args.epsilon), args.max_radius)
    if isinstance(result, FolnerCertificate):
        _emit({"kind": "folner_certificate", **result.to_json()}, args.out)
        return OK
    _emit({"kind": "exhaustion_report", **result.to_json()}, args.out)
    return NEGATIVE


def _run_profile(args) -> int:
    ring = ring_from_tag(args.ring)
    S = _labels_flag(ring, args.S)
    rows = isoperimetric_profile(ring, S, args.max_radius)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["radius", "window_weight", "boundary_weight",
                        "symmetric_boundary_weight", "ratio", "ratio_decimal"])
            for r in rows:
                w.writerow([r.radius, r.window_weight, r.boundary_weight,
                            r.symmetric_boundary_weight, str(r.ratio), float(r.ratio)])
    _emit({"kind": "isoperimetric_profile", "ring": ring.tag,
           "S": [label_to_json(ring, u) for u in ring.sorted_labels(S)],
           "rows": [r.to_json() for r in rows]}, args.out)
    return OK


def _run_kernel_dim(args) -> int:
    T = _load_matrix(args.matrix, args.ring)
    F = _window_from_radius(T, args.window)
    est = kernel_dim_estimate(T, F, side=args.side)
    _emit({"kind": "dimension_estimate", "ring": T.algebra.tag, **est.to_json()},
          args.out)
    return OK


def _run_zero_divisor(args) -> int:
    T = _load_matrix(args.element, args.ring)
    if T.n != 1:
        raise CliError("zero-divisor search expects a single element, not a matrix")
    a = T.entries[0][0]
    result = zero_divisor_search(a, side=args.side, max_radius=args.max_radius)
    ring = a.algebra.ring
    if isinstance(result, ZeroDivisorCertificate):
        _emit({"kind": "zero_divisor_certificate", "ring": ring.tag,
               "side": result.side, "radius": result.radius,
               "window": [label_to_json(ring, u) for u in result.window],
               "a": element_to_json(result.a),
               "witness": element_to_json(result.witness),
               "verified": result.product_is_zero()}, args.out)
        return OK
    _emit({"kind": "not_found_report", "ring": ring.tag, **result.to_json()},
          args.out)
    return NEGATIVE


def _run_ore_pair(args) -> int:
    Ta = _load_matrix(args.a, args.ring)
    Ts = _load_matrix(args.s, args.ring)
    if Ta.n != 1 or Ts.n != 1:
        raise CliError("ore-pair expects single elements, not matrices")
    if Ta.algebra is not Ts.algebra:
        raise CliError("a and s live in different algebras")
    result = ore_pair(Ta.entries[0][0], Ts.entries[0][0],
                      max_radius=args.max_radius, prefer_ore=args.prefer_ore)
    ring = Ta.algebra.ring
    if isinstance(result, OrePair):
        _emit({"kind": "ore_pair", "ring": ring.tag, "radius": result.radius,
               "window": [label_to_json(ring, u) for u in result.window],
               "a": element_to_json(result.a), "s": element_to_json(result.s),
               "t": element_to_json(result.t), "b": element_to_json(result.b),
               "residual_zero": result.residual().is_zero()}, args.out)
        return OK
    if isinstance(result, ZeroDivisorCertificate):
        _emit({"kind": "zero_divisor_certificate", "ring": ring.tag,
               "side": result.side, "radius": result.radius,
               "window": [label_to_json(ring, u) for u in result.window],
               "a": element_to_json(result.a),
               "witness": element_to_json(result.witness),
               "verified": result.product_is_zero()}, args.out)
        return OK
    _emit({"kind": "exhaustion_report", **result.to_json()}, args.out)
    return NEGATIVE


def _run_tower(args) -> int:
    T = _load_matrix(args.matrix, args.ring)
    moduli = [int(m) for m in args.moduli.split(",") if m]
    tower = group_quotient_tower(T.algebra, moduli)
    F = _window_from_radius(T, args.window)
    report = tower_kernel_dims(T, tower, F, side=args.side)
    _emit({"kind": "tower_report", **report.to_json()}, args.out)
    return OK


_AXIOM_DEFAULTS = {
    "su2": lambda ring: range(13),
    "finite:S3": lambda ring: ring.irreducibles(),
}


def _run_check_axioms(args) -> int:
    ring = ring_from_tag(args.ring)
    if args.labels:
        labels = _labels_flag(ring, args.labels)
    elif ring.tag in _AXIOM_DEFAULTS:
        labels = _AXIOM_DEFAULTS[ring.tag](ring)
    elif ring.is_finite:
        labels = ring.irreducibles()
    else:
        gens = _labels_flag(ring, args.generators) if args.generators else None
        if gens is None:
            raise CliError(
                f"{ring.tag} is infinite: pass --labels or --generators "
                "(axioms are then checked on the radius --limit ball)")
        labels = ball(ring, gens, args.limit)
    report = check_axioms(ring, labels)
    _emit({"kind": "axiom_report", **report,
           "failures": [repr(f) for f in report["failures"]]}, args.out)
    return OK if report["ok"] else NEGATIVE


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="folnerlab",
        description="Weighted isoperimetry in fusion rings: Folner certificates, "
                    "certified kernel dimensions, zero-divisor and Ore-pair "
                    "searches, quotient towers.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    sp = sub.add_parser("folner", help="search for a Folner certificate")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--S", required=True, help="JSON label or list of labels")
    sp.add_argument("--epsilon", required=True, help="exact rational p/q")
    sp.add_argument("--max-radius", type=int, default=64)
    common(sp)
    sp.set_defaults(run=_run_folner)

    sp = sub.add_parser("profile", help="exact isoperimetric profile")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--S", required=True)
    sp.add_argument("--max-radius", type=int, default=32)
    sp.add_argument("--csv", help="also write the profile as CSV")
    common(sp)
    sp.set_defaults(run=_run_profile)

    sp = sub.add_parser("kernel-dim", help="certified kernel-dimension estimate")
    sp.add_argument("--ring")
    sp.add_argument("--matrix", required=True, help="element or matrix JSON file")
    sp.add_argument("--window", type=int, required=True,
                    help="ball radius around the support")
    sp.add_argument("--side", choices=["left", "right"], default="right")
    common(sp)
    sp.set_defaults(run=_run_kernel_dim)

    sp = sub.add_parser("zero-divisor", help="search for a zero-divisor witness")
    sp.add_argument("--ring")
    sp.add_argument("--element", required=True)
    sp.add_argument("--side", choices=["left", "right"], default="left")
    sp.add_argument("--max-radius", type=int, default=8)
    common(sp)
    sp.set_defaults(run=_run_zero_divisor)

    sp = sub.add_parser("ore-pair", help="solve a t = s b constructively")
    sp.add_argument("--ring")
    sp.add_argument("--a", required=True)
    sp.add_argument("--s", required=True)
    sp.add_argument("--max-radius", type=int, default=16)
    sp.add_argument("--prefer-ore", action="store_true",
                    help="scan the whole kernel basis for t != 0 before "
                         "settling for a zero-divisor certificate")
    common(sp)
    sp.set_defaults(run=_run_ore_pair)

    sp = sub.add_parser("tower", help="quotient-tower dimension approximation")
    sp.add_argument("--ring")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--moduli", required=True, help="comma-separated chain, e.g. 3,9,27,81")
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--side", choices=["left", "right"], default="right")
    common(sp)
    sp.set_defaults(run=_run_tower)

    sp = sub.add_parser("check-axioms", help="verify the fusion-ring axioms")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--labels", help="explicit JSON label list")
    sp.add_argument("--generators", help="generators for the test ball (infinite rings)")
    sp.add_argument("--limit", type=int, default=3, help="test-ball radius")
    common(sp)
    sp.set_defaults(run=_run_check_axioms)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (CliError, SchemaError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
