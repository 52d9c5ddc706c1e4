"""Command-line front end.

Exit codes: 0 separable/success, 1 parse failure, 2 unphysical state,
3 entangled, 4 asymmetric input where a symmetric state is required,
5 support violation in the oracle.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__, bures, cm_core, fock, relent, standard_forms
from .errors import GentError, SupportViolation, UnphysicalState
from .scalar_min import grid_minimize

EXIT_SEPARABLE = 0
EXIT_PARSE = 1
EXIT_UNPHYSICAL = 2
EXIT_ENTANGLED = 3
EXIT_NOT_SYMMETRIC = 4
EXIT_SUPPORT = 5

log = logging.getLogger("gent")


def _configure_logging() -> None:
    level = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("GENT_LOG", "error").lower(), logging.ERROR
    )
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _add_state_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cm", help="JSON file with a 4x4 covariance matrix")
    p.add_argument("--b", type=float, help="standard-form b (symmetric states)")
    p.add_argument("--c", type=float, help="standard-form c")
    p.add_argument("--d", type=float, help="standard-form d (signed)")
    p.add_argument("--r", type=float, help="two-mode squeeze parameter")
    p.add_argument("--nbar", type=float, default=0.0, help="thermal mean photon number")


def _resolve_cm(args) -> np.ndarray:
    """Build the 4x4 CM from whichever input form was given."""
    if args.cm is not None:
        try:
            return cm_core.load_cm_json(args.cm)
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            _fail_parse(f"--cm: {exc}")
    if args.b is not None:
        if args.c is None or args.d is None:
            _fail_parse("--b requires --c and --d")
        return standard_forms.StandardFormI(args.b, args.b, args.c, args.d).to_cm()
    if args.r is not None:
        if args.r < 0:
            _fail_parse("--r: must be nonnegative")
        if args.nbar < 0:
            _fail_parse("--nbar: must be nonnegative")
        return standard_forms.symmetric_sts(args.r, args.nbar).to_cm()
    _fail_parse("no state given: use --cm, or --b/--c/--d, or --r [--nbar]")


def _fail_parse(message: str):
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(EXIT_PARSE)


def _symmetric_state_from_cm(v: np.ndarray):
    """(SymmetricState, spectrum) for a symmetric CM; exits 4/2 otherwise."""
    inv = cm_core.invariants(v)
    if abs(inv.det_v1 - inv.det_v2) >= 1e-9:
        print(
            f"error: state is not symmetric (det V1 = {inv.det_v1:.9g}, "
            f"det V2 = {inv.det_v2:.9g})",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_NOT_SYMMETRIC)
    try:
        form = standard_forms.to_standard_form_I(v)
        spec = cm_core.symplectic_spectrum(v)
    except UnphysicalState as exc:
        print(f"error: unphysical state: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNPHYSICAL)
    state = standard_forms.SymmetricState(form.b1, form.c, abs(form.d))
    return state, spec


# subcommands ----------------------------------------------------------------


def cmd_check(args) -> int:
    v = _resolve_cm(args)
    try:
        phys = cm_core.is_physical(v)
    except GentError as exc:
        _fail_parse(f"covariance matrix: {exc}")
    inv = cm_core.invariants(v)
    spec = cm_core.symplectic_spectrum(v) if phys else None
    print(f"physical:           {bool(phys)}  (kappa_minus = {phys.kappa:.9g})")
    print(f"uncertainty det:    {phys.sp2_value:.9g}")
    if not phys:
        print("separable:          n/a (unphysical)")
        return EXIT_UNPHYSICAL
    sep = cm_core.is_separable(v)
    print(f"separable:          {bool(sep)}  (kappa_tilde_minus = {sep.kappa:.9g})")
    print(
        f"kappas:             k+ = {spec.kappa_plus:.9g}  k- = {spec.kappa_minus:.9g}  "
        f"kt+ = {spec.kappa_tilde_plus:.9g}  kt- = {spec.kappa_tilde_minus:.9g}"
    )
    print(
        f"invariants:         det V1 = {inv.det_v1:.9g}  det V2 = {inv.det_v2:.9g}  "
        f"det C = {inv.det_c:.9g}  det V = {inv.det_v:.9g}"
    )
    form = standard_forms.to_standard_form_I(v)
    print(
        f"standard form I:    b1 = {form.b1:.9g}  b2 = {form.b2:.9g}  "
        f"c = {form.c:.9g}  d = {form.d:.9g}"
    )
    return EXIT_SEPARABLE if sep else EXIT_ENTANGLED


def cmd_bures(args) -> int:
    v = _resolve_cm(args)
    state, spec = _symmetric_state_from_cm(v)
    kt = spec.kappa_tilde_minus
    if kt >= 0.5:
        result = bures.BuresResult(0.0, 1.0, kt, 0.0)
    else:
        result = bures.bures_entanglement(state)
    payload = {
        "version": __version__,
        "command": "bures",
        "input": {"b": state.b, "c": state.c, "d": -state.d_abs},
        "e_b": result.e_b,
        "f_max": result.f_max,
        "d_bures": result.d_bures,
        "kappa_tilde_minus": result.kappa_tilde_minus,
    }
    if args.verify and kt < 0.5:
        f_star, argmax, u_star = bures.numeric_max_fidelity(state)
        payload["verify"] = {
            "f_star": f_star,
            "discrepancy": abs(f_star - result.f_max),
            "argmax": {"b": argmax.b, "c": argmax.c, "d": -argmax.d_abs, "u": u_star},
        }
    print(json.dumps(payload, indent=1))
    return EXIT_SEPARABLE


def cmd_relent(args) -> int:
    v = _resolve_cm(args)
    state, spec = _symmetric_state_from_cm(v)
    kt = spec.kappa_tilde_minus
    if kt >= 0.5:
        result = relent.RelEntResult(0.0, spec.kappa_plus, spec.kappa_minus, 0.0, 0.0, 0.0, 0.0)
    else:
        result = relent.rel_ent_entanglement(state)
    payload = {
        "version": __version__,
        "command": "relent",
        "input": {"b": state.b, "c": state.c, "d": -state.d_abs},
        "e_s": result.e_s,
        "x1_star": result.x1_star,
        "x2_star": result.x2_star,
        "q_s1": result.q_s1,
        "q_s2": result.q_s2,
        "s_n1": result.s_n1,
        "s_n2": result.s_n2,
        "kappa_tilde_minus": kt,
    }
    if args.verify and kt < 0.5:
        kp2, km2 = spec.kappa_plus**2, spec.kappa_minus**2
        grid = lambda ks: grid_minimize(
            lambda x: _vector_mode_objective(x, ks, kt), 0.5 + 1e-9, 50.0
        )
        (_, m1), (_, m2) = grid(kp2), grid(km2)
        e_s_grid = m1 + m2 - result.s_n1 - result.s_n2
        payload["verify"] = {"e_s_grid": e_s_grid, "discrepancy": abs(e_s_grid - result.e_s)}
    print(json.dumps(payload, indent=1))
    return EXIT_SEPARABLE


def _vector_mode_objective(x, kappa_sq, kt):
    cross = (kappa_sq + 4 * x * x * kt * kt) / (2 * x * kt)
    return 0.5 * np.log(x + 0.5) * (1 + cross) + 0.5 * np.log(x - 0.5) * (1 - cross)


@dataclass(frozen=True)
class SweepSpec:
    measure: str  # bures | relent | both
    parameter: str  # kappa_tilde | r
    start: float
    stop: float
    steps: int
    nbar: float
    output: str
    format: str  # csv | json

    def validate(self) -> str | None:
        if self.start >= self.stop:
            return "--start must be below --stop"
        if self.steps < 2:
            return "--steps must be at least 2"
        if self.parameter == "kappa_tilde" and (self.start <= 0 or self.stop > 0.5):
            return "--parameter kappa_tilde needs a range within (0, 1/2]"
        return None


SWEEP_COLUMNS = [
    "param",
    "b",
    "c",
    "d",
    "kappa_plus",
    "kappa_minus",
    "kappa_tilde_minus",
    "e_b",
    "e_s",
    "x1_star",
    "x2_star",
]


def cmd_sweep(args) -> int:
    spec = SweepSpec(
        measure=args.measure,
        parameter=args.parameter,
        start=args.start,
        stop=args.stop,
        steps=args.steps,
        nbar=args.nbar,
        output=args.output,
        format=args.format,
    )
    problem = spec.validate()
    if problem:
        _fail_parse(problem)
    values = np.linspace(spec.start, spec.stop, spec.steps)
    rows = []
    for val in values:
        if spec.parameter == "r":
            state = standard_forms.symmetric_sts(float(val), spec.nbar)
        else:  # pure two-mode squeezed vacuum with kappa_tilde_minus = val
            state = standard_forms.symmetric_sts(-0.5 * math.log(2 * float(val)), 0.0)
        row = {
            "param": float(val),
            "b": state.b,
            "c": state.c,
            "d": -state.d_abs,
            "kappa_plus": state.kappa_plus,
            "kappa_minus": state.kappa_minus,
            "kappa_tilde_minus": state.kappa_tilde_minus,
            "e_b": None,
            "e_s": None,
            "x1_star": None,
            "x2_star": None,
        }
        if spec.measure in ("bures", "both"):
            row["e_b"] = bures.bures_entanglement(state).e_b
        if spec.measure in ("relent", "both"):
            res = relent.rel_ent_entanglement(state)
            row["e_s"], row["x1_star"], row["x2_star"] = res.e_s, res.x1_star, res.x2_star
        rows.append(row)
    try:
        _write_sweep(rows, spec.output, spec.format)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_SEPARABLE


def _write_sweep(rows, path, fmt) -> None:
    if fmt == "json":
        with open(path, "w") as fh:
            json.dump({"version": __version__, "rows": rows}, fh, indent=1)
        return
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow(
                ["" if row[k] is None else f"{row[k]:.12g}" for k in SWEEP_COLUMNS]
            )


def _parse_one_mode(text: str, flag: str) -> cm_core.OneModeCM:
    try:
        sqq, spp = (float(t) for t in text.split(","))
    except ValueError:
        _fail_parse(f"{flag}: expected 'sigma_qq,sigma_pp', got {text!r}")
    if sqq <= 0 or spp <= 0:
        _fail_parse(f"{flag}: variances must be positive")
    return cm_core.OneModeCM(sqq, spp)


def _oracle_states(args):
    """Collect (fock_state, cm) pairs from --state*/--cm* flags."""
    out = []
    for state_flag, cm_flag in ((args.state1, args.cm1), (args.state2, args.cm2)):
        if state_flag is not None:
            one = _parse_one_mode(state_flag, "--state")
            n = args.dim or 60
            out.append((fock.gaussian_state_from_cm(one, n), one))
        elif cm_flag is not None:
            try:
                v = cm_core.load_cm_json(cm_flag)
            except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
                _fail_parse(f"--cm: {exc}")
            n = args.dim or 20
            out.append((fock.gaussian_state_from_cm(v, n), v))
    return out


def cmd_oracle(args) -> int:
    states = _oracle_states(args)
    need = 1 if args.functional == "entropy" else 2
    if len(states) != need:
        _fail_parse(f"oracle {args.functional} needs exactly {need} state(s)")
    payload = {"version": __version__, "command": f"oracle {args.functional}"}
    try:
        if args.functional == "fidelity":
            (rho, cm_a), (rho_p, cm_b) = states
            payload["value"] = fock.fidelity_fock(rho, rho_p)
            if isinstance(cm_a, cm_core.OneModeCM) and isinstance(cm_b, cm_core.OneModeCM):
                payload["closed_form"] = bures.one_mode_fidelity(cm_a, cm_b)
        elif args.functional == "relent":
            (rho, cm_a), (rho_p, cm_b) = states
            payload["value"] = fock.rel_entropy_fock(rho_p, rho)
            if isinstance(cm_a, cm_core.OneModeCM) and isinstance(cm_b, cm_core.OneModeCM):
                payload["closed_form"] = relent.rel_entropy_one_mode(cm_b, cm_a)
        else:
            rho, cm_a = states[0]
            payload["value"] = fock.entropy_fock(rho)
            if isinstance(cm_a, cm_core.OneModeCM):
                payload["closed_form"] = relent.von_neumann_entropy(cm_a)
            else:
                spec = cm_core.symplectic_spectrum(cm_a)
                payload["closed_form"] = relent._entropy_nu(spec.kappa_plus) + relent._entropy_nu(
                    spec.kappa_minus
                )
    except SupportViolation as exc:
        print(f"error: support violation: {exc}", file=sys.stderr)
        return EXIT_SUPPORT
    if "closed_form" in payload:
        payload["discrepancy"] = abs(payload["value"] - payload["closed_form"])
    payload["dim_per_mode"] = states[0][0].dim_per_mode
    payload["trace_deficit"] = [s.trace_deficit for s, _ in states]
    print(json.dumps(payload, indent=1))
    return EXIT_SEPARABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gent",
        description=(
            "Gaussian entanglement measures for symmetric two-mode Gaussian states. "
            "Convention: hbar = 1, vacuum CM = I/2, ordering (q1, p1, q2, p2)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="physicality/separability report")
    _add_state_inputs(p_check)
    p_check.set_defaults(func=cmd_check)

    p_bures = sub.add_parser("bures", help="Bures-metric entanglement")
    _add_state_inputs(p_bures)
    p_bures.add_argument("--verify", action="store_true", help="run the numeric maximizer")
    p_bures.set_defaults(func=cmd_bures)

    p_rel = sub.add_parser("relent", help="relative entropy of entanglement")
    _add_state_inputs(p_rel)
    p_rel.add_argument("--verify", action="store_true", help="run the grid oracle")
    p_rel.set_defaults(func=cmd_relent)

    p_sweep = sub.add_parser("sweep", help="parameter sweep to CSV/JSON")
    p_sweep.add_argument("--measure", choices=["bures", "relent", "both"], required=True)
    p_sweep.add_argument("--parameter", choices=["kappa_tilde", "r"], required=True)
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--nbar", type=float, default=0.0)
    p_sweep.add_argument("--output", required=True)
    p_sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="truncated-Fock brute-force cross-checks")
    p_oracle.add_argument("functional", choices=["fidelity", "relent", "entropy"])
    p_oracle.add_argument("--state1", help="one-mode diagonal CM 'sigma_qq,sigma_pp'")
    p_oracle.add_argument("--state2", help="one-mode diagonal CM 'sigma_qq,sigma_pp'")
    p_oracle.add_argument("--cm1", help="two-mode CM JSON file")
    p_oracle.add_argument("--cm2", help="two-mode CM JSON file")
    p_oracle.add_argument("--dim", type=int, help="Fock levels per mode")
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except UnphysicalState as exc:
        print(f"error: unphysical state: {exc}", file=sys.stderr)
        code = EXIT_UNPHYSICAL
    raise SystemExit(code)


if __name__ == "__main__":
    main()
