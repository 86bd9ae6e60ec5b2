"""Command-line front end: ``ultraspec <command> --input FILE ...``.

Inputs are JSON spec files holding domain objects in their canonical
text forms; reports are deterministic (byte-identical across reruns) in
either aligned text or JSON.  Exit codes: 0 success, 1 invariant
violation during verify, 2 parse/validation failure, 3 mathematical
error such as hitting a spectral point.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import specfile
from .c0space import CANONICAL, Vector
from .errors import MATH_ERRORS, ParseError, UltraspecError, ValidationError
from .gelfand import (eigendecompose, function_norm, gelfand_transform,
                      inverse_gelfand, op_norm, spectral_norm, to_matrix)
from .kfield import Scalar
from .lt_subalgebra import (classify_idempotent, membership, resolvent,
                            spectrum_of)
from .nstar_measure import (Clopen, ScalarMeasureView, integrate, matrix_rep,
                            measure)
from .verify import DEFAULT_SEED, Extras, run_catalogue

DEFAULT_DIM = 8
DEFAULT_PREC = 12

COMMANDS = ("gelfand", "inverse-gelfand", "measure", "integrate",
            "scalar-integrate", "matrix", "resolvent", "spectrum",
            "membership", "classify", "decompose", "verify")


@dataclass
class JobSpec:
    """A validated unit of work: the command, its parsed inputs, and the
    run parameters."""

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    dim: int = DEFAULT_DIM
    prec: int = DEFAULT_PREC
    seed: int = DEFAULT_SEED


def _require(data: dict, keys: set[str], optional: set[str] = frozenset()):
    missing = keys - set(data)
    if missing:
        raise ValidationError(f"missing input keys: {sorted(missing)}")
    extras = set(data) - keys - optional
    if extras:
        raise ValidationError(f"unknown input keys: {sorted(extras)}")


def _check_window(dim: int, *needs: int):
    needed = max(needs, default=0)
    if needed > dim:
        raise ValidationError(
            f"--dim {dim} is too small for supports reaching {needed}")


def _load_inputs(command: str, data: Any, spec: JobSpec) -> dict[str, Any]:
    if command != "verify" and not isinstance(data, dict):
        raise ValidationError("the spec file must hold a JSON object")
    out: dict[str, Any] = {}
    if command == "gelfand":
        _require(data, {"operator"})
        out["operator"] = specfile.read_operator(data["operator"])
    elif command == "inverse-gelfand":
        _require(data, {"function"}, {"family"})
        out["function"] = specfile.read_function(data["function"])
        out["family"] = specfile.read_family(data.get("family"))
        if not out["family"].covers(out["function"].deviations.max_index):
            raise ValidationError("family too small for the deviations")
    elif command == "measure":
        _require(data, {"clopen"}, {"family"})
        out["clopen"] = specfile.read_clopen(data["clopen"])
        out["family"] = specfile.read_family(data.get("family"))
        _check_window(spec.dim, max(out["clopen"].base, default=0),
                      out["family"].max_support())
    elif command == "integrate":
        _require(data, {"function"}, {"clopen", "family"})
        out["function"] = specfile.read_function(data["function"])
        out["clopen"] = specfile.read_clopen(
            data.get("clopen", {"cofinite": []}))
        out["family"] = specfile.read_family(data.get("family"))
        _check_window(spec.dim, out["function"].deviations.max_index,
                      max(out["clopen"].base, default=0),
                      out["family"].max_support())
    elif command == "scalar-integrate":
        _require(data, {"function", "x", "y"}, {"family"})
        out["function"] = specfile.read_function(data["function"])
        out["x"] = specfile.read_vector(data["x"], "x")
        out["y"] = specfile.read_vector(data["y"], "y")
        out["family"] = specfile.read_family(data.get("family"))
    elif command == "matrix":
        _require(data, {"function"}, {"family"})
        out["function"] = specfile.read_function(data["function"])
        out["family"] = specfile.read_family(data.get("family"))
        _check_window(spec.dim, out["function"].deviations.max_index,
                      out["family"].max_support())
    elif command == "resolvent":
        _require(data, {"lambda", "z"}, {"family"})
        out["lambda"] = specfile.read_vector(data["lambda"], "lambda")
        out["z"] = specfile.read_scalar(data["z"], "z")
        out["family"] = specfile.read_family(data.get("family"))
        if not out["family"].covers(out["lambda"].max_index):
            raise ValidationError("family too small for lambda")
    elif command == "spectrum":
        _require(data, {"lambda"})
        out["lambda"] = specfile.read_vector(data["lambda"], "lambda")
    elif command == "membership":
        _require(data, {"operator", "lambda"})
        out["operator"] = specfile.read_operator(data["operator"])
        out["lambda"] = specfile.read_vector(data["lambda"], "lambda")
    elif command == "classify":
        _require(data, {"operator"})
        out["operator"] = specfile.read_operator(data["operator"])
    elif command == "decompose":
        _require(data, {"matrix"})
        out["matrix"] = specfile.read_matrix(data["matrix"])
    elif command == "verify":
        data = data or {}
        _require(data, set(), {"operators", "functions", "lambdas",
                               "clopens"})
        out["extras"] = Extras(
            operators=tuple(specfile.read_operator(o, f"operators[{i}]")
                            for i, o in enumerate(data.get("operators", []))),
            functions=tuple(specfile.read_function(f, f"functions[{i}]")
                            for i, f in enumerate(data.get("functions", []))),
            lambdas=tuple(specfile.read_vector(v, f"lambdas[{i}]")
                          for i, v in enumerate(data.get("lambdas", []))),
            clopens=tuple(specfile.read_clopen(c, f"clopens[{i}]")
                          for i, c in enumerate(data.get("clopens", []))),
        )
    else:
        raise ValidationError(f"unknown command {command!r}")
    return out


def parse_specfile(command: str, path: str | None,
                   dim: int = DEFAULT_DIM, prec: int = DEFAULT_PREC,
                   seed: int = DEFAULT_SEED) -> JobSpec:
    """Read and validate a spec file into a JobSpec for the command."""
    if path is None:
        if command != "verify":
            raise ValidationError(f"{command} requires --input FILE")
        data: Any = {}
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except FileNotFoundError:
            raise ValidationError(f"no such input file: {path}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno,
                             column=exc.colno) from None
    spec = JobSpec(command=command, dim=dim, prec=prec, seed=seed)
    spec.inputs = _load_inputs(command, data, spec)
    return spec


# -- report helpers -----------------------------------------------------------

def _projection_form(h) -> str | None:
    """Readable form when the operator is a projection-shaped combination."""
    one = Scalar.one()
    minus_one = Scalar.rational(-1)
    if h.alpha.is_zero and all(v == one for v in h.lam.values()):
        if h.lam.is_zero:
            return "0"
        return " + ".join(f"P{i}" for i in h.lam.support)
    if h.alpha == one and all(v == minus_one for v in h.lam.values()):
        if h.lam.is_zero:
            return "Id"
        inner = " + ".join(f"P{i}" for i in h.lam.support)
        return f"Id - ({inner})"
    return None


def _operator_payload(h, dim: int, prec: int,
                      with_matrix: bool = True) -> dict:
    payload = specfile.write_operator(h)
    form = _projection_form(h)
    if form is not None:
        payload["form"] = form
    payload["norm_valuation"] = _val_str(op_norm(h).val)
    if with_matrix:
        payload["matrix"] = specfile.write_matrix(to_matrix(h, dim, prec))
    return payload


def _val_str(v) -> str:
    return "inf" if v == float("inf") else str(v)


# -- command execution --------------------------------------------------------

def run(spec: JobSpec) -> tuple[dict, int]:
    """Execute a JobSpec; returns (payload, exit_code)."""
    handler = _HANDLERS[spec.command]
    return handler(spec)


def _run_gelfand(spec: JobSpec) -> tuple[dict, int]:
    h = spec.inputs["operator"]
    f = gelfand_transform(h)
    payload = {
        "command": "gelfand",
        "operator": specfile.write_operator(h),
        "function": specfile.write_function(f),
        "norm_valuation": _val_str(function_norm(f).val),
        "isometric": function_norm(f) == op_norm(h) == spectral_norm(h),
    }
    return payload, 0


def _run_inverse_gelfand(spec: JobSpec) -> tuple[dict, int]:
    f = spec.inputs["function"]
    h = inverse_gelfand(f, spec.inputs["family"])
    payload = {
        "command": "inverse-gelfand",
        "function": specfile.write_function(f),
        "operator": _operator_payload(h, spec.dim, spec.prec,
                                      with_matrix=False),
    }
    return payload, 0


def _run_measure(spec: JobSpec) -> tuple[dict, int]:
    c = spec.inputs["clopen"]
    m = measure(c, spec.inputs["family"])
    payload = {
        "command": "measure",
        "clopen": specfile.write_clopen(c),
        "operator": _operator_payload(m, spec.dim, spec.prec),
    }
    return payload, 0


def _run_integrate(spec: JobSpec) -> tuple[dict, int]:
    f = spec.inputs["function"]
    c = spec.inputs["clopen"]
    h = integrate(f, c, spec.inputs["family"])
    payload = {
        "command": "integrate",
        "function": specfile.write_function(f),
        "clopen": specfile.write_clopen(c),
        "operator": _operator_payload(h, spec.dim, spec.prec),
    }
    return payload, 0


def _run_scalar_integrate(spec: JobSpec) -> tuple[dict, int]:
    f = spec.inputs["function"]
    view = ScalarMeasureView(spec.inputs["x"], spec.inputs["y"],
                             spec.inputs["family"], spec.prec)
    value = view.integrate(f)
    payload = {
        "command": "scalar-integrate",
        "function": specfile.write_function(f),
        "x": specfile.write_vector(spec.inputs["x"]),
        "y": specfile.write_vector(spec.inputs["y"]),
        "value": specfile.write_scalar(value),
    }
    return payload, 0


def _run_matrix(spec: JobSpec) -> tuple[dict, int]:
    f = spec.inputs["function"]
    rep = matrix_rep(f, spec.inputs["family"], spec.dim, spec.prec)
    payload = {
        "command": "matrix",
        "function": specfile.write_function(f),
        "entries": [[specfile.write_scalar(x) for x in row]
                    for row in rep.entries],
        "norm_valuation": _val_str(rep.norm().val),
    }
    return payload, 0


def _run_resolvent(spec: JobSpec) -> tuple[dict, int]:
    lam = spec.inputs["lambda"]
    z = spec.inputs["z"]
    r = resolvent(z, lam, spec.inputs["family"], spec.prec)
    payload = {
        "command": "resolvent",
        "lambda": specfile.write_vector(lam),
        "z": specfile.write_scalar(z),
        "precision": spec.prec,
        "operator": _operator_payload(r, spec.dim, spec.prec,
                                      with_matrix=False),
    }
    return payload, 0


def _run_spectrum(spec: JobSpec) -> tuple[dict, int]:
    lam = spec.inputs["lambda"]
    s = spectrum_of(lam)
    payload = {
        "command": "spectrum",
        "lambda": specfile.write_vector(lam),
        "eigenvalues": [specfile.write_scalar(v) for v in s.eigenvalues],
        "classes": [{"eigenvalue": specfile.write_scalar(v),
                     "indices": list(idx)} for v, idx in s.classes],
    }
    return payload, 0


def _run_membership(spec: JobSpec) -> tuple[dict, int]:
    h = spec.inputs["operator"]
    lam = spec.inputs["lambda"]
    result = membership(h, lam)
    payload = {
        "command": "membership",
        "operator": specfile.write_operator(h),
        "lambda": specfile.write_vector(lam),
        "member": result.member,
    }
    if result.member:
        payload["witness_table"] = specfile.write_table(result.table)
    else:
        payload["violation"] = list(result.violation)
    return payload, 0


def _run_classify(spec: JobSpec) -> tuple[dict, int]:
    h = spec.inputs["operator"]
    idem = classify_idempotent(h)
    payload = {
        "command": "classify",
        "operator": specfile.write_operator(h),
        "form": idem.form,
        "complemented": idem.complemented,
        "indices": list(idem.indices),
    }
    return payload, 0


def _run_decompose(spec: JobSpec) -> tuple[dict, int]:
    m = spec.inputs["matrix"]
    h = eigendecompose(m)
    payload = {
        "command": "decompose",
        "matrix": specfile.write_matrix(m),
        "operator": specfile.write_operator(h),
        "roundtrip_exact": to_matrix(h, m.dim) == m,
    }
    return payload, 0


def _run_verify(spec: JobSpec) -> tuple[dict, int]:
    results = run_catalogue(spec.seed, spec.inputs.get("extras"))
    passed = sum(1 for r in results if r.passed)
    payload = {
        "command": "verify",
        "seed": spec.seed,
        "suites": [{"name": r.name, "checks": r.checks,
                    "passed": r.passed, "witness": r.witness}
                   for r in results],
        "summary": f"{passed}/{len(results)} suites passed",
        "passed": passed == len(results),
    }
    return payload, 0 if payload["passed"] else 1


_HANDLERS: dict[str, Callable[[JobSpec], tuple[dict, int]]] = {
    "gelfand": _run_gelfand,
    "inverse-gelfand": _run_inverse_gelfand,
    "measure": _run_measure,
    "integrate": _run_integrate,
    "scalar-integrate": _run_scalar_integrate,
    "matrix": _run_matrix,
    "resolvent": _run_resolvent,
    "spectrum": _run_spectrum,
    "membership": _run_membership,
    "classify": _run_classify,
    "decompose": _run_decompose,
    "verify": _run_verify,
}


# -- rendering ----------------------------------------------------------------

def _text_lines(value: Any, key: str, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"]
        for k, v in value.items():
            lines.extend(_text_lines(v, k, indent + 1))
        return lines
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            lines = [f"{pad}{key}:"]
            for row in value:
                lines.append(f"{pad}  [" + ", ".join(str(x) for x in row)
                             + "]")
            return lines
        if value and all(isinstance(v, dict) for v in value):
            lines = [f"{pad}{key}:"]
            for item in value:
                sub = ", ".join(f"{k}={item[k]}" for k in item)
                lines.append(f"{pad}  - {sub}")
            return lines
        return [f"{pad}{key}: [" + ", ".join(str(x) for x in value) + "]"]
    return [f"{pad}{key}: {value}"]


def render_text(payload: dict) -> str:
    lines = [f"ultraspec {payload['command']}"]
    if payload["command"] == "verify":
        for suite in payload["suites"]:
            status = "PASS" if suite["passed"] else "FAIL"
            line = f"  {status}  {suite['name']} ({suite['checks']} checks)"
            if not suite["passed"]:
                line += f" -- {suite['witness']}"
            lines.append(line)
        lines.append(f"seed: {payload['seed']}")
        lines.append(f"result: {payload['summary']}")
        return "\n".join(lines) + "\n"
    for key, value in payload.items():
        if key == "command":
            continue
        lines.extend(_text_lines(value, key, 0))
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# -- entry point --------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultraspec",
        description="Exact spectral calculus on the sequence space c0 "
                    "over Q((t)).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default=None,
                       help="JSON spec file with the command's inputs")
        p.add_argument("--dim", type=int, default=DEFAULT_DIM,
                       help="matrix window size (default 8)")
        p.add_argument("--prec", type=int, default=DEFAULT_PREC,
                       help="series precision for divisions (default 12)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", default=None,
                       help="write the report here instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    seed = DEFAULT_SEED
    env_seed = os.environ.get("ULTRASPEC_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print(f"error: ULTRASPEC_SEED must be an integer, got "
                  f"{env_seed!r}", file=sys.stderr)
            return 2
    try:
        spec = parse_specfile(args.command, args.input,
                              dim=args.dim, prec=args.prec, seed=seed)
        payload, code = run(spec)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except UltraspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report = (render_json(payload) if args.format == "json"
              else render_text(payload))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
