"""Command-line driver.

Input is a JSON document ``{"weights": [[...], ...], "name": "..."}`` whose
weights are the columns of ``Q``. Exit codes: 0 success, 1 precondition
failure (or a failed comparison), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from math import pi

from .arrangements import (
    EQUAL_AFTER_SHIFT,
    Arrangement,
    compare_arrangements,
    discriminant_arrangement,
    hls_arrangement,
    hls_offset,
)
from .circuits import circuit_constant_via_lengths, circuits
from .errors import InvalidInput, PreconditionError
from .horn import horn_decompose, horn_evaluate, horn_is_constant
from .report import Report, encode_logreal, encode_rational
from .weights import (
    is_calabi_yau,
    is_quasi_symmetric,
    is_self_dual,
    partition_lines,
    ray_data,
    reduce_to_image,
    restrict_to_circuit,
    validate,
)

COMMANDS = ("check", "lines", "circuits", "horn", "discriminant", "hls", "compare")


def load_input(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("weights"), list):
        raise InvalidInput('input must be an object with a "weights" array of integer arrays')
    weights = doc["weights"]
    if not weights or not all(isinstance(w, list) for w in weights):
        raise InvalidInput('"weights" must be a nonempty array of integer arrays')
    for w in weights:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in w):
            raise InvalidInput(f"weight {w} has non-integer entries")
    return doc


def _rows(weights):
    k = len(weights[0])
    if k == 0 or any(len(w) != k for w in weights):
        raise InvalidInput("weights must all have the same positive length")
    return [[w[i] for w in weights] for i in range(k)]


def _vec(v):
    return [int(x) for x in v]


def _rats(v):
    return [encode_rational(x) for x in v]


def _families(arr: Arrangement):
    return [
        {
            "normal": _vec(f.normal),
            "realPart": encode_rational(f.offset.real),
            "imagLog": encode_logreal(f.offset.imag),
        }
        for f in arr.families
    ]


def _approx_families(arr: Arrangement):
    return [
        {"normal": _vec(f.normal), "offset": [float(f.offset.real), float(f.offset.imag) / (2 * pi)]}
        for f in arr.families
    ]


def _check(ws, args):
    qs = is_quasi_symmetric(ws)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rd = ray_data(ws)
    result = {
        "k": ws.k,
        "n": ws.n,
        "calabiYau": is_calabi_yau(ws),
        "quasiSymmetric": qs.holds,
        "qsWitness": None if qs.holds else _vec(qs.witness),
        "selfDual": is_self_dual(ws),
        "rays": [_vec(c) for c in rd.rays.columns()],
        "cyWitness": None if rd.cy_witness is None else _vec(rd.cy_witness),
    }
    return result, list(rd.warnings), None


def _lines(ws, args):
    groups = [
        {
            "direction": _vec(g.direction),
            "members": [j + 1 for j in g.members],
            "lengths": _vec(g.lengths),
            "lineSum": _vec(g.line_sum),
        }
        for g in partition_lines(ws)
    ]
    return {"lines": groups}, [], None


def _circuits(ws, args):
    out = []
    for c in circuits(ws):
        out.append(
            {
                "normal": _vec(c.normal),
                "exponents": _vec(c.exponents),
                "constant": encode_rational(c.constant),
                "constantViaLengths": encode_rational(circuit_constant_via_lengths(ws, c.normal)),
                "restriction": _vec(restrict_to_circuit(ws, c.normal).Q.rows[0]),
            }
        )
    return {"circuits": out}, [], None


def _parse_point(text: str, k: int):
    try:
        lam = [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"--eval expects comma-separated rationals, got {text!r}") from exc
    if len(lam) != k:
        raise InvalidInput(f"--eval needs {k} coordinates, got {len(lam)}")
    return lam


def _horn(ws, args):
    form = horn_decompose(ws)
    const = horn_is_constant(ws)
    result = {
        "lines": [
            {"direction": _vec(h.direction), "constants": _rats(h.constants), "exponents": _vec(h.exponents)}
            for h in form.lines
        ],
        "isConstant": const is not None,
        "constant": None if const is None else _rats(const),
    }
    approx = None
    if args.eval is not None:
        value = horn_evaluate(ws, _parse_point(args.eval, ws.k), form)
        result["eval"] = {"point": _rats(_parse_point(args.eval, ws.k)), "value": _rats(value)}
        if args.approx:
            approx = {"eval": [float(v) for v in value]}
    return result, [], approx


def _discriminant(ws, args):
    arr = discriminant_arrangement(ws)
    result = {"families": _families(arr)}
    return result, [], {"families": _approx_families(arr)} if args.approx else None


def _hls(ws, args):
    arr = hls_arrangement(ws)
    result = {
        "families": _families(arr),
        "facetOffsets": [
            {"normal": _vec(l), "cF": encode_rational(hls_offset(ws, l))} for l in arr.normals()
        ],
    }
    return result, [], {"families": _approx_families(arr)} if args.approx else None


def _compare(ws, args):
    rep = compare_arrangements(ws)
    result = {
        "verdict": rep.verdict,
        "shift": [encode_logreal(c) for c in rep.shift.coords],
        "matches": [
            {
                "normal": _vec(m.normal),
                "circuitConstant": encode_rational(m.circuit_constant),
                "cF": encode_rational(m.hls_offset),
                "discriminant": {
                    "realPart": encode_rational(m.discriminant.real),
                    "imagLog": encode_logreal(m.discriminant.imag),
                },
                "hlsShifted": {
                    "realPart": encode_rational(m.hls_shifted.real),
                    "imagLog": encode_logreal(m.hls_shifted.imag),
                },
                "realOk": m.real_ok,
                "imagOk": m.imag_ok,
                "logIdentityOk": m.log_identity_ok,
            }
            for m in rep.matches
        ],
        "counterexample": None if rep.counterexample is None else _vec(rep.counterexample.normal),
    }
    approx = None
    if args.approx:
        approx = {"shift": [float(c) / (2 * pi) for c in rep.shift.coords]}
    return result, [], approx


HANDLERS = {
    "check": _check,
    "lines": _lines,
    "circuits": _circuits,
    "horn": _horn,
    "discriminant": _discriminant,
    "hls": _hls,
    "compare": _compare,
}


def build_report(command: str, doc: dict, reduce: bool = False, eval: str | None = None,
                 approx: bool = False) -> Report:
    """Run one subcommand on a parsed input document."""
    args = argparse.Namespace(eval=eval, approx=approx)
    rows = _rows(doc["weights"])
    echo = {"weights": [list(w) for w in doc["weights"]]}
    if doc.get("name") is not None:
        echo["name"] = str(doc["name"])
    notes = []
    if reduce:
        ws, B = reduce_to_image(rows)
        echo["basisChange"] = B.tolist()
        if B.shape != (ws.k, ws.k) or any(B[i, j] != (i == j) for i in range(ws.k) for j in range(ws.k)):
            notes.append("weights were rewritten in a basis of their image lattice; see basisChange")
    else:
        ws = validate(rows)
    result, more, approx_section = HANDLERS[command](ws, args)
    return Report(command, echo, result, notes + more, approx_section)


def _fmt_rational(text: str) -> str:
    return text[:-2] if text.endswith("/1") else text


def _fmt_logs(pairs) -> str:
    if not pairs:
        return "0"
    terms = []
    for p, c in pairs:
        c = _fmt_rational(c)
        if p == 1:
            terms.append(c)
        else:
            terms.append(f"log({p})" if c == "1" else f"-log({p})" if c == "-1" else f"{c}*log({p})")
    return " + ".join(terms).replace("+ -", "- ")


def _fmt(value) -> str:
    if isinstance(value, dict):
        if set(value) == {"realPart", "imagLog"}:
            real = _fmt_rational(value["realPart"])
            if not value["imagLog"]:
                return real
            return f"{real} + i*({_fmt_logs(value['imagLog'])})/(2pi)"
        return ", ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if isinstance(value, str):
        return _fmt_rational(value) if "/" in value else value
    if isinstance(value, list):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def render_text(rep: Report) -> str:
    title = rep.input.get("name")
    lines = [f"{rep.command}: " + (f"{title} " if title else "") + _fmt(rep.input["weights"])]
    for key, value in rep.result.items():
        if key == "shift":
            lines.append("  shift (x 1/(2pi)): (" + ", ".join(_fmt_logs(c) for c in value) + ")")
        elif key == "families":
            lines.append("  families <l, y> in offset + Z:")
            for f in value:
                offset = _fmt({"realPart": f["realPart"], "imagLog": f["imagLog"]})
                lines.append(f"    l={_fmt(f['normal'])}: offset {offset}")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"  {key}:")
            lines.extend(f"    {_fmt(item)}" for item in value)
        else:
            lines.append(f"  {key}: {_fmt(value)}")
    if rep.approx:
        lines.append(f"  approx: {rep.approx}")
    lines.extend(f"  warning: {w}" for w in rep.warnings)
    return "\n".join(lines) + "\n"


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qsdisc",
        description="Discriminant and zonotope hyperplane arrangements of torus weight systems.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help='JSON file with a "weights" array (columns of Q)')
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--reduce", action="store_true", help="pass to the image lattice first")
    p.add_argument("--eval", metavar="LAMBDA", help="horn: evaluate at comma-separated rationals")
    p.add_argument("--approx", action="store_true", help="add decimal renderings")
    return p


def run(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        doc = load_input(args.input)
        rep = build_report(args.command, doc, args.reduce, args.eval, args.approx)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        hint = {
            "NotQuasiSymmetric": "this command needs a quasi-symmetric system; `check` shows the unbalanced line",
            "NotCalabiYau": "the Horn map is only defined on projective space when the weights sum to zero",
        }.get(type(exc).__name__, "")
        print(f"error: {exc}" + (f"\nhint: {hint}" if hint else ""), file=sys.stderr)
        return 1
    sys.stdout.write(rep.to_json() if args.json else render_text(rep))
    if args.command == "compare" and rep.result["verdict"] != EQUAL_AFTER_SHIFT:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
