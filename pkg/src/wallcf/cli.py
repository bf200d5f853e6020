"""Command-line front end: file conversion, classification and oracle audits.

Input documents are line oriented.  ``#`` starts a comment; the first
non-comment line is a header naming the representation::

    moments 5
    1, 1/2, 1/3, 1/4, 1/5

    sfrac 3
    1 1/2 1/6

    jfrac p=1 q=1 c=1
    gamma: 1/2, 1/2
    beta: 1/12

    wall c=1 n=3
    1/2 1/3 1/2

A file with no header is read as moments.  Values are exact rationals
``p`` or ``p/q``; decimals are rejected.

Exit codes: 0 success, 2 parse or usage error, 3 representation error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .cfrac import (
    JFraction,
    SFraction,
    contract,
    jfrac_from_series,
    jfrac_shift,
    series_from_jfrac,
    series_from_sfrac,
    sfrac_from_series,
    uncontract,
)
from .errors import NotJFractionRepresentable, RepresentationError, WallCFError
from .oracle import completely_monotone_check, hankel_report, random_measure
from .series import PowerSeries, binomial_transform, format_rational, moments, to_rational
from .wall import (
    Verdict,
    WallParams,
    alpha_from_g,
    classify,
    extract_wall,
    extract_wall_via_proof_path,
    g_from_alpha,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_REPR = 3

KINDS = ("moments", "sfrac", "jfrac", "wall")


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    command: str
    input: str | None = None
    output: str | None = None
    to: str | None = None
    order: int | None = None
    xi: Fraction | None = None
    seed: int = 0
    format: str = "text"

    def __post_init__(self):
        if self.order is not None and self.order < 0:
            raise ParseError("--order must be >= 0")
        if self.to is not None and self.to not in KINDS:
            raise ParseError(f"--to must be one of {', '.join(KINDS)}")


@dataclass(frozen=True)
class Document:
    """One parsed representation.  ``value`` is a PowerSeries, SFraction,
    JFraction or WallParams; ``scale`` is the leading constant of a J-fraction."""

    kind: str
    value: Any
    scale: Fraction = Fraction(1)
    notes: tuple[str, ...] = field(default=())


# -- parsing ---------------------------------------------------------------

_TOKEN_SPLIT = re.compile(r"[,\s]+")


def _values(text: str) -> list[Fraction]:
    out = []
    for tok in _TOKEN_SPLIT.split(text.strip()):
        if not tok:
            continue
        try:
            out.append(to_rational(tok))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return out


def _header_fields(tokens: Sequence[str]) -> dict[str, str]:
    fields = {}
    for tok in tokens:
        if "=" not in tok:
            raise ParseError(f"expected key=value in header, got {tok!r}")
        k, v = tok.split("=", 1)
        fields[k] = v
    return fields


def _int_field(fields: dict[str, str], key: str) -> int:
    try:
        return int(fields[key])
    except KeyError:
        raise ParseError(f"header needs {key}=") from None
    except ValueError:
        raise ParseError(f"{key}= must be an integer") from None


def _rational_field(fields: dict[str, str], key: str, default=None) -> Fraction:
    if key not in fields:
        if default is None:
            raise ParseError(f"header needs {key}=")
        return default
    try:
        return to_rational(fields[key])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _expect_len(kind: str, got: int, want: int) -> None:
    if got != want:
        raise ParseError(f"{kind}: header declares {want} values, found {got}")


def parse_document(text: str) -> Document:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    kind = head[0]
    if kind not in KINDS:
        vals = _values(" ".join(lines))
        return Document("moments", PowerSeries(vals))
    body = lines[1:]
    try:
        if kind == "moments" or kind == "sfrac":
            if len(head) != 2:
                raise ParseError(f"header should be '{kind} <length>'")
            try:
                n = int(head[1])
            except ValueError:
                raise ParseError(f"{kind} length must be an integer") from None
            vals = _values(" ".join(body))
            _expect_len(kind, len(vals), n)
            if not vals:
                raise ParseError(f"{kind} needs at least one value")
            value = PowerSeries(vals) if kind == "moments" else SFraction(vals)
            return Document(kind, value)
        fields = _header_fields(head[1:])
        if kind == "wall":
            n = _int_field(fields, "n")
            c = _rational_field(fields, "c")
            vals = _values(" ".join(body))
            _expect_len("wall", len(vals), n)
            return Document(kind, WallParams(c, vals))
        p, q = _int_field(fields, "p"), _int_field(fields, "q")
        c = _rational_field(fields, "c", Fraction(1))
        parts: dict[str, list[Fraction]] = {"gamma": [], "beta": []}
        for line in body:
            name, sep, rest = line.partition(":")
            if not sep or name.strip() not in parts:
                raise ParseError(f"jfrac body lines must start with 'gamma:' or 'beta:', got {line!r}")
            parts[name.strip()].extend(_values(rest))
        _expect_len("jfrac gamma", len(parts["gamma"]), p + 1)
        _expect_len("jfrac beta", len(parts["beta"]), q)
        return Document(kind, JFraction(parts["gamma"], parts["beta"]), scale=c)
    except ParseError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from None


# -- conversions -----------------------------------------------------------


def _determined_order(doc: Document) -> int | None:
    """Highest series order fixed by ``doc``; None when every order is fixed."""
    v = doc.value
    if doc.kind == "moments":
        return v.order
    if doc.kind == "sfrac":
        return None if v.terminates else v.order
    if doc.kind == "wall":
        # g_i = 0 zeroes alpha_i, g_i = 1 zeroes alpha_{i+1}
        return None if any(x in (0, 1) for x in v.g) else len(v.g)
    if any(b == 0 for b in v.beta):
        return None
    return v.order


def to_moments(doc: Document, order: int | None = None) -> Document:
    det = _determined_order(doc)
    notes = []
    if order is None:
        if det is None:
            # a terminating fraction: expand as far as it was written
            order = len(doc.value.alpha) - 1 if doc.kind == "sfrac" else (
                len(doc.value.g) if doc.kind == "wall" else doc.value.order
            )
        else:
            order = det
    elif det is not None and order > det:
        notes.append(f"requested order {order} exceeds determined order {det}; truncated")
        order = det
    v = doc.value
    if doc.kind == "moments":
        a = v.truncate(order)
    elif doc.kind == "sfrac":
        a = series_from_sfrac(v, order)
    elif doc.kind == "wall":
        a = series_from_sfrac(alpha_from_g(v), order)
    else:
        a = series_from_jfrac(v, order).scale(doc.scale)
    return Document("moments", a, notes=tuple(notes))


def _to_sfrac(doc: Document) -> Document:
    if doc.kind == "sfrac":
        return doc
    if doc.kind == "wall":
        return Document("sfrac", alpha_from_g(doc.value))
    if doc.kind == "jfrac":
        s = uncontract(doc.value)
        return Document("sfrac", SFraction((doc.scale,) + s.alpha[1:]))
    return Document("sfrac", sfrac_from_series(doc.value))


def _to_jfrac(doc: Document) -> Document:
    if doc.kind == "jfrac":
        return doc
    if doc.kind == "moments":
        a = doc.value
        if a[0] == 0:
            raise NotJFractionRepresentable(0)
        return Document("jfrac", jfrac_from_series(a.scale(1 / a[0])), scale=a[0])
    s = _to_sfrac(doc).value
    c = s.alpha[0]
    return Document("jfrac", contract(SFraction((1,) + s.alpha[1:])), scale=c)


def _to_wall(doc: Document) -> Verdict:
    if doc.kind == "moments":
        return extract_wall(doc.value)
    return g_from_alpha(_to_sfrac(doc).value)


def convert(doc: Document, target: str, order: int | None = None, xi=None):
    """Convert ``doc`` to ``target``.  Returns a Document, or a Verdict for ``wall``."""
    if xi is not None:
        if doc.kind == "jfrac":
            doc = Document("jfrac", jfrac_shift(doc.value, xi), scale=doc.scale)
        else:
            m = to_moments(doc, order)
            doc = Document("moments", binomial_transform(m.value, xi), notes=m.notes)
    if order is not None and doc.kind == "moments":
        doc = to_moments(doc, order)
    if target == "moments":
        return to_moments(doc, order)
    if target == "sfrac":
        return _to_sfrac(doc)
    if target == "jfrac":
        return _to_jfrac(doc)
    verdict = _to_wall(doc)
    if verdict.consistent:
        return Document("wall", verdict.params)
    return verdict


# -- rendering -------------------------------------------------------------


def _fmt(xs) -> str:
    return ", ".join(format_rational(Fraction(x)) for x in xs)


def _strs(xs) -> list[str]:
    return [format_rational(Fraction(x)) for x in xs]


def document_record(doc: Document) -> dict:
    v = doc.value
    rec: dict[str, Any] = {"kind": doc.kind}
    det = _determined_order(doc)
    if doc.kind == "moments":
        rec["values"] = _strs(v.coeffs)
    elif doc.kind == "sfrac":
        rec["alpha"] = _strs(v.alpha)
    elif doc.kind == "jfrac":
        rec.update(c=format_rational(doc.scale), gamma=_strs(v.gamma), beta=_strs(v.beta))
    else:
        rec.update(c=format_rational(v.c), g=_strs(v.g))
    rec["determined_order"] = "all" if det is None else det
    if doc.notes:
        rec["notes"] = list(doc.notes)
    return rec


def render_document(doc: Document) -> str:
    v = doc.value
    det = _determined_order(doc)
    out = [f"# {note}" for note in doc.notes]
    out.append(
        "# determined order: " + ("all (fraction terminates)" if det is None else str(det))
    )
    if doc.kind == "moments":
        out += [f"moments {len(v)}", _fmt(v.coeffs)]
    elif doc.kind == "sfrac":
        out += [f"sfrac {len(v)}", _fmt(v.alpha)]
    elif doc.kind == "jfrac":
        out += [
            f"jfrac p={len(v.gamma) - 1} q={len(v.beta)} c={format_rational(doc.scale)}",
            "gamma: " + _fmt(v.gamma),
            "beta: " + _fmt(v.beta),
        ]
    else:
        out += [f"wall c={format_rational(v.c)} n={len(v.g)}", _fmt(v.g)]
    return "\n".join(out) + "\n"


def verdict_record(v: Verdict) -> dict:
    rec: dict[str, Any] = {
        "verdict": v.status.value,
        "c": format_rational(v.c),
        "attempted_g": _strs(v.attempted_g),
    }
    if v.index is not None:
        rec["index"] = v.index
    if v.value is not None:
        rec["value"] = format_rational(v.value)
    if v.params is not None:
        rec["g"] = _strs(v.params.g)
    return rec


def _scalar_text(val) -> str:
    if val is None:
        return "none"
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, list):
        return "[" + ", ".join(_scalar_text(x) for x in val) + "]"
    return str(val)


def render_record(rec: dict, indent: str = "") -> str:
    lines = []
    for key, val in rec.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_record(val, indent + "  ").rstrip("\n"))
        else:
            lines.append(f"{indent}{key}: {_scalar_text(val)}")
    return "\n".join(lines) + "\n"


def emit(rec_or_doc, fmt: str) -> str:
    if isinstance(rec_or_doc, Document):
        if fmt == "json":
            return json.dumps(document_record(rec_or_doc), indent=2) + "\n"
        return render_document(rec_or_doc)
    if fmt == "json":
        return json.dumps(rec_or_doc, indent=2) + "\n"
    return render_record(rec_or_doc)


def error_record(exc: BaseException) -> dict:
    rec: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
    for attr in ("level", "index"):
        if hasattr(exc, attr):
            rec[attr] = getattr(exc, attr)
    return rec


# -- commands --------------------------------------------------------------


def _hankel_record(a: PowerSeries) -> dict:
    rep = hankel_report(a)
    rec: dict[str, Any] = {"dets_H0": _strs(rep.dets_H0), "dets_H1": _strs(rep.dets_H1)}
    rec["first_negative"] = None if rep.first_negative is None else list(rep.first_negative)
    return rec


def _cmd_convert(spec: JobSpec, doc: Document):
    if spec.to is None:
        raise ParseError("convert needs --to")
    result = convert(doc, spec.to, spec.order, spec.xi)
    if isinstance(result, Verdict):
        return verdict_record(result)
    return result


def _input_moments(spec: JobSpec, doc: Document) -> PowerSeries:
    return convert(doc, "moments", spec.order, spec.xi).value


def _cmd_classify(spec: JobSpec, doc: Document):
    a = _input_moments(spec, doc)
    cl = classify(a)
    rec: dict[str, Any] = {"class": cl.moment_class.value, "wall": verdict_record(cl.verdict)}
    if cl.alpha is not None:
        rec["alpha"] = _strs(cl.alpha.alpha)
    if cl.stieltjes_failure is not None:
        rec["stieltjes_failure"] = list(cl.stieltjes_failure)
    rec["hankel"] = _hankel_record(a)
    return rec


def _cmd_gparams(spec: JobSpec, doc: Document):
    a = _input_moments(spec, doc)
    va, vb = extract_wall(a), extract_wall_via_proof_path(a)
    m = min(len(va.attempted_g), len(vb.attempted_g))
    agree = (
        va.status == vb.status
        and va.index == vb.index
        and va.attempted_g[:m] == vb.attempted_g[:m]
    )
    return {
        "agree": agree,
        "common_prefix": m,
        "sfrac_route": verdict_record(va),
        "proof_route": dict(verdict_record(vb), alpha_prime=_strs(vb.alpha)),
    }


def _cmd_oracle(spec: JobSpec, doc: Document):
    a = _input_moments(spec, doc)
    cm = completely_monotone_check(a)
    return {
        "hankel": _hankel_record(a),
        "completely_monotone": cm is None,
        "cm_violation": None if cm is None else list(cm),
    }


def _cmd_demo(spec: JobSpec, _doc):
    catalan = series_from_sfrac(SFraction([1] * 10), 9)
    uniform = PowerSeries(Fraction(1, n + 1) for n in range(12))
    factorial = PowerSeries([1, 1, 2, 6, 24, 120, 720, 5040])
    rng = random.Random(spec.seed)
    mu = random_measure(rng, 0, 1, max_atoms=4)
    sample = moments(mu, 8)
    va, vb = extract_wall(sample), extract_wall_via_proof_path(sample)
    return {
        "catalan": {"alpha": "all 1", "moments": _strs(catalan)},
        "uniform": {"moments": _strs(uniform), "wall": verdict_record(extract_wall(uniform))},
        "factorial": {
            "moments": _strs(factorial),
            "alpha": _strs(sfrac_from_series(factorial).alpha),
            "class": classify(factorial).moment_class.value,
            "wall": verdict_record(extract_wall(factorial)),
        },
        "random_measure": {
            "seed": spec.seed,
            "atoms": [[format_rational(x), format_rational(w)] for x, w in mu.atoms],
            "moments": _strs(sample),
            "sfrac_route": verdict_record(va),
            "routes_agree": va.attempted_g == vb.attempted_g and va.status == vb.status,
        },
    }


COMMANDS = {
    "convert": _cmd_convert,
    "classify": _cmd_classify,
    "gparams": _cmd_gparams,
    "oracle": _cmd_oracle,
    "demo": _cmd_demo,
}


def run(spec: JobSpec, stdin_text: str | None = None) -> tuple[int, str]:
    """Execute a job; returns (exit code, output text).  Never raises for bad input."""
    try:
        doc = None
        if spec.command != "demo":
            if spec.input is None or spec.input == "-":
                text = stdin_text if stdin_text is not None else sys.stdin.read()
            else:
                try:
                    with open(spec.input, encoding="utf-8") as fh:
                        text = fh.read()
                except OSError as exc:
                    raise ParseError(f"cannot read {spec.input}: {exc.strerror}") from None
            doc = parse_document(text)
        result = COMMANDS[spec.command](spec, doc)
    except ParseError as exc:
        return EXIT_PARSE, emit(error_record(exc), spec.format)
    except (RepresentationError, WallCFError, ValueError, ZeroDivisionError) as exc:
        return EXIT_REPR, emit(error_record(exc), spec.format)
    return EXIT_OK, emit(result, spec.format)


def _rational_arg(s: str) -> Fraction:
    try:
        return to_rational(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallcf",
        description="Exact moment sequences, S-/J-fractions and Wall g-parameters.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "convert": "convert between moments, sfrac, jfrac and wall",
        "classify": "strongest moment class consistent with the prefix",
        "gparams": "g-parameters by both extraction routes",
        "oracle": "Hankel determinants and complete monotonicity",
        "demo": "worked examples",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--input", "-i", help="input file (default stdin)")
        p.add_argument("--output", "-o", help="output file (default stdout)")
        p.add_argument("--order", "-N", type=int, help="truncation order")
        p.add_argument("--xi", type=_rational_arg, help="binomial-transform shift p/q")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name == "convert":
            p.add_argument("--to", required=True, choices=KINDS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = JobSpec(
            command=args.command,
            input=args.input,
            output=args.output,
            to=getattr(args, "to", None),
            order=args.order,
            xi=args.xi,
            seed=args.seed,
            format=args.format,
        )
    except ParseError as exc:
        print(f"wallcf: {exc}", file=sys.stderr)
        return EXIT_PARSE
    code, text = run(spec)
    if spec.output:
        with open(spec.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code != EXIT_OK:
        print(f"wallcf: {text.splitlines()[0]}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
