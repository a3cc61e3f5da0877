"""Command-line driver: classes, pairings, push-pull, cone queries, verify suite.

Class expressions use an explicit grammar — sums of terms
``<rational>*x^i*theta^j`` such as ``"1*theta - 2*x"`` — so exact rational
coefficients like ``1/6`` parse unambiguously.  Wherever an expression is
accepted, a named reference like ``"<gamma 6 4 5 1>"`` builds the
corresponding catalogued class instead.  The ambient (g, d) is always an
explicit flag pair; nothing is inferred from class names.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .catalog import (
    LinearSeries,
    SystemData,
    brill_noether_rho,
    c1d_class,
    chern_character,
    diagonal_class,
    dm_class,
    mult_degeneracy_class,
    pushpull,
    subordinate_class,
    system_c1,
)
from .checks import report_csv, report_json, run_all
from .conelab import CurveClass, bounds_to_json, contains, general_effective_cone_gm2, known_bounds
from .nsring import Ambient, NSClass, canonical_class, eval_top, format_class, format_rational, pair


class UsageError(Exception):
    pass


class ClassSyntaxError(ValueError):
    """Malformed class expression; carries the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position


# -- class-expression grammar -------------------------------------------------

def _tokenize(expr: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    while pos < len(expr):
        ch = expr[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            end = pos
            while end < len(expr) and expr[end].isdigit():
                end += 1
            tokens.append(("int", int(expr[pos:end]), pos))
            pos = end
        elif expr.startswith("theta", pos):
            tokens.append(("name", "theta", pos))
            pos += 5
        elif ch == "x":
            tokens.append(("name", "x", pos))
            pos += 1
        elif ch in "+-*/^":
            tokens.append(("op", ch, pos))
            pos += 1
        else:
            raise ClassSyntaxError(f"unexpected character {ch!r}", pos)
    return tokens


def parse_class(expr: str, amb: Ambient) -> NSClass:
    """Parse the canonical textual form into a class on the given ambient.

    Terms whose degree exceeds d are rejected with an error rather than
    silently truncated: explicit user input should not vanish.
    """
    tokens = _tokenize(expr)
    if not tokens:
        raise ClassSyntaxError("empty class expression", 0)

    def at(index: int) -> tuple[str, object, int]:
        if index >= len(tokens):
            raise ClassSyntaxError("unexpected end of expression", len(expr))
        return tokens[index]

    terms: dict[tuple[int, int], Fraction] = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        kind, value, pos = tokens[i]
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            i += 1
        elif not first:
            raise ClassSyntaxError("expected '+' or '-' between terms", pos)
        kind, value, pos = at(i)
        if kind != "int":
            raise ClassSyntaxError("expected a rational coefficient", pos)
        term_pos = pos
        numerator = value
        i += 1
        denominator = 1
        if i < len(tokens) and tokens[i][:2] == ("op", "/"):
            kind, value, pos = at(i + 1)
            if kind != "int":
                raise ClassSyntaxError("expected an integer denominator", pos)
            if value == 0:
                raise ClassSyntaxError("zero denominator", pos)
            denominator = value
            i += 2
        exponents = {"x": 0, "theta": 0}
        while i < len(tokens) and tokens[i][:2] == ("op", "*"):
            kind, value, pos = at(i + 1)
            if kind != "name":
                raise ClassSyntaxError("expected 'x' or 'theta' after '*'", pos)
            name = value
            i += 2
            power = 1
            if i < len(tokens) and tokens[i][:2] == ("op", "^"):
                kind, value, pos = at(i + 1)
                if kind != "int":
                    raise ClassSyntaxError("expected an integer exponent", pos)
                power = value
                i += 2
            exponents[name] += power
        degree = exponents["x"] + exponents["theta"]
        if degree > amb.d:
            raise ClassSyntaxError(
                f"degree exceeds ambient: term of degree {degree} on C_{amb.d}", term_pos
            )
        key = (exponents["x"], exponents["theta"])
        terms[key] = terms.get(key, Fraction(0)) + Fraction(sign * numerator, denominator)
        first = False
    return NSClass(amb, terms)


# -- named class references ---------------------------------------------------

_REF_SIGNATURES = {
    "gamma": "g d n r",
    "diagonal": "g d",
    "c1d": "g d",
    "canonical": "g d",
    "dm": "g m",
    "system-c1": "g d rank f dimV",
    "mult-class": "g d r",
}


def _build_ref(name: str, args: list[int]) -> NSClass:
    if name == "gamma":
        return subordinate_class(Ambient(args[0], args[1]), LinearSeries(args[2], args[3]))
    if name == "diagonal":
        return diagonal_class(Ambient(args[0], args[1]))
    if name == "c1d":
        return c1d_class(Ambient(args[0], args[1]))
    if name == "canonical":
        return canonical_class(Ambient(args[0], args[1]))
    if name == "dm":
        return dm_class(args[0], args[1])
    if name == "system-c1":
        return system_c1(Ambient(args[0], args[1]), SystemData(args[2], args[3], args[4]))
    if name == "mult-class":
        return mult_degeneracy_class(args[0], args[1], args[2])
    raise UsageError(f"unknown class reference '{name}'; known: {', '.join(sorted(_REF_SIGNATURES))}")


def resolve_class(text: str, amb: Ambient) -> NSClass:
    """An inline class expression, or a "<name int...>" catalogued-class reference."""
    stripped = text.strip()
    if not stripped.startswith("<"):
        return parse_class(text, amb)
    if not stripped.endswith(">"):
        raise UsageError(f"unterminated class reference: {text!r}")
    fields = stripped[1:-1].split()
    if not fields:
        raise UsageError("empty class reference")
    name, raw_args = fields[0], fields[1:]
    signature = _REF_SIGNATURES.get(name)
    if signature is None:
        raise UsageError(f"unknown class reference '{name}'; known: {', '.join(sorted(_REF_SIGNATURES))}")
    expected = len(signature.split())
    if len(raw_args) != expected:
        raise UsageError(f"class reference '{name}' takes {expected} integers: <{name} {signature}>")
    try:
        args = [int(a) for a in raw_args]
    except ValueError:
        raise UsageError(f"class reference arguments must be integers: {text!r}") from None
    cls = _build_ref(name, args)
    if cls.ambient != amb:
        raise UsageError(f"class reference lives on {cls.ambient}, command ambient is {amb}")
    return cls


# -- output helpers -----------------------------------------------------------

def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _status_word(passed: bool) -> str:
    word = "PASS" if passed else "FAIL"
    if _use_color():
        return f"\x1b[32m{word}\x1b[0m" if passed else f"\x1b[31m{word}\x1b[0m"
    return word


# -- verb handlers ------------------------------------------------------------

def _require(args, names: list[str], context: str) -> list[int]:
    values = []
    for name in names:
        value = getattr(args, name.replace("-", "_"))
        if value is None:
            flags = " ".join(f"--{n}" for n in names)
            raise UsageError(f"{context} requires {flags}")
        values.append(value)
    return values


def cmd_class(args) -> int:
    name = args.name
    if name == "rho":
        g, r, d = _require(args, ["g", "r", "d"], "--name rho")
        value = brill_noether_rho(g, r, d)
        _emit(args, [str(value)], {"name": name, "value": value})
        return 0
    if name == "gamma":
        g, d, n, r = _require(args, ["g", "d", "n", "r"], "--name gamma")
        cls = subordinate_class(Ambient(g, d), LinearSeries(n, r))
    elif name == "diagonal":
        g, d = _require(args, ["g", "d"], "--name diagonal")
        cls = diagonal_class(Ambient(g, d))
    elif name == "c1d":
        g, d = _require(args, ["g", "d"], "--name c1d")
        cls = c1d_class(Ambient(g, d))
    elif name == "canonical":
        g, d = _require(args, ["g", "d"], "--name canonical")
        cls = canonical_class(Ambient(g, d))
    elif name == "dm":
        g, m = _require(args, ["g", "m"], "--name dm")
        cls = dm_class(g, m)
        if args.d is not None and args.d != cls.ambient.d:
            raise UsageError(f"--d {args.d} does not match the class ambient C_{cls.ambient.d}")
    elif name == "system-c1":
        g, d, rank, f, dim_v = _require(args, ["g", "d", "rank", "f", "dim-v"], "--name system-c1")
        cls = system_c1(Ambient(g, d), SystemData(rank, f, dim_v))
    elif name == "ch":
        g, d, rank, f = _require(args, ["g", "d", "rank", "f"], "--name ch")
        max_degree = args.max_degree if args.max_degree is not None else min(2, d)
        cls = chern_character(Ambient(g, d), rank, f, max_degree)
    elif name == "mult-class":
        g, d, r = _require(args, ["g", "d", "r"], "--name mult-class")
        cls = mult_degeneracy_class(g, d, r)
    else:
        raise UsageError(f"unknown class name '{name}'")
    payload = {
        "name": name,
        "ambient": {"g": cls.ambient.g, "d": cls.ambient.d},
        "class": format_class(cls),
    }
    _emit(args, [format_class(cls)], payload)
    return 0


def cmd_eval(args) -> int:
    amb = Ambient(args.g, args.d)
    value = eval_top(resolve_class(args.expr, amb))
    _emit(args, [format_rational(value)],
          {"g": args.g, "d": args.d, "expr": args.expr, "value": format_rational(value)})
    return 0


def cmd_pair(args) -> int:
    amb = Ambient(args.g, args.d)
    value = pair(resolve_class(args.a, amb), resolve_class(args.b, amb))
    _emit(args, [format_rational(value)],
          {"g": args.g, "d": args.d, "a": args.a, "b": args.b, "value": format_rational(value)})
    return 0


def cmd_pushpull(args) -> int:
    amb = Ambient(args.g, args.d)
    image = pushpull(resolve_class(args.expr, amb), args.k)
    payload = {
        "g": args.g, "d": args.d, "k": args.k,
        "targetD": image.ambient.d,
        "class": format_class(image),
    }
    _emit(args, [format_class(image)], payload)
    return 0


def cmd_cone(args) -> int:
    curve = CurveClass(args.curve)
    if curve is CurveClass.GENERAL and args.d == args.g - 2:
        cone = general_effective_cone_gm2(args.g)
        lines = [f"ray: {cone.ray1}", f"ray: {cone.ray2}"]
        payload = {
            "curve": curve.value, "g": args.g, "d": args.d,
            "rays": [
                {"theta": format_rational(r.theta), "x": format_rational(r.x)}
                for r in (cone.ray1, cone.ray2)
            ],
        }
        if args.query is not None:
            inside = contains(cone, parse_class(args.query, Ambient(args.g, args.d)))
            lines.append(f"contains: {'true' if inside else 'false'}")
            payload["query"] = args.query
            payload["contains"] = inside
        _emit(args, lines, payload)
        return 0
    if args.query is not None:
        raise UsageError(
            "membership queries need the full cone: --curve general with --d equal to g-2"
        )
    entries = known_bounds(curve, args.g, args.d)
    if args.format == "json":
        print(bounds_to_json(entries), end="")
    else:
        for e in entries:
            print(f"{e.curve.value} g={e.g} d={e.d}: {e.ray} [{e.status.value}]")
    return 0


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    return values


def _config_int(raw: dict[str, str], path: str, key: str) -> int | None:
    if key not in raw:
        return None
    try:
        return int(raw[key])
    except ValueError:
        raise UsageError(f"{path}: key '{key}' must be an integer, got {raw[key]!r}") from None


def cmd_verify(args) -> int:
    g_min, g_max = args.g_min, args.g_max
    if args.config:
        raw = _read_config(args.config)
        for key in raw:
            if key not in ("g-min", "g-max"):
                raise UsageError(f"{args.config}: unknown key '{key}'")
        if g_min is None:
            g_min = _config_int(raw, args.config, "g-min")
        if g_max is None:
            g_max = _config_int(raw, args.config, "g-max")
    g_min = 5 if g_min is None else g_min
    g_max = 40 if g_max is None else g_max
    report = run_all(g_min, g_max)
    if args.format == "json":
        print(report_json(report), end="")
    elif args.format == "csv":
        print(report_csv(report), end="")
    else:
        for check in report.checks:
            params = " ".join(f"{k}={v}" for k, v in sorted(check.params.items()))
            line = f"{_status_word(check.passed)} {check.check_id}"
            if params:
                line += f" {params}"
            if not check.passed:
                line += f"  lhs={check.lhs}  rhs={check.rhs}"
            print(line)
        print(f"summary: {report.total} checks, {report.passed} passed, {report.failed} failed")
    return 2 if report.failed else 0


# -- argument parsing ---------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cdcalc", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add_format(sub, choices=("text", "json")):
        sub.add_argument("--format", choices=choices, default="text")

    sub = verbs.add_parser("class", help="print a catalogued class in canonical form")
    sub.add_argument("--name", required=True,
                     choices=["gamma", "diagonal", "c1d", "canonical", "dm", "system-c1",
                              "ch", "rho", "mult-class"])
    for flag in ("--g", "--d", "--n", "--r", "--m", "--rank", "--f", "--dim-v", "--max-degree"):
        sub.add_argument(flag, type=int)
    add_format(sub)
    sub.set_defaults(handler=cmd_class)

    sub = verbs.add_parser("eval", help="evaluate a top-degree class expression")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--expr", required=True)
    add_format(sub)
    sub.set_defaults(handler=cmd_eval)

    sub = verbs.add_parser("pair", help="intersection pairing of two classes")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--a", required=True)
    sub.add_argument("--b", required=True)
    add_format(sub)
    sub.set_defaults(handler=cmd_pair)

    sub = verbs.add_parser("pushpull", help="apply the push-pull operator to a class")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--expr", required=True)
    add_format(sub)
    sub.set_defaults(handler=cmd_pushpull)

    sub = verbs.add_parser("cone", help="cone rays, membership queries, catalogued bounds")
    sub.add_argument("--curve", required=True, choices=[c.value for c in CurveClass])
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--query")
    add_format(sub)
    sub.set_defaults(handler=cmd_cone)

    sub = verbs.add_parser("verify", help="run the identity suite over a genus sweep")
    sub.add_argument("--g-min", type=int)
    sub.add_argument("--g-max", type=int)
    sub.add_argument("--config", help="optional key=value file pre-setting g-min/g-max")
    add_format(sub, choices=("text", "json", "csv"))
    sub.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
