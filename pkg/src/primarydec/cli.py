"""Batch front end: a small declaration language with deterministic output.

A script declares a ring, binds ideals or modules, and runs commands against
the bindings.  Output is readable text or a JSON array with one object per
command.  Rationals are rendered as strings inside polynomial text so no JSON
reader can lose precision.  Exit codes: 0 success, 1 parse or input error,
2 computational failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .decompose import (
    DecompositionError,
    localize_module,
    min_ass,
    primary_decomposition,
)
from .groebner import annihilator, buchberger, canonical
from .homology import HomologyError, equidim_hull
from .polyring import (
    FreeElement,
    MonomialOrder,
    Polynomial,
    RingContext,
    Submodule,
    ideal,
    render_polynomial,
)
from .verify import validate_decomposition


class ScriptError(Exception):
    """Input-level failure: syntax, unknown identifier, unusable file."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"line {line}, column {col}: {message}"
        super().__init__(message)


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

_SYMBOLS = "=,;()[]+-*^/."


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "/" and i + 1 < n and source[i + 1] == "/":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and source[j] not in '"\n':
                j += 1
            if j >= n or source[j] == "\n":
                raise ScriptError("unterminated string", line, col)
            toks.append(Token("string", source[i + 1 : j], line, col))
            col += j - i + 1
            i = j + 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            toks.append(Token("name", source[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            toks.append(Token("int", source[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append(Token("sym", ch, line, col))
            i += 1
            col += 1
            continue
        raise ScriptError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("end", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# statements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingDecl:
    name: str


@dataclass(frozen=True)
class Binding:
    name: str


@dataclass(frozen=True)
class Command:
    verb: str
    shown_input: str
    module: Submodule
    extra_module: Submodule | None = None
    file_arg: str | None = None


@dataclass(frozen=True)
class Script:
    statements: tuple


_ORDER_NAMES = ("dp", "lp", "wp")
_COMMAND_VERBS = ("primdec", "hull", "minass", "localize", "validate")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0
        self.ring: RingContext | None = None
        self.bindings: dict[str, Submodule] = {}

    def peek(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "end":
            self.pos += 1
        return t

    def at_sym(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "sym" and t.text == text

    def expect_sym(self, text: str) -> Token:
        t = self.advance()
        if t.kind != "sym" or t.text != text:
            raise ScriptError(f"expected {text!r}", t.line, t.col)
        return t

    def expect_name(self) -> Token:
        t = self.advance()
        if t.kind != "name":
            raise ScriptError("expected an identifier", t.line, t.col)
        return t

    def expect_int(self) -> int:
        t = self.advance()
        if t.kind != "int":
            raise ScriptError("expected an integer", t.line, t.col)
        return int(t.text)

    def require_ring(self, tok: Token) -> RingContext:
        if self.ring is None:
            raise ScriptError("no ring declared yet", tok.line, tok.col)
        return self.ring

    def lookup(self, tok: Token) -> Submodule:
        if tok.text not in self.bindings:
            raise ScriptError(f"unknown identifier {tok.text!r}", tok.line, tok.col)
        return self.bindings[tok.text]

    # -- polynomials --------------------------------------------------------

    def parse_polynomial(self) -> Polynomial:
        ring = self.require_ring(self.peek())
        sign = 1
        if self.at_sym("+") or self.at_sym("-"):
            if self.advance().text == "-":
                sign = -1
        acc = self._parse_term(ring)
        if sign < 0:
            acc = -acc
        while self.at_sym("+") or self.at_sym("-"):
            op = self.advance().text
            term = self._parse_term(ring)
            acc = acc + term if op == "+" else acc - term
        return acc

    def _parse_term(self, ring: RingContext) -> Polynomial:
        acc = self._parse_factor(ring)
        while self.at_sym("*"):
            self.advance()
            acc = acc * self._parse_factor(ring)
        return acc

    def _parse_factor(self, ring: RingContext) -> Polynomial:
        base = self._parse_base(ring)
        if self.at_sym("^"):
            self.advance()
            return base ** self.expect_int()
        return base

    def _parse_base(self, ring: RingContext) -> Polynomial:
        t = self.advance()
        if t.kind == "name":
            try:
                return ring.variable(ring.var_index(t.text))
            except KeyError:
                raise ScriptError(f"unknown variable {t.text!r}", t.line, t.col)
        if t.kind == "int":
            num = int(t.text)
            if self.at_sym("/"):
                self.advance()
                den = self.expect_int()
                if den == 0:
                    raise ScriptError("zero denominator", t.line, t.col)
                return ring.constant(Fraction(num, den))
            return ring.constant(num)
        if t.kind == "sym" and t.text == "(":
            p = self.parse_polynomial()
            self.expect_sym(")")
            return p
        raise ScriptError("expected a polynomial", t.line, t.col)

    def _parse_vector(self, ring: RingContext) -> FreeElement:
        self.expect_sym("[")
        comps = [self.parse_polynomial()]
        while self.at_sym(","):
            self.advance()
            comps.append(self.parse_polynomial())
        self.expect_sym("]")
        return FreeElement(ring, tuple(comps))

    # -- statements ---------------------------------------------------------

    def parse_ring(self) -> RingDecl:
        name = self.expect_name()
        self.expect_sym("=")
        char = self.advance()
        if char.kind != "int" or char.text != "0":
            raise ScriptError("only characteristic 0 supported", char.line, char.col)
        self.expect_sym(",")
        self.expect_sym("(")
        varnames = [self.expect_name().text]
        while self.at_sym(","):
            self.advance()
            varnames.append(self.expect_name().text)
        self.expect_sym(")")
        if len(set(varnames)) != len(varnames):
            raise ScriptError("duplicate variable name", char.line, char.col)
        self.expect_sym(",")
        order_tok = self.expect_name()
        if order_tok.text not in _ORDER_NAMES:
            raise ScriptError(
                f"unknown order {order_tok.text!r} (expected dp, lp or wp)",
                order_tok.line,
                order_tok.col,
            )
        if order_tok.text == "dp":
            order = MonomialOrder(kind="degrevlex")
        elif order_tok.text == "lp":
            order = MonomialOrder(kind="lex")
        else:
            self.expect_sym("(")
            weights = [self.expect_int()]
            while self.at_sym(","):
                self.advance()
                weights.append(self.expect_int())
            self.expect_sym(")")
            if len(weights) != len(varnames):
                raise ScriptError(
                    "weight count does not match variable count",
                    order_tok.line,
                    order_tok.col,
                )
            order = MonomialOrder(kind="degrevlex", weights=tuple(weights))
        self.expect_sym(";")
        self.ring = RingContext(tuple(varnames), order)
        self.bindings = {}
        return RingDecl(name.text)

    def parse_ideal(self) -> Binding:
        name = self.expect_name()
        ring = self.require_ring(name)
        self.expect_sym("=")
        polys = [self.parse_polynomial()]
        while self.at_sym(","):
            self.advance()
            polys.append(self.parse_polynomial())
        self.expect_sym(";")
        self.bindings[name.text] = ideal(ring, polys)
        return Binding(name.text)

    def parse_module(self) -> Binding:
        name = self.expect_name()
        ring = self.require_ring(name)
        self.expect_sym("=")
        vectors = [self._parse_vector(ring)]
        while self.at_sym(","):
            self.advance()
            vectors.append(self._parse_vector(ring))
        self.expect_sym(";")
        rank = len(vectors[0].components)
        if any(len(v.components) != rank for v in vectors):
            raise ScriptError("module generators have mixed lengths", name.line, name.col)
        self.bindings[name.text] = Submodule(ring, rank, vectors)
        return Binding(name.text)

    def parse_file_arg(self) -> str:
        t = self.peek()
        if t.kind == "string":
            self.advance()
            return t.text
        pieces = []
        while not self.at_sym(";") and self.peek().kind != "end":
            pieces.append(self.advance().text)
        if not pieces:
            raise ScriptError("expected a file name", t.line, t.col)
        return "".join(pieces)

    def parse_command(self, verb: Token) -> Command:
        name = self.expect_name()
        self.require_ring(name)
        module = self.lookup(name)
        if verb.text in ("primdec", "hull", "minass"):
            self.expect_sym(";")
            return Command(verb.text, name.text, module)
        if verb.text == "localize":
            self.expect_sym(",")
            prime_tok = self.expect_name()
            prime = self.lookup(prime_tok)
            if prime.ambient_rank != 1:
                raise ScriptError(
                    "localize expects an ideal as second argument",
                    prime_tok.line,
                    prime_tok.col,
                )
            self.expect_sym(";")
            return Command(
                verb.text,
                f"{name.text}, {prime_tok.text}",
                module,
                extra_module=prime,
            )
        self.expect_sym(",")
        file_arg = self.parse_file_arg()
        self.expect_sym(";")
        return Command(
            verb.text, f"{name.text}, {file_arg}", module, file_arg=file_arg
        )

    def parse_script(self) -> Script:
        statements = []
        while True:
            t = self.peek()
            if t.kind == "end":
                break
            if t.kind != "name":
                raise ScriptError("expected a statement", t.line, t.col)
            self.advance()
            if t.text == "ring":
                statements.append(self.parse_ring())
            elif t.text == "ideal":
                statements.append(self.parse_ideal())
            elif t.text == "module":
                statements.append(self.parse_module())
            elif t.text in _COMMAND_VERBS:
                statements.append(self.parse_command(t))
            else:
                raise ScriptError(f"unknown statement {t.text!r}", t.line, t.col)
        return Script(tuple(statements))


def parse_script(source: str) -> Script:
    return _Parser(tokenize(source)).parse_script()


def parse_polynomial(ring: RingContext, text: str) -> Polynomial:
    """Parse a single polynomial in the given ring; used for round trips."""
    parser = _Parser(tokenize(text))
    parser.ring = ring
    p = parser.parse_polynomial()
    t = parser.peek()
    if t.kind != "end":
        raise ScriptError("trailing input after polynomial", t.line, t.col)
    return p


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------


def _rendered_generators(A: Submodule):
    Ac = canonical(A)
    if Ac.ambient_rank == 1:
        return [render_polynomial(g.components[0]) for g in Ac.generators]
    return [
        [render_polynomial(p) for p in g.components] for g in Ac.generators
    ]


def _ideal_generators_list(A: Submodule) -> list[str]:
    return [render_polynomial(g.components[0]) for g in canonical(A).generators]


def _components_from_json(doc, M: Submodule):
    if isinstance(doc, dict):
        doc = doc.get("components")
    elif isinstance(doc, list) and doc and all(
        isinstance(x, dict) and "components" in x for x in doc
    ):
        if len(doc) != 1:
            raise ScriptError("expected output holds more than one command")
        doc = doc[0]["components"]
    if not isinstance(doc, list):
        raise ScriptError("expected output carries no component list")
    ring = M.ring
    pairs = []
    for entry in doc:
        if not isinstance(entry, dict):
            raise ScriptError("component entries must be objects")
        gens = entry.get("generators")
        prime_gens = entry.get("prime")
        if gens is None or prime_gens is None:
            raise ScriptError("component entries need generators and prime")
        vectors = []
        for g in gens:
            if isinstance(g, str):
                comps = [g]
            else:
                comps = list(g)
            if len(comps) != M.ambient_rank:
                raise ScriptError("component generator has wrong length")
            vectors.append(
                FreeElement(ring, tuple(parse_polynomial(ring, c) for c in comps))
            )
        prime = ideal(ring, [parse_polynomial(ring, g) for g in prime_gens])
        pairs.append((Submodule(ring, M.ambient_rank, vectors), prime))
    return pairs


def _execute_command(cmd: Command, bound: int, seed: int, base_dir: Path) -> dict:
    M = cmd.module
    if cmd.verb == "primdec":
        res = primary_decomposition(M, bound=bound, seed=seed)
        report = validate_decomposition(M, res.components, seed=seed)
        comps = [
            {
                "generators": _rendered_generators(c.module),
                "prime": _ideal_generators_list(c.prime),
                "codim": c.codim,
                "embedded": c.embedded,
            }
            for c in res.components
        ]
        return {
            "command": "primdec",
            "input": cmd.shown_input,
            "components": comps,
            "validation": report.as_dict(),
        }
    if cmd.verb == "hull":
        if buchberger(M).is_full():
            H = M
        else:
            H = equidim_hull(M)
        return {
            "command": "hull",
            "input": cmd.shown_input,
            "generators": _rendered_generators(H),
        }
    if cmd.verb == "minass":
        I = M if M.ambient_rank == 1 else annihilator(M)
        primes = min_ass(I, seed)
        return {
            "command": "minass",
            "input": cmd.shown_input,
            "primes": [_ideal_generators_list(P) for P in primes],
        }
    if cmd.verb == "localize":
        L = localize_module(M, cmd.extra_module, seed)
        return {
            "command": "localize",
            "input": cmd.shown_input,
            "generators": _rendered_generators(L),
        }
    if cmd.verb == "validate":
        path = Path(cmd.file_arg)
        if not path.is_absolute():
            path = base_dir / path
        try:
            doc = json.loads(path.read_text())
        except OSError as exc:
            raise ScriptError(f"cannot read {cmd.file_arg!r}: {exc}")
        except json.JSONDecodeError as exc:
            raise ScriptError(f"cannot parse {cmd.file_arg!r}: {exc}")
        pairs = _components_from_json(doc, M)
        report = validate_decomposition(M, pairs, seed=seed)
        return {
            "command": "validate",
            "input": cmd.shown_input,
            "validation": report.as_dict(),
        }
    raise ScriptError(f"unknown command {cmd.verb!r}")


def run_script(
    script: Script, bound: int = 50, seed: int = 0, base_dir: Path | None = None
) -> list[dict]:
    base = base_dir if base_dir is not None else Path.cwd()
    results = []
    for stmt in script.statements:
        if isinstance(stmt, Command):
            results.append(_execute_command(stmt, bound, seed, base))
    return results


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _gens_line(gens) -> str:
    parts = []
    for g in gens:
        if isinstance(g, list):
            parts.append("[" + ", ".join(g) + "]")
        else:
            parts.append(g)
    return ", ".join(parts) if parts else "(none)"


def render_json(results: list[dict]) -> str:
    return json.dumps(results, indent=2) + "\n"


def render_text(results: list[dict]) -> str:
    lines: list[str] = []
    for obj in results:
        lines.append(f"{obj['command']} {obj['input']}:")
        if "components" in obj:
            if not obj["components"]:
                lines.append("  no components (input is the full module)")
            for i, comp in enumerate(obj["components"], start=1):
                kind = "embedded" if comp["embedded"] else "isolated"
                lines.append(f"  component {i}: codim {comp['codim']}, {kind}")
                lines.append(f"    generators: {_gens_line(comp['generators'])}")
                lines.append(f"    prime: {_gens_line(comp['prime'])}")
        if "generators" in obj:
            lines.append(f"  generators: {_gens_line(obj['generators'])}")
        if "primes" in obj:
            if not obj["primes"]:
                lines.append("  no associated primes (input is the full module)")
            for P in obj["primes"]:
                lines.append(f"  prime: {_gens_line(P)}")
        if "validation" in obj:
            rep = obj["validation"]
            if rep["ok"]:
                lines.append("  validation: ok")
            else:
                lines.append(
                    "  validation: FAILED (" + "; ".join(rep["messages"]) + ")"
                )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _seed_from_env() -> int:
    raw = os.environ.get("PRIMDEC_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ScriptError(f"PRIMDEC_SEED must be an integer, got {raw!r}")


def _run_file(path_text: str, bound: int, json_mode: bool) -> tuple[int, str]:
    path = Path(path_text)
    try:
        source = path.read_text()
    except OSError as exc:
        raise ScriptError(f"cannot read {path_text!r}: {exc}")
    script = parse_script(source)
    seed = _seed_from_env()
    results = run_script(script, bound=bound, seed=seed, base_dir=path.parent)
    return 0, (render_json(results) if json_mode else render_text(results))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="primarydec",
        description="primary decomposition of ideals and submodules over Q",
    )
    sub = ap.add_subparsers(dest="mode", required=True)
    rp = sub.add_parser("run", help="execute a script file")
    rp.add_argument("file")
    rp.add_argument("--json", action="store_true", help="emit JSON instead of text")
    rp.add_argument(
        "--bound",
        type=int,
        default=50,
        help="primary component iteration bound (default 50)",
    )
    vp = sub.add_parser("validate", help="run a script and compare JSON output")
    vp.add_argument("file")
    vp.add_argument("expected")
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.mode == "run":
            code, output = _run_file(args.file, args.bound, args.json)
            sys.stdout.write(output)
            return code
        _code, output = _run_file(args.file, 50, True)
        try:
            expected = Path(args.expected).read_text()
        except OSError as exc:
            raise ScriptError(f"cannot read {args.expected!r}: {exc}")
        if output.strip() == expected.strip():
            sys.stdout.write("ok\n")
            return 0
        got_lines = output.strip().splitlines()
        want_lines = expected.strip().splitlines()
        where = len(want_lines)
        for i, (a, b) in enumerate(zip(got_lines, want_lines), start=1):
            if a != b:
                where = i
                break
        sys.stderr.write(f"output differs from expected (first at line {where})\n")
        return 2
    except ScriptError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (DecompositionError, HomologyError) as exc:
        sys.stderr.write(f"computation failed: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
