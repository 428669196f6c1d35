"""Expression language and command-line front end.

Grammar, precedence low to high (+/- then * then ^ then unary -):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' nat)?
    atom     := rational | 'x' nat | 'y' nat
              | '(' expr ')'
              | '[' expr ',' expr ']'    commutator
              | '{' expr ',' expr '}'    anticommutator
              | '-' atom
    rational := nat ('/' nat)?

There is no implicit multiplication: write x1*x2, never x1 x2.  Indices
are 1-based, so x0 is a syntax error.  Generator names (x) and
indeterminate names (y) never mix inside one expression; each subcommand
expects one namespace or the other.  Parse errors carry a 1-based
character offset.

Exit codes: 0 success; 1 parse or validation error; 2 check-identity
found a counterexample (printed as a substitution listing).

JSON format (--format json): an element is an object mapping monomials to
rationals-as-strings, the monomial key being its indices joined by dots
("1.2" for x1*x2) and the unit monomial the empty string.  Bare scalars
are rationals-as-strings; booleans are JSON booleans.  Output is
deterministic: identical invocations give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import calculus, grading, identities
from .algebra import Element
from .identities import FreePolynomial


class ParseError(ValueError):
    """Syntax error with a 1-based character offset into the input."""

    def __init__(self, reason: str, offset: int):
        super().__init__(f"{reason} (column {offset})")
        self.reason = reason
        self.offset = offset


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


_SYMBOLS = frozenset("+-*^()[]{},/")


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        offset = i + 1
        if ch.isdigit():
            j = i
            while j < length and text[j].isdigit():
                j += 1
            tokens.append(Token("number", text[i:j], offset))
            i = j
            continue
        if ch in ("x", "y"):
            j = i + 1
            while j < length and text[j].isdigit():
                j += 1
            name = text[i:j]
            if len(name) == 1:
                raise ParseError(f"'{ch}' needs a numeric index", offset)
            if int(name[1:]) < 1:
                raise ParseError(f"index in '{name}' must be >= 1", offset)
            tokens.append(Token("name", name, offset))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, offset))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", offset)
    tokens.append(Token("end", "", length + 1))
    return tokens


# -- abstract syntax ---------------------------------------------------------


@dataclass(frozen=True)
class Rational:
    value: Fraction


@dataclass(frozen=True)
class Variable:
    index: int


@dataclass(frozen=True)
class Negate:
    operand: "Node"


@dataclass(frozen=True)
class Sum:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Difference:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Anticommutator:
    left: "Node"
    right: "Node"


Node = Union[
    Rational,
    Variable,
    Negate,
    Sum,
    Difference,
    Product,
    Power,
    Commutator,
    Anticommutator,
]

NAMESPACES = ("generators", "indeterminates")


class _ExprParser:
    def __init__(self, tokens: list[Token], letter: str):
        self._tokens = tokens
        self._pos = 0
        self._letter = letter

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _expect(self, kind: str) -> Token:
        token = self._peek()
        if token.kind != kind:
            raise ParseError(f"expected '{kind}'", token.offset)
        return self._advance()

    def parse(self) -> Node:
        node = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise ParseError(f"unexpected {token.text!r}", token.offset)
        return node

    def _expr(self) -> Node:
        node = self._term()
        while self._peek().kind in ("+", "-"):
            op = self._advance()
            rhs = self._term()
            node = Sum(node, rhs) if op.kind == "+" else Difference(node, rhs)
        return node

    def _term(self) -> Node:
        node = self._factor()
        while self._peek().kind == "*":
            self._advance()
            node = Product(node, self._factor())
        return node

    def _factor(self) -> Node:
        node = self._atom()
        if self._peek().kind == "^":
            self._advance()
            exponent = self._expect("number")
            node = Power(node, int(exponent.text))
        return node

    def _atom(self) -> Node:
        token = self._peek()
        if token.kind == "-":
            self._advance()
            return Negate(self._atom())
        if token.kind == "number":
            self._advance()
            numerator = int(token.text)
            if self._peek().kind == "/":
                self._advance()
                denominator = self._expect("number")
                if int(denominator.text) == 0:
                    raise ParseError("zero denominator", denominator.offset)
                return Rational(Fraction(numerator, int(denominator.text)))
            return Rational(Fraction(numerator))
        if token.kind == "name":
            self._advance()
            if token.text[0] != self._letter:
                raise ParseError(
                    f"'{token.text}' not allowed here; this expression uses "
                    f"{self._letter}-names",
                    token.offset,
                )
            return Variable(int(token.text[1:]))
        if token.kind == "(":
            self._advance()
            node = self._expr()
            self._expect(")")
            return node
        if token.kind == "[":
            self._advance()
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect("]")
            return Commutator(left, right)
        if token.kind == "{":
            self._advance()
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect("}")
            return Anticommutator(left, right)
        what = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError(f"unexpected {what}", token.offset)


def parse(text: str, namespace: str = "generators") -> Node:
    """Parse an expression, allowing only one variable namespace.

    namespace "generators" admits x-names, "indeterminates" y-names; an
    expression mixing the two is rejected, never coerced.
    """
    if namespace not in NAMESPACES:
        raise ValueError(f"namespace must be one of {NAMESPACES}, got {namespace!r}")
    letter = "x" if namespace == "generators" else "y"
    return _ExprParser(_tokenize(text), letter).parse()


# -- evaluation --------------------------------------------------------------


def eval_element(node: Node, n: int) -> Element:
    """Fold an x-expression into the algebra on n generators."""
    if isinstance(node, Rational):
        return Element.scalar(node.value)
    if isinstance(node, Variable):
        if node.index > n:
            raise ValueError(
                f"generator index {node.index} exceeds the generator count {n}"
            )
        return Element.generator(node.index)
    if isinstance(node, Negate):
        return -eval_element(node.operand, n)
    if isinstance(node, Sum):
        return eval_element(node.left, n) + eval_element(node.right, n)
    if isinstance(node, Difference):
        return eval_element(node.left, n) - eval_element(node.right, n)
    if isinstance(node, Product):
        return eval_element(node.left, n) * eval_element(node.right, n)
    if isinstance(node, Power):
        return eval_element(node.base, n) ** node.exponent
    if isinstance(node, Commutator):
        return grading.commutator(
            eval_element(node.left, n), eval_element(node.right, n)
        )
    if isinstance(node, Anticommutator):
        return grading.anticommutator(
            eval_element(node.left, n), eval_element(node.right, n)
        )
    raise TypeError(f"not an expression node: {node!r}")


def eval_free(node: Node) -> FreePolynomial:
    """Fold an expression into the free algebra (no rewriting at all)."""
    if isinstance(node, Rational):
        return FreePolynomial.scalar(node.value)
    if isinstance(node, Variable):
        return FreePolynomial.indeterminate(node.index)
    if isinstance(node, Negate):
        return -eval_free(node.operand)
    if isinstance(node, Sum):
        return eval_free(node.left) + eval_free(node.right)
    if isinstance(node, Difference):
        return eval_free(node.left) - eval_free(node.right)
    if isinstance(node, Product):
        return eval_free(node.left) * eval_free(node.right)
    if isinstance(node, Power):
        return eval_free(node.base) ** node.exponent
    if isinstance(node, Commutator):
        left, right = eval_free(node.left), eval_free(node.right)
        return left * right - right * left
    if isinstance(node, Anticommutator):
        left, right = eval_free(node.left), eval_free(node.right)
        return left * right + right * left
    raise TypeError(f"not an expression node: {node!r}")


# -- output ------------------------------------------------------------------


def print_element(p: Element) -> str:
    """Canonical text form; parse(print_element(p)) evaluates back to p."""
    return str(p)


def element_to_json(p: Element) -> dict[str, str]:
    """JSON-ready map: dot-joined index keys ("" = unit), string rationals."""
    return {".".join(str(i) for i in m): str(c) for m, c in p.items()}


def _emit_element(p: Element, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(element_to_json(p)))
    else:
        print(print_element(p))


def _emit_bool(value: bool, fmt: str) -> None:
    print(json.dumps(value) if fmt == "json" else ("true" if value else "false"))


# -- command dispatch --------------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    # Usage errors exit 1; code 2 is reserved for identity counterexamples.
    def error(self, message: str):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "-n",
        "--generators",
        dest="n",
        type=int,
        default=argparse.SUPPRESS,
        help="number of generators",
    )
    shared.add_argument(
        "--format",
        choices=("text", "json"),
        default=argparse.SUPPRESS,
        help="output format",
    )

    parser = _ArgumentParser(
        prog="grasskit",
        description="Exact symbolic computation in a finitely generated "
        "Grassmann algebra over the rationals.",
    )
    parser.add_argument(
        "-n",
        "--generators",
        dest="n",
        type=int,
        default=4,
        help="number of generators (default 4)",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[shared], help=help_text)
        return p

    p = command("normalize", "reduce an expression to canonical form")
    p.add_argument("expr")

    p = command("grade", "print the even and odd parts")
    p.add_argument("expr")

    p = command("center", "test whether the element is central")
    p.add_argument("expr")

    p = command("body", "print the scalar part")
    p.add_argument("expr")

    p = command("soul", "print the element minus its scalar part")
    p.add_argument("expr")

    p = command("derive", "left derivative with respect to one generator")
    p.add_argument("-i", "--index", type=int, required=True, help="generator index")
    p.add_argument("expr")

    p = command("integrate", "Berezin integral over one generator")
    p.add_argument("-i", "--index", type=int, required=True, help="generator index")
    p.add_argument("expr")

    p = command("nilindex", "smallest power at which the element vanishes")
    p.add_argument("--cap", type=int, default=None, help="largest power to try")
    p.add_argument("expr")

    p = command("check-identity", "test a y-expression as a polynomial identity")
    p.add_argument(
        "--domain",
        choices=identities.DOMAINS,
        default="all",
        help="restrict substitutions by parity (default all)",
    )
    p.add_argument(
        "--trials",
        type=int,
        default=200,
        help="substitution count in randomized mode (default 200)",
    )
    p.add_argument("--seed", type=int, default=0, help="randomized-mode seed")
    p.add_argument("expr")

    p = command("in-ideal", "test membership in the anticommutator ideal")
    p.add_argument("expr")

    return parser


def _cmd_normalize(ns: argparse.Namespace, n: int, fmt: str) -> int:
    _emit_element(eval_element(parse(ns.expr, "generators"), n), fmt)
    return 0


def _cmd_grade(ns: argparse.Namespace, n: int, fmt: str) -> int:
    p = eval_element(parse(ns.expr, "generators"), n)
    even = grading.even_part(p)
    odd = grading.odd_part(p)
    if fmt == "json":
        print(
            json.dumps(
                {"even": element_to_json(even), "odd": element_to_json(odd)}
            )
        )
    else:
        print(f"even: {print_element(even)}")
        print(f"odd: {print_element(odd)}")
    return 0


def _cmd_center(ns: argparse.Namespace, n: int, fmt: str) -> int:
    p = eval_element(parse(ns.expr, "generators"), n)
    _emit_bool(grading.is_central(p, n), fmt)
    return 0


def _cmd_body(ns: argparse.Namespace, n: int, fmt: str) -> int:
    value = calculus.body(eval_element(parse(ns.expr, "generators"), n))
    print(json.dumps(str(value)) if fmt == "json" else str(value))
    return 0


def _cmd_soul(ns: argparse.Namespace, n: int, fmt: str) -> int:
    _emit_element(calculus.soul(eval_element(parse(ns.expr, "generators"), n)), fmt)
    return 0


def _cmd_derive(ns: argparse.Namespace, n: int, fmt: str) -> int:
    p = eval_element(parse(ns.expr, "generators"), n)
    _emit_element(calculus.left_derivative(p, ns.index), fmt)
    return 0


def _cmd_integrate(ns: argparse.Namespace, n: int, fmt: str) -> int:
    p = eval_element(parse(ns.expr, "generators"), n)
    _emit_element(calculus.berezin_integral(p, ns.index), fmt)
    return 0


def _cmd_nilindex(ns: argparse.Namespace, n: int, fmt: str) -> int:
    p = eval_element(parse(ns.expr, "generators"), n)
    report = calculus.nil_index(p, ns.cap)
    if fmt == "json":
        print(json.dumps({"index": report.index, "cap": report.cap}))
    else:
        print(str(report))
    return 0


def _cmd_check_identity(ns: argparse.Namespace, n: int, fmt: str) -> int:
    f = eval_free(parse(ns.expr, "indeterminates"))
    verdict = identities.is_identity(f, n, ns.domain, ns.trials, ns.seed)
    if fmt == "json":
        payload: dict[str, object] = {"holds": verdict.holds, "mode": verdict.mode}
        if verdict.witness is not None:
            payload["witness"] = {
                f"y{i}": element_to_json(verdict.witness[i])
                for i in sorted(verdict.witness)
            }
            payload["value"] = element_to_json(
                identities.evaluate(f, verdict.witness)
            )
        print(json.dumps(payload))
    else:
        print(f"holds: {'true' if verdict.holds else 'false'}")
        print(f"mode: {verdict.mode}")
        if verdict.witness is not None:
            print("counterexample:")
            for i in sorted(verdict.witness):
                print(f"  y{i} -> {print_element(verdict.witness[i])}")
            print(f"value: {print_element(identities.evaluate(f, verdict.witness))}")
    return 0 if verdict.holds else 2


def _cmd_in_ideal(ns: argparse.Namespace, n: int, fmt: str) -> int:
    f = eval_free(parse(ns.expr, "generators"))
    _emit_bool(identities.in_ideal(f, n), fmt)
    return 0


_COMMANDS = {
    "normalize": _cmd_normalize,
    "grade": _cmd_grade,
    "center": _cmd_center,
    "body": _cmd_body,
    "soul": _cmd_soul,
    "derive": _cmd_derive,
    "integrate": _cmd_integrate,
    "nilindex": _cmd_nilindex,
    "check-identity": _cmd_check_identity,
    "in-ideal": _cmd_in_ideal,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if isinstance(code, int):
            return code
        return 0 if code is None else 1
    n = getattr(ns, "n", 4)
    fmt = getattr(ns, "format", "text")
    try:
        if n < 0:
            raise ValueError(f"generator count must be >= 0, got {n}")
        return _COMMANDS[ns.command](ns, n, fmt)
    except (ParseError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
