"""Propositional formulas: parsing, printing, evaluation and sampled checks.

Precedence, tightest first: ``!``; then ``&`` and ``|`` (one tier, left
associative); then ``->`` and ``<->`` (one tier, right associative).

>>> to_text(parse_formula("!p & q -> r"))
'!p & q -> r'
>>> parse_formula("p & q | r")
Or(left=And(left=Var(name='p'), right=Var(name='q')), right=Var(name='r'))
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import chain
from typing import Any, Iterator, Mapping, Union

from .checking import (
    CORNER_TRIPLES,
    HOLDS,
    REFUTED,
    CheckReport,
    Counterexample,
    corner_assignments,
    first_failure,
    random_triple,
    sample_rng,
)
from .connectives import RESIDUAL, BOTTOM, TOP, Connectives, get_connectives
from .interval import NeutroTriple, triple_approx_eq, triple_from_json, triple_to_json
from .syntax import TokenStream

__all__ = [
    "Var",
    "Const",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Formula",
    "UnboundVariableError",
    "parse_formula",
    "to_text",
    "variables",
    "eval_prop",
    "is_designated",
    "check_tautology",
    "check_equivalence",
    "check_modus_ponens_preservation",
    "interpretation_from_json",
    "interpretation_to_json",
    "DEFAULT_CORNER_CAP",
]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Const, Not, And, Or, Implies, Iff]

# 216 corner triples per variable; two variables are enumerated in full
DEFAULT_CORNER_CAP = len(CORNER_TRIPLES) ** 2


class UnboundVariableError(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"variable {name!r} has no value in the interpretation")


# -- parsing ------------------------------------------------------------------

_MID = {"AND": And, "OR": Or}
_LOW = {"IMP": Implies, "IFF": Iff}


class _Parser:
    def __init__(self, text: str):
        self.ts = TokenStream(text)

    def parse(self) -> Formula:
        node = self.low()
        if not self.ts.at("EOF"):
            self.ts.fail(["AND", "OR", "IMP", "IFF", "EOF"])
        return node

    def low(self) -> Formula:
        left = self.mid()
        if self.ts.at(*_LOW):
            cls = _LOW[self.ts.advance().kind]
            return cls(left, self.low())
        return left

    def mid(self) -> Formula:
        node = self.unary()
        while self.ts.at(*_MID):
            cls = _MID[self.ts.advance().kind]
            node = cls(node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.ts.at("NOT"):
            self.ts.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.ts.current
        if tok.kind == "IDENT":
            self.ts.advance()
            return Var(tok.text)
        if tok.kind in ("TRUE", "FALSE"):
            self.ts.advance()
            return Const(tok.kind == "TRUE")
        if tok.kind == "LPAREN":
            self.ts.advance()
            node = self.low()
            self.ts.expect("RPAREN")
            return node
        self.ts.fail(["IDENT", "TRUE", "FALSE", "NOT", "LPAREN"])


def parse_formula(text: str) -> Formula:
    """Parse propositional formula text; raises :class:`ParseError`."""
    return _Parser(text).parse()


# -- printing -----------------------------------------------------------------

_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_TIER = {Implies: 1, Iff: 1, And: 2, Or: 2, Not: 3}


def tier(node: Any) -> int:
    return _TIER.get(type(node), 4)


def to_text(f: Formula) -> str:
    """Render with the fewest parentheses that re-parse to the same tree."""
    return _print(f)


def _wrap(node: Formula, min_tier: int) -> str:
    text = _print(node)
    return f"({text})" if tier(node) < min_tier else text


def _print(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        return "!" + _wrap(f.arg, 3)
    op = _SYMBOL[type(f)]
    if tier(f) == 2:
        return f"{_wrap(f.left, 2)} {op} {_wrap(f.right, 3)}"
    return f"{_wrap(f.left, 2)} {op} {_wrap(f.right, 1)}"


# -- semantics ----------------------------------------------------------------


def variables(f: Formula) -> tuple[str, ...]:
    """Variable names of ``f`` in sorted order."""
    found: set[str] = set()

    def walk(node: Formula) -> None:
        if isinstance(node, Var):
            found.add(node.name)
        elif isinstance(node, Not):
            walk(node.arg)
        elif not isinstance(node, Const):
            walk(node.left)
            walk(node.right)

    walk(f)
    return tuple(sorted(found))


def eval_prop(
    f: Formula,
    m: Mapping[str, NeutroTriple],
    connectives: Connectives | str = RESIDUAL,
) -> NeutroTriple:
    """Value of ``f`` under the interpretation ``m``."""
    conn = get_connectives(connectives)
    return _eval(f, m, conn)


def _eval(f: Formula, m: Mapping[str, NeutroTriple], c: Connectives) -> NeutroTriple:
    if isinstance(f, Var):
        try:
            return m[f.name]
        except KeyError:
            raise UnboundVariableError(f.name) from None
    if isinstance(f, Const):
        return TOP if f.value else BOTTOM
    if isinstance(f, Not):
        return c.neg(_eval(f.arg, m, c))
    left = _eval(f.left, m, c)
    right = _eval(f.right, m, c)
    if isinstance(f, And):
        return c.conj(left, right)
    if isinstance(f, Or):
        return c.disj(left, right)
    if isinstance(f, Implies):
        return c.implies(left, right)
    return c.iff(left, right)


def is_designated(v: NeutroTriple, eps: float = 1e-9) -> bool:
    """True when ``v`` is ``<[1,1], [1,1], [0,0]>`` within ``eps``."""
    if eps < 0:
        raise ValueError("eps must be non-negative")
    return (
        v.t.lo >= 1.0 - eps
        and v.i.lo >= 1.0 - eps
        and v.f.hi <= eps
    )


def interpretation_from_json(obj: Any) -> dict[str, NeutroTriple]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ValueError("an interpretation must map variable names to triples")
    return {str(name): triple_from_json(v) for name, v in obj.items()}


def interpretation_to_json(m: Mapping[str, NeutroTriple]) -> dict[str, Any]:
    return {name: triple_to_json(v) for name, v in m.items()}


def _interpretations(
    names: tuple[str, ...], n_samples: int, seed: int, corner_cap: int
) -> Iterator[tuple[str, int, dict[str, NeutroTriple]]]:
    corner = (
        ("corner", k, {n: CORNER_TRIPLES[d] for n, d in zip(names, digits)})
        for k, digits in enumerate(corner_assignments([len(CORNER_TRIPLES)] * len(names), corner_cap))
    )

    def randoms():
        for k in range(n_samples):
            rng = sample_rng(seed, k)
            yield "random", k, {n: random_triple(rng) for n in names}

    return chain(corner, randoms())


def _check_args(n_samples: int) -> None:
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")


def _report(check, subject, tried, seed, failure, conn, n_samples, corner_cap) -> CheckReport:
    cex = None
    if failure is not None:
        source, index, interp, values = failure
        cex = Counterexample(interp, values, source, index)
    return CheckReport(
        check=check,
        subject=subject,
        verdict=REFUTED if cex else HOLDS,
        samples_tried=tried,
        seed=seed,
        counterexample=cex,
        details={"arithmetic": conn.name, "n_samples": n_samples, "corner_cap": corner_cap},
    )


def check_tautology(
    f: Formula,
    n_samples: int = 10_000,
    seed: int = 0,
    eps: float = 1e-9,
    corner_cap: int = DEFAULT_CORNER_CAP,
    connectives: Connectives | str = RESIDUAL,
) -> CheckReport:
    """Look for an interpretation under which ``f`` is not designated."""
    _check_args(n_samples)
    conn = get_connectives(connectives)

    def test(m):
        v = _eval(f, m, conn)
        return None if is_designated(v, eps) else {"value": v}

    tried, failure = first_failure(_interpretations(variables(f), n_samples, seed, corner_cap), test)
    return _report("tautology", to_text(f), tried, seed, failure, conn, n_samples, corner_cap)


def check_equivalence(
    p: Formula,
    q: Formula,
    n_samples: int = 10_000,
    seed: int = 0,
    eps: float = 1e-9,
    corner_cap: int = DEFAULT_CORNER_CAP,
    connectives: Connectives | str = RESIDUAL,
) -> CheckReport:
    """Look for an interpretation under which ``p`` and ``q`` differ."""
    _check_args(n_samples)
    conn = get_connectives(connectives)
    names = tuple(sorted(set(variables(p)) | set(variables(q))))

    def test(m):
        left, right = _eval(p, m, conn), _eval(q, m, conn)
        return None if triple_approx_eq(left, right, eps) else {"left": left, "right": right}

    tried, failure = first_failure(_interpretations(names, n_samples, seed, corner_cap), test)
    return _report("equivalence", f"{to_text(p)}  ==  {to_text(q)}", tried, seed, failure, conn, n_samples, corner_cap)


def check_modus_ponens_preservation(
    n_samples: int = 10_000,
    seed: int = 0,
    antecedent: Formula = Var("p"),
    consequent: Formula = Var("q"),
    eps: float = 1e-9,
    corner_cap: int = DEFAULT_CORNER_CAP,
    connectives: Connectives | str = RESIDUAL,
) -> CheckReport:
    """Whenever ``antecedent`` and ``antecedent -> consequent`` are
    designated, ``consequent`` must be designated too."""
    _check_args(n_samples)
    conn = get_connectives(connectives)
    names = tuple(sorted(set(variables(antecedent)) | set(variables(consequent))))
    designated_premises = 0

    def test(m):
        nonlocal designated_premises
        a = _eval(antecedent, m, conn)
        if not is_designated(a, eps):
            return None
        b = _eval(consequent, m, conn)
        imp = conn.implies(a, b)
        if not is_designated(imp, eps):
            return None
        designated_premises += 1
        if is_designated(b, eps):
            return None
        return {"antecedent": a, "implication": imp, "consequent": b}

    tried, failure = first_failure(_interpretations(names, n_samples, seed, corner_cap), test)
    subject = f"{to_text(antecedent)}, {to_text(Implies(antecedent, consequent))} => {to_text(consequent)}"
    report = _report("modus-ponens", subject, tried, seed, failure, conn, n_samples, corner_cap)
    report.details["designated_premises"] = designated_premises
    return report
