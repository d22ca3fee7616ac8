"""First-order formulas over finite domains.

Syntax extends the propositional language with atoms ``p(t1, ..., tn)``,
nullary atoms ``r``, function terms ``f(x)`` and the binders
``forall x. F`` / ``exists x. F``. Binders sit in the negation tier, so
``forall x. p(x) & q(x)`` is ``(forall x. p(x)) & q(x)``.

Inside a term, an identifier is a variable when an enclosing binder names
it or when it starts with one of ``u`` to ``z``; any other identifier is a
constant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from typing import Any, Iterator, Mapping, Sequence, Union

from . import prop
from .checking import (
    CORNER_TRIPLES,
    HOLDS,
    NO_WITNESS,
    REFUTED,
    WITNESS_FOUND,
    CheckReport,
    Counterexample,
    corner_assignments,
    first_failure,
    random_triple,
    sample_rng,
)
from .connectives import BOTTOM, RESIDUAL, TOP, Connectives, get_connectives
from .interval import NeutroTriple, triple_from_json, triple_to_json
from .prop import And, Const, Iff, Implies, Not, Or, UnboundVariableError, is_designated
from .syntax import TokenStream

__all__ = [
    "Variable",
    "Constant",
    "Func",
    "Term",
    "Atom",
    "Forall",
    "Exists",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Const",
    "FoFormula",
    "Occurrence",
    "FoInterpretation",
    "UnknownSymbolError",
    "ArityError",
    "OpenFormulaError",
    "UnboundVariableError",
    "parse_fo_formula",
    "to_text",
    "free_vars",
    "bound_occurrences",
    "variable_occurrences",
    "signature",
    "eval_fo",
    "check_fo_valid",
    "check_fo_satisfiable",
    "propositional_skeleton",
    "DEFAULT_FO_CORNER_CAP",
]

DEFAULT_FO_CORNER_CAP = 2_000


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Constant:
    name: str


@dataclass(frozen=True)
class Func:
    name: str
    args: tuple["Term", ...]


Term = Union[Variable, Constant, Func]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Forall:
    var: str
    body: "FoFormula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "FoFormula"


FoFormula = Union[Atom, Const, Not, And, Or, Implies, Iff, Forall, Exists]


class UnknownSymbolError(LookupError):
    def __init__(self, kind: str, name: str, arity: int | None = None):
        self.kind = kind
        self.name = name
        label = name if arity is None else f"{name}/{arity}"
        super().__init__(f"{kind} {label!r} is not interpreted")


class ArityError(ValueError):
    pass


class OpenFormulaError(ValueError):
    def __init__(self, names):
        self.names = tuple(sorted(names))
        super().__init__(f"formula has free variables {list(self.names)}; close it first")


# -- parsing ------------------------------------------------------------------

_MID = {"AND": And, "OR": Or}
_LOW = {"IMP": Implies, "IFF": Iff}
_QUANT = {"FORALL": Forall, "EXISTS": Exists}


def _looks_like_variable(name: str) -> bool:
    return name[0] in "uvwxyz"


class _Parser:
    def __init__(self, text: str):
        self.ts = TokenStream(text)
        self.bound: list[str] = []

    def parse(self) -> FoFormula:
        node = self.low()
        if not self.ts.at("EOF"):
            self.ts.fail(["AND", "OR", "IMP", "IFF", "EOF"])
        return node

    def low(self) -> FoFormula:
        left = self.mid()
        if self.ts.at(*_LOW):
            cls = _LOW[self.ts.advance().kind]
            return cls(left, self.low())
        return left

    def mid(self) -> FoFormula:
        node = self.unary()
        while self.ts.at(*_MID):
            cls = _MID[self.ts.advance().kind]
            node = cls(node, self.unary())
        return node

    def unary(self) -> FoFormula:
        if self.ts.at("NOT"):
            self.ts.advance()
            return Not(self.unary())
        if self.ts.at(*_QUANT):
            cls = _QUANT[self.ts.advance().kind]
            var = self.ts.expect("IDENT").text
            if self.ts.at("DOT"):
                self.ts.advance()
            self.bound.append(var)
            try:
                body = self.unary()
            finally:
                self.bound.pop()
            return cls(var, body)
        return self.primary()

    def primary(self) -> FoFormula:
        tok = self.ts.current
        if tok.kind == "IDENT":
            self.ts.advance()
            return Atom(tok.text, self.arguments())
        if tok.kind in ("TRUE", "FALSE"):
            self.ts.advance()
            return Const(tok.kind == "TRUE")
        if tok.kind == "LPAREN":
            self.ts.advance()
            node = self.low()
            self.ts.expect("RPAREN")
            return node
        self.ts.fail(["IDENT", "TRUE", "FALSE", "NOT", "FORALL", "EXISTS", "LPAREN"])

    def arguments(self) -> tuple[Term, ...]:
        if not self.ts.at("LPAREN"):
            return ()
        self.ts.advance()
        args = [self.term()]
        while self.ts.at("COMMA"):
            self.ts.advance()
            args.append(self.term())
        self.ts.expect("RPAREN")
        return tuple(args)

    def term(self) -> Term:
        tok = self.ts.expect("IDENT")
        args = self.arguments()
        if args:
            return Func(tok.text, args)
        if tok.text in self.bound or _looks_like_variable(tok.text):
            return Variable(tok.text)
        return Constant(tok.text)


def parse_fo_formula(text: str) -> FoFormula:
    return _Parser(text).parse()


# -- printing -----------------------------------------------------------------

_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


def _tier(node: Any) -> int:
    if isinstance(node, (Forall, Exists)):
        return 3
    return prop.tier(node)


def _term_text(t: Term) -> str:
    if isinstance(t, Func):
        return f"{t.name}({', '.join(_term_text(a) for a in t.args)})"
    return t.name


def _wrap(node: FoFormula, min_tier: int) -> str:
    text = to_text(node)
    return f"({text})" if _tier(node) < min_tier else text


def to_text(f: FoFormula) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({', '.join(_term_text(a) for a in f.args)})"
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        return "!" + _wrap(f.arg, 3)
    if isinstance(f, (Forall, Exists)):
        word = "forall" if isinstance(f, Forall) else "exists"
        return f"{word} {f.var}. {_wrap(f.body, 3)}"
    op = _SYMBOL[type(f)]
    if _tier(f) == 2:
        return f"{_wrap(f.left, 2)} {op} {_wrap(f.right, 3)}"
    return f"{_wrap(f.left, 2)} {op} {_wrap(f.right, 1)}"


# -- scope --------------------------------------------------------------------


@dataclass(frozen=True)
class Occurrence:
    """A variable occurrence; ``position`` counts variable occurrences from
    the left of the printed formula, binder positions included."""

    name: str
    position: int
    bound: bool


def variable_occurrences(f: FoFormula) -> list[Occurrence]:
    out: list[Occurrence] = []

    def term(t: Term, bound: frozenset[str]) -> None:
        if isinstance(t, Variable):
            out.append(Occurrence(t.name, len(out), t.name in bound))
        elif isinstance(t, Func):
            for a in t.args:
                term(a, bound)

    def walk(node: FoFormula, bound: frozenset[str]) -> None:
        if isinstance(node, Atom):
            for a in node.args:
                term(a, bound)
        elif isinstance(node, (Forall, Exists)):
            out.append(Occurrence(node.var, len(out), True))
            walk(node.body, bound | {node.var})
        elif isinstance(node, Not):
            walk(node.arg, bound)
        elif not isinstance(node, Const):
            walk(node.left, bound)
            walk(node.right, bound)

    walk(f, frozenset())
    return out


def free_vars(f: FoFormula) -> frozenset[str]:
    return frozenset(o.name for o in variable_occurrences(f) if not o.bound)


def bound_occurrences(f: FoFormula) -> list[tuple[str, int]]:
    return [(o.name, o.position) for o in variable_occurrences(f) if o.bound]


# -- interpretations ----------------------------------------------------------

Key = tuple[str, int]


def _key_text(args: Sequence[str]) -> str:
    return "(" + ",".join(args) + ")"


def _parse_key(text: str) -> tuple[str, ...]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"table keys look like '(a,b)', got {text!r}")
    inner = text[1:-1].strip()
    return tuple(part.strip() for part in inner.split(",")) if inner else ()


def _parse_symbol(text: str) -> Key:
    name, sep, arity = text.partition("/")
    if not sep or not arity.isdigit():
        raise ValueError(f"symbols are written name/arity, got {text!r}")
    return name, int(arity)


@dataclass(frozen=True, eq=False)
class FoInterpretation:
    """A finite domain with total tables for constants, functions and
    predicates. Function and predicate tables are keyed by ``(name, arity)``
    and map argument tuples of domain elements to their value."""

    domain: tuple[str, ...]
    consts: Mapping[str, str] = field(default_factory=dict)
    funcs: Mapping[Key, Mapping[tuple[str, ...], str]] = field(default_factory=dict)
    preds: Mapping[Key, Mapping[tuple[str, ...], NeutroTriple]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        domain = tuple(str(d) for d in self.domain)
        if not domain:
            raise ValueError("the domain must be non-empty")
        if len(set(domain)) != len(domain):
            raise ValueError("domain elements must be distinct")
        object.__setattr__(self, "domain", domain)
        elems = set(domain)
        for name, d in self.consts.items():
            if d not in elems:
                raise ValueError(f"constant {name!r} maps outside the domain: {d!r}")
        for table_kind, tables in (("function", self.funcs), ("predicate", self.preds)):
            for (name, arity), table in tables.items():
                expected = set(product(domain, repeat=arity))
                if set(table) != expected:
                    raise ValueError(f"{table_kind} {name}/{arity} table is not total over the domain")
                if table_kind == "function" and not set(table.values()) <= elems:
                    raise ValueError(f"function {name}/{arity} maps outside the domain")
                if table_kind == "predicate" and not all(isinstance(v, NeutroTriple) for v in table.values()):
                    raise ValueError(f"predicate {name}/{arity} values must be triples")

    def to_json(self) -> dict[str, Any]:
        return {
            "domain": list(self.domain),
            "consts": dict(self.consts),
            "funcs": {
                f"{n}/{a}": {_key_text(k): v for k, v in table.items()}
                for (n, a), table in self.funcs.items()
            },
            "preds": {
                f"{n}/{a}": {_key_text(k): triple_to_json(v) for k, v in table.items()}
                for (n, a), table in self.preds.items()
            },
        }

    @classmethod
    def from_json(cls, obj: Any) -> "FoInterpretation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        funcs = {
            _parse_symbol(sym): {_parse_key(k): str(v) for k, v in table.items()}
            for sym, table in obj.get("funcs", {}).items()
        }
        preds = {
            _parse_symbol(sym): {_parse_key(k): triple_from_json(v) for k, v in table.items()}
            for sym, table in obj.get("preds", {}).items()
        }
        consts = {str(k): str(v) for k, v in obj.get("consts", {}).items()}
        return cls(tuple(str(d) for d in obj["domain"]), consts, funcs, preds)


# -- evaluation ---------------------------------------------------------------


def signature(f: FoFormula) -> tuple[frozenset[Key], frozenset[str], frozenset[Key]]:
    """Predicates, constants and functions used by ``f``.

    Raises :class:`ArityError` when one symbol is used with two arities.
    """
    preds: dict[str, int] = {}
    funcs: dict[str, int] = {}
    consts: set[str] = set()

    def note(table: dict[str, int], kind: str, name: str, arity: int) -> None:
        if table.setdefault(name, arity) != arity:
            raise ArityError(f"{kind} {name!r} used with arities {table[name]} and {arity}")

    def term(t: Term) -> None:
        if isinstance(t, Constant):
            consts.add(t.name)
        elif isinstance(t, Func):
            note(funcs, "function", t.name, len(t.args))
            for a in t.args:
                term(a)

    def walk(node: FoFormula) -> None:
        if isinstance(node, Atom):
            note(preds, "predicate", node.pred, len(node.args))
            for a in node.args:
                term(a)
        elif isinstance(node, (Forall, Exists)):
            walk(node.body)
        elif isinstance(node, Not):
            walk(node.arg)
        elif not isinstance(node, Const):
            walk(node.left)
            walk(node.right)

    walk(f)
    return (
        frozenset(preds.items()),
        frozenset(consts),
        frozenset(funcs.items()),
    )


def _lookup_table(tables: Mapping[Key, Any], kind: str, name: str, arity: int):
    try:
        return tables[(name, arity)]
    except KeyError:
        arities = sorted(a for n, a in tables if n == name)
        if arities:
            raise ArityError(f"{kind} {name!r} takes {arities[0]} arguments, got {arity}") from None
        raise UnknownSymbolError(kind, name, arity) from None


def _eval_term(t: Term, m: FoInterpretation, e: Mapping[str, str]) -> str:
    if isinstance(t, Variable):
        try:
            return e[t.name]
        except KeyError:
            raise UnboundVariableError(t.name) from None
    if isinstance(t, Constant):
        try:
            return m.consts[t.name]
        except KeyError:
            raise UnknownSymbolError("constant", t.name) from None
    table = _lookup_table(m.funcs, "function", t.name, len(t.args))
    return table[tuple(_eval_term(a, m, e) for a in t.args)]


def _eval(f: FoFormula, m: FoInterpretation, e: Mapping[str, str], c: Connectives) -> NeutroTriple:
    if isinstance(f, Atom):
        table = _lookup_table(m.preds, "predicate", f.pred, len(f.args))
        return table[tuple(_eval_term(a, m, e) for a in f.args)]
    if isinstance(f, Const):
        return TOP if f.value else BOTTOM
    if isinstance(f, Not):
        return c.neg(_eval(f.arg, m, e, c))
    if isinstance(f, (Forall, Exists)):
        fold = c.conj if isinstance(f, Forall) else c.disj
        return reduce(fold, (_eval(f.body, m, {**e, f.var: d}, c) for d in m.domain))
    left = _eval(f.left, m, e, c)
    right = _eval(f.right, m, e, c)
    if isinstance(f, And):
        return c.conj(left, right)
    if isinstance(f, Or):
        return c.disj(left, right)
    if isinstance(f, Implies):
        return c.implies(left, right)
    return c.iff(left, right)


def eval_fo(
    f: FoFormula,
    m: FoInterpretation,
    e: Mapping[str, str] | None = None,
    connectives: Connectives | str = RESIDUAL,
) -> NeutroTriple:
    """Value of ``f`` in ``m`` under the variable assignment ``e``.

    ``forall`` folds the body's values with conjunction over the domain and
    ``exists`` with disjunction.
    """
    e = {} if e is None else dict(e)
    for name, d in e.items():
        if d not in m.domain:
            raise ValueError(f"variable {name!r} is assigned {d!r}, which is not in the domain")
    return _eval(f, m, e, get_connectives(connectives))


# -- sampled checks -----------------------------------------------------------


def _slots(f: FoFormula, domain: tuple[str, ...]):
    preds, consts, funcs = signature(f)
    pred_slots = [(key, args) for key in sorted(preds) for args in product(domain, repeat=key[1])]
    const_slots = sorted(consts)
    func_slots = [(key, args) for key in sorted(funcs) for args in product(domain, repeat=key[1])]
    return pred_slots, const_slots, func_slots


def _build(domain, pred_slots, const_slots, func_slots, triples, const_vals, func_vals) -> FoInterpretation:
    preds: dict[Key, dict] = {}
    for (key, args), v in zip(pred_slots, triples):
        preds.setdefault(key, {})[args] = v
    funcs: dict[Key, dict] = {}
    for (key, args), v in zip(func_slots, func_vals):
        funcs.setdefault(key, {})[args] = v
    return FoInterpretation(domain, dict(zip(const_slots, const_vals)), funcs, preds)


def _fo_interpretations(
    f: FoFormula, domain_sizes: Sequence[int], n_samples: int, seed: int, corner_cap: int
) -> Iterator[tuple[str, int, tuple[int, FoInterpretation]]]:
    for size in domain_sizes:
        if size < 1:
            raise ValueError("domain sizes must be positive")
        domain = tuple(str(k) for k in range(1, size + 1))
        pred_slots, const_slots, func_slots = _slots(f, domain)
        n_p, n_c = len(pred_slots), len(const_slots)
        radices = [len(CORNER_TRIPLES)] * n_p + [size] * (n_c + len(func_slots))
        for k, digits in enumerate(corner_assignments(radices, corner_cap)):
            triples = [CORNER_TRIPLES[d] for d in digits[:n_p]]
            consts = [domain[d] for d in digits[n_p:n_p + n_c]]
            fvals = [domain[d] for d in digits[n_p + n_c:]]
            yield "corner", k, (size, _build(domain, pred_slots, const_slots, func_slots, triples, consts, fvals))
        for k in range(n_samples):
            rng = sample_rng(seed, k, tag=f"d{size}")
            triples = [random_triple(rng) for _ in pred_slots]
            consts = [rng.choice(domain) for _ in const_slots]
            fvals = [rng.choice(domain) for _ in func_slots]
            yield "random", k, (size, _build(domain, pred_slots, const_slots, func_slots, triples, consts, fvals))


def _require_closed(f: FoFormula) -> None:
    names = free_vars(f)
    if names:
        raise OpenFormulaError(names)


def _fo_report(check, f, tried, seed, found, conn, domain_sizes, n_samples, corner_cap, ok_verdict, bad_verdict, as_witness):
    cex = None
    if found is not None:
        source, index, (size, interp), values = found
        cex = Counterexample(interp, values, source, index, domain_size=size)
    verdict = bad_verdict if (cex is not None) != as_witness else ok_verdict
    return CheckReport(
        check=check,
        subject=to_text(f),
        verdict=verdict,
        samples_tried=tried,
        seed=seed,
        counterexample=None if as_witness else cex,
        witness=cex if as_witness else None,
        details={
            "arithmetic": conn.name,
            "domain_sizes": list(domain_sizes),
            "n_samples": n_samples,
            "corner_cap": corner_cap,
        },
    )


def check_fo_valid(
    f: FoFormula,
    domain_sizes: Sequence[int] = (1, 2, 3),
    n_samples: int = 2_000,
    seed: int = 0,
    eps: float = 1e-9,
    corner_cap: int = DEFAULT_FO_CORNER_CAP,
    connectives: Connectives | str = RESIDUAL,
) -> CheckReport:
    """Search finite interpretations for one where ``f`` is not designated.

    ``n_samples`` random interpretations are drawn per domain size, after
    the corner-valued tables.
    """
    _require_closed(f)
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    conn = get_connectives(connectives)

    def test(item):
        _, m = item
        v = _eval(f, m, {}, conn)
        return None if is_designated(v, eps) else {"value": v}

    tried, found = first_failure(_fo_interpretations(f, domain_sizes, n_samples, seed, corner_cap), test)
    return _fo_report("validity", f, tried, seed, found, conn, domain_sizes, n_samples, corner_cap, HOLDS, REFUTED, False)


def check_fo_satisfiable(
    f: FoFormula,
    domain_sizes: Sequence[int] = (1, 2, 3),
    n_samples: int = 2_000,
    seed: int = 0,
    eps: float = 1e-9,
    corner_cap: int = DEFAULT_FO_CORNER_CAP,
    connectives: Connectives | str = RESIDUAL,
) -> CheckReport:
    """Search finite interpretations for a model of ``f``."""
    _require_closed(f)
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    conn = get_connectives(connectives)

    def test(item):
        _, m = item
        v = _eval(f, m, {}, conn)
        return {"value": v} if is_designated(v, eps) else None

    tried, found = first_failure(_fo_interpretations(f, domain_sizes, n_samples, seed, corner_cap), test)
    return _fo_report(
        "satisfiability", f, tried, seed, found, conn, domain_sizes, n_samples, corner_cap,
        WITNESS_FOUND, NO_WITNESS, True,
    )


def propositional_skeleton(f: FoFormula) -> tuple[prop.Formula, dict[str, Atom]]:
    """Replace each distinct atom of a quantifier-free formula by a fresh
    propositional variable ``a0, a1, ...``."""
    names: dict[Atom, str] = {}

    def walk(node: FoFormula) -> prop.Formula:
        if isinstance(node, Atom):
            if node not in names:
                names[node] = f"a{len(names)}"
            return prop.Var(names[node])
        if isinstance(node, Const):
            return node
        if isinstance(node, (Forall, Exists)):
            raise ValueError("the formula contains a quantifier")
        if isinstance(node, Not):
            return Not(walk(node.arg))
        return type(node)(walk(node.left), walk(node.right))

    skeleton = walk(f)
    return skeleton, {v: a for a, v in names.items()}
