import itertools
import random

import pytest
from hypothesis import given, strategies as st

from inlogic.checking import CORNER_TRIPLES, HOLDS, REFUTED, random_triple, sample_rng
from inlogic.connectives import MOORE, RESIDUAL
from inlogic.interval import ONE, NeutroTriple, UnitInterval, triple_approx_eq
from inlogic.prop import (
    And,
    Const,
    Iff,
    Implies,
    Not,
    Or,
    UnboundVariableError,
    Var,
    check_equivalence,
    check_modus_ponens_preservation,
    check_tautology,
    eval_prop,
    interpretation_from_json,
    interpretation_to_json,
    is_designated,
    parse_formula,
    to_text,
    variables,
)
from inlogic.syntax import LexError, ParseError

from strategies import triples

N = NeutroTriple
p, q, r = Var("p"), Var("q"), Var("r")
M = {"p": N(0.5, 0.4, 0.7), "q": N(1, 0.7, 0.2)}


def ev(text, m=M, **kw):
    return eval_prop(parse_formula(text), m, **kw)


# -- parsing -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, tree",
    [
        ("!p & q -> r", Implies(And(Not(p), q), r)),
        ("(p)", p),
        ("p & q | r", Or(And(p, q), r)),
        ("p | q & r", And(Or(p, q), r)),
        ("p -> q -> r", Implies(p, Implies(q, r))),
        ("p <-> q -> r", Iff(p, Implies(q, r))),
        ("!!p", Not(Not(p))),
        ("true -> false", Implies(Const(True), Const(False))),
        ("¬p ∧ q → r ↔ p ∨ q", Implies(And(Not(p), q), Iff(r, Or(p, q)))),
    ],
)
def test_parse(text, tree):
    assert parse_formula(text) == tree


@pytest.mark.parametrize(
    "text, position",
    [("p &", 3), ("p q", 2), ("(p", 2), ("-> p", 0), ("", 0), ("p & )", 4)],
)
def test_parse_error_position(text, position):
    with pytest.raises(ParseError) as err:
        parse_formula(text)
    assert err.value.position == position
    assert err.value.expected


def test_lex_error():
    with pytest.raises(LexError) as err:
        parse_formula("p # q")
    assert err.value.position == 2


def test_print_minimal_parentheses():
    assert to_text(parse_formula("(!p & q) -> r")) == "!p & q -> r"
    assert to_text(parse_formula("p & (q | r)")) == "p & (q | r)"
    assert to_text(parse_formula("(p -> q) -> r")) == "(p -> q) -> r"
    assert to_text(parse_formula("!(p & q)")) == "!(p & q)"


def formulas(depth=6):
    atoms = st.one_of(st.sampled_from([p, q, r, Var("s1")]), st.booleans().map(Const))
    if depth <= 1:
        return atoms
    sub = st.deferred(lambda: formulas(depth - 1))
    binary = st.sampled_from([And, Or, Implies, Iff])
    return st.one_of(
        atoms,
        sub.map(Not),
        st.builds(lambda op, a, b: op(a, b), binary, sub, sub),
    )


@given(formulas())
def test_print_parse_round_trip(f):
    assert parse_formula(to_text(f)) == f


def test_variables_sorted():
    assert variables(parse_formula("r & (p -> q) | p")) == ("p", "q", "r")


# -- evaluation --------------------------------------------------------------


def test_worked_example_values():
    assert triple_approx_eq(ev("!p"), N(0.7, 0.6, 0.5), 1e-12)
    assert triple_approx_eq(ev("p & !p"), N(0.5, 0.4, 0.7), 1e-12)
    assert triple_approx_eq(ev("p | q"), N(1, 0.7, 0.2), 1e-12)


def test_implication_row_gives_designated_value_not_printed_1_0_0():
    # the connective row gives i = min(1, 1 - 0.4 + 0.7) = 1
    assert ev("p -> q") == ONE


def test_constants():
    assert ev("true", {}) == ONE
    assert ev("false", {}) == N(0, 0, 1)


def test_unbound_variable_is_named():
    with pytest.raises(UnboundVariableError) as err:
        ev("p & zz")
    assert err.value.name == "zz"


def test_scalar_rows():
    a, b = N(0.3, 0.6, 0.2), N(0.5, 0.1, 0.4)
    m = {"p": a, "q": b}
    assert triple_approx_eq(ev("p -> q", m), N(1, 0.5, 0.2), 1e-12)
    assert triple_approx_eq(ev("q -> p", m), N(0.8, 1, 0), 1e-12)
    assert triple_approx_eq(ev("p <-> q", m), N(0.8, 0.5, 0.2), 1e-12)


def test_interval_implication_endpoints():
    m = {"p": N((0.5, 1), (0.5, 1), (0, 0.5)), "q": N((0, 0.5), (0, 1), (0.5, 1))}
    v = ev("p -> q", m)
    # t: lo = min(L(.5, 0), L(1, .5)) = .5, hi = L(1, .5) = .5
    assert v.t == UnitInterval(0.5, 0.5)
    assert v.i == UnitInterval(0.5, 1)
    assert v.f == UnitInterval(0.5, 0.5)


def test_moore_reading_widens_self_implication():
    m = {"p": N((0.3, 0.5), 0.5, 0.5)}
    assert is_designated(ev("p -> p", m))
    assert not is_designated(ev("p -> p", m, connectives=MOORE))
    assert not check_tautology(parse_formula("p -> p"), n_samples=10, connectives="moore").ok


@given(triples(), triples())
def test_implication_designated_iff_ordered(a, b):
    from inlogic.sets import triple_leq

    assert is_designated(eval_prop(Implies(p, q), {"p": a, "q": b})) == triple_leq(a, b)


@given(formulas(4), triples(), triples(), triples())
def test_results_are_unit_triples(f, a, b, c):
    m = {"p": a, "q": b, "r": c, "s1": a}
    for conn in (RESIDUAL, MOORE):
        v = eval_prop(f, m, conn)
        for iv in v:
            assert 0.0 <= iv.lo <= iv.hi <= 1.0


def test_is_designated():
    assert is_designated(ONE)
    assert not is_designated(N(1, 0, 0))
    assert is_designated(N((1 - 1e-12, 1), 1, 0), 1e-9)
    with pytest.raises(ValueError):
        is_designated(ONE, -1)


@given(triples(), triples())
def test_designation_closed_under_and_or(a, b):
    if is_designated(a) and is_designated(b):
        m = {"p": a, "q": b}
        assert is_designated(ev("p & q", m)) and is_designated(ev("p | q", m))


# -- schema lists ------------------------------------------------------------

AXIOMS = [
    "p -> (q -> p)",
    "p & q -> q | r",
    "p & q & r -> r | s1",
    "p -> (q -> p & q)",
    "(p -> r) -> ((q -> r) -> (p | q -> r))",
    "p -> p",
]

EQUIVALENCES = [
    ("!!p", "p"),
    ("!(p & q)", "!p | !q"),
    ("!(p | q)", "!p & !q"),
    ("p & (q | r)", "(p & q) | (p & r)"),
    ("p | (q & r)", "(p | q) & (p | r)"),
]

NOT_TAUTOLOGIES = ["p | !p", "!(p & !p)", "p & !p -> q", "p & !p -> !q"]


@pytest.mark.parametrize("text", AXIOMS)
def test_axiom_schemas_hold(text):
    report = check_tautology(parse_formula(text), n_samples=2000)
    assert report.verdict == HOLDS, report.render_text()


@pytest.mark.parametrize("left, right", EQUIVALENCES)
def test_equivalences_hold_exactly(left, right):
    report = check_equivalence(parse_formula(left), parse_formula(right), n_samples=2000, eps=0.0)
    assert report.verdict == HOLDS, report.render_text()


@pytest.mark.parametrize("left, right", EQUIVALENCES)
def test_equivalences_as_biimplications(left, right):
    assert check_tautology(parse_formula(f"({left}) <-> ({right})"), n_samples=2000).ok


@pytest.mark.parametrize("text", NOT_TAUTOLOGIES)
def test_schemas_that_fail(text):
    report = check_tautology(parse_formula(text), n_samples=1000)
    assert report.verdict == REFUTED
    cex = report.counterexample
    assert not is_designated(eval_prop(parse_formula(text), cex.interpretation))


def test_material_implication_is_not_equivalent():
    report = check_equivalence(parse_formula("!p | q"), parse_formula("p -> q"), n_samples=1000)
    assert report.verdict == REFUTED
    c = report.counterexample
    assert not triple_approx_eq(c.values["left"], c.values["right"])


def _pairs():
    for a, b in itertools.product(CORNER_TRIPLES, repeat=2):
        yield {"p": a, "q": b}
    for k in range(2000):
        rng = sample_rng(99, k)
        yield {"p": random_triple(rng), "q": random_triple(rng)}


def _triples_samples(n=3000):
    rng = random.Random(4)
    corners = list(CORNER_TRIPLES)
    for _ in range(n):
        yield {"p": rng.choice(corners), "q": rng.choice(corners), "r": rng.choice(corners)}
        yield {"p": random_triple(rng), "q": random_triple(rng), "r": random_triple(rng)}


def D(text, m):
    return is_designated(ev(text, m))


def test_contraposition_rule():
    for m in _pairs():
        assert D("p -> q", m) == D("!q -> !p", m)


def test_implication_as_lattice_order_rule():
    for m in _pairs():
        assert D("p -> q", m) == D("p <-> p & q", m) == D("q <-> p | q", m)


def test_disjunctive_antecedent_rule():
    for m in _triples_samples():
        assert D("p | q -> r", m) == (D("p -> r", m) and D("q -> r", m))


def test_transitivity_rule():
    for m in _triples_samples():
        if D("p -> q", m) and D("q -> r", m):
            assert D("p -> r", m)


# -- modus ponens ------------------------------------------------------------


def test_modus_ponens_constants():
    report = check_modus_ponens_preservation(10, antecedent=Const(True), consequent=Const(True))
    assert report.ok and report.details["designated_premises"] == report.samples_tried


def test_modus_ponens_corner_grid():
    report = check_modus_ponens_preservation(1000)
    assert report.verdict == HOLDS
    assert report.samples_tried == len(CORNER_TRIPLES) ** 2 + 1000
    assert report.details["designated_premises"] >= 1


def test_modus_ponens_compound_premises():
    report = check_modus_ponens_preservation(
        500, antecedent=parse_formula("p | q"), consequent=parse_formula("q & (p -> q)")
    )
    assert report.verdict == HOLDS
    assert report.details["designated_premises"] > 1


# -- reports -----------------------------------------------------------------


def test_report_replays_from_seed():
    f = parse_formula("p -> (q -> p)")
    a = check_tautology(f, n_samples=300, seed=7)
    b = check_tautology(f, n_samples=300, seed=7)
    assert a.to_json() == b.to_json()


def test_counterexample_json_round_trip():
    report = check_tautology(parse_formula("p | !p"), n_samples=10)
    m = report.counterexample.interpretation
    assert interpretation_from_json(interpretation_to_json(m)) == m
    assert report.to_dict()["counterexample"]["source"] == "corner"


def test_random_counterexample_is_reported_with_its_index():
    # q -> p fails on the first corner, so replace the corner grid with nothing
    report = check_tautology(parse_formula("q -> p"), n_samples=50, seed=3, corner_cap=0)
    cex = report.counterexample
    assert cex.source == "random"
    rng = sample_rng(3, cex.index)
    assert cex.interpretation == {"p": random_triple(rng), "q": random_triple(rng)}


def test_rejects_zero_samples():
    with pytest.raises(ValueError):
        check_tautology(p, n_samples=0)
