import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from inlogic.checking import HOLDS, NO_WITNESS, REFUTED, WITNESS_FOUND, random_triple
from inlogic.interval import ONE, NeutroTriple, triple_approx_eq
from inlogic.pred import (
    ArityError,
    Atom,
    Constant,
    Exists,
    FoInterpretation,
    Forall,
    Func,
    OpenFormulaError,
    Occurrence,
    UnboundVariableError,
    UnknownSymbolError,
    Variable,
    bound_occurrences,
    check_fo_satisfiable,
    check_fo_valid,
    eval_fo,
    free_vars,
    parse_fo_formula,
    propositional_skeleton,
    signature,
    to_text,
    variable_occurrences,
)
from inlogic.prop import And, Iff, Implies, Not, Or, eval_prop, is_designated

N = NeutroTriple
x, y = Variable("x"), Variable("y")
SCHEMAS = [
    line.strip()
    for line in (Path(__file__).parent / "data" / "fo_schemas.txt").read_text().splitlines()
    if line.strip() and not line.startswith("#")
]

TABLE = FoInterpretation(
    ("1", "2", "3"),
    preds={("p", 1): {("1",): N(0.5, 1, 0.4), ("2",): N(1, 0.2, 0), ("3",): N(0.7, 0.4, 0.7)}},
)


def P(text):
    return parse_fo_formula(text)


# -- syntax ------------------------------------------------------------------


def test_parse_nested_quantifiers():
    assert P("forall x. exists y. (p(x,y) -> q(x))") == Forall(
        "x", Exists("y", Implies(Atom("p", (x, y)), Atom("q", (x,))))
    )


def test_parse_constant_argument():
    assert P("p(a)") == Atom("p", (Constant("a"),))


def test_quantifier_binds_tighter_than_and():
    assert P("forall x. p(x) & q(x)") == And(Forall("x", Atom("p", (x,))), Atom("q", (x,)))


def test_binder_decides_variable_versus_constant():
    f = P("forall a. p(a, b)")
    assert f == Forall("a", Atom("p", (Variable("a"), Constant("b"))))


def test_function_terms_and_unicode():
    assert P("∀x ∃y p(f(x), y)") == Forall("x", Exists("y", Atom("p", (Func("f", (x,)), y))))


@pytest.mark.parametrize("text", ["forall x. exists y. (p(x,y) -> q(x))", "!forall x. !p(x) <-> exists x. p(x)", "r & forall x. (p(x) | q(x, a))"])
def test_print_round_trip(text):
    f = P(text)
    assert P(to_text(f)) == f


def test_scope_of_first_two_occurrences():
    f = P("forall x. p(x,y) | q(x)")
    occ = variable_occurrences(f)
    assert occ == [
        Occurrence("x", 0, True),
        Occurrence("x", 1, True),
        Occurrence("y", 2, False),
        Occurrence("x", 3, False),
    ]
    assert free_vars(f) == {"x", "y"}
    assert bound_occurrences(f) == [("x", 0), ("x", 1)]


def test_free_variables_simple():
    assert free_vars(P("forall x. p(x)")) == frozenset()
    assert free_vars(P("p(x)")) == {"x"}


def test_signature_rejects_mixed_arity():
    with pytest.raises(ArityError):
        signature(P("p(x) & p(x, x)"))


# -- evaluation --------------------------------------------------------------


def test_quantifier_example_values():
    assert triple_approx_eq(eval_fo(P("forall x. p(x)"), TABLE), N(0.5, 0.2, 0.7), 1e-12)
    assert eval_fo(P("exists x. p(x)"), TABLE) == ONE


def test_order_of_domain_does_not_matter():
    rng = random.Random(1)
    for _ in range(50):
        dom = ["1", "2", "3", "4"]
        table = {(d,): random_triple(rng) for d in dom}
        a = FoInterpretation(tuple(dom), preds={("p", 1): table})
        rng.shuffle(dom)
        b = FoInterpretation(tuple(dom), preds={("p", 1): table})
        for text in ("forall x. p(x)", "exists x. p(x)", "forall x. exists y. (p(x) -> p(y))"):
            assert eval_fo(P(text), a) == eval_fo(P(text), b)


def test_singleton_domain_quantifiers_collapse():
    v = N((0.2, 0.4), 0.3, (0.1, 0.6))
    m = FoInterpretation(("d",), preds={("p", 1): {("d",): v}})
    assert eval_fo(P("forall x. p(x)"), m) == v == eval_fo(P("exists x. p(x)"), m)


def test_terms_constants_functions():
    m = FoInterpretation(
        ("1", "2"),
        consts={"a": "1"},
        funcs={("f", 1): {("1",): "2", ("2",): "2"}},
        preds={("p", 1): {("1",): N(0.1, 0.2, 0.3), ("2",): N(0.9, 0.8, 0.7)}},
    )
    assert eval_fo(P("p(a)"), m) == N(0.1, 0.2, 0.3)
    assert eval_fo(P("p(f(a))"), m) == N(0.9, 0.8, 0.7)
    assert eval_fo(P("p(x)"), m, {"x": "2"}) == N(0.9, 0.8, 0.7)


def test_evaluation_errors():
    with pytest.raises(UnboundVariableError):
        eval_fo(P("p(x)"), TABLE)
    with pytest.raises(UnknownSymbolError):
        eval_fo(P("forall x. q(x)"), TABLE)
    with pytest.raises(ArityError):
        eval_fo(P("forall x. p(x, x)"), TABLE)
    with pytest.raises(UnknownSymbolError):
        eval_fo(P("p(a)"), TABLE)
    with pytest.raises(ValueError):
        eval_fo(P("p(x)"), TABLE, {"x": "9"})


def test_interpretation_json_round_trip():
    m = FoInterpretation(
        ("1", "2"),
        consts={"a": "2"},
        funcs={("g", 2): {(u, v): u for u in "12" for v in "12"}},
        preds={("p", 1): {("1",): N(0.1, 0.2, 0.3), ("2",): N(0.4, 0.5, 0.6)}},
    )
    back = FoInterpretation.from_json(m.to_json())
    assert back.to_json() == m.to_json()
    assert back.preds[("p", 1)][("2",)] == N(0.4, 0.5, 0.6)


def test_interpretation_must_be_total():
    with pytest.raises(ValueError):
        FoInterpretation(("1", "2"), preds={("p", 1): {("1",): ONE}})
    with pytest.raises(ValueError):
        FoInterpretation(("1",), consts={"a": "7"})


@st.composite
def quantifier_free(draw, depth=4):
    atoms = st.sampled_from([Atom("p", (Constant("a"),)), Atom("p", (Constant("b"),)), Atom("q", ()), Atom("s", (Constant("a"), Constant("b")))])
    if depth <= 1:
        return draw(atoms)
    kind = draw(st.integers(0, 5))
    if kind == 0:
        return draw(atoms)
    if kind == 1:
        return Not(draw(quantifier_free(depth - 1)))
    op = [And, Or, Implies, Iff][kind - 2]
    return op(draw(quantifier_free(depth - 1)), draw(quantifier_free(depth - 1)))


@settings(max_examples=200)
@given(quantifier_free(), st.integers(0, 10_000))
def test_quantifier_free_matches_propositional_skeleton(f, seed):
    rng = random.Random(seed)
    dom = ("1", "2")
    m = FoInterpretation(
        dom,
        consts={"a": "1", "b": rng.choice(dom)},
        preds={
            ("p", 1): {(d,): random_triple(rng) for d in dom},
            ("q", 0): {(): random_triple(rng)},
            ("s", 2): {(u, v): random_triple(rng) for u in dom for v in dom},
        },
    )
    skeleton, atoms = propositional_skeleton(f)
    env = {name: eval_fo(atom, m) for name, atom in atoms.items()}
    assert eval_fo(f, m) == eval_prop(skeleton, env)


# -- validity and satisfiability ---------------------------------------------


def test_corpus_has_all_schemas():
    assert len(SCHEMAS) == 22


@pytest.mark.parametrize("text", SCHEMAS[:4] + SCHEMAS[14:16])
def test_some_schemas_quickly(text):
    report = check_fo_valid(P(text), n_samples=200)
    assert report.verdict == HOLDS, report.render_text()


def test_existential_consequence_is_valid():
    assert check_fo_valid(P("forall x. (p(x) -> exists y. p(y))"), n_samples=300).ok


def test_diagonal_instance_is_valid():
    assert check_fo_valid(P("forall x. forall y. p(x,y) -> forall x. p(x,x)"), n_samples=300).ok


def test_converse_of_universal_to_existential_fails():
    report = check_fo_valid(P("exists x. p(x) -> forall x. p(x)"), n_samples=300)
    assert report.verdict == REFUTED
    cex = report.counterexample
    assert cex.domain_size >= 2
    assert not is_designated(eval_fo(P("exists x. p(x) -> forall x. p(x)"), cex.interpretation))


def test_negation_duality_is_an_identity():
    rng = random.Random(6)
    pairs = [("!exists x. !p(x)", "forall x. p(x)"), ("!forall x. !p(x)", "exists x. p(x)"),
             ("!exists x. p(x)", "forall x. !p(x)"), ("exists x. !p(x)", "!forall x. p(x)")]
    for _ in range(300):
        size = rng.randint(1, 4)
        dom = tuple(str(k) for k in range(size))
        m = FoInterpretation(dom, preds={("p", 1): {(d,): random_triple(rng) for d in dom}})
        for left, right in pairs:
            assert eval_fo(P(left), m) == eval_fo(P(right), m)


def test_satisfiable_atom():
    report = check_fo_satisfiable(P("p(a)"), n_samples=50)
    assert report.verdict == WITNESS_FOUND
    w = report.witness
    assert w.values["value"] == ONE
    assert is_designated(eval_fo(P("p(a)"), w.interpretation))


def test_false_has_no_witness():
    report = check_fo_satisfiable(P("false"), n_samples=50)
    assert report.verdict == NO_WITNESS
    assert report.witness is None


def test_universal_with_negated_instance_has_no_designated_model():
    # forall x. p(x) is designated only when every p(d) is <1,1,0>, and then
    # exists y. !p(y) has truth degree max f(p(d)) = 0, so the conjunction
    # can never be designated
    report = check_fo_satisfiable(P("forall x. p(x) & exists y. !p(y)"), n_samples=500)
    assert report.verdict == NO_WITNESS


def test_open_formula_is_rejected():
    with pytest.raises(OpenFormulaError):
        check_fo_valid(P("p(x)"))
    with pytest.raises(OpenFormulaError):
        check_fo_satisfiable(P("exists y. p(x, y)"))


def test_function_tables_are_sampled():
    # valid only if f is ignored; a sampled function table refutes it
    report = check_fo_valid(P("forall x. (p(x) -> p(f(x)))"), domain_sizes=(2,), n_samples=100)
    assert report.verdict == REFUTED
    assert report.counterexample.interpretation.funcs


def test_fo_report_is_deterministic():
    f = P(SCHEMAS[14])
    assert check_fo_valid(f, n_samples=100, seed=4).to_json() == check_fo_valid(f, n_samples=100, seed=4).to_json()
