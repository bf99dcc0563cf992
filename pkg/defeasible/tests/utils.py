"""Shared test data: the worked example knowledge bases and random generators."""

import random
from itertools import product
from pathlib import Path

from hypothesis import strategies as st

from defeasible.formula import FALSE, TRUE, And, Iff, Implies, Not, Or, Signature, Var, conjunction, disjunction
from defeasible.kb import ConditionalAssertion, KnowledgeBase, load_kb, parse_assertion

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name):
	return FIXTURES / name


def penguin_kb():
	return load_kb(fixture_path("penguin.kb"))


def nixon_kb():
	return load_kb(fixture_path("nixon.kb"))


def assertion(text):
	return parse_assertion(text)


def truth_function_basis(variables=("p", "q")):
	"""One formula per truth function over `variables`, as a disjunction of minterms.

	Index t of the result has the truth table t: bit w is set when the formula
	holds in the world of enumeration index w.
	"""
	worlds = list(product((False, True), repeat=len(variables)))
	basis = []
	for table in range(1 << len(worlds)):
		if table == 0:
			basis.append(FALSE)
			continue
		if table == (1 << len(worlds)) - 1:
			basis.append(TRUE)
			continue
		minterms = []
		for index, values in enumerate(worlds):
			if (table >> index) & 1:
				minterms.append(
					conjunction(Var(name) if value else Not(Var(name)) for name, value in zip(variables, values))
				)
		basis.append(disjunction(minterms))
	return basis


def basis_assertions(variables=("p", "q")):
	basis = truth_function_basis(variables)
	return [ConditionalAssertion(a, b) for a in basis for b in basis]


def random_formula(rng, variables, depth=2):
	if depth == 0 or rng.random() < 0.3:
		choice = rng.random()
		if choice < 0.05:
			return TRUE
		if choice < 0.1:
			return FALSE
		return Var(rng.choice(variables))
	if rng.random() < 0.25:
		return Not(random_formula(rng, variables, depth - 1))
	node = rng.choice((And, Or, Implies, Iff, And, Or))
	return node(random_formula(rng, variables, depth - 1), random_formula(rng, variables, depth - 1))


def random_assertion(rng, variables, depth=2):
	return ConditionalAssertion(random_formula(rng, variables, depth), random_formula(rng, variables, depth))


def random_kb(rng, variables=("p", "q", "r"), max_assertions=4, depth=2):
	count = rng.randint(0, max_assertions)
	return KnowledgeBase(
		tuple(random_assertion(rng, variables, depth) for _ in range(count)),
		# pinned, so queries over `variables` stay within the oracle guard
		Signature(tuple(variables)),
	)


def random_kbs(seed, count, **options):
	rng = random.Random(seed)
	return [random_kb(rng, **options) for _ in range(count)]


def chain_kb(size):
	"""`size` assertions a_i |~ a_(i+1) and a_(i+1) |~ !a_(i-1), interleaved."""
	assertions = []
	i = 0
	while len(assertions) < size:
		assertions.append(ConditionalAssertion(Var(f"a{i}"), Var(f"a{i + 1}")))
		if i and len(assertions) < size:
			assertions.append(ConditionalAssertion(Var(f"a{i + 1}"), Not(Var(f"a{i - 1}"))))
		i += 1
	return KnowledgeBase(tuple(assertions))


def formulas(variables=("p", "q", "r"), max_leaves=8):
	"""Hypothesis strategy for formulas over `variables`."""
	leaves = st.one_of(st.sampled_from([Var(name) for name in variables]), st.sampled_from([TRUE, FALSE]))

	def extend(children):
		return st.one_of(
			children.map(Not),
			st.tuples(children, children).map(lambda pair: And(*pair)),
			st.tuples(children, children).map(lambda pair: Or(*pair)),
			st.tuples(children, children).map(lambda pair: Implies(*pair)),
			st.tuples(children, children).map(lambda pair: Iff(*pair)),
		)

	return st.recursive(leaves, extend, max_leaves=max_leaves)


@st.composite
def assertions(draw, variables=("p", "q", "r")):
	return ConditionalAssertion(draw(formulas(variables, 4)), draw(formulas(variables, 4)))


@st.composite
def knowledge_bases(draw, variables=("p", "q", "r"), max_assertions=4):
	items = draw(st.lists(assertions(variables), max_size=max_assertions))
	return KnowledgeBase(tuple(items))
