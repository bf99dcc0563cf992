from dataclasses import dataclass

from defeasible.exceptions import throw
from defeasible.formula import Formula, Implies, Not, Signature, format_formula
from defeasible.formula.parser import parse_assertion_pair
from defeasible.sat import FormulaSet, Solver


@dataclass(frozen=True)
class ConditionalAssertion:
	"""The defeasible rule `antecedent |~ consequent`."""

	antecedent: Formula
	consequent: Formula

	def __post_init__(self):
		for part in (self.antecedent, self.consequent):
			if not isinstance(part, Formula):
				throw(f"Conditional assertions are built from formulas, got {part!r}")

	@property
	def material(self):
		return material_counterpart(self)

	def __str__(self):
		return f"{format_formula(self.antecedent)} |~ {format_formula(self.consequent)}"


def parse_assertion(text, line=None):
	antecedent, consequent = parse_assertion_pair(text, line)
	return ConditionalAssertion(antecedent, consequent)


@dataclass(frozen=True)
class KnowledgeBase:
	"""A finite list of conditional assertions over a signature.

	Duplicate assertions (by AST equality) are dropped, keeping the first
	occurrence; the signature is extended to cover every assertion.
	"""

	assertions: tuple = ()
	signature: Signature = Signature()

	def __post_init__(self):
		assertions = tuple(dict.fromkeys(self.assertions))
		object.__setattr__(self, "assertions", assertions)
		signature = self.signature
		for assertion in assertions:
			if not isinstance(assertion, ConditionalAssertion):
				throw(f"Knowledge bases hold conditional assertions, got {assertion!r}")
			signature = signature.extend_with(assertion.antecedent, assertion.consequent)
		object.__setattr__(self, "signature", signature)

	def __len__(self):
		return len(self.assertions)

	def __iter__(self):
		return iter(self.assertions)

	def __contains__(self, assertion):
		return assertion in self.assertions

	def __getitem__(self, index):
		return self.assertions[index]

	def with_assertions(self, *extra):
		return KnowledgeBase(self.assertions + extra, self.signature)

	def subset(self, assertions):
		"""The sub-KB of `assertions`, kept in this KB's order and signature."""
		keep = set(assertions)
		return KnowledgeBase(tuple(a for a in self.assertions if a in keep), self.signature)

	def same_assertions(self, other):
		return set(self.assertions) == set(other.assertions)

	def format(self):
		return "\n".join(str(assertion) for assertion in self.assertions)

	def __str__(self):
		return self.format()


def material_counterpart(assertion):
	return Implies(assertion.antecedent, assertion.consequent)


def material_kb(kb, signature=None):
	"""The material counterparts of `kb` as a FormulaSet over its signature.

	`signature` adds variables, for instance those of a query formula.
	"""
	working = kb.signature if signature is None else kb.signature.extend(signature.variables)
	return FormulaSet(tuple(material_counterpart(a) for a in kb), working)


def is_exceptional(kb, formula, solver=None):
	"""True when the material counterpart of `kb` entails the negation of `formula`."""
	solver = solver or Solver()
	return solver.entails(material_kb(kb, Signature.of(formula)), Not(formula))


def exceptional_subset(kb, solver=None):
	"""E(K): the assertions of `kb` whose antecedents are exceptional for `kb`."""
	solver = solver or Solver()
	materials = material_kb(kb)
	exceptional = [a for a in kb if not solver.satisfiable(materials.with_formulas(a.antecedent))]
	return kb.subset(exceptional)
