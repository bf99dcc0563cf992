import logging
from dataclasses import dataclass

from defeasible.closure.witness import find_witness
from defeasible.config import get_settings
from defeasible.formula import FALSE, And, Not
from defeasible.kb import ConditionalAssertion, exceptional_subset, is_exceptional
from defeasible.ranking import NO_RANK, Rank, partition, rank
from defeasible.sat import Solver


def get_log():
	return logging.getLogger("defeasible.closure")


@dataclass(frozen=True)
class QueryResult:
	"""Answer to a closure query with the ranks it was decided on.

	`rank_refuter` is the rank of antecedent & !consequent; `sat_calls` counts
	the satisfiability decisions spent on this query alone.
	"""

	answer: bool
	rank_antecedent: Rank
	rank_refuter: Rank
	sat_calls: int

	def as_dict(self):
		return {
			"answer": self.answer,
			"rank_antecedent": self.rank_antecedent.value,
			"rank_refuter": self.rank_refuter.value,
			"sat_calls": self.sat_calls,
		}


def refuter(assertion):
	return And(assertion.antecedent, Not(assertion.consequent))


class Reasoner:
	"""Queries against one knowledge base.

	The rank partition is computed on the first query and reused afterwards;
	its SAT decisions are charged to that first query.
	"""

	def __init__(self, kb, settings=None):
		self.kb = kb
		self.settings = get_settings(settings)
		self._partition = None

	def partition(self, solver=None):
		if self._partition is None:
			self._partition = partition(self.kb, solver or Solver(self.settings))
		return self._partition

	def rank(self, formula):
		solver = Solver(self.settings)
		return rank(self.partition(solver), formula, solver)

	def in_rational_closure(self, assertion):
		solver = Solver(self.settings)
		ranks = self.partition(solver)
		rank_antecedent = rank(ranks, assertion.antecedent, solver)
		if not rank_antecedent.is_finite:
			# an antecedent without rank is inconsistent: everything follows
			return QueryResult(True, rank_antecedent, NO_RANK, solver.calls)
		rank_refuter = rank(ranks, refuter(assertion), solver, start=rank_antecedent.value)
		result = QueryResult(rank_antecedent < rank_refuter, rank_antecedent, rank_refuter, solver.calls)
		get_log().debug("%s: %s", assertion, result)
		return result

	def preferential_query(self, assertion):
		"""Preferential entailment as a rational closure query (the Dix reduction).

		`a |~ b` is preferentially entailed by K iff `a |~ false` is in the
		rational closure of K plus `a |~ !b`.
		"""
		extended = self.kb.with_assertions(ConditionalAssertion(assertion.antecedent, Not(assertion.consequent)))
		return Reasoner(extended, self.settings).in_rational_closure(
			ConditionalAssertion(assertion.antecedent, FALSE)
		)

	def pref_entails(self, assertion):
		return self.preferential_query(assertion).answer

	def find_witness(self, assertion):
		return find_witness(self.kb, assertion, self.settings)


def in_rational_closure(kb, assertion, settings=None):
	return Reasoner(kb, settings).in_rational_closure(assertion)


def preferential_query(kb, assertion, settings=None):
	return Reasoner(kb, settings).preferential_query(assertion)


def pref_entails(kb, assertion, settings=None):
	return Reasoner(kb, settings).pref_entails(assertion)


def decide_by_exceptionality(kb, assertion, settings=None):
	"""Rational closure membership without a precomputed partition.

	Descend C := E(C) while the antecedent is exceptional for C and C is not
	yet a fixpoint; the assertion is in the closure iff its refuter is then
	exceptional for C.
	"""
	solver = Solver(settings)
	current = kb
	while is_exceptional(current, assertion.antecedent, solver):
		following = exceptional_subset(current, solver)
		if len(following) == len(current):
			break
		current = following
	return is_exceptional(current, refuter(assertion), solver)
