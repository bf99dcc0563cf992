from collections import Counter

from defeasible.exceptions import throw
from defeasible.formula import And, Const, Iff, Implies, Not, Or, Var


class Clausifier:
	"""Structural (Tseitin) clausification over a fixed signature.

	Signature variables are numbered 1..n in signature order; every compound
	subformula gets a fresh auxiliary variable above n, defined by clauses in
	both directions so models project exactly onto the user signature.
	"""

	def __init__(self, signature):
		self.signature = signature
		self.next_var = len(signature) + 1
		self.clauses = []
		self._cache = {}
		self._top = None

	def _fresh(self):
		var = self.next_var
		self.next_var += 1
		return var

	def _true_literal(self):
		if self._top is None:
			self._top = self._fresh()
			self.clauses.append((self._top,))
		return self._top

	def literal(self, formula):
		cached = self._cache.get(formula)
		if cached is not None:
			return cached
		match formula:
			case Var(name):
				result = self.signature.index(name) + 1
			case Const(value):
				top = self._true_literal()
				result = top if value else -top
			case Not(operand):
				result = -self.literal(operand)
			case And(left, right):
				a, b = self.literal(left), self.literal(right)
				result = self._fresh()
				self.clauses += [(-result, a), (-result, b), (result, -a, -b)]
			case Or(left, right):
				a, b = self.literal(left), self.literal(right)
				result = self._fresh()
				self.clauses += [(-result, a, b), (result, -a), (result, -b)]
			case Implies(left, right):
				a, b = -self.literal(left), self.literal(right)
				result = self._fresh()
				self.clauses += [(-result, a, b), (result, -a), (result, -b)]
			case Iff(left, right):
				a, b = self.literal(left), self.literal(right)
				result = self._fresh()
				self.clauses += [(-result, -a, b), (-result, a, -b), (result, a, b), (result, -a, -b)]
			case _:
				throw(f"Not a formula: {formula!r}")
		self._cache[formula] = result
		return result

	def add(self, formula):
		# top-level conjunctions become separate clauses
		match formula:
			case And(left, right):
				self.add(left)
				self.add(right)
			case Const(True):
				pass
			case _:
				self.clauses.append((self.literal(formula),))


def _propagate(clauses, assignment):
	"""Simplify `clauses` under `assignment`, extending it by unit propagation.

	Returns the remaining clauses, or None on a conflict.
	"""
	while True:
		units = []
		remaining_clauses = []
		for clause in clauses:
			remaining = []
			for literal in clause:
				value = assignment.get(abs(literal))
				if value is None:
					remaining.append(literal)
				elif value == (literal > 0):
					break
			else:
				if not remaining:
					return None
				if len(remaining) == 1:
					units.append(remaining[0])
				remaining_clauses.append(remaining)
		if not units:
			return remaining_clauses
		for literal in units:
			var, value = abs(literal), literal > 0
			if assignment.setdefault(var, value) != value:
				return None
		clauses = remaining_clauses


def dpll(clauses, assignment=None):
	"""Return a satisfying partial assignment {var: bool} or None."""
	assignment = dict(assignment or {})
	clauses = _propagate(clauses, assignment)
	if clauses is None:
		return None
	if not clauses:
		return assignment
	shortest = min(len(clause) for clause in clauses)
	counts = Counter(literal for clause in clauses if len(clause) == shortest for literal in clause)
	branch = max(counts, key=lambda literal: (counts[literal], -abs(literal)))
	for literal in (branch, -branch):
		trial = dict(assignment)
		trial[abs(literal)] = literal > 0
		result = dpll(clauses, trial)
		if result is not None:
			return result
	return None
