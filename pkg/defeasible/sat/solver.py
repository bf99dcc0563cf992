import logging
from dataclasses import dataclass

from defeasible.config import get_settings
from defeasible.exceptions import ResourceGuardError, throw
from defeasible.formula import Not, Signature, World
from defeasible.sat.dpll import Clausifier, dpll
from defeasible.sat.truth_table import conjunction_mask, lowest_index, mask_indices


def get_log():
	return logging.getLogger("defeasible.sat")


@dataclass(frozen=True)
class FormulaSet:
	"""A finite list of formulas together with a signature covering them."""

	formulas: tuple = ()
	signature: Signature = Signature()

	def __post_init__(self):
		formulas = tuple(self.formulas)
		object.__setattr__(self, "formulas", formulas)
		for formula in formulas:
			if not self.signature.covers(formula):
				throw(f"Signature {self.signature} does not cover {formula}")

	@classmethod
	def of(cls, formulas=(), signature=None):
		formulas = tuple(formulas)
		return cls(formulas, (signature or Signature()).extend_with(*formulas))

	def with_formulas(self, *extra):
		return FormulaSet(self.formulas + extra, self.signature.extend_with(*extra))

	def over(self, signature):
		"""The same formulas over `signature` extended as needed."""
		return FormulaSet(self.formulas, signature.extend(self.signature.variables))

	def __len__(self):
		return len(self.formulas)

	def __iter__(self):
		return iter(self.formulas)


class Solver:
	"""Satisfiability, entailment and model enumeration over FormulaSets.

	Each instance counts the satisfiability decisions it makes in `calls`;
	queries that need an independent count use their own Solver.
	"""

	def __init__(self, settings=None):
		self.settings = get_settings(settings)
		self.calls = 0

	def _guard(self, signature):
		if signature.world_count > self.settings.model_cap:
			throw(
				f"Enumerating 2^{len(signature)} worlds exceeds the cap of {self.settings.model_cap}",
				ResourceGuardError,
			)

	def models_mask(self, formula_set):
		"""Truth table of the conjunction of `formula_set` (see truth_table)."""
		self._guard(formula_set.signature)
		return conjunction_mask(formula_set.formulas, formula_set.signature)

	def find_model(self, formula_set):
		"""A world satisfying every formula of `formula_set`, or None."""
		self.calls += 1
		signature = formula_set.signature
		if len(signature) <= self.settings.enumeration_threshold:
			mask = self.models_mask(formula_set)
			return World.from_index(signature, lowest_index(mask)) if mask else None

		get_log().debug("DPLL on %d formulas over %d variables", len(formula_set), len(signature))
		clausifier = Clausifier(signature)
		for formula in formula_set:
			clausifier.add(formula)
		assignment = dpll(clausifier.clauses)
		if assignment is None:
			return None
		return World(signature, tuple(assignment.get(var, False) for var in range(1, len(signature) + 1)))

	def satisfiable(self, formula_set):
		return self.find_model(formula_set) is not None

	def entails(self, formula_set, goal):
		return not self.satisfiable(formula_set.with_formulas(Not(goal)))

	def enumerate_models(self, formula_set):
		"""All satisfying worlds, in enumeration order."""
		self.calls += 1
		signature = formula_set.signature
		return [World.from_index(signature, index) for index in mask_indices(self.models_mask(formula_set))]


def satisfiable(formula_set, settings=None):
	return Solver(settings).satisfiable(formula_set)


def entails(formula_set, goal, settings=None):
	return Solver(settings).entails(formula_set, goal)


def find_model(formula_set, settings=None):
	return Solver(settings).find_model(formula_set)


def enumerate_models(formula_set, settings=None):
	return Solver(settings).enumerate_models(formula_set)
