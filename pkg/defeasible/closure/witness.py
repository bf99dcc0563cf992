import logging
from dataclasses import dataclass

from defeasible.config import get_settings
from defeasible.exceptions import UnknownVariableError, WitnessIndexError, throw
from defeasible.formula import Not, World, disjunction, evaluate
from defeasible.kb import material_counterpart
from defeasible.sat import FormulaSet, Solver
from defeasible.sat.truth_table import mask_indices, truth_mask


def get_log():
	return logging.getLogger("defeasible.closure")


@dataclass(frozen=True)
class WitnessStep:
	indices: frozenset
	world: World

	def __post_init__(self):
		object.__setattr__(self, "indices", frozenset(self.indices))

	def format(self):
		indices = ", ".join(str(index) for index in sorted(self.indices))
		return f"I = {{{indices}}}  {self.world.format()}"


@dataclass(frozen=True)
class Witness:
	"""A sequence (I_0, f_0) ... (I_n, f_n) certifying preferential non-entailment.

	Index sets refer to positions in the knowledge base's assertion list.
	Read bottom-up, the worlds f_0 < f_1 < ... < f_n form a linear ranked model
	of the knowledge base whose only antecedent-world, f_n, refutes the query.
	"""

	steps: tuple

	def __post_init__(self):
		steps = tuple(step if isinstance(step, WitnessStep) else WitnessStep(*step) for step in self.steps)
		if not steps:
			throw("A witness has at least one step")
		object.__setattr__(self, "steps", steps)

	def __len__(self):
		return len(self.steps)

	def __iter__(self):
		return iter(self.steps)

	def format(self):
		return "\n".join(f"step {k}: {step.format()}" for k, step in enumerate(self.steps))

	def as_dict(self):
		return [{"indices": sorted(step.indices), "world": step.world.as_dict()} for step in self.steps]


def _holds(world, formula):
	try:
		return evaluate(world, formula)
	except UnknownVariableError:
		return False


def verify_witness(kb, assertion, witness):
	"""Check the six witness conditions for `assertion` against `kb`."""
	count = len(kb)
	for step in witness:
		for index in step.indices:
			if not 0 <= index < count:
				throw(f"Witness index {index} is outside 0..{count - 1}", WitnessIndexError)

	steps = witness.steps
	if steps[0].indices != frozenset(range(count)):
		return False
	last = len(steps) - 1
	for k, step in enumerate(steps):
		world = step.world
		if not all(_holds(world, material_counterpart(kb[j])) for j in step.indices):
			return False
		if k == last:
			break
		if not any(_holds(world, kb[j].antecedent) for j in step.indices):
			return False
		if _holds(world, assertion.antecedent):
			return False
		following = frozenset(j for j in step.indices if not _holds(world, kb[j].antecedent))
		if steps[k + 1].indices != following:
			return False
	world = steps[last].world
	return _holds(world, assertion.antecedent) and not _holds(world, assertion.consequent)


def find_witness(kb, assertion, settings=None):
	"""Depth-first search for a witness that `kb` does not preferentially entail `assertion`.

	Returns None when the assertion is entailed. The successor index set is
	determined by the chosen world, so worlds are grouped by successor and an
	index set whose search failed is never explored twice.
	"""
	settings = get_settings(settings)
	solver = Solver(settings)
	alpha, beta = assertion.antecedent, assertion.consequent
	signature = kb.signature.extend_with(alpha, beta)
	materials = [material_counterpart(a) for a in kb]
	antecedent_masks = [truth_mask(a.antecedent, signature) for a in kb]
	failed = set()

	def search(indices, depth):
		if indices in failed:
			return None
		psi = tuple(materials[j] for j in sorted(indices))
		terminal = solver.find_model(FormulaSet(psi + (alpha, Not(beta)), signature))
		if terminal is not None:
			return [WitnessStep(indices, terminal)]
		if indices:
			phi = disjunction(kb[j].antecedent for j in sorted(indices))
			candidates = solver.models_mask(FormulaSet(psi + (Not(alpha), phi), signature))
			successors = {}
			for index in mask_indices(candidates):
				following = frozenset(j for j in indices if not (antecedent_masks[j] >> index) & 1)
				successors.setdefault(following, index)
			get_log().debug("Witness search depth %d: %d successor sets", depth, len(successors))
			for following, index in successors.items():
				rest = search(following, depth + 1)
				if rest is not None:
					return [WitnessStep(indices, World.from_index(signature, index)), *rest]
		failed.add(indices)
		return None

	steps = search(frozenset(range(len(kb))), 0)
	return None if steps is None else Witness(tuple(steps))
