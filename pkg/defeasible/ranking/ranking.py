import logging
from dataclasses import dataclass
from functools import cached_property, total_ordering

from defeasible.exceptions import throw
from defeasible.kb import exceptional_subset, material_counterpart
from defeasible.sat import FormulaSet, Solver


def get_log():
	return logging.getLogger("defeasible.ranking")


@total_ordering
@dataclass(frozen=True)
class Rank:
	"""A natural rank, or no rank at all (`value is None`).

	No rank compares above every finite rank and is not below itself.
	"""

	value: int | None = None

	@classmethod
	def finite(cls, value):
		return cls(value)

	@property
	def is_finite(self):
		return self.value is not None

	def __lt__(self, other):
		if not isinstance(other, Rank):
			return NotImplemented
		if self.value is None:
			return False
		return other.value is None or self.value < other.value

	def __str__(self):
		return "none" if self.value is None else str(self.value)


NO_RANK = Rank(None)


@dataclass(frozen=True)
class RankPartition:
	"""The chain C_0 = K, C_{i+1} = E(C_i), stopped at the first C_k with E(C_k) = C_k."""

	levels: tuple

	def __post_init__(self):
		if not self.levels:
			throw("A rank partition has at least one level")

	@property
	def kb(self):
		return self.levels[0]

	@property
	def fixpoint(self):
		return self.levels[-1]

	@property
	def depth(self):
		"""Index k of the fixpoint."""
		return len(self.levels) - 1

	@property
	def signature(self):
		return self.levels[0].signature

	@cached_property
	def materials(self):
		"""Material counterparts of each level, computed once per partition."""
		return tuple(tuple(material_counterpart(a) for a in level) for level in self.levels)

	def __iter__(self):
		return iter(self.levels)

	def __len__(self):
		return len(self.levels)


def partition(kb, solver=None):
	solver = solver or Solver()
	levels = [kb]
	while True:
		current = levels[-1]
		following = exceptional_subset(current, solver)
		# E(C) is a subset of C, so equal size means E(C) = C
		if len(following) == len(current):
			break
		levels.append(following)
	get_log().debug("Partitioned %d assertions into %d levels", len(kb), len(levels))
	return RankPartition(tuple(levels))


def rank(partition, formula, solver=None, start=0):
	"""Least i such that `formula` is not exceptional for C_i; NO_RANK if none.

	Exceptionality only grows along the chain, so the scan may start at any
	level already known to be exceptional (`start`).
	"""
	solver = solver or Solver()
	signature = partition.signature.extend_with(formula)
	for index in range(start, len(partition.levels)):
		if solver.satisfiable(FormulaSet(partition.materials[index] + (formula,), signature)):
			return Rank(index)
	return NO_RANK


def assertion_rank(partition, assertion):
	"""Rank of an assertion of the partitioned KB: its deepest level, or NO_RANK in a nonempty fixpoint."""
	deepest = None
	for index, level in enumerate(partition.levels):
		if assertion in level:
			deepest = index
	if deepest is None:
		throw(f"{assertion} is not an assertion of the knowledge base")
	return NO_RANK if deepest == partition.depth else Rank(deepest)
