import logging
from dataclasses import dataclass
from math import comb, factorial
from types import MappingProxyType

from defeasible.config import get_settings
from defeasible.exceptions import ResourceGuardError, throw
from defeasible.formula import World, evaluate
from defeasible.ranking import partition as rank_partition
from defeasible.sat import Solver
from defeasible.sat.truth_table import conjunction_mask, mask_indices


def get_log():
	return logging.getLogger("defeasible.models")


@dataclass(frozen=True, eq=False)
class RankedWorldModel:
	"""A ranked model whose states are worlds, each at most once.

	`rank_of` is a partial map from worlds to ranks 0..max_rank with every rank
	in that range used; worlds outside the domain satisfy nothing. Iteration
	over `rank_of` runs by rank, then by enumeration order.
	"""

	signature: object
	rank_of: object

	def __post_init__(self):
		entries = dict(self.rank_of)
		for world, rank in entries.items():
			if not isinstance(world, World) or world.signature != self.signature:
				throw(f"{world} is not a world over {self.signature}")
			if isinstance(rank, bool) or not isinstance(rank, int) or rank < 0:
				throw(f"Rank of {world} must be a natural number, got {rank!r}")
		used = set(entries.values())
		if used != set(range(len(used))):
			throw(f"Ranks {sorted(used)} do not form a contiguous range from 0")
		ordered = dict(sorted(entries.items(), key=lambda item: (item[1], item[0].index)))
		object.__setattr__(self, "rank_of", MappingProxyType(ordered))

	@property
	def max_rank(self):
		"""Highest rank in use; -1 for the empty model."""
		return max(self.rank_of.values(), default=-1)

	@property
	def domain(self):
		return tuple(self.rank_of)

	def layers(self):
		result = [[] for _ in range(self.max_rank + 1)]
		for world, rank in self.rank_of.items():
			result[rank].append(world)
		return tuple(tuple(layer) for layer in result)

	def minimal_rank(self, formula):
		"""Lowest rank of a domain world satisfying `formula`, or None."""
		for world, rank in self.rank_of.items():
			if evaluate(world, formula):
				return rank
		return None

	def __eq__(self, other):
		if not isinstance(other, RankedWorldModel):
			return NotImplemented
		return self.signature == other.signature and dict(self.rank_of) == dict(other.rank_of)

	def __hash__(self):
		return hash((self.signature, frozenset(self.rank_of.items())))

	def __len__(self):
		return len(self.rank_of)


def satisfies(model, assertion):
	"""True when every minimal antecedent-world of `model` satisfies the consequent."""
	lowest = None
	for world, rank in model.rank_of.items():
		if lowest is not None and rank > lowest:
			break
		if evaluate(world, assertion.antecedent):
			lowest = rank
			if not evaluate(world, assertion.consequent):
				return False
	return True


def format_model(model):
	return "\n".join(f"rank {rank}: {world.format()}" for world, rank in model.rank_of.items())


def _ordered_partitions(count, max_layers):
	"""Number of ways to split `count` worlds into 1..max_layers ordered nonempty layers."""
	stirling = [[0] * (max_layers + 1) for _ in range(count + 1)]
	stirling[0][0] = 1
	for n in range(1, count + 1):
		for k in range(1, max_layers + 1):
			stirling[n][k] = k * stirling[n - 1][k] + stirling[n - 1][k - 1]
	return sum(factorial(k) * stirling[count][k] for k in range(max_layers + 1))


def ranked_model_count(world_count, max_rank):
	return sum(comb(world_count, size) * _ordered_partitions(size, max_rank + 1) for size in range(world_count + 1))


def submasks(mask):
	"""Nonempty submasks of `mask` in increasing numeric order."""
	result = []
	sub = mask
	while sub:
		result.append(sub)
		sub = (sub - 1) & mask
	result.reverse()
	return result


def check_oracle_signature(signature, settings):
	if len(signature) > settings.oracle_max_variables:
		throw(
			f"Ranked-model enumeration over {len(signature)} variables exceeds the limit of "
			f"{settings.oracle_max_variables}",
			ResourceGuardError,
		)


def model_from_layers(signature, layers):
	return RankedWorldModel(
		signature,
		{World.from_index(signature, index): rank for rank, layer in enumerate(layers) for index in mask_indices(layer)},
	)


def enumerate_ranked_models(signature, max_rank=None, settings=None):
	"""Every ranked model over `signature` using ranks 0..max_rank, each exactly once.

	Models are generated as sequences of disjoint nonempty layers, so the
	ranks in use are always contiguous from 0; the empty model comes first.
	"""
	settings = get_settings(settings)
	check_oracle_signature(signature, settings)
	world_count = signature.world_count
	if max_rank is None:
		max_rank = world_count - 1
	if not 0 <= max_rank <= world_count - 1:
		throw(f"max_rank must lie in 0..{world_count - 1}, got {max_rank}")
	total = ranked_model_count(world_count, max_rank)
	if total > settings.ranked_model_cap:
		throw(f"{total} ranked models exceed the cap of {settings.ranked_model_cap}", ResourceGuardError)

	def layerings(remaining, layers_left):
		yield ()
		if not layers_left:
			return
		for layer in submasks(remaining):
			for rest in layerings(remaining & ~layer, layers_left - 1):
				yield (layer, *rest)

	for layers in layerings((1 << world_count) - 1, max_rank + 1):
		yield model_from_layers(signature, layers)


def build_closure_model(kb, settings=None, signature=None, partition=None):
	"""The ranked model of the rational closure of `kb`.

	A world's rank is the least level C_i whose material counterpart it
	satisfies; worlds satisfying no level stay outside the domain. `signature`
	adds variables beyond the KB's own.
	"""
	settings = get_settings(settings)
	working = kb.signature if signature is None else kb.signature.extend(signature.variables)
	if working.world_count > settings.model_cap:
		throw(
			f"Building the closure model needs 2^{len(working)} worlds, over the cap of {settings.model_cap}",
			ResourceGuardError,
		)
	ranks = rank_partition(kb, Solver(settings)) if partition is None else partition
	rank_of = {}
	placed = 0
	for level, materials in enumerate(ranks.materials):
		mask = conjunction_mask(materials, working)
		for index in mask_indices(mask & ~placed):
			rank_of[World.from_index(working, index)] = level
		placed |= mask
	get_log().debug("Closure model: %d of %d worlds ranked", len(rank_of), working.world_count)
	return RankedWorldModel(working, rank_of)
