"""Epsilon-semantics: ranked models read as families of probability distributions.

Rank n receives total weight proportional to eps**n, shared equally among the
worlds at that rank. All arithmetic is exact, with Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from defeasible.exceptions import EmptyModelError, ValidationError, ZeroProbabilityError, throw
from defeasible.formula import And, evaluate
from defeasible.models.ranked_model import satisfies


def as_epsilon(value):
	"""Coerce `value` (Fraction, int or "p/q" text) to a Fraction strictly inside (0, 1)."""
	try:
		epsilon = Fraction(value)
	except (TypeError, ValueError, ZeroDivisionError) as error:
		raise ValidationError(f"Not a rational number: {value!r}") from error
	if not 0 < epsilon < 1:
		throw(f"epsilon must lie strictly between 0 and 1, got {epsilon}")
	return epsilon


@dataclass(frozen=True)
class EpsilonDistribution:
	model: object
	epsilon: Fraction
	weight_of: object

	def probability(self, formula):
		return sum((weight for world, weight in self.weight_of.items() if evaluate(world, formula)), Fraction(0))

	def conditional(self, consequent, antecedent):
		return conditional_probability(self, consequent, antecedent)


def epsilon_distribution(model, epsilon):
	"""The exact distribution P_eps of `model`."""
	epsilon = as_epsilon(epsilon)
	if not len(model):
		throw("The empty ranked model has no epsilon distribution", EmptyModelError)
	layers = model.layers()
	normaliser = sum(epsilon**rank for rank in range(len(layers)))
	weights = {}
	for rank, layer in enumerate(layers):
		share = epsilon**rank / (normaliser * len(layer))
		for world in layer:
			weights[world] = share
	return EpsilonDistribution(model, epsilon, MappingProxyType(weights))


def conditional_probability(distribution, consequent, antecedent):
	"""P(consequent | antecedent) as a Fraction."""
	denominator = distribution.probability(antecedent)
	if denominator == 0:
		throw(f"P({antecedent}) is zero under this distribution", ZeroProbabilityError)
	return distribution.probability(And(antecedent, consequent)) / denominator


@dataclass(frozen=True)
class ConditionalBounds:
	"""Exact bounds on P(consequent | antecedent) at a given epsilon.

	With r the lowest rank holding an antecedent-world, m the number of worlds
	at rank r and a the antecedent-worlds among them, and t = eps / (1 - eps):

	- if the model satisfies the assertion, P >= 1 - (m / a) * t
	- otherwise, P <= 1 - 1 / (a + m * t)

	Both tend to the limits 1 and at most 1 - 1/a as eps goes to 0.
	"""

	rank: int
	layer_size: int
	antecedent_worlds: int
	epsilon: Fraction
	satisfied: bool

	@property
	def ratio(self):
		return self.epsilon / (1 - self.epsilon)

	@property
	def lower(self):
		if not self.satisfied:
			return Fraction(0)
		return max(Fraction(0), 1 - Fraction(self.layer_size, self.antecedent_worlds) * self.ratio)

	@property
	def upper(self):
		if self.satisfied:
			return Fraction(1)
		return 1 - 1 / (self.antecedent_worlds + self.layer_size * self.ratio)

	def contains(self, probability):
		return self.lower <= probability <= self.upper


def conditional_bounds(model, assertion, epsilon):
	"""Bounds on P_eps(consequent | antecedent) following from where `model` ranks the antecedent."""
	epsilon = as_epsilon(epsilon)
	rank = model.minimal_rank(assertion.antecedent)
	if rank is None:
		throw(f"No world of the model satisfies {assertion.antecedent}", ZeroProbabilityError)
	layer = model.layers()[rank]
	antecedent_worlds = sum(1 for world in layer if evaluate(world, assertion.antecedent))
	return ConditionalBounds(rank, len(layer), antecedent_worlds, epsilon, satisfies(model, assertion))
