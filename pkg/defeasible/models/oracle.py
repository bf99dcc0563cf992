"""Preferential entailment decided by quantifying over ranked models.

A KB preferentially entails an assertion iff every ranked model of the KB
satisfies it, so the oracle searches for a ranked countermodel directly,
independently of the rank machinery.

The search builds models layer by layer from rank 0. An assertion is
settled by the first layer holding one of its antecedent-worlds, so:

- a layer is admissible when none of the assertions it settles is violated;
- a branch ends at the first layer holding a query antecedent-world, since
  cutting a ranked model above that layer keeps every assertion of the KB
  satisfied and leaves the verdict on the query unchanged;
- worlds that settle nothing and are not antecedent-worlds of the query never
  affect satisfaction, and are left out;
- which assertions are settled depends only on the set of worlds already
  placed, so a placed set whose search failed is not searched again.
"""

from defeasible.config import get_settings
from defeasible.formula import And, Not
from defeasible.models.ranked_model import (
	check_oracle_signature,
	enumerate_ranked_models,
	model_from_layers,
	satisfies,
	submasks,
)
from defeasible.sat.truth_table import truth_mask


def find_countermodel(kb, assertion, max_rank=None, settings=None):
	"""A ranked model of `kb` that does not satisfy `assertion`, or None."""
	settings = get_settings(settings)
	signature = kb.signature.extend_with(assertion.antecedent, assertion.consequent)
	check_oracle_signature(signature, settings)
	world_count = signature.world_count
	layer_limit = None if max_rank is None else max_rank + 1

	antecedents = [truth_mask(a.antecedent, signature) for a in kb]
	violations = [truth_mask(And(a.antecedent, Not(a.consequent)), signature) for a in kb]
	query = truth_mask(assertion.antecedent, signature)
	refutations = truth_mask(And(assertion.antecedent, Not(assertion.consequent)), signature)
	everything = (1 << world_count) - 1
	failed = set()

	def search(placed, depth):
		# without a rank limit the outcome depends on the placed worlds alone
		key = placed if layer_limit is None else (placed, depth)
		if key in failed or depth == layer_limit:
			return None
		unsettled = [i for i, mask in enumerate(antecedents) if not mask & placed]
		relevant = query
		blocked = 0
		for i in unsettled:
			relevant |= antecedents[i]
			blocked |= violations[i]
		pool = relevant & ~blocked & everything & ~placed
		for layer in submasks(pool):
			if layer & query:
				if layer & refutations:
					return [layer]
				continue
			rest = search(placed | layer, depth + 1)
			if rest is not None:
				return [layer, *rest]
		failed.add(key)
		return None

	layers = search(0, 0)
	return None if layers is None else model_from_layers(signature, layers)


def oracle_pref_entails(kb, assertion, max_rank=None, settings=None, exhaustive=False):
	"""True iff every ranked model of `kb` (ranks 0..max_rank) satisfies `assertion`.

	With `exhaustive=True` every model from enumerate_ranked_models is checked
	with `satisfies`, short-circuiting on the first countermodel.
	"""
	if not exhaustive:
		return find_countermodel(kb, assertion, max_rank, settings) is None
	signature = kb.signature.extend_with(assertion.antecedent, assertion.consequent)
	for model in enumerate_ranked_models(signature, max_rank, settings):
		if all(satisfies(model, a) for a in kb) and not satisfies(model, assertion):
			return False
	return True
