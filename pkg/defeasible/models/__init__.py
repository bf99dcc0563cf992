from defeasible.models.oracle import find_countermodel, oracle_pref_entails
from defeasible.models.probability import (
	ConditionalBounds,
	EpsilonDistribution,
	as_epsilon,
	conditional_bounds,
	conditional_probability,
	epsilon_distribution,
)
from defeasible.models.ranked_model import (
	RankedWorldModel,
	build_closure_model,
	enumerate_ranked_models,
	format_model,
	ranked_model_count,
	satisfies,
)
