import dataclasses
from dataclasses import dataclass

from defeasible import hooks
from defeasible.exceptions import throw

# 2**24 worlds is the largest truth table the engine is willing to build.
MAX_TRUTH_TABLE_VARIABLES = 24


@dataclass(frozen=True)
class Settings:
	"""Tunable guards shared by the SAT engine, the oracles and the CLI."""

	enumeration_threshold: int = hooks.enumeration_threshold
	model_cap: int = hooks.model_cap
	oracle_max_variables: int = hooks.oracle_max_variables
	ranked_model_cap: int = hooks.ranked_model_cap

	def __post_init__(self):
		for field in dataclasses.fields(self):
			value = getattr(self, field.name)
			if isinstance(value, bool) or not isinstance(value, int) or value < 0:
				throw(f"Setting {field.name} must be a non-negative integer, got {value!r}")
		if self.enumeration_threshold > MAX_TRUTH_TABLE_VARIABLES:
			throw(
				f"enumeration_threshold may not exceed {MAX_TRUTH_TABLE_VARIABLES}, "
				f"got {self.enumeration_threshold}"
			)

	def replace(self, **changes):
		return dataclasses.replace(self, **changes)


DEFAULT_SETTINGS = Settings()


def get_settings(settings=None):
	return settings if settings is not None else DEFAULT_SETTINGS
