class DefeasibleError(Exception):
	"""Base class for every error raised by the reasoner."""

	exit_code = 2


class ValidationError(DefeasibleError):
	pass


class FormulaSyntaxError(ValidationError):
	"""Raised when formula, assertion or KB text does not follow the grammar.

	`offset` is a byte offset into the UTF-8 encoded input line and `expected`
	the set of token descriptions the parser would have accepted there.
	"""

	def __init__(self, message, offset=0, expected=frozenset(), line=None):
		self.offset = offset
		self.expected = frozenset(expected)
		self.line = line
		super().__init__(message)

	def __str__(self):
		where = f"line {self.line}, byte {self.offset}" if self.line else f"byte {self.offset}"
		expected = ", ".join(sorted(self.expected)) or "nothing"
		return f"{self.args[0]} ({where}; expected {expected})"


class UnknownVariableError(ValidationError):
	pass


class ResourceGuardError(DefeasibleError):
	pass


class ZeroProbabilityError(ValidationError):
	pass


class EmptyModelError(ValidationError):
	pass


class WitnessIndexError(ValidationError):
	pass


def throw(message, exc=ValidationError):
	"""Raise `exc` with `message`."""
	raise exc(message)
