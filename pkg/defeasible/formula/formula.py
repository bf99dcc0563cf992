import re
from dataclasses import dataclass

from defeasible.exceptions import UnknownVariableError, throw

IDENTIFIER = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*\Z")
KEYWORDS = frozenset({"true", "false"})


class Formula:
	"""Base class of the propositional AST.

	Nodes are frozen dataclasses, compared and hashed structurally. The Python
	operators `~`, `&` and `|` build `Not`, `And` and `Or` nodes.
	"""

	__slots__ = ()

	def __invert__(self):
		return Not(self)

	def __and__(self, other):
		return And(self, other)

	def __or__(self, other):
		return Or(self, other)

	def implies(self, other):
		return Implies(self, other)

	def iff(self, other):
		return Iff(self, other)

	def __str__(self):
		return format_formula(self)


@dataclass(frozen=True, repr=False)
class Var(Formula):
	name: str

	def __repr__(self):
		return f"Var({self.name!r})"


@dataclass(frozen=True, repr=False)
class Const(Formula):
	value: bool

	def __repr__(self):
		return "TRUE" if self.value else "FALSE"


@dataclass(frozen=True)
class Not(Formula):
	operand: Formula


@dataclass(frozen=True)
class And(Formula):
	left: Formula
	right: Formula


@dataclass(frozen=True)
class Or(Formula):
	left: Formula
	right: Formula


@dataclass(frozen=True)
class Implies(Formula):
	left: Formula
	right: Formula


@dataclass(frozen=True)
class Iff(Formula):
	left: Formula
	right: Formula


TRUE = Const(True)
FALSE = Const(False)


def conjunction(formulas):
	"""Left-nested conjunction of `formulas`; `true` when empty."""
	result = None
	for formula in formulas:
		result = formula if result is None else And(result, formula)
	return TRUE if result is None else result


def disjunction(formulas):
	"""Left-nested disjunction of `formulas`; `false` when empty."""
	result = None
	for formula in formulas:
		result = formula if result is None else Or(result, formula)
	return FALSE if result is None else result


def variables_in_order(formula):
	"""Variable names of `formula` in order of first (left-to-right) occurrence."""
	seen = {}
	stack = [formula]
	while stack:
		node = stack.pop()
		match node:
			case Var(name):
				seen.setdefault(name, None)
			case Const():
				pass
			case Not(operand):
				stack.append(operand)
			case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
				stack.append(right)
				stack.append(left)
	return tuple(seen)


def free_vars(formula):
	return frozenset(variables_in_order(formula))


@dataclass(frozen=True)
class Signature:
	"""An ordered list of distinct propositional variables.

	The order fixes world enumeration: binary counting with the first variable
	as the most significant bit and `false` counted before `true`.
	"""

	variables: tuple[str, ...] = ()

	def __post_init__(self):
		variables = tuple(self.variables)
		object.__setattr__(self, "variables", variables)
		seen = set()
		for name in variables:
			if not isinstance(name, str) or not IDENTIFIER.match(name) or name in KEYWORDS:
				throw(f"Invalid variable name {name!r}")
			if name in seen:
				throw(f"Duplicate variable {name!r} in signature")
			seen.add(name)

	@classmethod
	def of(cls, *formulas):
		return cls().extend_with(*formulas)

	def __len__(self):
		return len(self.variables)

	def __iter__(self):
		return iter(self.variables)

	def __contains__(self, name):
		return name in self.variables

	def index(self, name):
		try:
			return self.variables.index(name)
		except ValueError:
			raise UnknownVariableError(f"Variable {name!r} is not in the signature {self}")

	def extend(self, names):
		"""Append the names not already present, keeping their order."""
		added = [name for name in dict.fromkeys(names) if name not in self.variables]
		if not added:
			return self
		return Signature(self.variables + tuple(added))

	def extend_with(self, *formulas):
		names = []
		for formula in formulas:
			names.extend(variables_in_order(formula))
		return self.extend(names)

	def covers(self, formula):
		return free_vars(formula) <= set(self.variables)

	@property
	def world_count(self):
		return 1 << len(self.variables)

	def worlds(self):
		for index in range(self.world_count):
			yield World.from_index(self, index)

	def __str__(self):
		return "{" + ", ".join(self.variables) + "}"


@dataclass(frozen=True)
class World:
	"""A total truth assignment over one signature."""

	signature: Signature
	values: tuple[bool, ...]

	def __post_init__(self):
		values = tuple(bool(value) for value in self.values)
		object.__setattr__(self, "values", values)
		if len(values) != len(self.signature):
			throw(f"World has {len(values)} values for a signature of {len(self.signature)} variables")

	@classmethod
	def from_index(cls, signature, index):
		n = len(signature)
		return cls(signature, tuple(bool((index >> (n - 1 - i)) & 1) for i in range(n)))

	@classmethod
	def from_mapping(cls, signature, mapping):
		missing = [name for name in signature if name not in mapping]
		if missing:
			throw(f"World assignment is missing {', '.join(missing)}")
		extra = [name for name in mapping if name not in signature]
		if extra:
			throw(f"World assignment mentions {', '.join(extra)} outside {signature}", UnknownVariableError)
		return cls(signature, tuple(mapping[name] for name in signature))

	@property
	def index(self):
		result = 0
		for value in self.values:
			result = (result << 1) | value
		return result

	def __getitem__(self, name):
		return self.values[self.signature.index(name)]

	def as_dict(self):
		return dict(zip(self.signature.variables, self.values))

	def satisfies(self, formula):
		return evaluate(self, formula)

	def format(self):
		return " ".join(f"{name}={int(value)}" for name, value in zip(self.signature, self.values))

	def __str__(self):
		return self.format()


def evaluate(world, formula):
	"""Classical truth value of `formula` in `world`."""
	match formula:
		case Var(name):
			return world[name]
		case Const(value):
			return value
		case Not(operand):
			return not evaluate(world, operand)
		case And(left, right):
			return evaluate(world, left) and evaluate(world, right)
		case Or(left, right):
			return evaluate(world, left) or evaluate(world, right)
		case Implies(left, right):
			return (not evaluate(world, left)) or evaluate(world, right)
		case Iff(left, right):
			return evaluate(world, left) == evaluate(world, right)
	throw(f"Not a formula: {formula!r}")


# Binding strength, loosest first.
_IFF, _IMPLIES, _OR, _AND, _NOT, _ATOM = range(6)


def _precedence(formula):
	match formula:
		case Iff():
			return _IFF
		case Implies():
			return _IMPLIES
		case Or():
			return _OR
		case And():
			return _AND
		case Not():
			return _NOT
	return _ATOM


def _wrap(formula, parenthesize):
	text = format_formula(formula)
	return f"({text})" if parenthesize else text


def format_formula(formula):
	"""Concrete syntax for `formula` with the fewest parentheses that parse back to it."""
	match formula:
		case Var(name):
			return name
		case Const(value):
			return "true" if value else "false"
		case Not(operand):
			return "!" + _wrap(operand, _precedence(operand) < _NOT)
		case Implies(left, right):
			# right-associative
			return (
				f"{_wrap(left, _precedence(left) <= _IMPLIES)} -> "
				f"{_wrap(right, _precedence(right) < _IMPLIES)}"
			)
	level = _precedence(formula)
	symbol = {_IFF: "<->", _OR: "|", _AND: "&"}.get(level)
	if symbol is None:
		throw(f"Not a formula: {formula!r}")
	return (
		f"{_wrap(formula.left, _precedence(formula.left) < level)} {symbol} "
		f"{_wrap(formula.right, _precedence(formula.right) <= level)}"
	)
