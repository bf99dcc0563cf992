"""Bit-parallel truth tables.

A truth table over a signature of n variables is an int whose bit w is set
when the formula holds in the world of enumeration index w. Every connective
is then a single big-integer operation.
"""

from functools import lru_cache

from defeasible.exceptions import throw
from defeasible.formula import And, Const, Iff, Implies, Not, Or, Var


@lru_cache(maxsize=1024)
def variable_mask(n, position):
	"""Worlds (over n variables) in which the variable at `position` is true."""
	half = 1 << (n - 1 - position)
	period = half << 1
	block = ((1 << half) - 1) << half
	repeats = (1 << n) // period
	return block * (((1 << (period * repeats)) - 1) // ((1 << period) - 1))


def full_mask(n):
	return (1 << (1 << n)) - 1


def truth_mask(formula, signature):
	n = len(signature)
	full = full_mask(n)

	def mask(node):
		match node:
			case Var(name):
				return variable_mask(n, signature.index(name))
			case Const(value):
				return full if value else 0
			case Not(operand):
				return full ^ mask(operand)
			case And(left, right):
				return mask(left) & mask(right)
			case Or(left, right):
				return mask(left) | mask(right)
			case Implies(left, right):
				return (full ^ mask(left)) | mask(right)
			case Iff(left, right):
				return full ^ (mask(left) ^ mask(right))
		throw(f"Not a formula: {node!r}")

	return mask(formula)


def conjunction_mask(formulas, signature):
	result = full_mask(len(signature))
	for formula in formulas:
		result &= truth_mask(formula, signature)
		if not result:
			break
	return result


def mask_indices(mask):
	"""Set bit positions of `mask`, ascending."""
	bits = bin(mask)[:1:-1]
	return [index for index, bit in enumerate(bits) if bit == "1"]


def lowest_index(mask):
	return (mask & -mask).bit_length() - 1
