from defeasible.formula.formula import (
	FALSE,
	TRUE,
	And,
	Const,
	Formula,
	Iff,
	Implies,
	Not,
	Or,
	Signature,
	Var,
	World,
	conjunction,
	disjunction,
	evaluate,
	format_formula,
	free_vars,
	variables_in_order,
)
from defeasible.formula.parser import parse_formula
