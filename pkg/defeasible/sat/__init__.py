from defeasible.sat.solver import (
	FormulaSet,
	Solver,
	entails,
	enumerate_models,
	find_model,
	satisfiable,
)
