from defeasible.closure.closure import (
	QueryResult,
	Reasoner,
	decide_by_exceptionality,
	in_rational_closure,
	pref_entails,
	preferential_query,
)
from defeasible.closure.witness import Witness, WitnessStep, find_witness, verify_witness
