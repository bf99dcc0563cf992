import random
import unittest

from hypothesis import given, settings

from defeasible.closure import in_rational_closure, pref_entails
from defeasible.config import Settings
from defeasible.exceptions import ResourceGuardError, ValidationError
from defeasible.formula import Signature, World
from defeasible.kb import KnowledgeBase
from defeasible.models import (
	RankedWorldModel,
	build_closure_model,
	enumerate_ranked_models,
	find_countermodel,
	format_model,
	oracle_pref_entails,
	ranked_model_count,
	satisfies,
)
from defeasible.ranking import partition, rank
from defeasible.tests.utils import (
	assertion,
	assertions,
	knowledge_bases,
	penguin_kb,
	random_assertion,
	random_kbs,
)


def world(signature, **values):
	return World.from_mapping(signature, values)


class TestRankedWorldModel(unittest.TestCase):
	def setUp(self):
		self.signature = Signature(("p", "q"))

	def test_ranks_must_be_contiguous(self):
		"""Rank 1 cannot be used without rank 0"""
		with self.assertRaises(ValidationError):
			RankedWorldModel(self.signature, {world(self.signature, p=True, q=True): 1})

	def test_worlds_must_match_signature(self):
		"""Worlds from another signature are rejected"""
		other = Signature(("p",))
		with self.assertRaises(ValidationError):
			RankedWorldModel(self.signature, {world(other, p=True): 0})

	def test_iteration_by_rank(self):
		"""rank_of iterates by rank, then enumeration order"""
		model = RankedWorldModel(
			self.signature,
			{
				world(self.signature, p=True, q=True): 0,
				world(self.signature, p=False, q=False): 1,
				world(self.signature, p=False, q=True): 0,
			},
		)
		self.assertEqual([w.index for w in model.rank_of], [1, 3, 0])
		self.assertEqual(model.max_rank, 1)
		self.assertEqual([len(layer) for layer in model.layers()], [2, 1])

	def test_satisfies(self):
		"""Only the minimal antecedent-worlds count"""
		single = RankedWorldModel(self.signature, {world(self.signature, p=True, q=True): 0})
		self.assertTrue(satisfies(single, assertion("p |~ q")))
		empty = RankedWorldModel(self.signature, {})
		self.assertTrue(satisfies(empty, assertion("true |~ false")))
		self.assertEqual(empty.max_rank, -1)
		layered = RankedWorldModel(
			self.signature,
			{world(self.signature, p=True, q=True): 0, world(self.signature, p=True, q=False): 1},
		)
		self.assertTrue(satisfies(layered, assertion("p |~ q")))
		self.assertFalse(satisfies(layered, assertion("p & !q |~ q")))
		self.assertFalse(satisfies(layered, assertion("true |~ !q")))


class TestEnumeration(unittest.TestCase):
	def test_one_variable(self):
		"""Two worlds and ranks 0..1 give six ranked models"""
		models = list(enumerate_ranked_models(Signature(("p",)), max_rank=1))
		self.assertEqual(len(models), 6)
		self.assertEqual(len(set(models)), 6)
		self.assertEqual(ranked_model_count(2, 1), 6)

	def test_no_variables(self):
		"""The single world is absent or at rank 0"""
		models = list(enumerate_ranked_models(Signature()))
		self.assertEqual(len(models), 2)
		self.assertEqual(len(models[0]), 0)

	def test_two_variables(self):
		"""Four worlds give 150 distinct contiguous models"""
		models = list(enumerate_ranked_models(Signature(("p", "q"))))
		self.assertEqual(len(models), 150)
		self.assertEqual(len(set(models)), 150)
		for model in models:
			self.assertEqual(set(model.rank_of.values()), set(range(model.max_rank + 1)))

	def test_three_variable_count(self):
		"""Eight worlds give the ordered-partition count of all their subsets"""
		self.assertEqual(ranked_model_count(8, 7), 1091670)

	def test_guards(self):
		"""Too many variables, too many models and bad ranks are refused"""
		with self.assertRaises(ResourceGuardError):
			next(enumerate_ranked_models(Signature(("a", "b", "c", "d"))))
		with self.assertRaises(ResourceGuardError):
			next(enumerate_ranked_models(Signature(("a", "b")), settings=Settings(ranked_model_cap=100)))
		with self.assertRaises(ValidationError):
			next(enumerate_ranked_models(Signature(("a",)), max_rank=2))


class TestClosureModel(unittest.TestCase):
	def setUp(self):
		self.penguin = penguin_kb()

	def test_penguin_ranks(self):
		"""Flying non-penguins at 0, non-flying birds at 1, other penguins at 2"""
		model = build_closure_model(self.penguin)
		by_rank = {}
		for w, r in model.rank_of.items():
			by_rank.setdefault(r, set()).add((w["penguin"], w["bird"], w["fly"]))
		self.assertEqual(
			by_rank,
			{
				0: {(False, True, True), (False, False, True), (False, False, False)},
				1: {(True, True, False), (False, True, False)},
				2: {(True, True, True), (True, False, True), (True, False, False)},
			},
		)

	def test_format(self):
		"""One line per world, ranks ascending, enumeration order within a rank"""
		self.assertEqual(
			format_model(build_closure_model(self.penguin)),
			"\n".join(
				[
					"rank 0: penguin=0 bird=0 fly=0",
					"rank 0: penguin=0 bird=0 fly=1",
					"rank 0: penguin=0 bird=1 fly=1",
					"rank 1: penguin=0 bird=1 fly=0",
					"rank 1: penguin=1 bird=1 fly=0",
					"rank 2: penguin=1 bird=0 fly=0",
					"rank 2: penguin=1 bird=0 fly=1",
					"rank 2: penguin=1 bird=1 fly=1",
				]
			),
		)

	def test_empty_kb(self):
		"""Every world sits at rank 0"""
		model = build_closure_model(KnowledgeBase(), signature=Signature(("a", "b")))
		self.assertEqual(len(model), 4)
		self.assertEqual(model.max_rank, 0)

	def test_inconsistent_kb(self):
		"""true |~ false leaves the domain empty"""
		model = build_closure_model(KnowledgeBase((assertion("true |~ false"),)))
		self.assertEqual(len(model), 0)

	def test_satisfies_endorsements(self):
		"""bird |~ !penguin holds in the penguin closure model"""
		self.assertTrue(satisfies(build_closure_model(self.penguin), assertion("bird |~ !penguin")))

	def test_world_cap(self):
		"""Signatures over the world cap are refused"""
		with self.assertRaises(ResourceGuardError):
			build_closure_model(self.penguin, Settings(model_cap=4))

	@settings(max_examples=60, deadline=None)
	@given(knowledge_bases(), assertions())
	def test_faithful_to_closure(self, kb, query):
		"""The closure model satisfies exactly the rational closure"""
		signature = kb.signature.extend_with(query.antecedent, query.consequent)
		model = build_closure_model(kb, signature=signature)
		self.assertEqual(satisfies(model, query), in_rational_closure(kb, query).answer)

	@settings(max_examples=60, deadline=None)
	@given(knowledge_bases(), assertions())
	def test_world_rank_realises_formula_rank(self, kb, query):
		"""The lowest world satisfying a formula sits at the formula's rank"""
		formula = query.antecedent
		model = build_closure_model(kb, signature=kb.signature.extend_with(formula))
		expected = rank(partition(kb), formula)
		self.assertEqual(model.minimal_rank(formula), expected.value)


class TestOracle(unittest.TestCase):
	def test_examples(self):
		"""Worked examples of ranked entailment"""
		self.assertFalse(oracle_pref_entails(KnowledgeBase((assertion("p |~ q"),)), assertion("p & r |~ q")))
		self.assertTrue(oracle_pref_entails(penguin_kb(), assertion("penguin |~ bird")))
		self.assertFalse(oracle_pref_entails(KnowledgeBase(), assertion("true |~ p")))
		self.assertTrue(oracle_pref_entails(penguin_kb(), assertion("penguin & bird |~ !fly")))

	def test_countermodel_is_genuine(self):
		"""A countermodel satisfies the KB and refutes the query"""
		kb = KnowledgeBase((assertion("p |~ q"),))
		query = assertion("p & r |~ q")
		model = find_countermodel(kb, query)
		self.assertTrue(all(satisfies(model, a) for a in kb))
		self.assertFalse(satisfies(model, query))

	def test_guard(self):
		"""Four variables exceed the default oracle limit"""
		with self.assertRaises(ResourceGuardError):
			oracle_pref_entails(KnowledgeBase(), assertion("a & b |~ c & d"))
		self.assertFalse(
			oracle_pref_entails(KnowledgeBase(), assertion("a & b |~ c & d"), settings=Settings(oracle_max_variables=4))
		)

	def test_exhaustive_agrees(self):
		"""The layered search and full enumeration agree on two variables"""
		rng = random.Random(5)
		for kb in random_kbs(3, 25, variables=("p", "q"), max_assertions=3):
			for _ in range(6):
				query = random_assertion(rng, ("p", "q"))
				max_rank = rng.choice([None, 0, 1, 3])
				with self.subTest(kb=kb.format(), query=str(query), max_rank=max_rank):
					self.assertEqual(
						oracle_pref_entails(kb, query, max_rank),
						oracle_pref_entails(kb, query, max_rank, exhaustive=True),
					)

	@settings(max_examples=80, deadline=None)
	@given(knowledge_bases(), assertions())
	def test_agrees_with_dix_reduction(self, kb, query):
		"""Ranked entailment equals preferential entailment"""
		self.assertEqual(oracle_pref_entails(kb, query), pref_entails(kb, query))
