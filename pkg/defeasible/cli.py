import argparse
import json
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout

from defeasible import __version__, hooks
from defeasible.closure import Reasoner, verify_witness
from defeasible.config import Settings
from defeasible.exceptions import DefeasibleError, FormulaSyntaxError, throw
from defeasible.formula import parse_formula
from defeasible.kb import load_kb, parse_assertion, read_text
from defeasible.models import build_closure_model, conditional_probability, epsilon_distribution, format_model
from defeasible.models.probability import as_epsilon
from defeasible.ranking import assertion_rank


def get_log():
	return logging.getLogger("defeasible.cli")


def configure_logging(verbosity, stream):
	level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
	handler = logging.StreamHandler(stream)
	handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
	logger = logging.getLogger(hooks.app_name)
	logger.handlers[:] = [handler]
	logger.setLevel(level)


COMMAND_HELP = {
	"check": "is the assertion in the rational closure?",
	"pref": "is the assertion preferentially entailed?",
	"rank": "rank of a formula",
	"partition": "print the rank partition C_0 ... C_k",
	"model": "print the ranked model of the rational closure",
	"witness": "print a witness of preferential non-entailment",
	"eps": "exact conditional probability in the closure model",
	"table": "tabulate check and pref over a file of assertions",
}


def make_parser():
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
	common.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
	guards = common.add_argument_group("resource guards")
	guards.add_argument("--enumeration-threshold", type=int, metavar="N")
	guards.add_argument("--model-cap", type=int, metavar="N")
	guards.add_argument("--oracle-max-variables", type=int, metavar="N")

	parser = argparse.ArgumentParser(prog=hooks.app_name, description=hooks.app_description)
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
	commands = parser.add_subparsers(dest="command", required=True, metavar="command")

	subparsers = {}
	for name in hooks.commands:
		sub = commands.add_parser(name, parents=[common], help=COMMAND_HELP[name])
		sub.add_argument("kb", help="knowledge base file")
		if name not in hooks.payload_free_commands and name != "table":
			sub.add_argument("payload", metavar="FORMULA" if name == "rank" else "ASSERTION")
		subparsers[name] = sub
	subparsers["eps"].add_argument("--epsilon", required=True, metavar="P/Q")
	subparsers["table"].add_argument("queries", help="file with one assertion per line")
	return parser


def settings_from(args):
	changes = {
		name: getattr(args, name)
		for name in ("enumeration_threshold", "model_cap", "oracle_max_variables")
		if getattr(args, name) is not None
	}
	return Settings(**changes)


def yes_no(answer):
	return "yes" if answer else "no"


def read_queries(path):
	queries = []
	for number, line in enumerate(read_text(path).splitlines(), start=1):
		stripped = line.strip()
		if stripped and not stripped.startswith("#"):
			queries.append(parse_assertion(line, number))
	return queries


class Command:
	"""One CLI invocation: loads the KB, dispatches, writes to `out`."""

	def __init__(self, args, out):
		self.args = args
		self.out = out
		self.settings = settings_from(args)
		self.kb = load_kb(args.kb)
		self.reasoner = Reasoner(self.kb, self.settings)
		get_log().info("Loaded %d assertions over %s from %s", len(self.kb), self.kb.signature, args.kb)

	def emit(self, text=None, document=None):
		if self.args.json:
			print(json.dumps(document, sort_keys=True), file=self.out)
		elif text is not None:
			print(text, file=self.out)

	def check(self):
		return self._query(self.reasoner.in_rational_closure)

	def pref(self):
		return self._query(self.reasoner.preferential_query)

	def _query(self, decide):
		assertion = parse_assertion(self.args.payload)
		result = decide(assertion)
		self.emit(yes_no(result.answer), {"assertion": str(assertion), **result.as_dict()})
		return 0 if result.answer else 1

	def rank(self):
		formula = parse_formula(self.args.payload)
		rank = self.reasoner.rank(formula)
		self.emit(f"rank: {rank}", {"formula": str(formula), "rank": rank.value})
		return 0

	def partition(self):
		ranks = self.reasoner.partition()
		blocks = []
		for index, level in enumerate(ranks.levels):
			lines = [f"C_{index}:"] + [f"  {a}" for a in level]
			blocks.append("\n".join(lines))
		self.emit(
			"\n\n".join(blocks),
			{
				"levels": [[str(a) for a in level] for level in ranks.levels],
				"ranks": {str(a): assertion_rank(ranks, a).value for a in self.kb},
			},
		)
		return 0

	def model(self):
		model = build_closure_model(self.kb, self.settings, partition=self.reasoner.partition())
		self.emit(
			format_model(model),
			{
				"signature": list(model.signature.variables),
				"worlds": [{"rank": rank, "world": world.as_dict()} for world, rank in model.rank_of.items()],
			},
		)
		return 0

	def witness(self):
		assertion = parse_assertion(self.args.payload)
		witness = self.reasoner.find_witness(assertion)
		if witness is None:
			self.emit("entailed", {"assertion": str(assertion), "entailed": True, "witness": None})
			return 0
		if not verify_witness(self.kb, assertion, witness):
			throw(f"Witness for {assertion} failed verification", DefeasibleError)
		self.emit(
			f"{witness.format()}\nverified",
			{"assertion": str(assertion), "entailed": False, "witness": witness.as_dict()},
		)
		return 1

	def eps(self):
		assertion = parse_assertion(self.args.payload)
		epsilon = as_epsilon(self.args.epsilon)
		# query variables outside the KB are unconstrained
		model = build_closure_model(
			self.kb,
			self.settings,
			signature=self.kb.signature.extend_with(assertion.antecedent, assertion.consequent),
			partition=self.reasoner.partition(),
		)
		probability = conditional_probability(
			epsilon_distribution(model, epsilon), assertion.consequent, assertion.antecedent
		)
		self.emit(
			str(probability),
			{"assertion": str(assertion), "epsilon": str(epsilon), "probability": str(probability)},
		)
		return 0

	def table(self):
		rows = []
		for assertion in read_queries(self.args.queries):
			rows.append(
				{
					"assertion": str(assertion),
					"rational": self.reasoner.in_rational_closure(assertion).answer,
					"preferential": self.reasoner.pref_entails(assertion),
				}
			)
		if self.args.json:
			self.emit(document=rows)
		else:
			for row in rows:
				print(f"{row['assertion']}\t{yes_no(row['rational'])}\t{yes_no(row['preferential'])}", file=self.out)
		return 0

	def run(self):
		return getattr(self, self.args.command)()


def run(argv, stdout=None, stderr=None):
	"""Execute the command line `argv`; returns the exit code.

	0 and 1 answer yes/no for check, pref and witness; 2 is an error.
	"""
	stdout = stdout or sys.stdout
	stderr = stderr or sys.stderr
	try:
		with redirect_stdout(stdout), redirect_stderr(stderr):
			args = make_parser().parse_args(argv)
	except SystemExit as exc:
		# usage errors exit with 2, --help and --version with 0
		return exc.code if isinstance(exc.code, int) else 0
	configure_logging(args.verbose, stderr)
	try:
		return Command(args, stdout).run()
	except FormulaSyntaxError as exc:
		print(f"{hooks.app_name}: syntax error: {exc}", file=stderr)
	except DefeasibleError as exc:
		print(f"{hooks.app_name}: error: {exc}", file=stderr)
	except OSError as exc:
		print(f"{hooks.app_name}: error: {exc}", file=stderr)
	return DefeasibleError.exit_code


def main():
	sys.exit(run(sys.argv[1:]))
