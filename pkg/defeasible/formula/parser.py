import re

import pyparsing as pp

from defeasible.exceptions import FormulaSyntaxError
from defeasible.formula.formula import FALSE, TRUE, And, Iff, Implies, Not, Or, Var


def _fold_left(node):
	def action(tokens):
		result = tokens[0]
		for operand in tokens[1:]:
			result = node(result, operand)
		return result

	return action


def _fold_implication(tokens):
	# `implication` recurses on its right operand, so at most two tokens arrive here
	if len(tokens) == 1:
		return tokens[0]
	return Implies(tokens[0], tokens[1])


def make_grammar():
	"""Build the formula and assertion grammars.

	Precedence from tightest to loosest is `!`, `&`, `|`, `->`, `<->`; `->`
	associates to the right, the others to the left. `#` starts a comment.
	"""
	formula = pp.Forward().set_name("formula")

	keyword = pp.Keyword("true") | pp.Keyword("false")
	identifier = (~keyword + pp.Word(pp.alphas + "_", pp.alphanums + "_")).set_name("identifier")
	identifier.set_parse_action(lambda tokens: Var(tokens[0]))
	true_ = pp.Keyword("true").set_parse_action(lambda tokens: TRUE)
	false_ = pp.Keyword("false").set_parse_action(lambda tokens: FALSE)

	lparen = pp.Suppress("(").set_name("'('")
	rparen = pp.Suppress(")").set_name("')'")
	bang = pp.Suppress("!").set_name("'!'")
	amp = pp.Suppress("&").set_name("'&'")
	# a bare `|` is disjunction, `|~` separates the halves of an assertion
	bar = pp.Suppress(pp.Regex(r"\|(?!~)")).set_name("'|'")
	arrow = pp.Suppress("->").set_name("'->'")
	double_arrow = pp.Suppress("<->").set_name("'<->'")
	turnstile = pp.Suppress("|~").set_name("'|~'")

	atom = (identifier | true_ | false_ | (lparen - formula - rparen)).set_name("operand")

	negation = pp.Forward().set_name("operand")
	negation <<= (bang - negation).set_parse_action(lambda tokens: Not(tokens[0])) | atom

	conjunction = negation + pp.ZeroOrMore(amp - negation)
	conjunction.set_parse_action(_fold_left(And))

	disjunction = conjunction + pp.ZeroOrMore(bar - conjunction)
	disjunction.set_parse_action(_fold_left(Or))

	implication = pp.Forward()
	implication <<= (disjunction + pp.Optional(arrow - implication)).set_parse_action(_fold_implication)

	equivalence = implication + pp.ZeroOrMore(double_arrow - implication)
	equivalence.set_parse_action(_fold_left(Iff))

	formula <<= equivalence

	assertion = formula + turnstile - formula
	assertion.set_parse_action(lambda tokens: [(tokens[0], tokens[1])])

	comment = pp.python_style_comment
	formula.ignore(comment)
	assertion.ignore(comment)
	return formula, assertion


FORMULA, ASSERTION = (grammar.parse_with_tabs() for grammar in make_grammar())

OPERANDS = frozenset({"identifier", "'true'", "'false'", "'('", "'!'"})
OPERATORS = frozenset({"'&'", "'|'", "'->'", "'<->'"})
END_OF_INPUT = "end of input"

TOKEN = re.compile(r"#[^\n]*|<->|->|\|~|[&|!()]|\w+|\S")
LAYOUT = re.compile(r"(?:\s|#[^\n]*)*")


def _expected(prefix, assertion):
	"""Tokens the grammar accepts after `prefix`, the text read before the error."""
	depth = 0
	after_operand = turnstile = False
	for token in TOKEN.findall(prefix):
		if token.startswith("#"):
			continue
		if token == "(":
			depth += 1
		elif token == ")":
			depth -= 1
		elif token == "|~":
			turnstile = True
		after_operand = token == ")" or token[0].isalnum() or token[0] == "_"
	if not after_operand:
		return OPERANDS
	if depth > 0:
		return OPERATORS | {"')'"}
	if assertion and not turnstile:
		return OPERATORS | {"'|~'"}
	return OPERATORS | {END_OF_INPUT}


def syntax_error(text, exc, line=None, assertion=False):
	"""Convert a pyparsing exception on `text` into a FormulaSyntaxError.

	The position is moved past layout to the first offending token.
	"""
	loc = LAYOUT.match(text, min(exc.loc, len(text))).end()
	offset = len(text[:loc].encode("utf-8"))
	found = text[loc : loc + 12] or END_OF_INPUT
	return FormulaSyntaxError(f"Syntax error near {found!r}", offset, _expected(text[:loc], assertion), line)


def parse_formula(text):
	"""Parse `text` into a Formula.

	>>> parse_formula("penguin & !fly")
	And(left=Var('penguin'), right=Not(operand=Var('fly')))
	"""
	try:
		return FORMULA.parse_string(text, parse_all=True)[0]
	except pp.ParseBaseException as exc:
		raise syntax_error(text, exc) from None


def parse_assertion_pair(text, line=None):
	"""Parse `<formula> |~ <formula>` into an (antecedent, consequent) pair."""
	try:
		return ASSERTION.parse_string(text, parse_all=True)[0]
	except pp.ParseBaseException as exc:
		raise syntax_error(text, exc, line, assertion=True) from None
