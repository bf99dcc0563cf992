import re
from pathlib import Path

from defeasible.exceptions import FormulaSyntaxError, ValidationError
from defeasible.formula import Signature
from defeasible.kb.knowledge_base import KnowledgeBase, parse_assertion

HEADER = re.compile(r"\s*vars\s*:(?P<names>[^#]*)(#.*)?\Z")


def parse_kb(text):
	"""Read a knowledge base from the KB file format.

	One `<formula> |~ <formula>` per line; blank lines and `#` comments are
	skipped. An optional leading `vars: a b c` line pins the signature order;
	variables it does not list are appended in order of appearance.
	"""
	signature = Signature()
	assertions = []
	for number, line in enumerate(text.splitlines(), start=1):
		stripped = line.strip()
		if not stripped or stripped.startswith("#"):
			continue
		header = HEADER.match(line)
		if header:
			if assertions:
				raise FormulaSyntaxError("The vars: header must precede every assertion", 0, {"assertion"}, number)
			try:
				signature = signature.extend(header.group("names").split())
			except ValidationError as exc:
				raise FormulaSyntaxError(str(exc), 0, {"identifier"}, number) from None
			continue
		assertions.append(parse_assertion(line, number))
	return KnowledgeBase(tuple(assertions), signature)


def read_text(path):
	"""Read a UTF-8 text file; undecodable bytes are reported as a syntax error on their line."""
	data = Path(path).read_bytes()
	try:
		return data.decode("utf-8")
	except UnicodeDecodeError as exc:
		line_start = data.rfind(b"\n", 0, exc.start) + 1
		raise FormulaSyntaxError(
			f"Invalid UTF-8 byte {data[exc.start]:#04x}",
			exc.start - line_start,
			{"UTF-8 text"},
			data.count(b"\n", 0, exc.start) + 1,
		) from None


def load_kb(path):
	return parse_kb(read_text(path))
