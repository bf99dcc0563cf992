from defeasible.kb.knowledge_base import (
	ConditionalAssertion,
	KnowledgeBase,
	exceptional_subset,
	is_exceptional,
	material_counterpart,
	material_kb,
	parse_assertion,
)
from defeasible.kb.loader import load_kb, parse_kb, read_text
