app_name = "defeasible"
app_title = "Defeasible"
app_publisher = "Defeasible Developers"
app_description = "Rational closure and preferential entailment for conditional knowledge bases"
app_license = "mit"


# Resource guards
# ------------------

# Signatures with at most this many variables are decided by truth table,
# larger ones by DPLL over Tseitin clauses.
enumeration_threshold = 16

# Maximum number of worlds a single enumeration may touch.
model_cap = 2**24

# Largest signature the ranked-model oracle accepts.
oracle_max_variables = 3

# Maximum number of ranked models the exhaustive enumerator may emit.
ranked_model_cap = 2_000_000


# Command line
# ------------------

commands = ["check", "pref", "rank", "partition", "model", "witness", "eps", "table"]

# Commands that take no assertion or formula payload.
payload_free_commands = ["partition", "model"]
