"""JSON schema of the report envelope printed by ``mtcalc <command> --json``."""

ENVELOPE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "mtcalc report envelope",
    "type": "object",
    "required": ["citations", "command", "parameters", "result", "warnings"],
    "additionalProperties": False,
    "properties": {
        "command": {
            "type": "string",
            "enum": ["ring", "restrict", "detect", "pin", "thom", "qhomology", "split",
                     "nu", "xi", "reproduce-table", "selftest"],
        },
        "parameters": {"type": "object"},
        "result": {},
        "citations": {"type": "array", "items": {"type": "string"}},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["coefficients", "min_degree", "trunc_degree"],
    "properties": {
        "coefficients": {"type": "array", "items": {"type": "integer"}},
        "min_degree": {"type": "integer"},
        "trunc_degree": {"type": "integer"},
    },
}
