"""Published JSON schemas for every serialized report."""

from __future__ import annotations

__all__ = [
    "INVARIANT_RECORD_SCHEMA",
    "PROPERTY_REPORT_SCHEMA",
    "ANALYZE_REPORT_SCHEMA",
    "JSONL_LINE_SCHEMA",
    "COUNTEREXAMPLE_SCHEMA",
]

_NULLABLE_INT = {"type": ["integer", "null"]}
_NULLABLE_BOOL = {"type": ["boolean", "null"]}

INVARIANT_RECORD_SCHEMA = {
    "type": "object",
    "required": ["grade", "cd", "mu", "a_id", "pd", "depth", "dim", "ara_lower", "ara_upper", "provenance"],
    "properties": {
        "grade": _NULLABLE_INT,
        "cd": _NULLABLE_INT,
        "mu": {"type": "integer", "minimum": 0},
        "a_id": _NULLABLE_INT,
        "pd": _NULLABLE_INT,
        "depth": _NULLABLE_INT,
        "dim": _NULLABLE_INT,
        "ara_lower": _NULLABLE_INT,
        "ara_upper": _NULLABLE_INT,
        "provenance": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "additionalProperties": False,
}

_WITNESSES_SCHEMA = {
    "type": "object",
    "required": ["sop", "regular_sequence"],
    "properties": {
        "sop": {
            "type": ["object", "null"],
            "properties": {
                "status": {"type": "string"},
                "sequence": {"type": "array", "items": {"type": "string"}},
                "degree_bound": {"type": "integer"},
            },
            "required": ["status", "sequence", "degree_bound"],
            "additionalProperties": False,
        },
        "regular_sequence": {"type": ["array", "null"], "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

PROPERTY_REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "rel_cm",
        "rel_max_cm",
        "rel_gorenstein",
        "rel_regular_ring",
        "rel_regular_module",
        "chain_consistent",
        "witnesses",
        "invariants",
        "char",
        "box",
    ],
    "properties": {
        "rel_cm": _NULLABLE_BOOL,
        "rel_max_cm": _NULLABLE_BOOL,
        "rel_gorenstein": _NULLABLE_BOOL,
        "rel_regular_ring": {"type": "boolean"},
        "rel_regular_module": _NULLABLE_BOOL,
        "chain_consistent": {"type": "boolean"},
        "witnesses": _WITNESSES_SCHEMA,
        "invariants": INVARIANT_RECORD_SCHEMA,
        "char": {"type": "integer"},
        "box": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "additionalProperties": False,
}

_SLICE_DUMP_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["i", "b", "dim"],
        "properties": {
            "i": {"type": "integer", "minimum": 0},
            "b": {"type": "array", "items": {"type": "integer"}},
            "dim": {"type": "integer", "minimum": 1},
        },
        "additionalProperties": False,
    },
}

ANALYZE_REPORT_SCHEMA = {
    "type": "object",
    "required": ["ring", "a", "i", "report"],
    "properties": {
        "ring": {
            "type": "object",
            "required": ["names", "n", "char"],
            "properties": {
                "names": {"type": "array", "items": {"type": "string"}},
                "n": {"type": "integer", "minimum": 1},
                "char": {"type": "integer"},
            },
            "additionalProperties": False,
        },
        "a": {"type": "string"},
        "i": {"type": "string"},
        "report": PROPERTY_REPORT_SCHEMA,
        "ext_slices": _SLICE_DUMP_SCHEMA,
        "lc_slices": _SLICE_DUMP_SCHEMA,
    },
    "additionalProperties": False,
}

_EXPONENTS = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}

JSONL_LINE_SCHEMA = {
    "type": "object",
    "required": ["seed", "index", "ring", "a", "i", "invariants", "report", "suites"],
    "properties": {
        "seed": {"type": "integer"},
        "index": {"type": "integer", "minimum": 0},
        "ring": {
            "type": "object",
            "required": ["n", "char"],
            "properties": {"n": {"type": "integer"}, "char": {"type": "integer"}},
            "additionalProperties": False,
        },
        "a": _EXPONENTS,
        "i": _EXPONENTS,
        "invariants": {"oneOf": [INVARIANT_RECORD_SCHEMA, {"type": "null"}]},
        "report": {"oneOf": [PROPERTY_REPORT_SCHEMA, {"type": "null"}]},
        "suites": {"type": "object", "additionalProperties": {"enum": ["pass", "violation"]}},
        "error": {"type": "string"},
    },
    "additionalProperties": False,
}

# a counterexample line is an instance line plus the suite verdict fields
COUNTEREXAMPLE_SCHEMA = {
    "type": "object",
    "required": ["seed", "suite", "expected", "actual"],
    "properties": {
        **JSONL_LINE_SCHEMA["properties"],
        "suite": {"type": "string"},
        "expected": {},
        "actual": {},
        "note": {"type": "string"},
    },
    "additionalProperties": False,
}
