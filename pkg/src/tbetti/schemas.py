"""JSON schemas for the machine-readable CLI outputs.

These are part of the public interface: fields may be added, but existing
fields keep their names and types.
"""

from __future__ import annotations

_int_list = {"type": "array", "items": {"type": "integer", "minimum": 0}}

BETTI = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "betti table",
    "type": "object",
    "required": ["method", "total", "graded"],
    "properties": {
        "method": {"enum": ["formula", "ek", "oracle", "resolution"]},
        "field": {"type": "string"},
        "total": _int_list,
        "graded": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["q", "j", "beta"],
                "properties": {"q": {"type": "integer"}, "j": {"type": "integer"},
                               "beta": {"type": "integer", "minimum": 1}},
            },
        },
        "multigraded": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["q", "alpha", "dim"],
                "properties": {"q": {"type": "integer"}, "alpha": _int_list,
                               "dim": {"type": "integer", "minimum": 1}},
            },
        },
    },
}

COMPARE_ROW = {
    "type": "object",
    "required": ["n", "t", "betti_jt", "betti_transversal", "equal", "proved", "status"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "t": {"type": "integer", "minimum": 1},
        "betti_jt": _int_list,
        "betti_transversal": _int_list,
        "equal": {"type": "boolean"},
        "proved": {"type": "boolean"},
        "status": {"enum": ["proved-equal", "proved-unequal",
                            "conjecture-equal", "conjecture-unequal"]},
    },
}

SCAN = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "comparison scan",
    "type": "object",
    "required": ["n_max", "rows", "summary"],
    "properties": {
        "n_max": {"type": "integer", "minimum": 1},
        "rows": {"type": "array", "items": COMPARE_ROW},
        "summary": {
            "type": "object",
            "required": ["rows", "proved_unequal", "conjecture_unequal"],
            "properties": {k: {"type": "integer", "minimum": 0}
                           for k in ("rows", "proved_unequal", "conjecture_unequal")},
        },
        "figure": {"type": "string"},
    },
}

CERTIFICATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "resolution certificate",
    "type": "object",
    "required": ["blocks", "t", "signs", "field", "ranks", "passed", "checks"],
    "properties": {
        "blocks": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "t": {"type": "integer", "minimum": 1},
        "signs": {"enum": ["corrected", "literal"]},
        "field": {"type": "string"},
        "ranks": _int_list,
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "minItems": 5,
            "items": {
                "type": "object",
                "required": ["name", "passed", "detail"],
                "properties": {
                    "name": {"enum": ["d_squared", "minimality", "ranks",
                                      "strand_exactness", "random_evaluation"]},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}

VERIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "verification report",
    "type": "object",
    "required": ["suites", "passed"],
    "properties": {
        "passed": {"type": "boolean"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "passed", "rows"],
                "properties": {
                    "suite": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "rows": {"type": "array", "items": {"type": "object"}},
                },
            },
        },
    },
}

SCHEMAS = {"betti": BETTI, "scan": SCAN, "compare_row": COMPARE_ROW,
           "certificate": CERTIFICATE, "verify": VERIFY}
