"""JSON Schemas for the CLI's ``--format json`` outputs."""

_ratio = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_decimal = {"type": "string", "pattern": r"^-?\d+\.\d+$"}

MAP_ENTRY = {
    "type": "object",
    "required": ["name", "k", "matrix", "d", "c", "lambda", "valid_descent"],
    "properties": {
        "name": {"type": "string"},
        "k": {"type": "integer", "minimum": 2},
        "matrix": {"type": "array", "items": {"type": "integer"}, "minItems": 4, "maxItems": 4},
        "d": {"type": "integer", "minimum": 1},
        "c": _ratio,
        "lambda": _decimal,
        "valid_descent": {"type": "boolean"},
    },
}

MAP_CATALOG = {"type": "array", "items": MAP_ENTRY}

TRAJECTORY = {
    "type": "object",
    "required": ["map", "k", "steps", "termination"],
    "properties": {
        "map": {"type": "string"},
        "k": {"type": "integer"},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "form"],
                "properties": {k: {"type": "integer"} for k in ("a", "b", "form")},
            },
        },
        "termination": {"enum": ["NonPositiveB", "NonIntegral", "MaxSteps"]},
    },
}

VERIFICATION_REPORT = {
    "type": "object",
    "required": ["kind", "a", "b", "excess", "uncovered", "residual", "identities"],
    "properties": {
        "kind": {"type": "string"},
        "a": {"type": "integer"},
        "b": {"type": "integer"},
        "excess": {"type": "number"},
        "uncovered": {"type": "number"},
        "residual": {"type": "number"},
        "identities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "pass", "lhs", "rhs", "tol"],
                "properties": {
                    "name": {"type": "string"},
                    "pass": {"type": "boolean"},
                    "lhs": {"type": "number"},
                    "rhs": {"type": "number"},
                    "tol": {"type": "number"},
                },
            },
        },
        "svg": {"type": "string"},
    },
}

SURVEY = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["n", "T_n", "is_square", "descent_applicable", "multiplier_c", "lambda"],
        "properties": {
            "n": {"type": "integer"},
            "T_n": {"type": "integer"},
            "is_square": {"type": ["integer", "null"]},
            "descent_applicable": {"type": ["boolean", "null"]},
            "multiplier_c": _ratio,
            "lambda": {"anyOf": [_decimal, {"type": "null"}]},
        },
    },
}

ORACLE = {
    "type": "object",
    "required": ["k", "b_max", "no_solution", "witness"],
    "properties": {
        "k": {"type": "integer"},
        "b_max": {"type": "integer"},
        "no_solution": {"type": "boolean"},
        "witness": {
            "anyOf": [
                {"type": "null"},
                {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            ]
        },
    },
}

PENTAGON_LEMMA = {
    "type": "object",
    "required": ["x", "angles", "ray_check"],
    "properties": {
        "x": {"type": "string"},
        "angles": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "pi_multiple"],
                "properties": {"label": {"type": "string"}, "pi_multiple": _ratio},
            },
        },
        "ray_check": {"type": "boolean"},
    },
}
