"""
Measure Document Module
JSON schema, loading and saving of atomic Herglotz measures
{"alpha": <real>, "atoms": [{"t": <real>, "w": <real>}, ...]}
"""
import json
import math
import logging
from pathlib import Path
from typing import Any, Dict, Union

from jsonschema import Draft7Validator

from errors import DomainError, MeasureSchemaError
from hall_config import RENORMALIZE_WARN_TOL
from specfun import OrderAlpha
from starlike import HerglotzMeasure, StarlikeMap

logger = logging.getLogger(__name__)

MEASURE_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Atomic Herglotz measure of a starlike map of order alpha",
    "type": "object",
    "required": ["alpha", "atoms"],
    "properties": {
        "alpha": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
        "atoms": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["t", "w"],
                "properties": {
                    "t": {"type": "number"},
                    "w": {"type": "number", "exclusiveMinimum": 0},
                },
                "additionalProperties": False,
            },
        },
    },
}

_validator = Draft7Validator(MEASURE_SCHEMA)


def _reject_constant(name: str):
    raise MeasureSchemaError(f"non-finite number {name} is not allowed in a measure document")


def load_measure_document(doc: Any) -> StarlikeMap:
    """
    Validate a parsed measure document and build the starlike map

    Weights are renormalized to total mass 1; a warning is logged when the
    raw sum is off by more than RENORMALIZE_WARN_TOL.

    Raises:
        MeasureSchemaError: If the document violates the schema
    """
    errors = sorted(_validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = "/".join(str(p) for p in first.absolute_path) or "<root>"
        raise MeasureSchemaError(f"measure document invalid at {where}: {first.message}")

    atoms = [(float(a["t"]), float(a["w"])) for a in doc["atoms"]]
    raw_sum = math.fsum(w for _, w in atoms)
    if abs(raw_sum - 1.0) > RENORMALIZE_WARN_TOL:
        logger.warning(f"⚠️ Measure weights sum to {raw_sum!r}; renormalizing to 1")

    try:
        measure = HerglotzMeasure.from_atoms(atoms, normalize=True)
        return StarlikeMap(measure, OrderAlpha(doc["alpha"]))
    except DomainError as e:
        raise MeasureSchemaError(f"measure document invalid: {e}") from e


def load_measure_file(path: Union[str, Path]) -> StarlikeMap:
    """
    Read a measure document from disk

    Raises:
        MeasureSchemaError: If the file is unreadable, not JSON or invalid
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MeasureSchemaError(f"cannot read measure file {path}: {e}") from e
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise MeasureSchemaError(f"measure file {path} is not valid JSON: {e}") from e
    logger.info(f"📄 Loaded measure file: {path}")
    return load_measure_document(doc)


def dump_measure_document(m: StarlikeMap) -> Dict[str, Any]:
    """Serializable form of a map, inverse of load_measure_document"""
    return {
        "alpha": m.order.alpha,
        "atoms": [{"t": t, "w": w} for t, w in m.measure.atoms],
    }


def write_measure_file(m: StarlikeMap, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(dump_measure_document(m), indent=2) + "\n", encoding="utf-8")
