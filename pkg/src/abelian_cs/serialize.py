"""JSON file formats: presentations in, reports out."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cyclotomic import CyclotomicNumber
from .links import AmbientLinkPresentation, ColouredLinkingData, ValidationError, as_matrix

SCHEMA_VERSION = 1


def cyclotomic_to_json(a: CyclotomicNumber) -> dict:
    z = a.embed()
    return {
        "conductor": a.conductor,
        "coefficients": [f"{c.numerator}/{c.denominator}" for c in a.coefficients],
        "approx": [z.real, z.imag],
    }


def cyclotomic_from_json(obj: dict) -> CyclotomicNumber:
    return CyclotomicNumber(int(obj["conductor"]), [Fraction(c) for c in obj["coefficients"]])


def _matrix_field(obj: dict, key: str):
    rows = obj[key]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValidationError(f"{key}: expected an array of arrays of integers")
    return as_matrix(rows, key)


def parse_presentation(source: str | dict) -> AmbientLinkPresentation | ColouredLinkingData:
    """Parse a presentation file (JSON text or already-decoded object).

    Without ``surgery_matrix`` the result is a link in S^3; otherwise an
    ambient presentation.  ``colours`` default to all 1.
    """
    obj = json.loads(source) if isinstance(source, str) else source
    if not isinstance(obj, dict):
        raise ValidationError("presentation must be a JSON object")
    matrix = _matrix_field(obj, "matrix") if "matrix" in obj else ()
    colours = obj.get("colours")
    if colours is None:
        colours = [1] * len(matrix)
    if not isinstance(colours, list) or any(
        isinstance(q, bool) or not isinstance(q, int) for q in colours
    ):
        raise ValidationError("colours: expected an array of integers")
    link = ColouredLinkingData(matrix, tuple(colours))
    if "surgery_matrix" not in obj:
        if "cross_matrix" in obj:
            raise ValidationError("cross_matrix given without surgery_matrix")
        return link
    surgery = _matrix_field(obj, "surgery_matrix")
    cross = _matrix_field(obj, "cross_matrix") if "cross_matrix" in obj else None
    if cross is not None and len(cross) == 0 and len(surgery) > 0:
        cross = tuple(() for _ in surgery)
    return AmbientLinkPresentation(surgery, link, cross)


def presentation_to_json(p: AmbientLinkPresentation | ColouredLinkingData) -> dict:
    if isinstance(p, ColouredLinkingData):
        return {"matrix": [list(r) for r in p.matrix], "colours": list(p.colours)}
    out: dict[str, Any] = {"surgery_matrix": [list(r) for r in p.surgery]}
    if p.link.size:
        out["matrix"] = [list(r) for r in p.link.matrix]
        out["colours"] = list(p.link.colours)
        out["cross_matrix"] = [list(r) for r in p.cross]
    return out


def digest(obj: Any) -> str:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class InvariantReport:
    exact: CyclotomicNumber | None
    metadata: dict = field(default_factory=dict)
    timing: float | None = None

    @property
    def approx(self) -> tuple[float, float] | None:
        if self.exact is None:
            return None
        z = self.exact.embed()
        return (z.real, z.imag)

    def to_json(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "exact": None if self.exact is None else cyclotomic_to_json(self.exact),
            "approx": None if self.approx is None else list(self.approx),
            "metadata": self.metadata,
        }
        if self.timing is not None:
            out["timing_seconds"] = self.timing
        return out
