"""Reader-tunable presentation parameters and their validation.

Spacing is expressed in em units so rendered output scales with font size.
The allowed ranges below are the contract; validate() reports every field
outside them rather than stopping at the first.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class Violation:
    field: str
    message: str


@dataclass(frozen=True)
class TypographyConfig:
    line_spacing: float = 1.5
    word_spacing_em: float = 0.16
    letter_spacing_em: float = 0.03
    font_size_px: float = 18
    bold_weight: int = 700
    regular_weight: int = 400
    bold_size_scale: float = 1.0


# Inclusive numeric ranges per field.
RANGES: dict[str, tuple[float, float]] = {
    "line_spacing": (1.0, 3.0),
    "word_spacing_em": (0.0, 1.0),
    "letter_spacing_em": (0.0, 0.5),
    "font_size_px": (8, 72),
    "bold_weight": (100, 900),
    "regular_weight": (100, 900),
    "bold_size_scale": (0.8, 1.5),
}

_WEIGHT_FIELDS = ("bold_weight", "regular_weight")
FIELD_NAMES = tuple(f.name for f in dataclasses.fields(TypographyConfig))


def validate(cfg: TypographyConfig) -> list[Violation]:
    """Return every out-of-range field; an empty list means ok."""
    violations = []
    for field in FIELD_NAMES:
        value = getattr(cfg, field)
        lo, hi = RANGES[field]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            violations.append(Violation(field, f"{field} must be a number, got {value!r}"))
            continue
        if not lo <= value <= hi:
            violations.append(
                Violation(field, f"{field} {value} outside allowed range [{lo}, {hi}]")
            )
        elif field in _WEIGHT_FIELDS and (value % 100 != 0 or value != int(value)):
            violations.append(
                Violation(field, f"{field} {value} must be one of 100, 200, ..., 900")
            )
    if not any(v.field in _WEIGHT_FIELDS for v in violations):
        if cfg.bold_weight < cfg.regular_weight:
            violations.append(
                Violation(
                    "bold_weight",
                    f"bold_weight {cfg.bold_weight} must be >= regular_weight "
                    f"{cfg.regular_weight}",
                )
            )
    return violations


def merge(
    base: TypographyConfig, overrides: Mapping[str, object]
) -> tuple[TypographyConfig, list[Violation]]:
    """Overlay a partial config (e.g. parsed JSON) onto base and validate.

    Fields present in overrides replace base fields; unknown field names are
    rejected by name. Returns the merged config and its violations; the
    config is only meaningful when the violation list is empty.
    """
    violations = []
    updates: dict[str, object] = {}
    for key, value in overrides.items():
        if key not in FIELD_NAMES:
            violations.append(Violation(key, f"unknown typography field {key!r}"))
            continue
        updates[key] = value
    merged = dataclasses.replace(base, **updates)  # type: ignore[arg-type]
    violations.extend(validate(merged))
    return merged, violations
