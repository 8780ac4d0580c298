"""FMEA worksheet data model and validation.

A worksheet is a titled, ordered collection of failure-mode entries. Each
entry carries a component name, the failure mode, the (S, O, D) rating
triple, narrative fields, and an optional declared criticality label.
Validation never raises: invariant breaches are returned as structured
violations so a whole worksheet can be fixed in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum, unique

from .scales import RATING_MAX, RATING_MIN


@unique
class ClassLabel(Enum):
    """Criticality classification attached to a failure mode."""

    CATASTROPHIC = "Catastrophic"
    CRITICAL = "Critical"
    MARGINAL = "Marginal"
    NEGLIGIBLE = "Negligible"

    @classmethod
    def from_text(cls, text: str) -> "ClassLabel":
        """Parse a label case-insensitively; raises ValueError on unknown text."""
        wanted = text.strip().lower()
        for label in cls:
            if label.value.lower() == wanted:
                return label
        raise ValueError(f"unknown classification {text!r}")


@dataclass(frozen=True)
class RatingTriple:
    """The (severity, occurrence, detection) ratings of one entry."""

    severity: int
    occurrence: int
    detection: int


@dataclass(frozen=True)
class FmeaEntry:
    """One worksheet row."""

    component: str
    failure_mode: str
    triple: RatingTriple
    effect: str = ""
    end_effect: str = ""
    cause: str = ""
    prevention_controls: str = ""
    detection_controls: str = ""
    declared_classification: ClassLabel | None = None


@dataclass(frozen=True)
class Worksheet:
    """Immutable, ordered collection of entries. May be empty."""

    title: str
    entries: tuple[FmeaEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Violation:
    """A breached invariant, as data: which field, what went wrong, where."""

    field: str
    message: str
    entry_index: int | None = None

    def __str__(self) -> str:
        where = "" if self.entry_index is None else f"entry {self.entry_index}: "
        return f"{where}{self.field}: {self.message}"


def _rating_violations(triple: RatingTriple) -> list[Violation]:
    out = []
    for name in ("severity", "occurrence", "detection"):
        value = getattr(triple, name)
        if not isinstance(value, int) or isinstance(value, bool) or \
                not RATING_MIN <= value <= RATING_MAX:
            out.append(Violation(name, f"must be an integer in [1, 10], got {value!r}"))
    return out


def validate_entry(entry: FmeaEntry) -> list[Violation]:
    """Check one entry against its invariants; empty list means valid."""
    violations = []
    if not entry.component.strip():
        violations.append(Violation("component", "must not be empty"))
    violations.extend(_rating_violations(entry.triple))
    return violations


def validate_worksheet(ws: Worksheet) -> list[Violation]:
    """Check every entry plus cross-entry uniqueness.

    Per-entry violations carry the entry index. Duplicate
    (component, failure_mode) pairs yield one violation per duplicated key,
    listing every index where it appears. An empty worksheet is valid.
    """
    violations: list[Violation] = []
    for index, entry in enumerate(ws.entries):
        for v in validate_entry(entry):
            violations.append(replace(v, entry_index=index))

    seen: dict[tuple[str, str], list[int]] = {}
    for index, entry in enumerate(ws.entries):
        seen.setdefault((entry.component, entry.failure_mode), []).append(index)
    for (component, failure_mode), indices in seen.items():
        if len(indices) > 1:
            where = ", ".join(str(i) for i in indices)
            violations.append(Violation(
                "component, failure_mode",
                f"duplicate pair ({component!r}, {failure_mode!r}) at entries {where}",
                entry_index=indices[0],
            ))
    return violations
