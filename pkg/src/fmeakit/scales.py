"""Standard 1-10 rating scales for classical FMEA.

Severity, occurrence, and detection each use the traditional ten-point
scale. The occurrence scale additionally ties every rating to a "1 in N"
probable failure rate, which this module exposes both as a forward lookup
and as an inverse (probability -> nearest rating in log space). Scale text
is stored verbatim so label lookups are bit-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

RATING_MIN = 1
RATING_MAX = 10


class RatingRangeError(ValueError):
    """A rating outside the 1-10 scale."""

    def __init__(self, value: object, field: str = "rating"):
        self.value = value
        self.field = field
        super().__init__(f"{field} must be an integer in [1, 10], got {value!r}")


def check_rating(value: int, field: str = "rating") -> int:
    """Return *value* if it is a valid 1-10 rating, else raise RatingRangeError."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise RatingRangeError(value, field)
    if not RATING_MIN <= value <= RATING_MAX:
        raise RatingRangeError(value, field)
    return value


@dataclass(frozen=True)
class ScaleRow:
    """One row of a rating scale: numeric rating, short label, long criteria."""

    rating: int
    label: str
    criteria: str


@dataclass(frozen=True)
class OccurrenceRate:
    """A "1 in N" point rate for an occurrence rating."""

    numerator: int
    denominator: int

    @property
    def probability(self) -> float:
        return self.numerator / self.denominator


# Rows are stored top-down (10 .. 1) as conventionally tabulated.
SEVERITY_SCALE: tuple[ScaleRow, ...] = (
    ScaleRow(10, "Hazardous without warning",
             "Highest severity ranking of a failure mode, occurring without warning "
             "and the consequence is hazardous"),
    ScaleRow(9, "Hazardous with warning",
             "Higher severity ranking of a failure mode, occurring with warning and "
             "the consequence is hazardous"),
    ScaleRow(8, "Very high",
             "Operation of system or product is broken down without compromising safe"),
    ScaleRow(7, "High",
             "Operation of system or product may be continued, but performance of "
             "system or product is affected"),
    ScaleRow(6, "Moderate",
             "Operation of system or product is continued, and performance of system "
             "or product is degraded"),
    ScaleRow(5, "Low",
             "Performance of system or product is affected seriously, and the "
             "maintenance is needed"),
    ScaleRow(4, "Very low",
             "Performance of system or product is less affected, and the maintenance "
             "may not be needed"),
    ScaleRow(3, "Minor",
             "System performance and satisfaction with minor effect"),
    ScaleRow(2, "Very minor",
             "System performance and satisfaction with slight effect"),
    ScaleRow(1, "None", "No effect"),
)

# For occurrence the criteria column carries the probable failure rate text.
OCCURRENCE_SCALE: tuple[ScaleRow, ...] = (
    ScaleRow(10, "Extremely high (inevitable failure)", "≥ 1 in 2"),
    ScaleRow(9, "Very high", "1 in 3"),
    ScaleRow(8, "Repeated failures", "1 in 8"),
    ScaleRow(7, "High", "1 in 20"),
    ScaleRow(6, "Moderately high", "1 in 80"),
    ScaleRow(5, "Moderate", "1 in 400"),
    ScaleRow(4, "Relatively low", "1 in 2000"),
    ScaleRow(3, "Low", "1 in 15,000"),
    ScaleRow(2, "Remote", "1 in 150,000"),
    ScaleRow(1, "Nearly impossible", "≤ 1 in 1,500,000"),
)

DETECTION_SCALE: tuple[ScaleRow, ...] = (
    ScaleRow(10, "Absolutely impossible",
             "Design control does not detect a potential cause of failure or "
             "subsequent failure mode or there is no design control"),
    ScaleRow(9, "Very remote",
             "Very remote chance the design control will detect a potential cause of "
             "the failure or subsequent failure mode"),
    ScaleRow(8, "Remote",
             "Remote chance the design control will detect a potential cause of "
             "failure or subsequent failure mode"),
    ScaleRow(7, "Very low",
             "Meager chance the design control will detect a potential cause of "
             "failure or subsequent failure mode"),
    ScaleRow(6, "Low",
             "Low chance the design control will detect a potential cause of failure "
             "or subsequent failure mode"),
    ScaleRow(5, "Moderate",
             "Moderate chance the design control will detect a potential cause of "
             "failure or subsequent failure mode"),
    ScaleRow(4, "Moderately high",
             "Moderately high chance the design control will detect a potential "
             "cause of the failure or subsequent failure mode"),
    ScaleRow(3, "High",
             "High chance the design control will detect a potential cause of "
             "failure or subsequent failure mode"),
    ScaleRow(2, "Very high",
             "Very high chance the design control will detect a potential cause of "
             "failure or subsequent failure mode"),
    ScaleRow(1, "Almost certain",
             "Design control will almost certainly detect a potential cause of "
             "failure or subsequent failure mode"),
)

# "1 in N" denominators by occurrence rating. The scale's open ends
# (">= 1 in 2" and "<= 1 in 1,500,000") are adopted as the point values
# 1/2 and 1/1,500,000 so the mapping is a total function.
OCCURRENCE_DENOMINATORS: dict[int, int] = {
    10: 2,
    9: 3,
    8: 8,
    7: 20,
    6: 80,
    5: 400,
    4: 2000,
    3: 15000,
    2: 150000,
    1: 1500000,
}

_SEVERITY_BY_RATING = {row.rating: row for row in SEVERITY_SCALE}
_OCCURRENCE_BY_RATING = {row.rating: row for row in OCCURRENCE_SCALE}
_DETECTION_BY_RATING = {row.rating: row for row in DETECTION_SCALE}

# Decision boundaries between adjacent ratings r and r+1, as the geometric
# mean of their point rates (the scale is roughly log-spaced). Index i holds
# the boundary between rating i+1 and i+2.
_RATE_BOUNDARIES: tuple[float, ...] = tuple(
    math.sqrt(
        (1.0 / OCCURRENCE_DENOMINATORS[r]) * (1.0 / OCCURRENCE_DENOMINATORS[r + 1])
    )
    for r in range(RATING_MIN, RATING_MAX)
)


def severity_row(rating: int) -> ScaleRow:
    """Look up the severity scale row for a rating.

    Raises:
        RatingRangeError: if the rating is outside [1, 10].
    """
    check_rating(rating, "severity")
    return _SEVERITY_BY_RATING[rating]


def occurrence_row(rating: int) -> ScaleRow:
    """Look up the occurrence scale row for a rating."""
    check_rating(rating, "occurrence")
    return _OCCURRENCE_BY_RATING[rating]


def detection_row(rating: int) -> ScaleRow:
    """Look up the detection scale row for a rating."""
    check_rating(rating, "detection")
    return _DETECTION_BY_RATING[rating]


def occurrence_rate(rating: int) -> OccurrenceRate:
    """Return the "1 in N" point rate for an occurrence rating."""
    check_rating(rating, "occurrence")
    return OccurrenceRate(1, OCCURRENCE_DENOMINATORS[rating])


def rating_from_rate(probability: float) -> int:
    """Map a failure probability back to the nearest occurrence rating.

    Nearest is measured in log space: the boundary between adjacent ratings
    is the geometric mean of their point rates, and a probability exactly on
    a boundary maps to the higher (riskier) rating.

    Args:
        probability: observed failure probability, in (0, 1].

    Raises:
        ValueError: if probability is not in (0, 1].
    """
    if not (0.0 < probability <= 1.0) or math.isnan(probability):
        raise ValueError(f"probability must be in (0, 1], got {probability!r}")
    rating = RATING_MIN
    for boundary in _RATE_BOUNDARIES:
        if probability >= boundary:
            rating += 1
        else:
            break
    return rating
