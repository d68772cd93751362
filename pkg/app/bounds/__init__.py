"""Closed-form complexity bounds."""

from app.bounds.complexity import (
    PV_CONSTANT,
    V3,
    BoundReport,
    complexity_interval,
    lemma1_bound,
    lower_bound,
    report_for,
    sakuma_weeks_bound,
    sakuma_weeks_gap,
    theorem1_bound,
    torus_report,
)
from app.bounds.covers import CoverBound, cover_bound
from app.bounds.families import (
    PretzelSpine,
    cor2_family,
    cor2_members,
    pretzel_bound,
    pretzel_spine,
)

__all__ = [
    "PV_CONSTANT",
    "V3",
    "BoundReport",
    "complexity_interval",
    "lemma1_bound",
    "lower_bound",
    "report_for",
    "sakuma_weeks_bound",
    "sakuma_weeks_gap",
    "theorem1_bound",
    "torus_report",
    "CoverBound",
    "cover_bound",
    "PretzelSpine",
    "cor2_family",
    "cor2_members",
    "pretzel_bound",
    "pretzel_spine",
]
