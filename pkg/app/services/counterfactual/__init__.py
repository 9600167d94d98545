"""
Counterfactual Automaton Module

Seeded preparation and measurement of single particles carrying one nit.
"""

from .counterfactual_service import (
    CounterfactualAutomaton,
    InformationProfile,
    information_profile,
    mutual_information,
    parse_transcript,
    transcript_lines,
)

__all__ = [
    "CounterfactualAutomaton",
    "InformationProfile",
    "information_profile",
    "mutual_information",
    "parse_transcript",
    "transcript_lines",
]
