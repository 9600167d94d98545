"""
Description:
Names of the shipped canonical examples and the envelope kinds they produce.

Author: @kcaparas1630
"""

MO3 = "mo3"
TRIANGLE = "triangle"
SWAP_REVERSIBLE = "swap-reversible"
URN_FIG1 = "urn-fig1"
TWO_TRIT_FIRST = "two-trit-first"
IDENTITY = "identity"
MO3_LOGIC = "mo3-logic"
TRIANGLE_LOGIC = "triangle-logic"

EXAMPLE_KINDS = {
    MO3: "automaton",
    TRIANGLE: "automaton",
    SWAP_REVERSIBLE: "automaton",
    URN_FIG1: "urn",
    TWO_TRIT_FIRST: "nitset",
    IDENTITY: "automaton",
    MO3_LOGIC: "logic",
    TRIANGLE_LOGIC: "logic",
}

EXAMPLE_NAMES = tuple(EXAMPLE_KINDS)
