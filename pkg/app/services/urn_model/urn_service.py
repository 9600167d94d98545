"""
Urn Model Service

Generalized urn models and their translation to and from Mealy automata.

urn -> automaton: with bijections t_S, t_I, t_O,
    δ(s, i) = s₀ for a fixed state s₀ (the first state),
    λ(s, i) = t_O(Λ(t_S⁻¹(s), t_I⁻¹(i))).
automaton -> urn: with bijections τ_U, τ_C, τ_L,
    Λ(u, c) = τ_L(λ(τ_U⁻¹(u), τ_C⁻¹(c))).
Composing both directions gives τ_U⁻¹ = t_S, τ_C⁻¹ = t_I, τ_L⁻¹ = t_O. Only λ
survives a round trip; δ is always replaced by the constant map.

Dependencies:
- loguru: For logging translations and lost transition tables.
- app.schemas.urn: For UrnModel, Translation and RoundTripReport.
- app.services.automaton_core: For building automata.

Author: @kcaparas1630
"""
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from app.errors.exceptions import OutOfRangeError, UnknownSymbolError
from app.schemas.automaton import MealyAutomaton
from app.schemas.logic import PartitionLogic
from app.schemas.partitions import Partition
from app.schemas.urn import RoundTripReport, Translation, TranslationDirection, UrnModel, compose
from app.services.automaton_core import build_automaton
from app.services.partition_logic import paste


def _resolve(kind: str, labels: Sequence[str], symbol) -> int:
    if isinstance(symbol, int) and not isinstance(symbol, bool) and 0 <= symbol < len(labels):
        return symbol
    if isinstance(symbol, str) and symbol in labels:
        return labels.index(symbol)
    raise UnknownSymbolError(kind, symbol)


def lookup(urn: UrnModel, ball_type, color) -> str:
    """
    The symbol ball type u shows through color filter c.

    Example:
        >>> lookup(fig1_urn, "1", "red")
        '0'
    """
    u = _resolve("ball type", urn.ball_types, ball_type)
    c = _resolve("color", urn.colors, color)
    return urn.symbols[urn.lookup[u][c]]


def _relabel(labels: Sequence[str], mapping: Sequence[int]) -> Tuple[str, ...]:
    """Labels carried along a bijection: the image of x gets the label of x."""
    relabelled = [""] * len(labels)
    for x, y in enumerate(mapping):
        relabelled[y] = labels[x]
    return tuple(relabelled)


def automaton_from_urn(urn: UrnModel, translation: Optional[Translation] = None) -> Tuple[MealyAutomaton, Translation]:
    """
    Translate an urn model into a Mealy automaton.

    Args:
        urn: The urn model.
        translation: Optional URN_TO_AUTOMATON bijections (t_S, t_I, t_O);
            defaults to the identity on dense indices.

    Returns:
        (automaton, translation) where λ(t_S(u), t_I(c)) = t_O(Λ(u, c)) and δ is constant.
    """
    n_u, n_c, n_l = len(urn.ball_types), len(urn.colors), len(urn.symbols)
    if translation is None:
        translation = Translation.identity(TranslationDirection.URN_TO_AUTOMATON, n_u, n_c, n_l)
    if translation.direction != TranslationDirection.URN_TO_AUTOMATON:
        raise OutOfRangeError("automaton_from_urn needs an urn_to_automaton translation")
    if (len(translation.state_map), len(translation.input_map), len(translation.output_map)) != (n_u, n_c, n_l):
        raise OutOfRangeError("translation sizes do not match the urn model")

    inverse = translation.inverse()
    lambda_ = [
        [translation.output_map[urn.lookup[inverse.state_map[s]][inverse.input_map[i]]] for i in range(n_c)]
        for s in range(n_u)
    ]
    automaton = build_automaton(
        states=_relabel(urn.ball_types, translation.state_map),
        inputs=_relabel(urn.colors, translation.input_map),
        outputs=_relabel(urn.symbols, translation.output_map),
        delta=[[0] * n_c for _ in range(n_u)],
        lambda_=lambda_,
    )
    logger.debug(f"Translated urn with {n_u} ball types and {n_c} colors into an automaton")
    return automaton, translation


def urn_from_automaton(
    automaton: MealyAutomaton, translation: Optional[Translation] = None
) -> Tuple[UrnModel, Translation]:
    """
    Translate a Mealy automaton into an urn model; δ is ignored.

    Args:
        automaton: The automaton.
        translation: Optional AUTOMATON_TO_URN bijections (τ_U, τ_C, τ_L);
            defaults to the identity on dense indices.
    """
    n_s, n_i, n_o = automaton.n_states, automaton.n_inputs, automaton.n_outputs
    if translation is None:
        translation = Translation.identity(TranslationDirection.AUTOMATON_TO_URN, n_s, n_i, n_o)
    if translation.direction != TranslationDirection.AUTOMATON_TO_URN:
        raise OutOfRangeError("urn_from_automaton needs an automaton_to_urn translation")
    if (len(translation.state_map), len(translation.input_map), len(translation.output_map)) != (n_s, n_i, n_o):
        raise OutOfRangeError("translation sizes do not match the automaton")

    inverse = translation.inverse()
    lookup_table = tuple(
        tuple(translation.output_map[automaton.lambda_[inverse.state_map[u]][inverse.input_map[c]]] for c in range(n_i))
        for u in range(n_s)
    )
    urn = UrnModel(
        ball_types=_relabel(automaton.states, translation.state_map),
        colors=_relabel(automaton.inputs, translation.input_map),
        symbols=_relabel(automaton.outputs, translation.output_map),
        lookup=lookup_table,
    )
    return urn, translation


def roundtrip_check(automaton: MealyAutomaton, translation: Optional[Translation] = None) -> RoundTripReport:
    """
    Translate to an urn model with τ and back with t = τ⁻¹, then compare.

    The round trip preserves λ and composes the bijections to identities; δ is
    preserved only when it was already constant onto the first state.
    """
    urn, tau = urn_from_automaton(automaton, translation)
    back, t = automaton_from_urn(urn, tau.inverse())
    identities = all(
        compose(getattr(tau, name), getattr(t, name)) == tuple(range(len(getattr(tau, name))))
        for name in ("state_map", "input_map", "output_map")
    )
    report = RoundTripReport(
        lambda_preserved=back.lambda_ == automaton.lambda_,
        translations_compose_to_identity=identities,
        delta_preserved=back.delta == automaton.delta,
    )
    if not report.delta_preserved:
        logger.warning("Urn round trip replaced the transition table by the constant map")
    return report


def urn_partitions(urn: UrnModel) -> List[Partition]:
    """The partition of the ball types seen through every color filter, one per color."""
    ground = range(len(urn.ball_types))
    return [Partition.from_labels(ground, [row[c] for row in urn.lookup]) for c in range(len(urn.colors))]


def urn_logic(urn: UrnModel) -> PartitionLogic:
    """The pasting of the partitions of all color filters."""
    return paste(tuple(range(len(urn.ball_types))), urn_partitions(urn))
