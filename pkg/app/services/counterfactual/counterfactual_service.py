"""
Counterfactual Automaton Service

The automaton ⟨I×O, I, O, δ, λ⟩ on states (s, o_s): measuring the mode a
particle was prepared in returns its value and leaves it unchanged; measuring
any other mode i draws one uniform value r from {1..n}, emits r and moves the
particle to (i, r). The same draw feeds output and successor state, so a
repeated measurement always repeats its answer.

Randomness comes from numpy's PCG64 bit generator seeded with a 64-bit seed;
draws use Generator.integers(1, n + 1), whose bounded-integer rejection method
fixes the stream for a given seed. Transcripts are therefore portable.

Dependencies:
- numpy: For the seeded generator and the mutual information estimate.
- loguru: For logging.
- pydantic: For the information profile schema.
- app.schemas.counterfactual: For PreparedState and TranscriptRecord.

Author: @kcaparas1630
"""
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ValidationError

from app.errors.exceptions import OutOfRangeError, SerializationError, UnknownSymbolError
from app.schemas.counterfactual import PreparedState, TranscriptRecord

SEED_BOUND = 2**64


class CounterfactualAutomaton:
    """
    A seeded counterfactual automaton with information base n.

    Instances own a mutable generator and the transcript of every measurement;
    share an instance across threads only behind a lock.
    """

    def __init__(self, n: int, modes: Sequence[str], seed: int):
        if n < 1:
            raise OutOfRangeError(f"Information base must be at least 1, got {n}")
        if not modes:
            raise OutOfRangeError("At least one mode is required")
        if len(set(modes)) != len(modes):
            raise OutOfRangeError("Modes must be distinct")
        if not 0 <= seed < SEED_BOUND:
            raise OutOfRangeError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        self.n = n
        self.modes: Tuple[str, ...] = tuple(str(m) for m in modes)
        self.seed = seed
        self._generator = np.random.Generator(np.random.PCG64(seed))
        self.transcript: List[TranscriptRecord] = []

    def _mode(self, mode) -> str:
        mode = str(mode)
        if mode not in self.modes:
            raise UnknownSymbolError("mode", mode)
        return mode

    def prepare(self, mode, value: int) -> PreparedState:
        """
        Prepare a particle in (mode, value); consumes no randomness.

        Raises:
            OutOfRangeError: If value is outside 1..n.
            UnknownSymbolError: If the mode is unknown.
        """
        mode = self._mode(mode)
        if not 1 <= value <= self.n:
            raise OutOfRangeError(f"Value {value} outside 1..{self.n}")
        return PreparedState(mode=mode, value=value)

    def draw(self) -> int:
        return int(self._generator.integers(1, self.n + 1))

    def measure(self, state: PreparedState, mode) -> Tuple[int, PreparedState]:
        """
        Measure a particle in a mode.

        Returns:
            (output, resulting state); the resulting state always stores the output.
        """
        mode = self._mode(mode)
        if state.mode == mode:
            output, after = state.value, state
        else:
            output = self.draw()
            after = PreparedState(mode=mode, value=output)
        self.transcript.append(
            TranscriptRecord(
                call_index=len(self.transcript),
                mode=mode,
                output=output,
                state_mode=after.mode,
                state_value=after.value,
            )
        )
        return output, after

    def measure_sequence(self, state: PreparedState, modes: Iterable) -> Tuple[List[int], PreparedState]:
        outputs = []
        for mode in modes:
            output, state = self.measure(state, mode)
            outputs.append(output)
        logger.debug(f"Measured {len(outputs)} times with seed {self.seed}")
        return outputs, state


def transcript_lines(records: Iterable[TranscriptRecord]) -> str:
    """Newline-delimited JSON, one record per line, fields in declaration order."""
    return "".join(record.model_dump_json() + "\n" for record in records)


def parse_transcript(text: str) -> List[TranscriptRecord]:
    try:
        return [TranscriptRecord.model_validate_json(line) for line in text.splitlines() if line.strip()]
    except ValidationError as e:
        raise SerializationError(f"Malformed transcript: {e}") from e


def mutual_information(pairs: Sequence[Tuple[int, int]]) -> float:
    """Empirical mutual information, in bits, between the two coordinates of the pairs."""
    if not pairs:
        return 0.0
    data = np.asarray(pairs)
    _, xs = np.unique(data[:, 0], return_inverse=True)
    _, ys = np.unique(data[:, 1], return_inverse=True)
    joint = np.zeros((xs.max() + 1, ys.max() + 1))
    np.add.at(joint, (xs, ys), 1)
    joint /= joint.sum()
    px = joint.sum(axis=1, keepdims=True)
    py = joint.sum(axis=0, keepdims=True)
    nonzero = joint > 0
    return float(np.sum(joint[nonzero] * np.log2(joint[nonzero] / (px @ py)[nonzero])))


class InformationProfile(BaseModel):
    prepared_mode: str
    measured_mode: str
    trials: int
    recovered: int
    mutual_information_bits: float


def information_profile(
    automaton: CounterfactualAutomaton, prepared_mode, measured_mode, trials: int
) -> InformationProfile:
    """
    Prepare values 1..n in turn, measure each once, and estimate how much the
    output tells about the prepared value.

    Measuring the preparation mode recovers every value (log2 n bits); any other
    mode yields outputs independent of the preparation (close to 0 bits).
    """
    pairs = []
    for t in range(trials):
        value = t % automaton.n + 1
        output, _ = automaton.measure(automaton.prepare(prepared_mode, value), measured_mode)
        pairs.append((value, output))
    profile = InformationProfile(
        prepared_mode=str(prepared_mode),
        measured_mode=str(measured_mode),
        trials=trials,
        recovered=sum(1 for value, output in pairs if value == output),
        mutual_information_bits=mutual_information(pairs),
    )
    logger.info(
        f"Information profile {profile.prepared_mode}->{profile.measured_mode}: "
        f"{profile.mutual_information_bits:.4f} bits over {trials} trials"
    )
    return profile
