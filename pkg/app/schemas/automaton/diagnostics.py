"""
Description:
Invariant checks for candidate Mealy automaton tables.

The checks never stop at the first problem: every violated invariant is reported
with the offending (state, input) coordinate so a caller can fix a table in one
pass.

Dependencies:
- pydantic: For the Diagnostic schema.

Author: @kcaparas1630
"""
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict


class Diagnostic(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: str
    message: str
    state: Optional[int] = None
    input: Optional[int] = None

    def __str__(self) -> str:
        if self.state is None:
            return self.message
        return f"{self.message} at (state {self.state}, input {self.input})"


def _component_diagnostics(name: str, labels: Sequence[str]) -> List[Diagnostic]:
    found = []
    if len(labels) == 0:
        found.append(Diagnostic(code="empty_component", message=f"{name} set is empty"))
    seen = set()
    for label in labels:
        if label in seen:
            found.append(Diagnostic(code="duplicate_symbol", message=f"duplicate {name} label {label!r}"))
        seen.add(label)
    return found


def _table_diagnostics(
    table_name: str,
    table: Sequence[Sequence[int]],
    n_states: int,
    n_inputs: int,
    n_targets: int,
    range_message: str,
) -> List[Diagnostic]:
    found = []
    if len(table) > n_states:
        found.append(
            Diagnostic(code="extra_row", message=f"{table_name} has {len(table)} rows for {n_states} states")
        )
    for s in range(n_states):
        row = table[s] if s < len(table) else []
        if len(row) > n_inputs:
            found.append(
                Diagnostic(code="extra_entry", message=f"{table_name} row has more entries than inputs", state=s)
            )
        for i in range(n_inputs):
            if i >= len(row) or row[i] is None:
                found.append(Diagnostic(code="missing_entry", message=f"missing {table_name} entry", state=s, input=i))
                continue
            value = row[i]
            if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < n_targets:
                found.append(Diagnostic(code="out_of_range", message=range_message, state=s, input=i))
    return found


def collect_diagnostics(
    states: Sequence[str],
    inputs: Sequence[str],
    outputs: Sequence[str],
    delta: Sequence[Sequence[int]],
    lambda_: Sequence[Sequence[int]],
) -> List[Diagnostic]:
    """
    Return every violated automaton invariant; an empty list means the tables are valid.

    Example:
        >>> collect_diagnostics(["1"], ["a"], ["x"], [[5]], [[0]])[0].message
        'transition target out of range'
    """
    found = []
    found += _component_diagnostics("state", states)
    found += _component_diagnostics("input", inputs)
    found += _component_diagnostics("output", outputs)
    found += _table_diagnostics(
        "delta", delta, len(states), len(inputs), len(states), "transition target out of range"
    )
    found += _table_diagnostics(
        "lambda", lambda_, len(states), len(inputs), len(outputs), "output symbol out of range"
    )
    return found
