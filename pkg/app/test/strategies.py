"""
Shared hypothesis strategies for the test suites.

Author: @kcaparas1630
"""
from hypothesis import strategies as st

from app.schemas.partitions import Partition
from app.services.automaton_core import build_automaton
from app.services.reversible import automaton_from_permutation


@st.composite
def automata(draw, max_states=5, max_inputs=3, max_outputs=3):
    n_s = draw(st.integers(1, max_states))
    n_i = draw(st.integers(1, max_inputs))
    n_o = draw(st.integers(1, max_outputs))
    delta = [[draw(st.integers(0, n_s - 1)) for _ in range(n_i)] for _ in range(n_s)]
    lambda_ = [[draw(st.integers(0, n_o - 1)) for _ in range(n_i)] for _ in range(n_s)]
    return build_automaton(
        states=[str(s + 1) for s in range(n_s)],
        inputs=[chr(ord("a") + i) for i in range(n_i)],
        outputs=[str(o) for o in range(n_o)],
        delta=delta,
        lambda_=lambda_,
    )


@st.composite
def reversible_automata(draw, max_states=4, max_inputs=3):
    n_s = draw(st.integers(1, max_states))
    n_i = draw(st.integers(1, max_inputs))
    permutation = draw(st.permutations(range(n_s * n_i)))
    return automaton_from_permutation(permutation, n_s, n_i)


@st.composite
def partitions(draw, ground=(0, 1, 2, 3, 4)):
    labels = [draw(st.integers(0, len(ground) - 1)) for _ in ground]
    return Partition.from_labels(ground, labels)
