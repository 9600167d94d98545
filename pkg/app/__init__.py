"""
Finite automaton models of quantized systems.

Mealy automata, experiment-induced state partitions, partition logics,
generalized urn models, reversible and counterfactual automata, and complete
sets of comeasurable nits.
"""

__version__ = "0.1.0"
