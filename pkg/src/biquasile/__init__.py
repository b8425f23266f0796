"""Biquasile counting invariants and Boltzmann enhancements of marked graph diagrams."""

from .algebra import (Biquasile, OpTable, alexander_biquasile, enumerate_biquasiles, from_block,
                      make_biquasile, parse_matrix, serialize_matrix, validate_latin)
from .boltzmann import (BoltzmannWeight, WeightedInvariant, check_weight, enhanced_invariant,
                        indicator, parse_weight, serialize_weight, weight_of_coloring)
from .diagram import (MarkedGraphDiagram, Vertex, VertexKind, constraints, euler_check,
                      parse_diagram, resolve, serialize_diagram)
from .invariants import (InvariantTable, Verdict, cobordism_inclusion_check, compare,
                         counting_invariant, invariant_table)
from .morse import diagram_from_word
from .solver import (Coloring, build_linear_system, count_colorings, count_solutions_linear,
                     list_colorings, oracle_count)

__version__ = "0.1.0"
