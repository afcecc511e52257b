"""Numerical sets, their Young diagrams and the complement operation."""

from .analysis import (
    AtomProfile,
    ComplementReport,
    ComplementSequence,
    Shape,
    atom_profile,
    complement,
    complement_report,
    complement_sequence,
    complement_via_diagram,
    is_semigroup_complement,
    lift,
    witness_semigroup,
)
from .core import (
    DomainError,
    NotASemigroupError,
    NumericalSet,
    ParseError,
    SetScalars,
    associated_semigroup,
    atoms,
    format_set,
    is_semigroup,
    max_embedding_dimension,
    parse_set,
    scalars,
    shift_down,
    small_atoms,
    small_elements,
)
from .young import (
    YoungDiagram,
    c1,
    complement_diagram,
    diagram_of,
    hook_field,
    hook_multiset,
    hook_set,
    set_of,
)

__version__ = "0.1.0"
