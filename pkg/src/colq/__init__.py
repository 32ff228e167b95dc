"""colq: coloured quiver mutation, class recognition, orbit enumeration."""

from .canon import CanonKey, canonical_form, is_isomorphic
from .classify import (
    AClassReport,
    DClassification,
    classify_D,
    generate_all_members,
    is_in_class_A,
)
from .cycles import (
    CycleReport,
    cycle_colouration,
    enumerate_induced_cycles,
    enumerate_simple_cycles,
    euler_characteristic,
    holes,
    path_weight,
    quasi_complete_check,
    triangles,
    two_clique_split,
)
from .errors import (
    BadSizeError,
    BudgetExceededError,
    CapExceededError,
    ColourOutOfRangeError,
    ColqError,
    DisconnectedError,
    FormatError,
    LoopArrowError,
    MissingArrowError,
    MonochromaticityViolationError,
    NotACycleError,
    SkewConflictError,
    VertexOutOfRangeError,
)
from .gabriel import (
    GabrielReport,
    ZeroPart,
    gabriel_report,
    verify_gabriel_subtype_I,
    verify_gabriel_subtype_II,
    zero_part,
    zero_part_cycle_census,
)
from .mutation import find_mutation_path, mutate, mutate_alt, mutate_seq
from .orbit import (
    OrbitReport,
    TheoremAVerdict,
    closure_check,
    mutation_class,
    theorem_A_verdict,
)
from .quiver import (
    ColouredQuiver,
    UnderlyingGraph,
    from_json_dict,
    from_text,
    new_quiver,
    standard_d_quiver,
    to_dot,
    to_json_dict,
    to_text,
    underlying_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
