"""Weight-graded mod-2 homology coalgebras of braid spaces, rational
self-maps of the sphere and labelled configuration spaces."""

from .ambient import (
    AmbientElement,
    AmbientMonomial,
    Bigrade,
    GeneratorLimitError,
    TensorElement,
    bigrade_components,
    element,
    monomial,
    q_gen,
    tensor,
    tensor_components,
)
from .coalgebra import (
    BraidConfReport,
    GradedCoalgebra,
    InvariantRecord,
    IsoVerdict,
    LemmaBraidReport,
    SpanError,
    TheoremReport,
    check_braid_conf,
    check_lemma_braid,
    coalgebra_invariants,
    coalgebras_isomorphic,
    extract_coalgebra,
    s_set,
    steenrod_matrix,
    theorem_main,
    verify_coalgebra_map,
    verify_steenrod_intertwining,
)
from .families import (
    Family,
    FamilyMonomial,
    basis,
    embed,
    family_monomial,
    poincare_vector,
    top_class,
)
from .operations import (
    DEFAULT_MAX_GEN,
    araki_kudo_q,
    coproduct,
    iterated_q,
    sq1_dual,
    sqj_dual,
)

__version__ = "0.1.0"
