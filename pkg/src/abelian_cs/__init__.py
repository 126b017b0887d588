"""Exact abelian (U(1)) Chern-Simons link observables and 3-manifold invariants."""
from .cyclotomic import (
    CyclotomicNumber,
    Rational,
    embed_complex,
    lift_conductor,
    root_of_unity,
    sqrt_positive_integer,
)
from .homology import (
    HomologyGroup,
    SmithDecomposition,
    first_homology,
    is_homologically_trivial,
    is_homology_sphere,
    link_homology_class,
    smith_normal_form,
)
from .invariants import (
    ManifoldInvariant,
    SignatureTriple,
    connected_sum,
    genus_times_circle,
    lens_closed_form,
    lens_presentation,
    reciprocity_check,
    rt_invariant,
    signature,
    subgroup_invariant,
)
from .kirby import KirbyMove, handle_slide, random_move_sequence, stabilize
from .links import (
    AmbientLinkPresentation,
    ColouredLinkingData,
    disjoint_union,
    equivalent_knot,
    reduce_colours,
    simplicial_satellite,
    sum_components,
)
from .observables import (
    ObservableValue,
    observable_s3,
    observable_split_homology_sphere,
    observable_surgery,
    push_to_sphere,
    unknot_union_check,
)

__version__ = "0.1.0"
