"""Census, slope calculus, homology, and exact Floer-theoretic invariants for
the tight contact structures on a one-parameter family of Brieskorn homology
spheres (with reversed orientation), plus the symbolic open books presenting
them."""

from .census import (
    ContactDescriptor,
    LegendrianPresentation,
    SurgeryFactorization,
    descriptor_from_stabs,
    descriptors,
    factorizations,
    index_set,
    stabilize,
    stabs_from_descriptor,
    subtriangle,
)
from .homology import (
    AbelianGroupSpec,
    IntMatrix,
    PlumbingGraph,
    SurgeryCobordism,
    brieskorn_graph,
    cobordism_kernel,
    cokernel,
    compose_cobordisms,
    expand_rational_framings,
    h1_of_surgery,
    h1_torus_bundle,
    ksequence_rank_check,
    linking_matrix,
    smith_normal_form,
)
from .invariants import (
    CobordismMapSpec,
    InvariantVector,
    binomial_combination,
    conjugate,
    contact_degree,
    coordinates,
    degree_shift,
    gompf_theta,
    hf_rank_data,
    invariant,
    invariant_closed_form,
    verify_diagram,
    verify_distinctness,
)
from .laurent import STEP, HalfLaurent
from .openbook import (
    AbstractOpenBook,
    LanternSite,
    PageSurface,
    braid_relation_check,
    euler_characteristic,
    figure_family_book,
    h1_action,
    hopf_destabilize,
    hopf_stabilize,
    lantern_rewrite,
    torus_bundle_monodromy,
)
from .slopes import (
    NcfExpansion,
    Slope,
    UnimodularMatrix,
    eval_ncf,
    max_twisting_values,
    mobius_apply,
    neg_continued_fraction,
    normalize_slope,
    tight_count_solid_torus,
    upper_bound_count,
)

__all__ = [name for name in dir() if not name.startswith("_")]
