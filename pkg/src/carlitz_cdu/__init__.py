"""c-differential uniformity of low Carlitz-rank permutations over GF(2^n)."""

from .carlitz import (
    CarlitzForm,
    NotAPermutationError,
    Permutation,
    affine_deg1,
    car3_family,
    compose,
    convergents,
    cycle_perm,
    from_carlitz,
    identity,
    inverse_map,
    load_permutation,
    normalize,
    save_permutation,
)
from .cdiff import (
    CDiffReport,
    boundary_set,
    cdiff_count,
    cdiff_symmetric,
    cdiff_uniformity,
    outside_pa_predict,
    uniformity,
)
from .field import Field, ReducibleModulusError, make_field

__version__ = "0.1.0"
