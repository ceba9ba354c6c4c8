"""Linearized Reed-Solomon codes and their higher weight distributions."""

from .bruteforce import (
    SubspaceBasis,
    brute_distribution,
    count_C_rU,
    enumerate_subspaces,
    subspace_weight,
    subspace_weight_direct,
    zero_locus_dim,
)
from .closedform import (
    DistributionReport,
    full_distribution,
    higher_weight_count,
    weight_hierarchy,
    weight_value_set,
)
from .code import (
    codeword_weight,
    encode,
    lin_vandermonde,
    linearized_eval,
    null_space_dim,
    vandermonde_full_rank,
)
from .field import FieldCtx, build_field
from .params import CodeParams
from .qcomb import gauss_binomial, mobius_coefficient, mobius_invert

__version__ = "0.1.0"
