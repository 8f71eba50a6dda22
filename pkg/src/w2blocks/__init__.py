"""Weight-2 blocks of symmetric groups and Iwahori-Hecke algebras in non-defining
characteristic: abacus combinatorics, closed-form decomposition numbers, Jantzen
coefficients, [2:k]-pairs, runner insertion and the Alvis-Curtis matrix."""
from .abacus import (
    AbacusDisplay,
    Partition,
    conjugate,
    display,
    dominates,
    e_core,
    e_core_and_weight,
    e_cores,
    e_weight,
    is_e_core,
    is_e_regular,
    is_e_restricted,
    partition_of,
    relative_sign,
)
from .alvis_curtis import ACMatrix, ac_matrix, predicted_ac, predicted_ac_matrix
from .blocks import BlockId, Weight2Label, classify, enumerate_block, mullineux, richards_classes
from .decomp import (
    cartan_matrix,
    d_poly,
    decomposition_matrix,
    decomposition_matrix_v,
    e_poly_matrix,
    ext_quiver,
    inverse_decomposition_matrix,
    weyl_layers,
)
from .errors import (
    InternalError,
    InvalidArgument,
    NotFound,
    Unsupported,
    VerificationFailure,
    W2BlocksError,
)
from .jantzen import jantzen_coefficient, jantzen_matrix, oracle_decomposition_matrix
from .matrix import LabeledMatrix
from .pairs import PairInfo, RunnerInsertion, chain_to_rouquier, find_pairs, is_rouquier, make_pair, phi
from .vpoly import VPoly

__version__ = "0.1.0"
