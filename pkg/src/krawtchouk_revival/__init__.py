"""Single-excitation dynamics of XX spin chains with Krawtchouk NN + NNN couplings.

Perfect state transfer and balanced fractional revival are predicted from the
exact ratio alpha/beta and checked by propagating the chain numerically.
"""

from .chain_model import (
    ChainSpec,
    CouplingProfile,
    build_hamiltonian,
    build_j_operator,
    coupling_profile,
    nn_coupling,
)
from .krawtchouk import KrawtchoukTable, chi, eigenvector_matrix, krawtchouk_table, weight
from .revival_analysis import (
    ConsistencyError,
    FidelityScan,
    RationalRatio,
    RevivalEvent,
    RevivalPrediction,
    VerificationReport,
    detect_revivals,
    predict_balanced_fr,
    predict_pst,
    scan,
    verify_prediction,
)
from .spectral_dynamics import (
    SpectralData,
    end_amplitudes,
    propagate,
    propagate_oracle,
    spectral_decomposition,
)

__all__ = [
    "ChainSpec",
    "ConsistencyError",
    "CouplingProfile",
    "FidelityScan",
    "KrawtchoukTable",
    "RationalRatio",
    "RevivalEvent",
    "RevivalPrediction",
    "SpectralData",
    "VerificationReport",
    "build_hamiltonian",
    "build_j_operator",
    "chi",
    "coupling_profile",
    "detect_revivals",
    "eigenvector_matrix",
    "end_amplitudes",
    "krawtchouk_table",
    "nn_coupling",
    "predict_balanced_fr",
    "predict_pst",
    "propagate",
    "propagate_oracle",
    "scan",
    "spectral_decomposition",
    "verify_prediction",
    "weight",
]
