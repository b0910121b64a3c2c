"""Pin(1,3) double cover of O(1,3), Dirac gamma algebra and spin-tensor calculus."""
from .dirac import (BASIS16, GAMMA, P_HAT, Q_HAT, T_HAT, PinElement, big_phi, embed_sl2,
                    preimage, sample_pin)
from .frames import FrameClass, classify_frame, make_reversed_frame, transform_basic_fields
from .lorentz import LorentzElement, SectorTag, decompose, psi, psi_prime
from .numerics import DomainError, InternalError, Tolerance
from .sl2c import SIGMA, SIGMA_TILDE, SL2Element, phi, phi_via_sigma
from .spintensor import (FrameTransition, SpinTensor, SpinTensorType, gamma_symbols,
                         inverse_transform, tau, transform)

__version__ = "0.1.0"

__all__ = [
    "BASIS16", "GAMMA", "P_HAT", "Q_HAT", "T_HAT", "PinElement", "big_phi", "embed_sl2",
    "preimage", "sample_pin", "FrameClass", "classify_frame", "make_reversed_frame",
    "transform_basic_fields", "LorentzElement", "SectorTag", "decompose", "psi", "psi_prime",
    "DomainError", "InternalError", "Tolerance", "SIGMA", "SIGMA_TILDE", "SL2Element", "phi",
    "phi_via_sigma", "FrameTransition", "SpinTensor", "SpinTensorType", "gamma_symbols",
    "inverse_transform", "tau", "transform",
]
