"""Momentum-space Dirac and Majorana-like spinors of the (1/2,0)+(0,1/2)
representation, with numerical checks of their identities."""

from .algebra import GammaBasis, gamma, gamma5, pauli
from .dirac import DiracSpinor, u_spinor, v_spinor
from .kinematics import FourMomentum, make_momentum
from .majorana import MajoranaSpinor, charge_conjugate, lambda_spinor, rho_spinor
from .report import Check, VerificationReport

__all__ = [
    "Check",
    "DiracSpinor",
    "FourMomentum",
    "GammaBasis",
    "MajoranaSpinor",
    "VerificationReport",
    "charge_conjugate",
    "gamma",
    "gamma5",
    "lambda_spinor",
    "make_momentum",
    "pauli",
    "rho_spinor",
    "u_spinor",
    "v_spinor",
]

__version__ = "0.1.0"
