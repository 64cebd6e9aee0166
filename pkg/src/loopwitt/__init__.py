"""Exact computer algebra for loop algebras of A x DerA and their
tensor-field weight modules, with zero-residual identity suites."""

from .coeff import BElem, BPresentation
from .glnrep import Irrep, build_irrep, burnside_dim, weyl_dim
from .loop import LoopElem, diff_derivation, poly_derivation
from .scalars import GaussRat, parse_gauss
from .suites import IdentityReport, RunConfig, run_suites
from .tensmod import ModVector, TensorModule, Window, act

__all__ = [
    "BElem", "BPresentation", "GaussRat", "IdentityReport", "Irrep",
    "LoopElem", "ModVector", "RunConfig", "TensorModule", "Window",
    "act", "build_irrep", "burnside_dim", "diff_derivation", "parse_gauss",
    "poly_derivation", "run_suites", "weyl_dim",
]

__version__ = "0.1.0"
