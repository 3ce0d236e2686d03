"""Exact rational computations with homotopy Gerstenhaber structures on
Hochschild cochains, the X complex of the bar construction and the cap
pairings on cyclic chains."""

from .algebra import FdAlgebra, ValidationError, dual_numbers, ground_field, q_times_q
from .brace import HochschildBraces, hochschild_mc
from .barcx import algebra_letters, cochain_letters, cup1
from .xcomplex import BarX
from .pairing import EtaExplicit, Puschnigg, XPairing, enumerate_partitions
from .cyclic import CyclicOps, CyclicPairing, homology_report

__version__ = "0.1.0"
