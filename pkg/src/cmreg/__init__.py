"""Graded commutative algebra over QQ and GF(p): Groebner bases, minimal free
resolutions, local cohomology end degrees, regularity, and checkers for
regularity bounds on concrete inputs."""
from .bench import TheoremReport
from .complexes import BettiTable, ChainComplex, koszul_complex, tensor_complexes
from .functors import frobenius_power, frobenius_tor, kahler_module, power_kernel, singular_locus
from .homology import Subquotient, homology, tor1_cycles, tor_all, tor_multi
from .ideals import Ideal, hilbert_data
from .invariants import AInvariants, a_invariants, depth, dimension, is_cohen_macaulay, regularity
from .modules import FreeModule, GradedMatrix, GradedModule
from .resolution import betti_table, free_resolution
from .ring import GF, NEG_INF, POS_INF, QQ, ParseError, PolyRing, Polynomial, QuotientRing
from .session import parse_session, run_session

__version__ = "0.1.0"

__all__ = [
    "AInvariants", "BettiTable", "ChainComplex", "FreeModule", "GF", "GradedMatrix", "GradedModule",
    "Ideal", "NEG_INF", "POS_INF", "ParseError", "PolyRing", "Polynomial", "QQ", "QuotientRing",
    "Subquotient", "TheoremReport", "a_invariants", "betti_table", "depth", "dimension",
    "free_resolution", "frobenius_power", "frobenius_tor", "hilbert_data", "homology",
    "is_cohen_macaulay", "kahler_module", "koszul_complex", "parse_session", "power_kernel",
    "regularity", "run_session", "singular_locus", "tensor_complexes", "tor1_cycles", "tor_all",
    "tor_multi",
]
