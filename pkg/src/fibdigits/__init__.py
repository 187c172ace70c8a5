"""Fibonacci digit-coverage toolkit.

Verifies statements of the form "every Fibonacci number contains a digit
from S, apart from a listed few" by scanning one period of the last n
digits, and proves repdigit exclusions via residues modulo prime powers.
"""

from .digitscan import (
    DepthRecord,
    DepthSurvey,
    DigitSet,
    ScanConfig,
    ScanVerdict,
    Witness,
    max_depth_survey,
    required_scan_bound,
    rightmost_hit_depth,
    scan_digit_set,
)
from .fibcore import ResiduePair, digits_of, fib_exact, fib_iter_exact, fib_mod, residue_stream
from .pisano import PisanoResult, ResidueSet, pisano_period, pisano_table, residue_set
from .randmodel import (
    FrequencyReport,
    ModelConfig,
    empirical_digit_frequency,
    fib_digit_length,
    model_avoidance_probability,
    simulate_avoidance,
)
from .repdigit import RepdigitProof, find_repdigit_proof, is_fibonacci, prove_repdigit_impossible, repdigit_value

__all__ = [name for name in dir() if not name.startswith("_")]
