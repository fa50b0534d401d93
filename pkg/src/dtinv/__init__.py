"""Exact generating series for rank-2 Donaldson-Thomas invariants of two Calabi-Yau 3-folds."""

from .series import Series
from .partitions import NDPartition, count_partitions, enumerate_ndpartitions, macmahon, partition_series
from .torus import MonomialIdeal, QuotFixedPoint, chi_punctual_quot, chi_quot_series
from .localalg import hom_dim, behrend_sign, weighted_chi_punctual_quot
from .chow import ci_euler, bogomolov_discriminant
from .walls import ChamberSpec, Chamber, classify, k_value, k_value_3fold
from .dtseries import theorem_a_series, theorem_b_series, prop_eII_series, dt_invariant

__version__ = "0.1.0"
