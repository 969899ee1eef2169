"""Exact integer q-series for t-core partition families and their identities."""

from .errors import (
    BadResidue,
    BuildFailure,
    DivergentSpec,
    InsufficientOrder,
    NonUnitConstantTerm,
    OrderExceeded,
    QSeriesError,
    ResidueOutOfRange,
)
from .catalog import verify, verify_all
from .eta import EtaQuotientSpec, ThetaSpec, eta, eta_quotient, euler_f, jacobi_cube, p_series, phi, psi
from .partitions import A3_PAIR, A3_SINGLE, B3, PartitionFamilySpec, family_series
from .quadforms import omega_series
from .scanner import CongruenceClaim, scan
from .series import IntSeries, dissect, from_coeffs

__version__ = "0.1.0"
