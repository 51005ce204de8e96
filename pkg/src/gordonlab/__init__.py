"""Neighborly partitions, their hypergraphs and signatures, and exact checks
of the dual Gordon identities alongside the classical Gordon and
Andrews-Gordon identities."""

from .hilbert import (
    EdgeIdeal,
    Monomial,
    hilbert_numerator_weighted,
    hp_P_ri,
    hp_quotient_J,
    quotient_series_by_support,
    verify_polarization_relation,
)
from .hypergraph import Hypergraph, Vertex, build_H_lambda, truncate_H_infinity
from .partitions import (
    Interpretation,
    Partition,
    PartitionClass,
    count_class,
    enumerate_class,
    enumerate_partitions,
    is_neighborly,
    signed_count_R,
)
from .qseries import (
    TruncatedSeries,
    andrews_gordon_product_side,
    andrews_gordon_sum_side,
    class_series,
    product_side,
)
from .report import VerificationReport
from .signature import (
    Method,
    SignatureResult,
    neighborly_signed_series,
    signature_bruteforce,
    signature_fast,
)

__version__ = "0.1.0"
