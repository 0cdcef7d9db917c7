"""Computable commutation structure for finite-dimensional Hermitian matrices.

The package turns operator-level statements about commutants,
anticommutants, second commutants and relation-preserving maps into
seeded, reproducible desk-scale computations:

* :mod:`~commutant_lab.hermitian` — the binary relations (commute,
  anticommute, either) with tolerance semantics, plus seeded sampling of
  Hermitian matrices, projections and Haar unitaries;
* :mod:`~commutant_lab.commutant` — commutant / anticommutant /
  quasi-commutant / second-commutant subspaces via realified kernel
  solves, subspace comparison and refutation search;
* :mod:`~commutant_lab.spectral` — clustered eigendecomposition,
  two-point-spectrum and primitivity predicates, partition oracles and the
  explicit block fixtures;
* :mod:`~commutant_lab.preservers` — maps ``A -> c U A U* + shift(A) I``
  (optionally antiunitary), triadic-relation property runs, necessity and
  rigidity searches;
* :mod:`~commutant_lab.suites` / :mod:`~commutant_lab.cli` — the named
  verification suites and the ``commutant-lab`` command-line harness.
"""

from .commutant import (
    MatrixSubspace,
    QuasiCommutant,
    anticommutant,
    bicommutant,
    commutant,
    hermitian_basis,
    noncommuting_anticommuting_partner,
    quasi_commutant,
    quasi_equals_commutant,
    refute_biquasi_membership,
    scalar_witness,
    subspace_eq,
    subspace_leq,
    subspace_proper_lt,
)
from .hermitian import (
    Tolerance,
    as_hermitian,
    commutator,
    frobenius,
    is_hermitian,
    is_scalar,
    jordan_product,
    random_hermitian,
    random_projection,
    random_scalar,
    random_unitary,
    rel_c,
    rel_j,
    rel_q,
    sample,
    triadic_relation,
)
from .matrixfile import load_matrix, matrix_to_payload, payload_to_matrix, save_matrix
from .preservers import (
    PreserverMap,
    SearchExhausted,
    ShiftPolicy,
    TrialReport,
    Violation,
    apply_map,
    check_triadic,
    compose,
    is_violation,
    lemma4_check,
    make_shift_policy,
    necessity_search,
    property_run,
)
from .spectral import (
    SpectralData,
    apply_function,
    build_aef,
    distinct_count,
    has_two_point_spectrum,
    in_k,
    is_primitive,
    lemma18_minimality,
    lemma18_witness,
    lemma181_condition,
    lemma181_oracle,
    lemma_primitive_witnesses,
    projection_decomposition,
    spectral_decompose,
)
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"
