"""Exact characteristic quasi-polynomials of integral arrangements."""

from .arrangement import (
    Arrangement,
    SubsetProfile,
    dedup_columns,
    e_of_J_d,
    e_sets_by_size,
    lcm_period,
    load_matrix,
    parse_matrix_text,
    subset_profile,
)
from .errors import (
    ContractError,
    InputError,
    IntegrityError,
    QuasicharError,
    ResourceError,
)
from .families import (
    RootSystemSpec,
    family_from_id,
    midhyperplane,
    root_system_arrangement,
    root_system_gf,
    root_system_quasipoly,
    root_system_spec,
)
from .genfunc import (
    FactoredGF,
    RationalGF,
    derivative_at_one,
    gf_from_quasipoly,
    q_polynomial,
    quasipoly_from_gf,
    residue_slice,
    series_expand,
    series_expand_factored,
    simplify,
    to_canonical,
)
from .intmat import IntMatrix, SmithProfile, rank, smith_profile
from .oracle import count_complement
from .quasipoly import (
    IntPolynomial,
    QuasiPolynomial,
    characteristic_quasipolynomial,
    combine,
    constituent_via_interpolation,
    constituent_via_subsets,
    degree_defect,
    evaluate,
    format_poly,
    minimum_period,
    poly_from_roots,
    reduce_to_minimum_period,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
