"""Exact Pin(2) representation-ring calculator: ideals, spectrum classes,
and Furuta-style bounds on spin intersection forms."""

from .bounds import (
    BoundaryData,
    IntersectionForm,
    Status,
    Verdict,
    bauer_chain_check,
    bohr_lee_bound,
    canonical_bauer_chain,
    conjecture_11_8,
    definite_bound,
    emit_xi_table,
    furuta_closed,
    orbifold_bound,
    parse_manifold,
    relative_10_8,
    rokhlin_consistency,
    split_bound,
    xi_bounds,
)
from .ideals import IdealForm, ideal_from_generators, ideal_product, ideal_sum
from .ring import LaurentElem, RingElem, parse
from .spectra import (
    FreeCell,
    GroupSuspension,
    RepSphere,
    SpectrumClass,
    SwfSpace,
    TorusSuspension,
    brieskorn_class,
    brieskorn_kappa,
    ideal_of,
    psc_kappa,
    s3_class,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
