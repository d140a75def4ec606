# k3census/engine/__init__.py

from .errors import AnalysisError
from .exactgeom import hull_and_area, minkowski_sum, mixed_volume2, monomials_of_degree, null_lattice_basis, segment_length
from .wps import h0, is_well_formed, singular_strata
from .stratum import Basket, BasketEntry, WeightSystem, analyze
from .k3inv import K3Record, build_record, moduli_dim, moduli_dim_polynomial
from .census import (
    CatalogParseError,
    VerificationReport,
    bundled_catalog,
    classify,
    enumerate_codim1,
    load_catalog,
    quasismooth_codim1,
    verify_catalog,
)
from .quadlattice import GramLattice, gram_E8, gram_H, k3_gram, hyperbolic_embedding, signature
