# k3census/engine/oracle.py
"""
Independent count of the points a general member meets on a singular
stratum: instantiate the restricted equations with random integer
coefficients on their full monomial support and count common zeros in the
torus of the stratum with exact polynomial algebra (gcds, squarefree parts,
resultants). No polytope is ever built here.
"""
import logging
import random
from typing import Dict, List, Sequence, Tuple

from sympy import Poly, gcd, resultant, symbols

from .exactgeom import monomials_of_degree, null_lattice_basis, project_to_null_lattice
from .stratum import WeightSystem
from .wps import Stratum

logger = logging.getLogger("engine.oracle")

_s, _t = symbols("s t")
MAX_DRAWS = 20


class OracleError(RuntimeError):
    pass


def _coefficient(rng: random.Random) -> int:
    return rng.randint(1, 97) * rng.choice((-1, 1))


def _laurent_support(exponents: Sequence[Tuple[int, ...]], weights_I: Sequence[int]) -> List[Tuple[int, ...]]:
    """Torus coordinates of the support, shifted into the non-negative orthant."""
    coords = project_to_null_lattice(exponents, null_lattice_basis(weights_I))
    lows = [min(c[k] for c in coords) for k in range(len(coords[0]))]
    return [tuple(c[k] - lows[k] for k in range(len(c))) for c in coords]


def _univariate(support: Sequence[Tuple[int]], rng: random.Random) -> Poly:
    return Poly.from_dict({(c[0],): _coefficient(rng) for c in support}, _t)


def _bivariate(support: Sequence[Tuple[int, int]], rng: random.Random) -> Poly:
    return Poly.from_dict({(c[0], c[1]): _coefficient(rng) for c in support}, _s, _t)


def _nonzero_root_count(p: Poly) -> int:
    """Degree once the factor of the variable at zero is divided out."""
    if p.is_zero:
        raise OracleError("polynomial vanished identically")
    low = min(m[0] for m in p.monoms())
    return p.degree() - low


def _count_edge(supports: Sequence[List[Tuple[int]]], rng: random.Random) -> int:
    polys = [_univariate(s, rng) for s in supports]
    common = polys[0]
    for p in polys[1:]:
        common = common.gcd(p)
    return _nonzero_root_count(common.sqf_part())


def _escapes(f: Poly, g: Poly) -> bool:
    """True when f and g share a root with s != 0 and t = 0 or t = infinity."""
    for a, b in ((f.as_expr().subs(_t, 0), g.as_expr().subs(_t, 0)),
                 (Poly(f.as_expr(), _t).LC(), Poly(g.as_expr(), _t).LC())):
        common = Poly(gcd(a, b), _s)
        if common.is_zero or _nonzero_root_count(common) > 0:
            return True
    return False


def _count_face(supports: Sequence[List[Tuple[int, int]]], rng: random.Random) -> int:
    for _ in range(MAX_DRAWS):
        f, g = (_bivariate(s, rng) for s in supports)
        if _escapes(f, g):
            logger.debug("re-drawing coefficients: common root outside the torus")
            continue
        r = Poly(resultant(f.as_expr(), g.as_expr(), _t), _s)
        if r.is_zero:
            continue
        # every torus zero is simple for general coefficients
        return _nonzero_root_count(r)
    raise OracleError(f"no admissible coefficients after {MAX_DRAWS} draws")


def stratum_multiplicity_oracle(ws: WeightSystem, stratum: Stratum, rng: random.Random) -> int:
    """Number of points of a general member in the torus of a 1- or 2-dimensional stratum."""
    if stratum.dimension not in (1, 2):
        raise ValueError(f"oracle counts edges and faces, got {stratum.indices}")
    weights_I = stratum.weights_of(ws.weights)
    supports = [monomials_of_degree(weights_I, d) for d in ws.degrees]
    live = [s for s in supports if s]
    if not live:
        raise OracleError(f"{ws.label}: every equation vanishes on {stratum.indices}")
    if stratum.dimension == 1:
        return _count_edge([_laurent_support(s, weights_I) for s in live], rng)
    if len(live) != 2:
        raise OracleError(f"{ws.label}: face {stratum.indices} meets X in a curve")
    return _count_face([_laurent_support(s, weights_I) for s in live], rng)


def basket_oracle(ws: WeightSystem, strata: Sequence[Stratum], rng: random.Random) -> Dict[Tuple[int, ...], int]:
    return {st.indices: stratum_multiplicity_oracle(ws, st, rng) for st in strata}
