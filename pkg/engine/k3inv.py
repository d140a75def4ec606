# k3census/engine/k3inv.py
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from .quadlattice import GramLattice, direct_sum, exceptional_gram, signature
from .stratum import Basket, WeightSystem, analyze
from .utils import K3_SECOND_BETTI
from .wps import h0

logger = logging.getLogger("engine.k3inv")

MIN_LINK_B2 = 3
MAX_LINK_B2 = 21


class InvariantError(ValueError):
    pass


def is_k3(ws: WeightSystem) -> bool:
    return sum(ws.degrees) == sum(ws.weights)


def b2_orbifold(basket: Basket) -> int:
    total = basket.total()
    if total > 19:
        raise InvariantError(f"exceptional rank {total} exceeds the Picard bound 19")
    return K3_SECOND_BETTI - total


def link_descriptor(b2_link: int) -> str:
    return f"#{b2_link}(S2xS3)"


def link_invariants(b2_orb: int):
    """(b2 of the link, its diffeomorphism type as a connected sum of S2xS3)."""
    if b2_orb == 3:
        raise InvariantError("b2 = 3: no projective K3 surface with only rational double points has second Betti number 3")
    if not 4 <= b2_orb <= K3_SECOND_BETTI:
        raise InvariantError(f"orbifold b2 {b2_orb} outside 4..{K3_SECOND_BETTI}")
    k = b2_orb - 1
    return k, link_descriptor(k)


def moduli_dim(b2_link: int) -> int:
    if b2_link < MIN_LINK_B2:
        raise InvariantError(f"moduli dimension needs b2 of the link >= {MIN_LINK_B2}, got {b2_link}")
    return 2 * (b2_link - 2)


def moduli_dim_polynomial(ws: WeightSystem) -> int:
    """2 (h0(O(d)) - sum h0(O(w_i))): coefficients of f modulo weighted coordinate changes."""
    if ws.codim != 1:
        raise InvariantError(f"{ws.label}: polynomial moduli count is defined for hypersurfaces only")
    if not is_k3(ws):
        raise InvariantError(f"{ws.label}: fails the K3 condition")
    d = ws.degrees[0]
    return 2 * (h0(ws.weights, d) - sum(h0(ws.weights, w) for w in ws.weights))


def polarization_lattice(basket: Basket) -> GramLattice:
    """
    Rank-(1 + sum n) lattice M: the polarization class (positive, orthogonal
    to the exceptional curves) plus the (-2)-curve configuration.
    """
    return direct_sum(GramLattice.of([[2]]), exceptional_gram(basket.expanded()))


def dolgachev_dim(basket: Basket) -> int:
    """Dimension 20 - rank(M) of the moduli of M-polarized K3 surfaces."""
    if basket.total() >= 19:
        raise InvariantError(f"exceptional rank {basket.total()} leaves no room in the Neron-Severi lattice")
    M = polarization_lattice(basket)
    pos, neg, zero = signature(M)
    if (pos, zero) != (1, 0):
        raise ArithmeticError(f"polarization lattice has signature {(pos, neg, zero)}, expected hyperbolic")
    return 20 - M.rank


@dataclass(frozen=True)
class PeriodQuadric:
    ambient: str
    ambient_dim: int
    condition: str
    complex_dim: int

    @property
    def real_dim(self) -> int:
        return 2 * self.complex_dim

    def to_dict(self) -> Dict:
        return {
            "ambient": self.ambient,
            "ambient_dim": self.ambient_dim,
            "condition": self.condition,
            "complex_dim": self.complex_dim,
            "real_dim": self.real_dim,
        }


def period_quadric_descriptor(b2_link: int) -> PeriodQuadric:
    if b2_link < MIN_LINK_B2:
        raise InvariantError(f"period domain needs b2 of the link >= {MIN_LINK_B2}, got {b2_link}")
    n = b2_link - 1
    return PeriodQuadric(
        ambient=f"CP^{n}",
        ambient_dim=n,
        condition="([a],[a]) = 0, ([a],[conj a]) > 0",
        complex_dim=b2_link - 2,
    )


@dataclass(frozen=True)
class K3Record:
    ws: WeightSystem
    basket: Basket
    b2_orbifold: int
    b2_link: int
    k: int
    moduli_dim: int
    link: str
    moduli_dim_polynomial: Optional[int]
    dolgachev_dim: int
    period_quadric: PeriodQuadric = field(compare=False)

    @property
    def moduli_agree(self) -> bool:
        dims = {self.moduli_dim, 2 * self.dolgachev_dim}
        if self.moduli_dim_polynomial is not None:
            dims.add(self.moduli_dim_polynomial)
        return len(dims) == 1

    def to_dict(self) -> Dict:
        return {
            "weights": list(self.ws.weights),
            "degrees": list(self.ws.degrees),
            "codim": self.ws.codim,
            "basket": self.basket.canonical(),
            "basket_expanded": self.basket.expanded(),
            "b2_orbifold": self.b2_orbifold,
            "b2_link": self.b2_link,
            "k": self.k,
            "link": self.link,
            "moduli_dim": self.moduli_dim,
            "moduli_dim_polynomial": self.moduli_dim_polynomial,
            "dolgachev_dim": self.dolgachev_dim,
            "moduli_agree": self.moduli_agree,
            "period_quadric": self.period_quadric.to_dict(),
        }


def build_record(ws: WeightSystem, basket: Optional[Basket] = None) -> K3Record:
    """All invariants of a K3 weight system; analyzes it when no basket is given."""
    if basket is None:
        basket = analyze(ws)
    b2 = b2_orbifold(basket)
    b2_link, descriptor = link_invariants(b2)
    moduli = moduli_dim(b2_link)
    dolgachev = dolgachev_dim(basket)
    if 2 * dolgachev != moduli:
        raise ArithmeticError(f"{ws.label}: 2 x {dolgachev} != {moduli}")
    poly = moduli_dim_polynomial(ws) if ws.codim == 1 else None
    if poly is not None and poly != moduli:
        logger.info("%s: polynomial moduli count %d differs from 2(k-2) = %d", ws.label, poly, moduli)
    return K3Record(
        ws=ws,
        basket=basket,
        b2_orbifold=b2,
        b2_link=b2_link,
        k=b2_link,
        moduli_dim=moduli,
        link=descriptor,
        moduli_dim_polynomial=poly,
        dolgachev_dim=dolgachev,
        period_quadric=period_quadric_descriptor(b2_link),
    )
