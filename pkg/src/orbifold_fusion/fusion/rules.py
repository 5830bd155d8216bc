"""Fusion products of irreducible orbifold modules.

Arguments are sorted (type 1 < type 2 < twisted, then by label), so every product is
commutative by construction. Twisted outputs shift ``lambda`` by the partner
``lambda0(mu)`` so that they stay in the dual of the projected lattice.
"""
from collections import Counter
from typing import Callable, Dict, Iterable, List, Tuple

from sympy import expand, sqrt

from orbifold_fusion.catalog.labels import (
    ModuleLabel,
    TwistedLabel,
    Type1Label,
    Type2Label,
    fold,
    position,
    twisted,
    untwisted,
)
from orbifold_fusion.exceptions import SettingMismatch
from orbifold_fusion.fusion.qdim import qdim, sigma_orbits
from orbifold_fusion.meta_config import ModuleType
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.signs.cocycle import pi_sign, sign
from orbifold_fusion.twisted.characters import c_chi, prime, solve_char_equation, twist


class FusionSum(object):
    """Multiset of module labels with positive multiplicities."""

    def __init__(self, terms: Iterable[ModuleLabel] = ()) -> None:
        self.counts = Counter(terms)

    def add(self, label: ModuleLabel, multiplicity: int = 1) -> None:
        self.counts[label] += multiplicity

    def items(self) -> List[Tuple[ModuleLabel, int]]:
        return sorted(self.counts.items(), key=lambda item: item[0].sort_key)

    def labels(self) -> List[ModuleLabel]:
        return [label for label, _ in self.items()]

    def total_qdim(self, orb: Orbifold):
        return expand(sum(m * qdim(orb, label).value for label, m in self.counts.items()))

    def __len__(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionSum):
            return NotImplemented
        return self.counts == other.counts

    def __repr__(self) -> str:
        return "FusionSum(%s)" % self.items()


def qdim_product(orb: Orbifold, a: ModuleLabel, b: ModuleLabel):
    return sqrt(qdim(orb, a).square * qdim(orb, b).square)


def _signed_pair(orb: Orbifold, lam, mu) -> List[ModuleLabel]:
    if orb.setting.L_minus.twice_in(mu):
        return [Type2Label(lam, mu, 1), Type2Label(lam, mu, -1)]
    return [Type1Label(lam, fold(orb, mu))]


def _type1_type1(orb: Orbifold, a: Type1Label, b: Type1Label) -> List[ModuleLabel]:
    s = orb.setting
    lam = s.L_plus.add(a.lam, b.lam)
    return _signed_pair(orb, lam, s.L_minus.add(a.mu, b.mu)) + _signed_pair(orb, lam, s.L_minus.subtract(a.mu, b.mu))


def _type1_type2(orb: Orbifold, a: Type1Label, b: Type2Label) -> List[ModuleLabel]:
    s = orb.setting
    return [untwisted(orb, s.L_plus.add(a.lam, b.lam), s.L_minus.add(a.mu, b.mu))]


def _type2_type2(orb: Orbifold, a: Type2Label, b: Type2Label) -> List[ModuleLabel]:
    s = orb.setting
    product_sign = a.sign * b.sign * pi_sign(s.L_minus, a.mu, 2 * b.mu.vector)
    return [Type2Label(s.L_plus.add(a.lam, b.lam), s.L_minus.add(a.mu, b.mu), product_sign)]


def _shifted_lambda(orb: Orbifold, a, t: TwistedLabel):
    return a.lam.vector - orb.partner(a.mu).vector + position(orb, t)


def _type1_twisted(orb: Orbifold, a: Type1Label, t: TwistedLabel) -> List[ModuleLabel]:
    chi = twist(t.character, a.mu)
    lam = _shifted_lambda(orb, a, t)
    return [twisted(orb, lam, chi, 1), twisted(orb, lam, chi, -1)]


def _type2_twisted(orb: Orbifold, a: Type2Label, t: TwistedLabel) -> List[ModuleLabel]:
    output_sign = a.sign * t.sign * c_chi(t.character, a.mu)
    return [twisted(orb, _shifted_lambda(orb, a, t), twist(t.character, a.mu), output_sign)]


def _twisted_twisted(orb: Orbifold, t: TwistedLabel, u: TwistedLabel) -> List[ModuleLabel]:
    s = orb.setting
    base = position(orb, t) + position(orb, u)
    solutions = solve_char_equation(t.character, prime(u.character))
    outputs = []
    for orbit in sigma_orbits(orb, solutions):
        mu = orbit[0]
        lam = s.L_plus.reduce(base + orb.partner(mu).vector)
        if s.L_minus.twice_in(mu):
            output_sign = t.sign * u.sign * c_chi(t.character, mu) * sign(int(2 * s.L_minus.norm(mu.vector)))
            outputs.append(Type2Label(lam, mu, output_sign))
        else:
            outputs.append(Type1Label(lam, mu))
    return outputs


_RULES: Dict[Tuple[ModuleType, ModuleType], Callable] = {
    (ModuleType.TYPE1, ModuleType.TYPE1): _type1_type1,
    (ModuleType.TYPE1, ModuleType.TYPE2): _type1_type2,
    (ModuleType.TYPE2, ModuleType.TYPE2): _type2_type2,
    (ModuleType.TYPE1, ModuleType.TWISTED): _type1_twisted,
    (ModuleType.TYPE2, ModuleType.TWISTED): _type2_twisted,
    (ModuleType.TWISTED, ModuleType.TWISTED): _twisted_twisted,
}


def _check_setting(orb: Orbifold, x: ModuleLabel) -> None:
    if isinstance(x, TwistedLabel):
        if x.character.data is not orb.central and x.character not in orb.characters:
            raise SettingMismatch("twisted label %s belongs to another setting" % (x,))
    elif x.lam.vector.rows != orb.setting.dimension:
        raise SettingMismatch("label %s belongs to another setting" % (x,))


def fuse(orb: Orbifold, a: ModuleLabel, b: ModuleLabel) -> FusionSum:
    _check_setting(orb, a)
    _check_setting(orb, b)
    a, b = sorted((a, b), key=lambda x: x.sort_key)
    return FusionSum(_RULES[(a.kind, b.kind)](orb, a, b))
