from orbifold_fusion.catalog.labels import ModuleLabel, TwistedLabel, Type1Label, Type2Label, fold, position, twisted
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.twisted.characters import prime


def vacuum(orb: Orbifold) -> Type2Label:
    s = orb.setting
    return Type2Label(s.L_plus.reduce(s.L_plus.zero()), s.L_minus.reduce(s.L_minus.zero()), 1)


def contragredient(orb: Orbifold, x: ModuleLabel) -> ModuleLabel:
    s = orb.setting
    if isinstance(x, TwistedLabel):
        return twisted(orb, -position(orb, x), prime(x.character), x.sign)
    lam = s.L_plus.negate(x.lam)
    if isinstance(x, Type1Label):
        return Type1Label(lam, fold(orb, s.L_minus.negate(x.mu)))
    flips = int(2 * s.L_minus.norm(x.mu.vector)) % 2
    return Type2Label(lam, s.L_minus.negate(x.mu), -x.sign if flips else x.sign)
