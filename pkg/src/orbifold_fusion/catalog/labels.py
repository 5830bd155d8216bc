"""Labels of the irreducible orbifold modules and their text identifiers.

Identifiers print coset vectors by their integer pairings with the basis of the modulus:

* ``type1:<lambda>/<mu>``
* ``type2:<lambda>/<mu>:<+|->``
* ``twisted:<lambda class>:<chi name>:<+|->``, with the class written ``<i>+<offset>`` when the
  twisted module sits off the class representative by a vector of ``(pi+ Qbar)* & pi+ Qbar``
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from orbifold_fusion.exceptions import BadLabel, OrbifoldFusionError
from orbifold_fusion.lattice.sublattice import CosetVector, Sublattice
from orbifold_fusion.meta_config import ModuleType
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.twisted.characters import CentralCharacter


def _sign_key(sign: int) -> int:
    return 0 if sign > 0 else 1


def sign_symbol(sign: int) -> str:
    return "+" if sign > 0 else "-"


class ModuleLabel(object):
    kind: ModuleType

    @property
    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other: "ModuleLabel") -> bool:
        return self.sort_key < other.sort_key


@dataclass(frozen=True)
class Type1Label(ModuleLabel):
    lam: CosetVector
    mu: CosetVector

    kind = ModuleType.TYPE1

    @property
    def sort_key(self) -> tuple:
        return self.kind.value, self.lam.sort_key, self.mu.sort_key, 0


@dataclass(frozen=True)
class Type2Label(ModuleLabel):
    lam: CosetVector
    mu: CosetVector
    sign: int

    kind = ModuleType.TYPE2

    @property
    def sort_key(self) -> tuple:
        return self.kind.value, self.lam.sort_key, self.mu.sort_key, _sign_key(self.sign)


@dataclass(frozen=True)
class TwistedLabel(ModuleLabel):
    """Twisted module at the lambda class ``lam_index`` with central character ``character``.

    ``offset`` is the position of lambda relative to the class representative, modulo
    ``L+``. It lies in ``(pi+ Qbar)* & pi+ Qbar`` and is ``None`` at the representative
    itself. Sort keys, and with them the paper-mode classes, leave it out.
    """

    lam_index: int
    character: CentralCharacter
    sign: int
    offset: Optional[CosetVector] = None

    kind = ModuleType.TWISTED

    @property
    def sort_key(self) -> tuple:
        return self.kind.value, (self.lam_index,), self.character.sort_key, _sign_key(self.sign)


def fold(orb: Orbifold, mu: CosetVector) -> CosetVector:
    """Representative of ``{mu, -mu}``."""
    negative = orb.setting.L_minus.negate(mu)
    return min(mu, negative, key=lambda c: c.sort_key)


def untwisted(orb: Orbifold, lam: CosetVector, mu: CosetVector, sign: Optional[int] = None) -> ModuleLabel:
    """Type 1 label when ``2 mu`` is outside ``L-``, otherwise the type 2 label with ``sign``."""
    if orb.setting.L_minus.twice_in(mu):
        if sign is None:
            raise BadLabel("a sign is needed for the type 2 label at %s" % mu)
        return Type2Label(lam, mu, sign)
    return Type1Label(lam, fold(orb, mu))


def twisted(orb: Orbifold, lam_vector, character: CentralCharacter, sign: int) -> TwistedLabel:
    lam = orb.reduce_plus(lam_vector)
    index = orb.lambda_classes.index_of(lam)
    offset = orb.reduce_plus(lam.vector - orb.lambda_classes.representatives[index].vector)
    return TwistedLabel(index, character, sign, None if offset.is_zero else offset)


def position(orb: Orbifold, t: TwistedLabel):
    """Vector of ``lambda`` for a twisted label, representative plus offset."""
    representative = orb.lambda_classes.representatives[t.lam_index].vector
    return representative if t.offset is None else representative + t.offset.vector


def check_label(orb: Orbifold, label: ModuleLabel) -> None:
    if isinstance(label, TwistedLabel):
        if not 0 <= label.lam_index < len(orb.lambda_classes):
            raise BadLabel("lambda class %d out of range" % label.lam_index)
        if label.character not in orb.characters:
            raise BadLabel("character %s does not belong to this setting" % label.character)
        if label.offset is not None and twisted(orb, position(orb, label), label.character, label.sign) != label:
            raise BadLabel("offset %s leaves lambda class %d" % (label.offset, label.lam_index))
        return
    if not orb.in_core_dual(label.lam, label.mu):
        raise BadLabel("lambda + mu is not in the dual of the even core")
    doubled = orb.setting.L_minus.twice_in(label.mu)
    if isinstance(label, Type1Label) and (doubled or fold(orb, label.mu) != label.mu):
        raise BadLabel("type 1 labels need 2 mu outside L- and a folded mu")
    if isinstance(label, Type2Label) and not doubled:
        raise BadLabel("type 2 labels need 2 mu in L-")


def _format_coords(sub: Sublattice, c: CosetVector) -> str:
    if sub.rank == 0:
        return "-"
    return ",".join(str(x) for x in sub.dual_coordinates(c))


def _parse_coords(sub: Sublattice, text: str) -> CosetVector:
    if text == "-":
        values = []
    else:
        try:
            values = [int(x) for x in text.split(",")]
        except ValueError:
            raise BadLabel("cannot read coordinates %r" % text)
    try:
        return sub.from_dual_coordinates(values)
    except OrbifoldFusionError as e:
        raise BadLabel(str(e))


def _parse_sign(text: str) -> int:
    if text not in ("+", "-"):
        raise BadLabel("sign must be + or -, got %r" % text)
    return 1 if text == "+" else -1


def _format_class(orb: Orbifold, label: TwistedLabel) -> str:
    if label.offset is None:
        return str(label.lam_index)
    return "%d+%s" % (label.lam_index, _format_coords(orb.setting.L_plus, label.offset))


def _parse_class(orb: Orbifold, text: str) -> Tuple[int, Optional[CosetVector]]:
    index_text, _, offset_text = text.partition("+")
    try:
        index = int(index_text)
    except ValueError:
        raise BadLabel("lambda class index must be an integer, got %r" % index_text)
    if not offset_text:
        return index, None
    offset = _parse_coords(orb.setting.L_plus, offset_text)
    return index, None if offset.is_zero else offset


def format_label(orb: Orbifold, label: ModuleLabel) -> str:
    s = orb.setting
    if isinstance(label, TwistedLabel):
        return "twisted:%s:%s:%s" % (_format_class(orb, label), label.character.name, sign_symbol(label.sign))
    pair = "%s/%s" % (_format_coords(s.L_plus, label.lam), _format_coords(s.L_minus, label.mu))
    if isinstance(label, Type2Label):
        return "type2:%s:%s" % (pair, sign_symbol(label.sign))
    return "type1:%s" % pair


def parse_label(orb: Orbifold, text: str) -> ModuleLabel:
    s = orb.setting
    parts = text.strip().split(":")
    kind = parts[0]
    if kind == "twisted" and len(parts) == 4:
        index, offset = _parse_class(orb, parts[1])
        label = TwistedLabel(index, orb.character(parts[2]), _parse_sign(parts[3]), offset)
    elif kind in ("type1", "type2") and len(parts) == (2 if kind == "type1" else 3):
        coords = parts[1].split("/")
        if len(coords) != 2:
            raise BadLabel("expected <lambda>/<mu> in %r" % text)
        lam, mu = _parse_coords(s.L_plus, coords[0]), _parse_coords(s.L_minus, coords[1])
        if kind == "type1":
            label = Type1Label(lam, fold(orb, mu))
        else:
            label = Type2Label(lam, mu, _parse_sign(parts[2]))
    else:
        raise BadLabel("cannot parse module label %r" % text)
    check_label(orb, label)
    return label


def label_fields(orb: Orbifold, label: ModuleLabel) -> Tuple[str, str, str, str]:
    """Columns used by the tabular renderers: kind, lambda, mu or chi, sign."""
    s = orb.setting
    if isinstance(label, TwistedLabel):
        return label.kind.tag, _format_class(orb, label), label.character.name, sign_symbol(label.sign)
    sign = sign_symbol(label.sign) if isinstance(label, Type2Label) else ""
    return label.kind.tag, _format_coords(s.L_plus, label.lam), _format_coords(s.L_minus, label.mu), sign
