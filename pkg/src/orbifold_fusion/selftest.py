"""Acceptance fixtures run by ``orbifold-fusion selftest``.

Each fixture builds one example and returns ``(name, expected, actual)`` outcomes.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, List

from orbifold_fusion.catalog.enumeration import enumerate_paper_labels
from orbifold_fusion.catalog.equivalence import EquivalencePolicy, equivalence_classes
from orbifold_fusion.catalog.labels import TwistedLabel
from orbifold_fusion.data.builders import build_example
from orbifold_fusion.data.reports import class_counts
from orbifold_fusion.fusion.qdim import global_dimension, sigma_fixed_discriminant
from orbifold_fusion.fusion.rules import fuse
from orbifold_fusion.meta_config import LabelMode
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.twisted.characters import prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outcome(object):
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def load(builder: str) -> Orbifold:
    return Orbifold(build_example(builder).setting())


def r_sigma_values(orb: Orbifold) -> tuple:
    r = orb.r_sigma
    return r.orbit_count, r.m_count, r.twisted_square


def _a2_double() -> List[Outcome]:
    orb = load("a2-double")
    outcomes = [
        Outcome("a2-double R_sigma, R_sigma & M, qdim^2", (2, 1, 3), r_sigma_values(orb)),
        Outcome(
            "a2-double paper counts",
            (12, 24, 12),
            tuple(enumerate_paper_labels(orb).counts[k] for k in ("type1", "type2", "twisted")),
        ),
        Outcome("a2-double characters", 4, len(orb.characters)),
        Outcome("a2-double self-dual characters", True, all(prime(chi) == chi for chi in orb.characters)),
        Outcome("a2-double real characters", True, all(e % 2 == 0 for chi in orb.characters for e in chi.exponents)),
    ]

    unit_character = orb.characters[0]
    shapes = []
    for chi in orb.characters[1:]:
        for s1 in (1, -1):
            for s2 in (1, -1):
                product = fuse(orb, TwistedLabel(0, unit_character, s1), TwistedLabel(0, chi, s2))
                labels = product.labels()
                shapes.append(
                    (
                        [x.kind.tag for x in labels],
                        getattr(labels[-1], "sign", None) == s1 * s2,
                        product.total_qdim(orb),
                    )
                )
    outcomes.append(Outcome("a2-double twisted x twisted goldens", [(["type1", "type2"], True, 3)] * 12, shapes))

    classes = equivalence_classes(orb, enumerate_paper_labels(orb).labels, EquivalencePolicy(LabelMode.CANONICAL))
    counts = class_counts(classes)
    outcomes.append(Outcome("a2-double canonical classes", (3, 6, 6), (counts["type1"], counts["type2"], counts["twisted"])))
    outcomes.append(Outcome("a2-double global dimension", 36, global_dimension(orb, [c.representative for c in classes])))
    return outcomes


def _rank1_doubles() -> List[Outcome]:
    outcomes = []
    for k in range(1, 7):
        orb = load("rank1-double:%d" % k)
        outcomes.append(Outcome("rank1-double:%d qdim^2" % k, 2 * k, orb.r_sigma.twisted_square))
    orb = load("perm-double:[[2,-1],[-1,2]]")
    outcomes.append(Outcome("perm-double A2 qdim^2", 3, orb.r_sigma.twisted_square))
    outcomes.append(Outcome("perm-double A2 R_sigma & M", 1, orb.r_sigma.m_count))
    orb = load("perm-double:[[2,0],[0,2]]")
    outcomes.append(Outcome("perm-double diag(2,2) R_sigma & M is not 1", True, orb.r_sigma.m_count != 1))
    return outcomes


def _a_n_odd() -> List[Outcome]:
    outcomes = []
    for n in (3, 5, 7, 9):
        l = (n - 1) // 2
        expected = (l - l // 2 + 1, 2 if l % 2 else 1, l + 1)
        outcomes.append(Outcome("an-dynkin:%d R_sigma" % n, expected, r_sigma_values(load("an-dynkin:%d" % n))))
    return outcomes


def _a_n_even() -> List[Outcome]:
    outcomes = []
    for n in (2, 4, 6, 8):
        l = n // 2
        orb = load("an-dynkin:%d" % n)
        outcomes.append(Outcome("an-dynkin:%d even core index" % n, 2, orb.setting.even_core_index))
        outcomes.append(Outcome("an-dynkin:%d |Qbar/L|" % n, 2 ** (l - 1), len(orb.transversal)))
        outcomes.append(Outcome("an-dynkin:%d R_sigma" % n, (l + 1, 1, 2 * l + 1), r_sigma_values(orb)))

        classes = equivalence_classes(orb, enumerate_paper_labels(orb).labels, EquivalencePolicy(LabelMode.CANONICAL))
        total = global_dimension(orb, [c.representative for c in classes])
        twisted = class_counts(classes)["twisted"]
        outcomes.append(Outcome("an-dynkin:%d global dimension" % n, 4 * orb.core_discriminant.order, total))
        outcomes.append(Outcome("an-dynkin:%d twisted classes" % n, 2 * sigma_fixed_discriminant(orb), twisted))
        if n in (4, 8):
            outcomes.append(Outcome("an-dynkin:%d global dimension and twisted classes" % n, (16 * (n + 1), 8), (total, twisted)))
    return outcomes


def _global_dimensions() -> List[Outcome]:
    outcomes = []
    for builder, total, twisted in (("neg-identity:[[2]]", 8, 4), ("an-dynkin:3", 16, 4)):
        orb = load(builder)
        classes = equivalence_classes(orb, enumerate_paper_labels(orb).labels, EquivalencePolicy(LabelMode.CANONICAL))
        outcomes.append(Outcome("%s global dimension" % builder, total, global_dimension(orb, [c.representative for c in classes])))
        outcomes.append(Outcome("%s twisted classes" % builder, twisted, class_counts(classes)["twisted"]))
        outcomes.append(Outcome("%s sigma-fixed discriminant" % builder, twisted, 2 * sigma_fixed_discriminant(orb)))
    orb = load("neg-identity:[[2]]")
    outcomes.append(Outcome("neg-identity:[[2]] signed labels", 8, enumerate_paper_labels(orb).counts["total_signed"]))
    return outcomes


FIXTURES: List[Callable[[], List[Outcome]]] = [_a2_double, _rank1_doubles, _a_n_odd, _a_n_even, _global_dimensions]


def run_selftest() -> List[Outcome]:
    outcomes = []
    for fixture in FIXTURES:
        logger.info("running %s", fixture.__name__.lstrip("_"))
        outcomes.extend(fixture())
    return outcomes
