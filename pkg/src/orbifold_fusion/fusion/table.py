"""Full fusion tables and the ring checks run over them."""
import functools
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from sympy import expand

from orbifold_fusion.catalog.duality import contragredient, vacuum
from orbifold_fusion.catalog.enumeration import enumerate_paper_labels
from orbifold_fusion.catalog.equivalence import Classifier, EquivalencePolicy, LabelClass
from orbifold_fusion.catalog.labels import ModuleLabel, format_label
from orbifold_fusion.exceptions import VerificationFailure
from orbifold_fusion.fusion.base import base_fuse, project, projected_product
from orbifold_fusion.fusion.qdim import qdim
from orbifold_fusion.fusion.rules import FusionSum, fuse
from orbifold_fusion.meta_config import LabelMode, RunConfig
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.utils.utils import parallel_map

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass
class FusionTable(object):
    orbifold: Orbifold
    mode: LabelMode
    classifier: Classifier = field(repr=False)
    label_products: Dict[Pair, FusionSum] = field(repr=False)
    products: Dict[Pair, Counter] = field(repr=False)

    @property
    def classes(self) -> List[LabelClass]:
        return self.classifier.classes

    @property
    def representatives(self) -> List[ModuleLabel]:
        return [c.representative for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)

    def product(self, i: int, j: int) -> Counter:
        return self.products[(min(i, j), max(i, j))]

    def multiplicity(self, i: int, j: int, k: int) -> int:
        return self.product(i, j)[k]

    def to_frame(self) -> pd.DataFrame:
        names = [format_label(self.orbifold, x) for x in self.representatives]
        rows = []
        for (i, j), counts in sorted(self.products.items()):
            rows.append(
                {
                    "left": names[i],
                    "right": names[j],
                    "product": " + ".join(
                        names[k] if m == 1 else "%d*%s" % (m, names[k]) for k, m in sorted(counts.items())
                    ),
                }
            )
        return pd.DataFrame(rows, columns=["left", "right", "product"])


def _fuse_pair(orb: Orbifold, representatives: List[ModuleLabel], pair: Pair) -> FusionSum:
    i, j = pair
    return fuse(orb, representatives[i], representatives[j])


def _class_counts(classifier: Classifier, result: FusionSum) -> Counter:
    counts = Counter()
    for label, m in result.counts.items():
        counts[classifier.index_of(label)] += m
    return counts


def fusion_table(orb: Orbifold, config: Optional[RunConfig] = None) -> FusionTable:
    """Products of every unordered pair of class representatives.

    Pairs are fused in a worker pool when ``config.processes > 1``. Results are merged in
    pair order, so the table does not depend on the number of processes.
    """
    config = config or RunConfig()
    inventory = enumerate_paper_labels(orb)
    classifier = Classifier(orb, inventory.labels, EquivalencePolicy(config.label_mode))
    representatives = [c.representative for c in classifier.classes]
    pairs = [(i, j) for i in range(len(representatives)) for j in range(i, len(representatives))]
    worker = functools.partial(_fuse_pair, orb, representatives)

    logger.info("fusing %d pairs of %s with %d processes", len(pairs), orb.name, config.processes)
    results = parallel_map(worker, pairs, config.processes, config.progress)

    label_products = dict(zip(pairs, results))
    products = {pair: _class_counts(classifier, result) for pair, result in label_products.items()}
    return FusionTable(orb, config.label_mode, classifier, label_products, products)


@dataclass
class CheckResult(object):
    name: str
    required: bool
    checked: int = 0
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def fail(self, message: str) -> None:
        if self.failure is None:
            self.failure = message


@dataclass
class RingReport(object):
    """Outcome of every ring check.

    Required checks must hold for any consistent table. Contragredient symmetry and
    associativity are required on canonical tables and run over every triple there. On
    paper tables they are informational and sampled.
    """

    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.required)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.required and not c.passed]

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def raise_for_failures(self) -> None:
        if self.failures:
            first = self.failures[0]
            raise VerificationFailure("%s: %s" % (first.name, first.failure))

    def to_dict(self) -> Dict[str, dict]:
        return {
            c.name: {"required": c.required, "checked": c.checked, "passed": c.passed, "failure": c.failure}
            for c in self.checks
        }


def _check_commutativity(table: FusionTable, result: CheckResult) -> None:
    reps = table.representatives
    for i, j in itertools.combinations(range(len(reps)), 2):
        reversed_counts = _class_counts(table.classifier, fuse(table.orbifold, reps[j], reps[i]))
        result.checked += 1
        if reversed_counts != table.product(i, j):
            result.fail("%d x %d differs from %d x %d" % (j, i, i, j))
            return


def _check_unit(table: FusionTable, result: CheckResult) -> None:
    unit = table.classifier.index_of(vacuum(table.orbifold))
    for i in range(len(table)):
        result.checked += 1
        if table.product(unit, i) != Counter({i: 1}):
            result.fail("vacuum x %d = %s" % (i, dict(table.product(unit, i))))
            return


def _check_qdim(table: FusionTable, result: CheckResult) -> None:
    orb = table.orbifold
    dims = [qdim(orb, x).value for x in table.representatives]
    for (i, j), counts in sorted(table.products.items()):
        result.checked += 1
        total = sum(m * dims[k] for k, m in counts.items())
        if expand(total - dims[i] * dims[j]) != 0:
            result.fail("qdim of %d x %d is %s, expected %s" % (i, j, total, dims[i] * dims[j]))
            return


def _check_base(table: FusionTable, result: CheckResult) -> None:
    orb = table.orbifold
    reps = table.representatives
    for (i, j), labels in sorted(table.label_products.items()):
        result.checked += 1
        if projected_product(labels.counts) != base_fuse(orb, project(reps[i]), project(reps[j])):
            result.fail("%d x %d does not project onto the L- product" % (i, j))
            return


def _triples(n: int, config: RunConfig) -> List[Tuple[int, int, int]]:
    if config.label_mode == LabelMode.CANONICAL or n ** 3 <= config.sampled_triples:
        return list(itertools.product(range(n), repeat=3))
    rng = np.random.RandomState(config.seed)
    return [tuple(int(x) for x in rng.randint(0, n, size=3)) for _ in range(config.sampled_triples)]


def _check_contragredient(table: FusionTable, result: CheckResult, config: RunConfig) -> None:
    orb = table.orbifold
    dual = [table.classifier.index_of(contragredient(orb, x)) for x in table.representatives]
    for i, j, k in _triples(len(table), config):
        result.checked += 1
        if table.multiplicity(i, j, k) != table.multiplicity(i, dual[k], dual[j]):
            result.fail("N(%d, %d; %d) != N(%d, %d; %d)" % (i, j, k, i, dual[k], dual[j]))
            return


def _times(table: FusionTable, counts: Counter, k: int) -> Counter:
    total = Counter()
    for x, m in counts.items():
        for y, n in table.product(x, k).items():
            total[y] += m * n
    return total


def _check_associativity(table: FusionTable, result: CheckResult, config: RunConfig) -> None:
    for i, j, k in _triples(len(table), config):
        result.checked += 1
        if _times(table, table.product(i, j), k) != _times(table, table.product(j, k), i):
            result.fail("(%d x %d) x %d != %d x (%d x %d)" % (i, j, k, i, j, k))
            return


def verify_ring(table: FusionTable, config: Optional[RunConfig] = None) -> RingReport:
    config = config or RunConfig()
    canonical = config.label_mode == LabelMode.CANONICAL
    checks = [
        CheckResult("commutativity", True),
        CheckResult("unit", True),
        CheckResult("qdim", True),
        CheckResult("base_consistency", True),
        CheckResult("contragredient_symmetry", canonical),
        CheckResult("associativity", canonical),
    ]
    _check_commutativity(table, checks[0])
    _check_unit(table, checks[1])
    _check_qdim(table, checks[2])
    _check_base(table, checks[3])
    _check_contragredient(table, checks[4], config)
    _check_associativity(table, checks[5], config)

    report = RingReport(checks)
    for c in report.checks:
        if not c.passed:
            (logger.error if c.required else logger.warning)("%s check failed: %s", c.name, c.failure)
    return report
