from typing import Any, Dict, List, Optional

from orbifold_fusion.catalog.enumeration import PaperInventory, enumerate_paper_labels
from orbifold_fusion.catalog.equivalence import EquivalencePolicy, LabelClass, equivalence_classes
from orbifold_fusion.catalog.labels import format_label, label_fields
from orbifold_fusion.data.documents import ReportDocument
from orbifold_fusion.fusion.qdim import global_dimension, qdim, sigma_fixed_discriminant
from orbifold_fusion.fusion.table import FusionTable, RingReport
from orbifold_fusion.meta_config import LabelMode
from orbifold_fusion.orbifold import Orbifold


def setting_summary(orb: Orbifold) -> Dict[str, Any]:
    s = orb.setting
    r_sigma = orb.r_sigma
    fixed = sigma_fixed_discriminant(orb)
    classes = equivalence_classes(orb, enumerate_paper_labels(orb).labels, EquivalencePolicy(LabelMode.CANONICAL))
    return {
        "name": s.name,
        "rank": s.dimension,
        "even_core_index": s.even_core_index,
        "rank_L_plus": s.L_plus.rank,
        "rank_L_minus": s.L_minus.rank,
        "transversal_size": len(orb.transversal),
        "discriminants": {
            "Q": orb.discriminant.describe(),
            "Qbar": orb.core_discriminant.describe(),
            "L+": orb.plus_discriminant.describe(),
            "L-": orb.minus_discriminant.describe(),
        },
        "M": orb.M.describe(),
        "lambda_classes": len(orb.lambda_classes),
        "characters": [chi.name for chi in orb.characters],
        "R_sigma": {
            "orbits": r_sigma.orbit_count,
            "in_M": r_sigma.m_count,
            "twisted_qdim_square": r_sigma.twisted_square,
        },
        "sigma_fixed_discriminant": fixed,
        "twisted_classes": class_counts(classes)["twisted"],
        "twisted_classes_expected": 2 * fixed,
    }


def label_row(orb: Orbifold, label) -> Dict[str, Any]:
    kind, lam, mu_or_chi, sign = label_fields(orb, label)
    d = qdim(orb, label)
    return {
        "id": format_label(orb, label),
        "kind": kind,
        "lambda": lam,
        "mu_or_chi": mu_or_chi,
        "sign": sign,
        "qdim": str(d),
        "square": d.square,
    }


def class_rows(orb: Orbifold, classes: List[LabelClass]) -> List[Dict[str, Any]]:
    rows = []
    for c in classes:
        row = label_row(orb, c.representative)
        row["members"] = len(c.members)
        rows.append(row)
    return rows


def class_counts(classes: List[LabelClass]) -> Dict[str, int]:
    counts = {"type1": 0, "type2": 0, "twisted": 0}
    for c in classes:
        counts[c.kind.tag] += 1
    counts["total"] = len(classes)
    return counts


def inventory_counts(inventory: PaperInventory, classes: List[LabelClass], mode: LabelMode) -> Dict[str, int]:
    if mode == LabelMode.PAPER:
        return dict(inventory.counts)
    return class_counts(classes)


def fusion_rows(table: FusionTable) -> List[Dict[str, Any]]:
    orb = table.orbifold
    names = [format_label(orb, x) for x in table.representatives]
    rows = []
    for (i, j), counts in sorted(table.products.items()):
        rows.append(
            {
                "left": names[i],
                "right": names[j],
                "product": [{"id": names[k], "multiplicity": m} for k, m in sorted(counts.items())],
            }
        )
    return rows


def build_report(
    orb: Orbifold,
    mode: LabelMode,
    inventory: Optional[PaperInventory] = None,
    classes: Optional[List[LabelClass]] = None,
    table: Optional[FusionTable] = None,
    ring: Optional[RingReport] = None,
) -> ReportDocument:
    report = ReportDocument(setting_summary(orb), mode.name.lower())
    if classes is not None:
        report.labels = class_rows(orb, classes)
        report.counts = inventory_counts(inventory, classes, mode) if inventory else class_counts(classes)
        report.counts["global_dimension"] = global_dimension(orb, [c.representative for c in classes])
    if table is not None:
        report.fusion = fusion_rows(table)
    if ring is not None:
        report.verification = ring.to_dict()
    return report
