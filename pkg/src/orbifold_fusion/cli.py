import logging
from typing import Optional, Tuple

import click

from orbifold_fusion.catalog.enumeration import enumerate_paper_labels
from orbifold_fusion.catalog.equivalence import Classifier, EquivalencePolicy
from orbifold_fusion.catalog.labels import format_label, parse_label
from orbifold_fusion.data.builders import build_example
from orbifold_fusion.data.documents import ReportDocument
from orbifold_fusion.data.reports import build_report, label_row
from orbifold_fusion.exceptions import BadParameter, OrbifoldFusionError
from orbifold_fusion.fusion.qdim import qdim
from orbifold_fusion.fusion.rules import fuse
from orbifold_fusion.fusion.table import fusion_table, verify_ring
from orbifold_fusion.meta_config import DEFAULT_PROCESSES, LabelMode, OutputFormat, RunConfig
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.selftest import run_selftest
from orbifold_fusion.utils.files import read_input_document, save_report
from orbifold_fusion.utils.utils import dumps, render_table


LABEL_COLUMNS = ["id", "kind", "lambda", "mu_or_chi", "sign", "qdim"]


class OrbifoldFusionGroup(click.Group):
    """Maps usage errors and input errors to exit code 1, verification failures to 2."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super(OrbifoldFusionGroup, self).make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx):
        try:
            return super(OrbifoldFusionGroup, self).invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise
        except OrbifoldFusionError as e:
            click.echo("error: %s: %s" % (type(e).__name__, e), err=True)
            ctx.exit(2 if e.internal else 1)


_SETTING_OPTIONS = [
    click.option("--input", "input_path", type=click.Path(dir_okay=False), default=None, help="JSON input document."),
    click.option("--builder", default=None, help="Example builder, e.g. a2-double or an-dynkin:3."),
    click.option("--labels", type=click.Choice(["paper", "canonical"]), default="paper", show_default=True),
    click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True),
    click.option("--processes", type=int, default=DEFAULT_PROCESSES, show_default=True),
    click.option("--progress", is_flag=True, help="Show a progress bar on stderr."),
    click.option("--save", is_flag=True, help="Also write the JSON report under OUTPUT_PATH."),
    click.option("--verbose", is_flag=True),
]


def setting_options(func):
    for option in reversed(_SETTING_OPTIONS):
        func = option(func)
    return func


def _configure(
    input_path: Optional[str],
    builder: Optional[str],
    labels: str,
    output_format: str,
    processes: int,
    progress: bool,
    verbose: bool,
) -> Tuple[Orbifold, RunConfig]:
    logging.basicConfig(
        format="%(asctime)s : %(levelname)s : %(message)s", level=logging.DEBUG if verbose else logging.WARNING
    )
    if (input_path is None) == (builder is None):
        raise BadParameter("give exactly one of --input and --builder")
    document = read_input_document(input_path) if input_path else build_example(builder)
    config = RunConfig(
        label_mode=LabelMode[labels.upper()],
        output_format=OutputFormat[output_format.upper()],
        processes=processes,
        progress=progress,
    )
    return Orbifold(document.setting()), config


def _emit(orb: Orbifold, config: RunConfig, report: ReportDocument, text: str, save: bool, command: str) -> None:
    if config.output_format == OutputFormat.JSON:
        click.echo(report.to_json(), nl=False)
    else:
        click.echo(text)
    if save:
        click.echo("saved %s" % save_report(report, orb.name, command), err=True)


def _summary_lines(summary: dict, prefix: str = "") -> list:
    lines = []
    for key in sorted(summary):
        value = summary[key]
        if isinstance(value, dict):
            lines.extend(_summary_lines(value, prefix + key + "."))
        else:
            lines.append("%s%s: %s" % (prefix, key, ", ".join(value) if isinstance(value, list) else value))
    return lines


def _counts_line(counts: dict) -> str:
    return "  ".join("%s: %s" % (k, counts[k]) for k in sorted(counts))


@click.group(cls=OrbifoldFusionGroup)
def cli():
    pass


@cli.command()
@setting_options
def info(input_path, builder, labels, output_format, processes, progress, save, verbose):
    """Lattice invariants of the setting."""
    orb, config = _configure(input_path, builder, labels, output_format, processes, progress, verbose)
    report = build_report(orb, config.label_mode)
    _emit(orb, config, report, "\n".join(_summary_lines(report.setting)), save, "info")


@cli.command()
@setting_options
def classify(input_path, builder, labels, output_format, processes, progress, save, verbose):
    """Irreducible module labels with their counts."""
    orb, config = _configure(input_path, builder, labels, output_format, processes, progress, verbose)
    inventory = enumerate_paper_labels(orb)
    classifier = Classifier(orb, inventory.labels, EquivalencePolicy(config.label_mode))
    report = build_report(orb, config.label_mode, inventory, classifier.classes)
    text = render_table(report.labels, LABEL_COLUMNS + (["members"] if config.label_mode == LabelMode.CANONICAL else []))
    _emit(orb, config, report, text + "\n" + _counts_line(report.counts), save, "classify")


@cli.command("qdim")
@setting_options
@click.option("--module", "module", default=None, help="Label identifier; all labels when omitted.")
def qdim_command(input_path, builder, labels, output_format, processes, progress, save, verbose, module):
    """Quantum dimensions, printed as n or sqrt(n)."""
    orb, config = _configure(input_path, builder, labels, output_format, processes, progress, verbose)
    if module is not None:
        selected = [parse_label(orb, module)]
    else:
        inventory = enumerate_paper_labels(orb)
        classifier = Classifier(orb, inventory.labels, EquivalencePolicy(config.label_mode))
        selected = [c.representative for c in classifier.classes]
    report = build_report(orb, config.label_mode)
    report.qdims = [{k: label_row(orb, x)[k] for k in ("id", "qdim", "square")} for x in selected]
    if module is not None:
        text = str(qdim(orb, selected[0]))
    else:
        text = render_table(report.qdims, ["id", "qdim", "square"])
    _emit(orb, config, report, text, save, "qdim")


@cli.command("fuse")
@setting_options
@click.argument("left")
@click.argument("right")
def fuse_command(input_path, builder, labels, output_format, processes, progress, save, verbose, left, right):
    """Fusion product of two labels."""
    orb, config = _configure(input_path, builder, labels, output_format, processes, progress, verbose)
    a, b = parse_label(orb, left), parse_label(orb, right)
    result = fuse(orb, a, b)
    terms = result.items()
    if config.label_mode == LabelMode.CANONICAL:
        classifier = Classifier(orb, enumerate_paper_labels(orb).labels, EquivalencePolicy(LabelMode.CANONICAL))
        merged = {}
        for label, m in terms:
            representative = classifier.classes[classifier.index_of(label)].representative
            merged[representative] = merged.get(representative, 0) + m
        terms = sorted(merged.items(), key=lambda item: item[0].sort_key)

    product = [{"id": format_label(orb, x), "multiplicity": m} for x, m in terms]
    report = build_report(orb, config.label_mode)
    report.fusion = [{"left": format_label(orb, a), "right": format_label(orb, b), "product": product}]
    text = " + ".join(p["id"] if p["multiplicity"] == 1 else "%d*%s" % (p["multiplicity"], p["id"]) for p in product)
    text += "\ntotal qdim: %s" % result.total_qdim(orb)
    _emit(orb, config, report, text, save, "fuse")


@cli.command()
@setting_options
def table(input_path, builder, labels, output_format, processes, progress, save, verbose):
    """Full fusion table and the ring checks."""
    orb, config = _configure(input_path, builder, labels, output_format, processes, progress, verbose)
    inventory = enumerate_paper_labels(orb)
    fusion = fusion_table(orb, config)
    ring = verify_ring(fusion, config)
    report = build_report(orb, config.label_mode, inventory, fusion.classes, fusion, ring)

    lines = [fusion.to_frame().to_string(index=False), ""]
    for c in ring.checks:
        status = "passed" if c.passed else "FAILED: %s" % c.failure
        lines.append("%s%s: %s (%d checked)" % (c.name, "" if c.required else " (informational)", status, c.checked))
    _emit(orb, config, report, "\n".join(lines), save, "table")
    if not ring.passed:
        first = ring.failures[0]
        click.echo("error: VerificationFailure: %s: %s" % (first.name, first.failure), err=True)
        click.get_current_context().exit(2)


@cli.command()
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--verbose", is_flag=True)
def selftest(output_format, verbose):
    """Run the acceptance fixtures."""
    logging.basicConfig(
        format="%(asctime)s : %(levelname)s : %(message)s", level=logging.DEBUG if verbose else logging.WARNING
    )
    outcomes = run_selftest()
    failed = [o for o in outcomes if not o.passed]
    if output_format == "json":
        click.echo(
            dumps([{"name": o.name, "expected": o.expected, "actual": o.actual, "passed": o.passed} for o in outcomes]),
            nl=False,
        )
    else:
        for o in outcomes:
            if o.passed:
                click.echo("PASS %s" % o.name)
            else:
                click.echo("FAIL %s: expected %s, got %s" % (o.name, o.expected, o.actual))
        click.echo("%d passed, %d failed" % (len(outcomes) - len(failed), len(failed)))
    if failed:
        click.get_current_context().exit(2)
