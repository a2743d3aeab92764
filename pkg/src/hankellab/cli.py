"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 golden-data mismatch,
3 internal-consistency failure (independent engines disagree).
"""

from __future__ import annotations

import csv
import io
import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import click

from .catalog import ROWS, CatalogRow
from .core import AvoidingSet, parse_set_literal, render_set_literal
from .hankel import HankelSpec, hankel_det
from .period import (
    PeriodReport,
    STATUS_PERIODIC,
    covering_structure,
    detect_period,
    hankel_prefix,
)
from .reduction import Obstruction, SeriesKind, reduce_trace
from .series import dyck_count_dp, series_cf
from .structure import (
    PreconditionViolation,
    ZeroEncountered,
    dual_sequence,
    feasible_set,
    predict_period,
    synthesize,
)

FORMATS = ("plain", "json", "csv", "markdown")
CSV_COLUMNS = ("set", "m", "V", "period", "preperiod", "cycle", "terms_examined")

EXIT_GOLDEN_MISMATCH = 2
EXIT_INCONSISTENT = 3


def _parse_set(text: str) -> AvoidingSet:
    try:
        return parse_set_literal(text)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="SET") from exc


def _emit(text: str, output: str | None) -> None:
    body = text if text.endswith("\n") else text + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(body)
    else:
        click.echo(body, nl=False)


def _figure_target(output: str | None, figure: str | None, no_figure: bool) -> str | None:
    """Explicit --figure wins; otherwise a .png lands next to --output."""
    if no_figure:
        return None
    if figure:
        return figure
    if output:
        return os.path.splitext(output)[0] + ".png"
    return None


def _figure_options(command):
    command = click.option(
        "--figure", type=click.Path(dir_okay=False), default=None,
        help="Write a figure to this path.",
    )(command)
    command = click.option(
        "--no-figure", is_flag=True, help="Suppress the figure even with --output.",
    )(command)
    return command


def _format_option(command):
    return click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="plain",
        show_default=True,
    )(command)


def _output_option(command):
    return click.option(
        "--output", type=click.Path(dir_okay=False), default=None,
        help="Write the report to this file instead of stdout.",
    )(command)


def _detection_row(avoiding_set: AvoidingSet, report: PeriodReport) -> dict[str, str]:
    witness = report.witness
    return {
        "set": render_set_literal(avoiding_set),
        "m": str(avoiding_set.modulus),
        "V": " ".join(str(r) for r in avoiding_set.residues),
        "period": str(len(witness.period)) if witness else "none",
        "preperiod": " ".join(str(v) for v in witness.preperiod) if witness else "",
        "cycle": " ".join(str(v) for v in witness.period) if witness else "",
        "terms_examined": str(report.terms_examined),
    }


def _csv_text(rows: list[dict[str, str]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2)


@click.group()
@click.version_option(package_name="hankellab")
def cli() -> None:
    """Exact Hankel determinant sequences for peak-height-avoiding Dyck paths."""


@cli.command()
@click.argument("set_literal", metavar="SET")
@click.option("--n", "n", type=int, default=20, show_default=True,
              help="Highest coefficient index.")
@_format_option
@_output_option
@_figure_options
@click.pass_context
def coeffs(ctx, set_literal: str, n: int, fmt: str, output: str | None,
           figure: str | None, no_figure: bool) -> None:
    """Series coefficients d_0..d_N from two engines, with agreement check."""
    avoiding_set = _parse_set(set_literal)
    if n < 0:
        raise click.BadParameter("--n must be nonnegative")
    dp = dyck_count_dp(avoiding_set, n).coeffs
    cf = series_cf(avoiding_set, n).coeffs
    agree = dp == cf
    literal = render_set_literal(avoiding_set)

    if fmt == "json":
        text = _json_text({
            "set": literal,
            "n": n,
            "dp": [str(v) for v in dp],
            "cf": [str(v) for v in cf],
            "engines_agree": agree,
        })
    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "dp", "cf", "agree"])
        for i, (a, b) in enumerate(zip(dp, cf)):
            writer.writerow([i, str(a), str(b), str(a == b).lower()])
        text = buffer.getvalue()
    elif fmt == "markdown":
        lines = ["| n | dp | cf |", "| - | - | - |"]
        lines += [f"| {i} | {a} | {b} |" for i, (a, b) in enumerate(zip(dp, cf))]
        lines.append(f"\nengines agree: {agree}")
        text = "\n".join(lines)
    else:
        lines = [f"coefficients of {literal}, n = 0..{n}"]
        lines += [f"{i}\t{a}" for i, a in enumerate(dp)]
        lines.append(f"engines agree: {agree}")
        text = "\n".join(lines)
    _emit(text, output)

    target = _figure_target(output, figure, no_figure)
    if target:
        from . import plots
        plots.coeffs_figure(list(dp), f"coefficients of {literal}", target)
    if not agree:
        click.echo("engine disagreement between dynamic program and "
                   "continued-fraction expansion", err=True)
        ctx.exit(EXIT_INCONSISTENT)


@cli.command()
@click.argument("set_literal", metavar="SET")
@click.option("--n", "n", type=int, default=60, show_default=True,
              help="Number of determinants H_1..H_N.")
@click.option("--detect", is_flag=True, help="Append a period report.")
@click.option("--min-repeats", type=int, default=2, show_default=True,
              help="Occurrences a cycle needs before it is reported.")
@click.option("--k", type=int, default=0, show_default=True,
              help="Index offset of the top-left entry.")
@_format_option
@_output_option
@_figure_options
def hankel(set_literal: str, n: int, detect: bool, min_repeats: int, k: int,
           fmt: str, output: str | None, figure: str | None,
           no_figure: bool) -> None:
    """Hankel determinant sequence H_1..H_N for a set literal."""
    avoiding_set = _parse_set(set_literal)
    if n < 1:
        raise click.BadParameter("--n must be positive")
    if k < 0:
        raise click.BadParameter("--k must be nonnegative")
    series = series_cf(avoiding_set, k + 2 * n - 2)
    values = [hankel_det(series, HankelSpec(i, k)) for i in range(1, n + 1)]
    report = None
    if detect:
        report = detect_period(values, min_repeats=min_repeats)
        report = _attach_covering(report, avoiding_set)
    literal = render_set_literal(avoiding_set)

    if fmt == "json":
        payload = {"set": literal, "k": k, "values": [str(v) for v in values]}
        if report is not None:
            payload["detection"] = report.to_json_dict()
            if report.witness is not None:
                payload["star"] = report.witness.render()
        text = _json_text(payload)
    elif fmt == "csv":
        if report is not None:
            text = _csv_text([_detection_row(avoiding_set, report)])
        else:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["n", "value"])
            writer.writerows([i + 1, str(v)] for i, v in enumerate(values))
            text = buffer.getvalue()
    elif fmt == "markdown":
        lines = ["| n | H_n |", "| - | - |"]
        lines += [f"| {i + 1} | {v} |" for i, v in enumerate(values)]
        if report is not None:
            lines.append("")
            lines.append(_report_plain(report))
        text = "\n".join(lines)
    else:
        lines = [f"Hankel determinants of {literal}, n = 1..{n}"]
        lines.append(", ".join(str(v) for v in values))
        if report is not None:
            lines.append(_report_plain(report))
        text = "\n".join(lines)
    _emit(text, output)

    target = _figure_target(output, figure, no_figure)
    if target:
        from . import plots
        plots.sequence_figure(
            values, f"Hankel determinants of {literal}", target,
            witness=report.witness if report else None,
        )


def _attach_covering(report: PeriodReport, avoiding_set: AvoidingSet) -> PeriodReport:
    cover = covering_structure(avoiding_set)
    if cover is not None and report.status == STATUS_PERIODIC:
        return replace(report, covering=cover)
    return report


def _report_plain(report: PeriodReport) -> str:
    if report.witness is None:
        return (f"no period found within {report.terms_examined} terms"
                " (conjectured aperiodic at this horizon)")
    lines = [
        f"detected: {report.witness.render()}",
        f"period {len(report.witness.period)},"
        f" preperiod {len(report.witness.preperiod)},"
        f" seen {report.repeats_observed} times over"
        f" {report.terms_examined} terms (conjectural from finite data)",
    ]
    if report.covering:
        lines.append(f"proven periodic: covered by {report.covering}")
    return "\n".join(lines)


def _table1_row(row: CatalogRow) -> tuple[CatalogRow, list[int], PeriodReport]:
    values = hankel_prefix(row.avoiding_set, 60)
    report = detect_period(values, min_repeats=2)
    return row, values, report


def _worker_count() -> int:
    cap = os.environ.get("HANKEL_LAB_THREADS")
    available = os.cpu_count() or 1
    if cap is None:
        return available
    try:
        return max(1, min(int(cap), available))
    except ValueError:
        raise click.UsageError(f"HANKEL_LAB_THREADS must be an integer, got {cap!r}")


@cli.command()
@_format_option
@_output_option
@_figure_options
@click.pass_context
def table1(ctx, fmt: str, output: str | None, figure: str | None,
           no_figure: bool) -> None:
    """Recompute the full m <= 5 catalog and compare with the golden rows."""
    workers = _worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_table1_row, ROWS))
    else:
        results = [_table1_row(row) for row in ROWS]

    mismatches: list[str] = []
    table_rows: list[dict[str, str]] = []
    reports: list[PeriodReport] = []
    for row, values, report in results:
        literal = render_set_literal(row.avoiding_set)
        expected = row.expected_witness()
        if expected is None:
            ok = (report.witness is None
                  and tuple(values[: len(row.prefix)]) == row.prefix)
        else:
            ok = report.witness == expected
        if not ok:
            got = report.witness.render() if report.witness else "none"
            want = expected.render() if expected else f"none, prefix {row.prefix}"
            mismatches.append(f"{literal}: computed {got}, catalog has {want}")
        report = _attach_covering(report, row.avoiding_set)
        reports.append(report)
        table_rows.append(_detection_row(row.avoiding_set, report))

    if fmt == "json":
        payload = []
        for (row, values, _), report, flat in zip(results, reports, table_rows):
            entry = {"set": flat["set"], "m": row.modulus,
                     "V": list(row.residues)}
            entry.update(report.to_json_dict())
            payload.append(entry)
        text = _json_text(payload)
    elif fmt == "csv":
        text = _csv_text(table_rows)
    elif fmt == "markdown":
        lines = ["| set | sequence | period |", "| - | - | - |"]
        for (row, values, report), flat in zip(results, table_rows):
            if report.witness is not None:
                shown = report.witness.render()
            else:
                shown = ", ".join(str(v) for v in values[:17]) + ", ..."
            lines.append(f"| {flat['set']} | {shown} | {flat['period']} |")
        text = "\n".join(lines)
    else:
        lines = []
        for (row, values, report), flat in zip(results, table_rows):
            if report.witness is not None:
                shown = report.witness.render()
            else:
                shown = ", ".join(str(v) for v in values[:17]) + ", ..."
            lines.append(f"{flat['set']}\t{shown}\tperiod {flat['period']}")
        lines.append(f"rows checked: {len(results)}, mismatches: {len(mismatches)}")
        text = "\n".join(lines)
    _emit(text, output)

    target = _figure_target(output, figure, no_figure)
    if target:
        from . import plots
        plots.catalog_figure(
            [flat["set"] for flat in table_rows],
            [row.period for row in ROWS],
            target,
        )

    if mismatches:
        for line in mismatches:
            click.echo(f"golden mismatch: {line}", err=True)
        ctx.exit(EXIT_GOLDEN_MISMATCH)


@cli.command()
@click.argument("set_literal", metavar="SET")
@click.option("--n", "n", type=int, required=True, help="Determinant order.")
@click.option("--flag", type=click.Choice(["D", "Dminus1"]), default="D",
              show_default=True, help="Which series the determinant is over.")
@_format_option
@_output_option
def reduce(set_literal: str, n: int, flag: str, fmt: str,
           output: str | None) -> None:
    """Audit trace of the shift-and-decrement reduction for one determinant."""
    avoiding_set = _parse_set(set_literal)
    if n < 1:
        raise click.BadParameter("--n must be positive")
    kind = SeriesKind.FULL if flag == "D" else SeriesKind.DECREMENTED
    result, trace = reduce_trace(n, avoiding_set, kind)

    if fmt == "json":
        payload = {
            "set": render_set_literal(avoiding_set),
            "n": n,
            "flag": flag,
            "levels": [
                {"level": level, "combo": combo.render()}
                for level, combo in trace
            ],
        }
        if isinstance(result, Obstruction):
            payload["obstruction"] = {
                "atom": result.atom.render(),
                "depth": result.depth,
            }
        else:
            payload["value"] = str(result)
        text = _json_text(payload)
    else:
        lines = [f"level {level}: {combo.render()}" for level, combo in trace]
        if isinstance(result, Obstruction):
            lines.append(
                f"obstruction at depth {result.depth}: {result.atom.render()}"
                " has 1 in its set"
            )
        else:
            lines.append(f"value: {result}")
        text = "\n".join(lines)
    _emit(text, output)


@cli.command()
@click.option("--ts", "ts_text", required=True,
              help="Comma-separated section lengths, e.g. 3,2,1.")
@click.option("--m", "m", type=int, required=True, help="Modulus.")
@click.option("--s", "s", type=int, default=1, show_default=True,
              help="Half of the smallest forbidden residue.")
@click.option("--verify", is_flag=True,
              help="Also detect the period from computed determinants.")
@_format_option
@_output_option
def predict(ts_text: str, m: int, s: int, verify: bool, fmt: str,
            output: str | None) -> None:
    """Predicted Hankel period for the set built from a primitive list."""
    try:
        ts = tuple(int(part) for part in ts_text.split(","))
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--ts") from exc
    dual = dual_sequence(ts)
    if isinstance(dual, ZeroEncountered):
        raise click.UsageError(
            f"{ts} is not primitive: dual value {dual.position} is already"
            " zero, the recurrence stops there"
        )
    if dual.last != 0:
        shown = ", ".join(str(h) for h in dual.hs)
        raise click.UsageError(
            f"{ts} is not primitive: dual values are {shown};"
            " the last must be zero"
        )
    v = feasible_set(ts, s)
    if max(v) > m:
        raise click.UsageError(
            f"modulus {m} is smaller than max(V) = {max(v)} at s = {s}"
        )
    predicted = predict_period(ts, m)
    avoiding_set = AvoidingSet(m, v)
    partial = dual.partial_product(len(ts) - 1)
    unproven = m % 2 == 1 and s > 1

    detected: int | None = None
    if verify:
        values = hankel_prefix(avoiding_set, 3 * predicted + 12)
        report = detect_period(values, min_repeats=3)
        detected = (len(report.witness.period)
                    if report.witness is not None else None)

    if fmt == "json":
        payload = {
            "ts": list(ts),
            "set": render_set_literal(avoiding_set),
            "dual_values": [str(h) for h in dual.hs],
            "partial_product": str(partial),
            "predicted_period": predicted,
            "unproven_regime": unproven,
        }
        if verify:
            payload["detected_period"] = detected
        text = _json_text(payload)
    else:
        lines = [
            f"feasible set at s={s}: {render_set_literal(avoiding_set)}",
            "dual values: " + ", ".join(str(h) for h in dual.hs),
            f"partial product: {partial}",
            f"predicted period: {predicted}",
        ]
        if unproven:
            lines.append("note: odd modulus with s > 1 is an unproven regime;"
                         " the prediction is heuristic here")
        if verify:
            lines.append(f"detected period: {detected}")
        text = "\n".join(lines)
    _emit(text, output)


def _parse_parts(text: str) -> list[tuple[tuple[int, ...], int]]:
    parts: list[tuple[tuple[int, ...], int]] = []
    for chunk in text.split(";"):
        match = re.fullmatch(r"\s*\(([\d,\s]*)\)@(-?\d+)\s*", chunk)
        if match is None:
            raise click.BadParameter(
                f"part {chunk!r} is not of the form (t1,t2,...)@k",
                param_hint="PARTS",
            )
        ts = tuple(int(item) for item in match.group(1).split(",") if item.strip())
        if not ts:
            raise click.BadParameter(f"empty section list in {chunk!r}",
                                     param_hint="PARTS")
        parts.append((ts, int(match.group(2))))
    return parts


@cli.command("synthesize")
@click.argument("parts_text", metavar="PARTS")
@click.option("--m", "m", type=int, required=True, help="Modulus.")
@click.option("--n", "n", type=int, default=60, show_default=True,
              help="Terms to compute for detection.")
@_format_option
@_output_option
def synthesize_cmd(parts_text: str, m: int, n: int, fmt: str,
                   output: str | None) -> None:
    """Union shifted primitive-built sets and detect the resulting period.

    PARTS uses the grammar (t1,t2,...)@k;(u1,...)@k2 with shifts k.
    """
    parts = _parse_parts(parts_text)
    outcome = synthesize(parts)
    if isinstance(outcome, PreconditionViolation):
        raise click.UsageError(f"spacing violation: {outcome.message}")
    if max(outcome) > m:
        raise click.UsageError(
            f"modulus {m} is smaller than max(V) = {max(outcome)}"
        )
    avoiding_set = AvoidingSet(m, outcome)
    values = hankel_prefix(avoiding_set, n)
    report = detect_period(values, min_repeats=2)
    report = _attach_covering(report, avoiding_set)

    if fmt == "json":
        payload = {
            "set": render_set_literal(avoiding_set),
            "parts": [{"ts": list(ts), "shift": k} for ts, k in parts],
            "detection": report.to_json_dict(),
        }
        text = _json_text(payload)
    elif fmt == "csv":
        text = _csv_text([_detection_row(avoiding_set, report)])
    else:
        lines = [f"synthesized set: {render_set_literal(avoiding_set)}",
                 _report_plain(report)]
        text = "\n".join(lines)
    _emit(text, output)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit codes."""
    try:
        result = cli.main(args=argv, prog_name="hankellab",
                          standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return result if isinstance(result, int) else 0
