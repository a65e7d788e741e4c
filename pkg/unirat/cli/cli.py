#!/usr/bin/env python3
"""Command-line interface for unirat"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

import click
from sympy import isprime

from ..alphabet import model_by_name
from ..config import ENVIRONMENTS, configure_for_environment, load_settings_file, settings
from ..count import compare_counts_mod_p, count_points_naive, count_range, restrict_primes
from ..models import Convention, ModelValidationError, VarietyModel
from ..modular import (
    EtaQuotientSpec,
    FitError,
    congruence_match,
    esnault_guess,
    eta_form,
    exact_cy3_fit,
    fit_verdict,
    resolve_form,
)
from ..reporting import FORMATS, ReportManager
from ..sing import incidence_table
from ..utils import UniratError, get_logger, log_error_with_context, setup_logging
from ..workflows import SECTIONS, PaperWorkflow

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 64


class UniratGroup(click.Group):
    """Click group mapping failures onto the unirat exit codes."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
            code = result if isinstance(result, int) else EXIT_OK
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except UniratError as e:
            if logging.getLogger("unirat").handlers:
                log_error_with_context(e, {"args": " ".join(args or sys.argv[1:])})
            click.echo(f"Error: {e}", err=True)
            code = e.exit_code
        except click.ClickException as e:
            e.show()
            code = e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_MISMATCH

        if standalone_mode:
            sys.exit(code)
        return code


def load_model(value: str) -> VarietyModel:
    """A builtin model name or the path of a variety-definition JSON file."""
    path = Path(value)
    if not path.is_file():
        return model_by_name(value)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ModelValidationError(f"cannot read variety definition {path}: {e}") from e
    if not isinstance(data, dict):
        raise ModelValidationError(f"{path}: a variety definition is a JSON object")
    return VarietyModel.from_dict(data)


def _parse_sections(ctx, param, value: Optional[str]) -> Tuple[str, ...]:
    if not value or value == "all":
        return SECTIONS
    names = tuple(name.strip() for name in value.split(",") if name.strip())
    unknown = [name for name in names if name not in SECTIONS]
    if unknown or not names:
        raise click.BadParameter(f"expected a comma-separated subset of {', '.join(SECTIONS)}")
    return names


def _parse_bad_primes(ctx, param, value: Optional[str]):
    if value is None:
        return None
    try:
        primes = frozenset(int(p) for p in value.split(",") if p.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated primes such as 3,5, got {value!r}")
    if not all(isprime(p) for p in primes):
        raise click.BadParameter(f"expected primes, got {value!r}")
    return primes


def _parse_prime_class(ctx, param, value: Optional[str]):
    if value is None:
        return None
    modulus, sep, residues = value.partition(":")
    try:
        parsed = (int(modulus), tuple(int(r) for r in residues.split(",")))
    except ValueError:
        parsed = None
    if not sep or parsed is None or parsed[0] < 1:
        raise click.BadParameter(f"expected MODULUS:R1,R2,... such as 8:5,7, got {value!r}")
    return parsed


def report_options(func):
    """--format, --out and --save, shared by every reporting command."""
    func = click.option(
        "--save", is_flag=True, help="Also write the report under UNIRAT_OUTPUT_DIR"
    )(func)
    func = click.option(
        "--out", type=click.Path(dir_okay=False), default=None, help="Write the report to a file"
    )(func)
    func = click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True
    )(func)
    return func


def jobs_option(func):
    return click.option(
        "--jobs", type=click.IntRange(min=1), default=None, help="Worker processes for counting"
    )(func)


def bound_option(func):
    return click.option(
        "--bound", type=click.IntRange(min=0), default=None, help="Count at odd primes p <= BOUND"
    )(func)


def bad_primes_option(func):
    return click.option(
        "--bad-primes",
        callback=_parse_bad_primes,
        default=None,
        help="Replace the model's bad primes, e.g. 3,5 (empty string for none)",
    )(func)


def _load(model: str, bad_primes) -> VarietyModel:
    variety = load_model(model)
    return variety if bad_primes is None else variety.with_bad_primes(bad_primes)


def _emit(text: str, stem: str, fmt: str, out: Optional[str], save: bool) -> None:
    manager = ReportManager()
    manager.write(text, out)
    if save:
        manager.write(text, manager.default_path(stem, fmt))


def _bound(value: Optional[int]) -> int:
    return value if value is not None else settings.counting.default_bound


@click.group(cls=UniratGroup)
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
@click.option("--log-file", type=click.Path(dir_okay=False), default=None, help="Log to a file")
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON settings file",
)
@click.option("--env", type=click.Choice(ENVIRONMENTS), default=None, help="Environment overrides")
def cli(verbose, log_file, config_file, env):
    """Point counts, congruences and singularity checks for unirationality questions"""
    if config_file:
        load_settings_file(config_file)
    if env:
        configure_for_environment(env)
    if verbose or log_file:
        setup_logging(
            "unirat",
            level="DEBUG" if verbose else "INFO",
            log_file=log_file,
            log_to_console=verbose,
        )


@cli.command("verify-paper")
@click.option(
    "--sections",
    callback=_parse_sections,
    default=None,
    help=f"Comma-separated subset of {', '.join(SECTIONS)} (default: all)",
)
@jobs_option
@report_options
@click.pass_context
def verify_paper(ctx, sections, jobs, fmt, out, save):
    """Reproduce the published tables, congruences and fit"""
    report = PaperWorkflow(jobs=jobs).run(sections)
    _emit(ReportManager().paper(report.to_dict(), fmt), "verify_paper", fmt, out, save)
    if not report.ok:
        for section in report.sections:
            for mismatch in section.mismatches:
                click.echo(f"MISMATCH [{section.name}] {mismatch}", err=True)
        ctx.exit(EXIT_MISMATCH)


@cli.command()
@click.argument("model")
@bound_option
@bad_primes_option
@click.option(
    "--cross-check",
    is_flag=True,
    help="Compare with brute-force enumeration at small primes",
)
@jobs_option
@report_options
@click.pass_context
def count(ctx, model, bound, bad_primes, cross_check, jobs, fmt, out, save):
    """Count points of MODEL (builtin name or JSON file) at odd primes"""
    variety = _load(model, bad_primes)
    records = count_range(variety, _bound(bound), jobs=jobs)
    manager = ReportManager()
    text = manager.point_counts(records, fmt, title=f"Point counts of {variety.name}")
    _emit(text, f"counts_{variety.name}", fmt, out, save)

    if cross_check:
        limit = settings.counting.naive_check_limit
        mismatched = False
        for record in records:
            if record.p > limit:
                break
            naive = count_points_naive(variety, record.p)
            if naive.count != record.count:
                click.echo(
                    f"MISMATCH at p={record.p}: "
                    f"enumeration {record.count}, brute force {naive.count}",
                    err=True,
                )
                mismatched = True
        if mismatched:
            ctx.exit(EXIT_MISMATCH)


@cli.command()
@click.argument("first")
@click.argument("second")
@bound_option
@jobs_option
@report_options
def compare(first, second, bound, jobs, fmt, out, save):
    """Report whether the counts of two models agree mod p (informational)"""
    model_a, model_b = load_model(first), load_model(second)
    rows = compare_counts_mod_p(
        count_range(model_a, _bound(bound), jobs=jobs),
        count_range(model_b, _bound(bound), jobs=jobs),
    )
    text = ReportManager().records(rows, ["p", "count_a", "count_b", "congruent"], fmt)
    _emit(text, f"compare_{model_a.name}_{model_b.name}", fmt, out, save)


@cli.command()
@click.argument("model")
@bound_option
@bad_primes_option
@click.option(
    "--form", "form_value", default=None, help="Builtin form, coefficient file or eta spec"
)
@click.option(
    "--convention",
    type=click.Choice([c.value for c in Convention]),
    default=Convention.WEIGHT4.value,
    show_default=True,
)
@click.option(
    "--prime-class",
    callback=_parse_prime_class,
    default=None,
    help="Restrict to primes in residue classes, e.g. 8:5,7",
)
@click.option("--threshold", type=click.IntRange(min=1), default=None)
@jobs_option
@report_options
def guess(
    model, bound, bad_primes, form_value, convention, prime_class, threshold, jobs, fmt, out, save
):
    """Unirationality guess for MODEL, optionally against a candidate newform"""
    variety = _load(model, bad_primes)
    records = count_range(variety, _bound(bound), jobs=jobs)
    if prime_class:
        records = restrict_primes(records, *prime_class)

    verdicts = {"guess": esnault_guess(records, threshold=threshold)}
    if form_value:
        form = resolve_form(form_value)
        convention = Convention(convention)
        verdicts["congruence"] = congruence_match(records, form, convention, threshold=threshold)
        if convention is Convention.WEIGHT4:
            try:
                fit = exact_cy3_fit(records, form)
            except FitError as e:
                logger.warning(f"No exact fit for {variety.name}: {e}")
                verdicts["exact_fit"] = {"error": str(e)}
            else:
                verdicts["exact_fit"] = fit
                verdicts["fit"] = fit_verdict(fit, records)

    text = ReportManager().verdicts(verdicts, fmt)
    _emit(text, f"verdict_{variety.name}", fmt, out, save)


@cli.command()
@click.option("--spec", "spec_text", required=True, help="Eta quotient as m:e,m:e,...")
@click.option("--truncation", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def eta(spec_text, truncation, out):
    """Print q-expansion coefficients of an eta quotient"""
    form = eta_form(EtaQuotientSpec.parse(spec_text))
    ReportManager().write(form.coefficient_text(truncation), out)


@cli.command()
@report_options
def table1(fmt, out, save):
    """Special points of the branch octic with their incidences"""
    _emit(ReportManager().table1(incidence_table(), fmt), "table1", fmt, out, save)


@cli.command("show-config")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def show_config(out):
    """Print the effective settings as JSON, or save them with --out"""
    if out:
        settings.to_file(out)
    else:
        click.echo(json.dumps(settings.to_dict(), indent=2))


@cli.command("export-model")
@click.argument("name")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def export_model(name, out):
    """Write a builtin model as a variety-definition JSON file"""
    text = json.dumps(model_by_name(name).to_dict(), indent=2) + "\n"
    ReportManager().write(text, out)


if __name__ == "__main__":
    cli()
