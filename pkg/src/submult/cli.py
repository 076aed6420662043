"""Command-line frontend.

Scalar inputs arrive as flags; polynomial and curve data arrive through a
single JSON config document: {variables: [...], h: [...], curve?: {...},
family?: {...}, options?: {...}}.  Output is a JSON document (sorted keys,
byte-stable) or a plain-text rendering.  Exit codes: 0 success, 1 domain or
validation errors, 2 resource-cap exhaustion.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import contact as _contact
from . import corpus as _corpus
from . import kohn as _kohn
from . import triangular as _triangular
from .errors import CapExceededError, SubmultError, ValidationError
from .ideals import (
    DEFAULT_ROOT_CAP,
    DEFAULT_TRUNCATION_CAP,
    Ideal,
    germ_colength,
    germ_member,
    member,
    root_order,
)
from .poly import INF, parse

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CAP = 2


@dataclass(frozen=True)
class JobSpec:
    """Validated request: command, ring data, and positive option values."""

    command: str
    variables: tuple[str, ...]
    h: tuple[str, ...]
    options: dict


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValidationError("config must be a JSON object")
    return doc


def _jobspec(command: str, config: dict, **options) -> JobSpec:
    variables = tuple(config.get("variables", ()))
    if not variables:
        raise ValidationError("config must list the ring variables")
    h = tuple(config.get("h", ()))
    for s in h:
        parse(s, variables)  # surfaces syntax errors with positions
    merged = dict(config.get("options", {}))
    merged.update(options)
    for key, value in merged.items():
        if isinstance(value, int) and not isinstance(value, bool) and value <= 0:
            raise ValidationError(f"option {key} must be a positive integer")
    return JobSpec(command, variables, h, merged)


def _emit(ctx, doc) -> None:
    fmt = (ctx.obj or {}).get("format", "json")
    if fmt == "json":
        click.echo(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in _text_lines(doc, ""):
            click.echo(line)


def _text_lines(doc, indent: str):
    if isinstance(doc, dict):
        for key in sorted(doc):
            value = doc[key]
            if isinstance(value, (dict, list)):
                yield f"{indent}{key}:"
                yield from _text_lines(value, indent + "  ")
            else:
                yield f"{indent}{key}: {value}"
    elif isinstance(doc, list):
        for value in doc:
            if isinstance(value, (dict, list)):
                yield f"{indent}-"
                yield from _text_lines(value, indent + "  ")
            else:
                yield f"{indent}- {value}"
    else:
        yield f"{indent}{doc}"


_config_option = click.option(
    "--config", "config_path", required=True, metavar="PATH", help="JSON config document"
)


@click.group()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "text"]),
    default="json",
    help="output rendering",
)
@click.pass_context
def cli(ctx, fmt):
    """Exact multiplier-ideal runs, triangular ladders, and contact arithmetic."""
    ctx.obj = {"format": fmt}


# -- multipliers -------------------------------------------------------------


@cli.group()
def multipliers():
    """Multiplier-ideal iteration on special domains."""


@multipliers.command("run")
@_config_option
@click.option("--max-steps", default=_kohn.DEFAULT_MAX_STEPS, show_default=True)
@click.option("--truncation-cap", default=DEFAULT_TRUNCATION_CAP, show_default=True)
@click.option("--root-cap", default=DEFAULT_ROOT_CAP, show_default=True)
@click.option("--row-cap", default=_kohn.DEFAULT_ROW_CAP, show_default=True)
@click.option(
    "--radical-mode",
    type=click.Choice(["full", "none"]),
    default="full",
    show_default=True,
)
@click.pass_context
def multipliers_run(ctx, config_path, max_steps, truncation_cap, root_cap, row_cap, radical_mode):
    config = _load_config(config_path)
    spec = _jobspec(
        "multipliers.run",
        config,
        max_steps=max_steps,
        truncation_cap=truncation_cap,
        root_cap=root_cap,
        row_cap=row_cap,
    )
    domain = _kohn.SpecialDomain.from_strings(
        spec.h, spec.variables, config.get("label", "")
    )
    options = _kohn.KohnOptions(
        radical_mode=radical_mode,
        max_steps=max_steps,
        truncation_cap=truncation_cap,
        root_cap=root_cap,
        row_cap=row_cap,
    )
    trace = _kohn.run(domain, options)
    _emit(ctx, trace.to_dict())
    if trace.status == "step_cap":
        ctx.exit(EXIT_CAP)


# -- triangular ----------------------------------------------------------------


@cli.group()
def triangular():
    """Certified multiplier ladders for triangular systems."""


@triangular.command("run")
@_config_option
@click.pass_context
def triangular_run(ctx, config_path):
    config = _load_config(config_path)
    spec = _jobspec("triangular.run", config)
    polys = [parse(s, spec.variables) for s in spec.h]
    system = _triangular.validate(polys, spec.variables)
    trace = _triangular.run_effective(system)
    report = _triangular.certify(trace, system)
    doc = trace.to_dict()
    doc["multiplicity"] = _triangular.multiplicity(system)
    doc["certified"] = report.passed
    doc["failures"] = list(report.failures())
    _emit(ctx, doc)


# -- ideal --------------------------------------------------------------------


@cli.group()
def ideal():
    """Germ-at-origin ideal queries."""


@ideal.command("colength")
@_config_option
@click.option("--truncation-cap", default=DEFAULT_TRUNCATION_CAP, show_default=True)
@click.pass_context
def ideal_colength(ctx, config_path, truncation_cap):
    config = _load_config(config_path)
    spec = _jobspec("ideal.colength", config, truncation_cap=truncation_cap)
    ideal_obj = Ideal.from_strings(spec.h, spec.variables)
    report = germ_colength(ideal_obj, truncation_cap)
    _emit(ctx, report.to_dict())
    if report.capped:
        ctx.exit(EXIT_CAP)


@ideal.command("member")
@_config_option
@click.option("--poly", "poly_text", required=True, help="polynomial to test")
@click.option("--germ", "germ_mode", is_flag=True, help="decide membership as germs")
@click.option("--truncation-cap", default=DEFAULT_TRUNCATION_CAP, show_default=True)
@click.pass_context
def ideal_member(ctx, config_path, poly_text, germ_mode, truncation_cap):
    config = _load_config(config_path)
    spec = _jobspec("ideal.member", config, truncation_cap=truncation_cap)
    ideal_obj = Ideal.from_strings(spec.h, spec.variables)
    f = parse(poly_text, spec.variables)
    if germ_mode:
        report = germ_colength(ideal_obj, truncation_cap)
        if report.m_primary:
            doc = {"member": germ_member(f, ideal_obj, report), "mode": "germ"}
        else:
            doc = {"member": member(f, ideal_obj), "mode": "conservative"}
    else:
        doc = {"member": member(f, ideal_obj), "mode": "global"}
    _emit(ctx, doc)


@ideal.command("root-order")
@_config_option
@click.option("--poly", "poly_text", required=True, help="polynomial to test")
@click.option("--root-cap", default=DEFAULT_ROOT_CAP, show_default=True)
@click.option("--truncation-cap", default=DEFAULT_TRUNCATION_CAP, show_default=True)
@click.pass_context
def ideal_root_order(ctx, config_path, poly_text, root_cap, truncation_cap):
    config = _load_config(config_path)
    spec = _jobspec("ideal.root-order", config, root_cap=root_cap)
    ideal_obj = Ideal.from_strings(spec.h, spec.variables)
    f = parse(poly_text, spec.variables)
    report = germ_colength(ideal_obj, truncation_cap)
    order = root_order(f, ideal_obj, root_cap, report) if report.m_primary else None
    _emit(ctx, {"root_order": order})
    if order is None:
        ctx.exit(EXIT_CAP)


# -- contact --------------------------------------------------------------------


@cli.group()
def contact():
    """Orders of contact for curves and curve families."""


@contact.command("curve")
@_config_option
@click.pass_context
def contact_curve_cmd(ctx, config_path):
    config = _load_config(config_path)
    spec = _jobspec("contact.curve", config)
    domain = _contact.AmbientDomain.from_strings(spec.h, spec.variables)
    curve_doc = config.get("curve")
    if not curve_doc:
        raise ValidationError("config must carry a curve document")
    components = [parse(s, ("zeta",)) for s in curve_doc["components"]]
    base = [parse(str(s), []).constant_term() for s in curve_doc.get("base", [])]
    value = _contact.contact_curve(domain, components, base or None)
    _emit(ctx, {"contact": "infinite" if value == INF else str(value)})


@contact.command("family")
@_config_option
@click.pass_context
def contact_family_cmd(ctx, config_path):
    config = _load_config(config_path)
    spec = _jobspec("contact.family", config)
    domain = _contact.AmbientDomain.from_strings(spec.h, spec.variables)
    family_doc = config.get("family")
    if not family_doc:
        raise ValidationError("config must carry a family document")
    family = _contact.CurveFamily.from_config(family_doc["components"])
    doc = {}
    if family.has_free_exponent:
        alpha = family_doc.get("alpha")
        if alpha is None:
            alpha = _contact.balance_exponent(domain, family)
        else:
            alpha = Fraction(alpha)
        family = family.fix_exponent(alpha)
        doc["alpha"] = str(alpha)
    result = _contact.contact_family(domain, family)
    doc.update(result.to_dict())
    _emit(ctx, doc)


@contact.command("formula")
@click.option("--m1", type=int, required=True)
@click.option("--m2", type=int, required=True)
@click.option("--lambda", "lam", default=None, help="mixing parameter in (0, 1]")
@click.option("--limit-zero", is_flag=True, help="query the limiting value instead")
@click.pass_context
def contact_formula(ctx, m1, m2, lam, limit_zero):
    if limit_zero == (lam is not None):
        raise ValidationError("give exactly one of --lambda or --limit-zero")
    if limit_zero:
        value = _contact.sharp_T_limit(m1, m2)
    else:
        value = _contact.sharp_T(m1, m2, Fraction(lam))
    _emit(ctx, {"T": str(value), "epsilon_bound": str(_contact.epsilon_bound(value))})


@contact.command("bound")
@click.option("--base", "t_base", required=True, help="contact order at the base point")
@click.option("--nearby", "t_nearby", required=True, help="contact order nearby")
@click.option("--dim", type=int, required=True)
@click.pass_context
def contact_bound(ctx, t_base, t_nearby, dim):
    base, nearby = Fraction(t_base), Fraction(t_nearby)
    ok = _contact.type_bound_check(base, nearby, dim)
    limit = base ** (dim - 1) / Fraction(2) ** (dim - 2)
    _emit(ctx, {"ok": ok, "limit": str(limit)})


# -- reproduce --------------------------------------------------------------------


@cli.command("reproduce")
@click.option("--filter", "pattern", default=None, help="fnmatch pattern on case ids")
@click.pass_context
def reproduce(ctx, pattern):
    """Re-run the shipped corpus of worked examples and compare exactly."""
    outcome = _corpus.reproduce(pattern)
    fmt = (ctx.obj or {}).get("format", "json")
    if fmt == "json":
        _emit(ctx, outcome)
    else:
        width = max((len(r["id"]) for r in outcome["cases"]), default=4)
        for row in outcome["cases"]:
            status = "PASS" if row["pass"] else "FAIL"
            click.echo(
                f"{row['id']:<{width}}  {row['source']:<10}  {status}  "
                f"expected={row['expected']!r}  actual={row['actual']!r}"
            )
        click.echo(f"{'all pass' if outcome['all_pass'] else 'FAILURES PRESENT'}")
    if not outcome["all_pass"]:
        ctx.exit(EXIT_DOMAIN)


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, standalone_mode=False, prog_name="submult")
    except CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_CAP
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return EXIT_DOMAIN
    except (SubmultError, click.UsageError, click.ClickException, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
