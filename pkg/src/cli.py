# cli.py – wirecat command line: parse, decide, evaluate, check, convert, render

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from catalog import resolve_model
from checks import check_interchange_law, check_stringent, check_symmetric
from config import (
    DEFAULT_MAX_STATES,
    DEFAULT_SLACK,
    DEFAULT_WINDOW,
    EXIT_FALSE,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_UNKNOWN,
    SPHERE_BRAIDINGS,
    SPHERE_VARIANTS,
)
from diagram import Diagram, Verdict, canonical_braids, decide_equal
from dsl import format_diagram, format_script, format_signature, parse_diagram, parse_dsl, parse_signature
from errors import AxiomPrereqFailed, SearchBudgetExceeded, WirecatError
from model import Assignment, Evaluator, default_assignment, dumps_model, tautological
from quasistrict import check_quasistrict, derive_beta, derive_Phi, from_quasistrict, tables_equal, to_quasistrict
from render import TARGETS, render
from report import Report, write_pdf
from signature import Signature
from twocell import Script, build_beta_fg, build_Phi, replay

logger = logging.getLogger("wirecat")


# =========================================================
# INPUT HELPERS
# =========================================================


def _read_text(arg: str) -> str:
    """A term given inline, or the contents of a file when ``arg`` names one."""
    path = Path(arg)
    try:
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except OSError:
        pass
    return arg


def _load_sig(sig_path: str | None) -> Signature | None:
    if sig_path is None:
        return None
    return parse_signature(Path(sig_path).read_text(encoding="utf-8"))


def _load_model(model: str, window: int, variant: str | None, braiding: str | None):
    m = resolve_model(model, window=window, variant=variant, braiding=braiding)
    logger.info("model %s", m.name)
    return m


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info("wrote %s", out)


def sig_option(f):
    return click.option(
        "--sig", "sig_path", type=click.Path(exists=True, dir_okay=False),
        help="Signature file (DSL).",
    )(f)


def out_option(f):
    return click.option("--out", type=click.Path(dir_okay=False), help="Write output to FILE.")(f)


def model_options(f):
    f = click.option("--braiding", type=click.Choice(SPHERE_BRAIDINGS), default=None,
                     help="Braiding degree rule of the sphere example.")(f)
    f = click.option("--variant", type=click.Choice(SPHERE_VARIANTS), default=None,
                     help="Interchangor variant of the sphere example.")(f)
    f = click.option("--window", type=click.IntRange(min=1), default=DEFAULT_WINDOW, show_default=True,
                     help="Objects of the sphere example are checked on [-N, N].")(f)
    f = click.option("--model", default="q", show_default=True,
                     help="Built-in model name (q, deloop-p) or a model file.")(f)
    return f


# =========================================================
# COMMANDS
# =========================================================


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def cli(verbose: bool):
    """Wire diagrams for symmetric monoidal 2-categories."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.argument("term")
@sig_option
@out_option
def parse(term: str, sig_path: str | None, out: str | None):
    """Parse a signature, diagram or script and print it back."""
    value = parse_dsl(_read_text(term), _load_sig(sig_path))
    if isinstance(value, Signature):
        text = format_signature(value)
    elif isinstance(value, Script):
        replay(value)
        text = format_script(value) + "\n"
    else:
        text = format_diagram(value) + "\n"
    _emit(text, out)
    return EXIT_OK


@cli.command()
@click.argument("diagram")
@sig_option
@out_option
def normalize(diagram: str, sig_path: str | None, out: str | None):
    """Print the braid-canonical form of a diagram."""
    d = parse_diagram(_read_text(diagram), _load_sig(sig_path))
    _emit(format_diagram(canonical_braids(d)) + "\n", out)
    return EXIT_OK


@cli.command("check-equal")
@click.argument("left")
@click.argument("right")
@sig_option
@click.option("--budget", type=click.IntRange(min=1), default=DEFAULT_MAX_STATES, show_default=True,
              help="Maximum number of diagrams the search may visit.")
@click.option("--slack", type=click.IntRange(min=0), default=DEFAULT_SLACK, show_default=True,
              help="Extra slices allowed above the longer diagram.")
@click.option("--trace", is_flag=True, help="Print the moves relating the two diagrams.")
def check_equal(left: str, right: str, sig_path: str | None, budget: int, slack: int, trace: bool):
    """Decide whether two diagrams are equal: exit 0 true, 1 false, 2 unknown."""
    sig = _load_sig(sig_path)
    d1 = parse_diagram(_read_text(left), sig)
    d2 = parse_diagram(_read_text(right), sig)
    verdict, moves = decide_equal(d1, d2, slack=slack, max_states=budget)
    click.echo(verdict.value)
    if trace and moves is not None:
        click.echo(f"{len(moves)} moves")
        if len(moves):
            click.echo(str(moves))
    return {Verdict.TRUE: EXIT_OK, Verdict.FALSE: EXIT_FALSE, Verdict.UNKNOWN: EXIT_UNKNOWN}[verdict]


@cli.command()
@click.argument("script")
@sig_option
@click.option("--format", "fmt", type=click.Choice(("dsl",) + TARGETS), default="dsl", show_default=True)
@out_option
def apply(script: str, sig_path: str | None, fmt: str, out: str | None):
    """Replay a script and print its target diagram."""
    s = parse_dsl(_read_text(script), _load_sig(sig_path))
    if not isinstance(s, Script):
        raise click.UsageError("apply expects a script (starting with 'src')")
    tgt = s.tgt
    _emit(format_diagram(tgt) + "\n" if fmt == "dsl" else render(tgt, fmt), out)
    return EXIT_OK


@cli.command("eval")
@click.argument("term")
@sig_option
@model_options
@click.option("--assign", "assign_path", type=click.Path(exists=True, dir_okay=False),
              help="JSON assignment of generators to model cells.")
def eval_(term: str, sig_path: str | None, model: str, window: int, variant: str | None,
          braiding: str | None, assign_path: str | None):
    """Evaluate a diagram or script in a model."""
    sig = _load_sig(sig_path) or Signature()
    value = parse_dsl(_read_text(term), sig)
    m = _load_model(model, window, variant, braiding)
    if assign_path:
        try:
            assignment = Assignment.from_dict(json.loads(Path(assign_path).read_text(encoding="utf-8")))
        except (json.JSONDecodeError, AttributeError) as exc:
            raise click.UsageError(f"{assign_path}: not a JSON assignment ({exc})") from None
    else:
        assignment = m.assignment or default_assignment(m, sig)
    ev = Evaluator(m, assignment)
    if isinstance(value, Script):
        cell = ev.eval2(value)
        logger.info("value %s", m.name2(cell))
        click.echo(m.label2(cell))
    elif isinstance(value, Diagram):
        click.echo(m.name1(ev.eval1(value)))
    else:
        raise click.UsageError("eval expects a diagram or a script")
    return EXIT_OK


def _axiom_report(m, quasistrict: bool) -> Report:
    report = Report(f"axioms of {m.name}")
    for part in (check_stringent(m), check_symmetric(m), check_interchange_law(m)):
        report.extend(part)
    if quasistrict:
        if report.passed:
            report.extend(check_quasistrict(m, to_quasistrict(m)))
        else:
            report.notes.append("quasistrict checks skipped: the stringent symmetric axioms fail")
    return report


@cli.command("check-axioms")
@model_options
@click.option("--quasistrict/--no-quasistrict", default=True, show_default=True,
              help="Also derive and check the quasistrict structure.")
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False), help="Also write the report as PDF.")
@out_option
def check_axioms(model: str, window: int, variant: str | None, braiding: str | None,
                 quasistrict: bool, pdf_path: str | None, out: str | None):
    """Check every axiom on a model: exit 0 when all hold, 1 otherwise."""
    m = _load_model(model, window, variant, braiding)
    report = _axiom_report(m, quasistrict)
    _emit(report.format_text(), out)
    if pdf_path:
        write_pdf(report, pdf_path)
    logger.info("%d of %d axioms fail", len(report.failed()), len(report.results))
    return EXIT_OK if report.passed else EXIT_FALSE


@cli.command("derive-phi")
@click.argument("fp")
@click.argument("gp")
@click.argument("f")
@click.argument("g")
@model_options
@click.option("--script", "show_script", is_flag=True, help="Print the building script too.")
def derive_phi(fp: str, gp: str, f: str, g: str, model: str, window: int, variant: str | None,
               braiding: str | None, show_script: bool):
    """The interchanger Phi of composable pairs (f, f') and (g, g') of model 1-cells."""
    m = _load_model(model, window, variant, braiding)
    cells = [m.cell1(x) for x in (fp, gp, f, g)]
    p = tautological(m)
    if show_script:
        click.echo(format_script(build_Phi(*(p.diagram(c) for c in cells))))
    value = derive_Phi(p, *cells)
    click.echo(f"{m.name2(value)}  {m.label2(value)}")
    return EXIT_OK


@cli.command("derive-beta")
@click.argument("f")
@click.argument("g")
@model_options
@click.option("--script", "show_script", is_flag=True, help="Print the building script too.")
def derive_beta_cmd(f: str, g: str, model: str, window: int, variant: str | None,
                    braiding: str | None, show_script: bool):
    """The braiding naturality 2-cell beta_{f,g} of two model 1-cells."""
    m = _load_model(model, window, variant, braiding)
    fc, gc = m.cell1(f), m.cell1(g)
    p = tautological(m)
    if show_script:
        click.echo(format_script(build_beta_fg(p.diagram(fc), p.diagram(gc))))
    value = derive_beta(p, fc, gc)
    click.echo(f"{m.name2(value)}  {m.label2(value)}")
    return EXIT_OK


def _quasistrict_text(m, q) -> list[str]:
    n1 = m.name1

    def n2(x):
        return "missing" if x is None else m.name2(x)

    lines = [f"# {q.name}"]
    for (fp, gp, f, g), x in q.Phi.items():
        lines.append(f"Phi {n1(fp)} {n1(gp)} {n1(f)} {n1(g)} = {n2(x)}")
    for (f, g), x in q.beta2.items():
        lines.append(f"beta {n1(f)} {n1(g)} = {n2(x)}")
    return lines


@cli.command()
@model_options
@click.option("--to", "target", type=click.Choice(("quasistrict", "model")), required=True)
@click.option("--force", is_flag=True, help="Convert even when the axioms fail.")
@out_option
def convert(model: str, window: int, variant: str | None, braiding: str | None,
            target: str, force: bool, out: str | None):
    """Export a model file, or derive the quasistrict tables and convert back."""
    m = _load_model(model, window, variant, braiding)
    if target == "model":
        _emit(dumps_model(m), out)
        return EXIT_OK
    q = to_quasistrict(m, force=force)
    diffs = tables_equal(m, from_quasistrict(q))
    lines = _quasistrict_text(m, q)
    lines.append("round trip: identical" if not diffs else "round trip: differs")
    lines += [f"  {d}" for d in diffs]
    _emit("\n".join(lines) + "\n", out)
    return EXIT_OK if not diffs else EXIT_FALSE


@cli.command("render")
@click.argument("term")
@sig_option
@click.option("--format", "fmt", type=click.Choice(TARGETS), default="ascii", show_default=True)
@out_option
def render_cmd(term: str, sig_path: str | None, fmt: str, out: str | None):
    """Draw a diagram or script as ascii art or TikZ."""
    value = parse_dsl(_read_text(term), _load_sig(sig_path))
    if isinstance(value, Signature):
        raise click.UsageError("render expects a diagram or a script")
    _emit(render(value, fmt), out)
    return EXIT_OK


# =========================================================
# ENTRY POINT
# =========================================================


def run(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit status."""
    try:
        status = cli.main(args=argv, prog_name="wirecat", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_INPUT
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        click.echo(f"unknown: {exc}", err=True)
        return EXIT_UNKNOWN
    except AxiomPrereqFailed as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_FALSE
    except WirecatError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    return EXIT_OK if status is None else status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
