"""Command line surface: table generation, single queries, and the
verification suites.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when a mathematical
assertion fails.  Assertion failures write a machine-readable JSON record to
stderr naming the first offending input.
"""

import json
import sys

import click

from . import applications
from .arrangements import (
    count_arrangements,
    enumerate_arrangements,
    incidence_table,
)
from .plethysm import (
    MeasureSequence,
    forward_zeta,
    invert_zeta,
    symbolic_inverse,
)
from .polysym import BASES, PolysymElement, convert
from .rings import MathCheckError, format_rational
from .types import canonical_sort_key, enumerate_types, parse_type, poset

TAG_ALIASES = {"a": "a", "e": "e", "ainv": "a_inv", "mobius": "mobius"}


@click.group()
@click.option("--no-cache", is_flag=True, default=False,
              help="Recompute tables instead of using the disk cache.")
@click.pass_context
def cli(ctx, no_cache):
    """Exact computations with splitting types, arrangement numbers, and
    graded zeta factorizations."""
    ctx.ensure_object(dict)
    ctx.obj["use_cache"] = not no_cache


# ---------------------------------------------------------------------------
# types


@cli.group(name="types")
def types_group():
    """Splitting-type enumeration."""


@types_group.command(name="enumerate")
@click.option("--degree", type=int, required=True)
@click.option("--poset", "show_poset", is_flag=True, default=False,
              help="Also list the order relations.")
def types_enumerate(degree, show_poset):
    """List the types of the given degree in canonical order."""
    ordered = sorted(enumerate_types(degree), key=canonical_sort_key)
    for tau in ordered:
        click.echo(tau.label())
    if show_poset:
        order = poset(degree)
        for tau in ordered:
            for lam in ordered:
                if tau != lam and order.leq(tau, lam):
                    click.echo("%s <= %s" % (tau.label(), lam.label()))


# ---------------------------------------------------------------------------
# arrangement numbers


@cli.group(name="arr")
def arr_group():
    """Arrangement counts and incidence tables."""


def _table_csv(table):
    labels = [t.label() for t in table.types]
    lines = [",".join(["type"] + ['"%s"' % s for s in labels])]
    for tau, row in zip(table.types, table.entries):
        cells = [format_rational(x) for x in row]
        lines.append(",".join(['"%s"' % tau.label()] + cells))
    return "\n".join(lines)


def _table_ascii(table):
    labels = [t.label() for t in table.types]
    rows = [[""] + labels]
    for tau, row in zip(table.types, table.entries):
        rows.append([tau.label()] + [format_rational(x) for x in row])
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    lines = []
    for r in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(lines)


@arr_group.command(name="table")
@click.option("--degree", type=int, required=True)
@click.option("--tag", type=click.Choice(sorted(TAG_ALIASES)), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "ascii"]),
              default="json", show_default=True)
@click.pass_context
def arr_table(ctx, degree, tag, fmt):
    """Print a full incidence table for one degree."""
    table = incidence_table(degree, TAG_ALIASES[tag],
                            use_cache=ctx.obj["use_cache"])
    if fmt == "json":
        click.echo(json.dumps(table.to_json(), indent=2))
    elif fmt == "csv":
        click.echo(_table_csv(table))
    else:
        click.echo(_table_ascii(table))


@arr_group.command(name="count")
@click.option("--tau", "tau_text", required=True)
@click.option("--lambda", "lam_text", required=True)
@click.option("--squarefree", is_flag=True, default=False)
def arr_count(tau_text, lam_text, squarefree):
    """Count arrangements transporting --tau into --lambda."""
    tau = parse_type(tau_text)
    lam = parse_type(lam_text)
    click.echo(str(count_arrangements(tau, lam, squarefree=squarefree)))


@arr_group.command(name="tilings")
@click.option("--tau", "tau_text", required=True)
@click.option("--lambda", "lam_text", required=True)
@click.option("--render", is_flag=True, default=False,
              help="Draw each arrangement as an ASCII tiling.")
def arr_tilings(tau_text, lam_text, render):
    """Enumerate the arrangements themselves."""
    tau = parse_type(tau_text)
    lam = parse_type(lam_text)
    found = enumerate_arrangements(tau, lam)
    if render:
        blocks = [arr.render() for arr in found]
        click.echo("\n\n".join(blocks) if blocks else "(none)")
    else:
        for arr in found:
            click.echo(json.dumps(arr.to_json()))
    click.echo("total %d" % len(found), err=False)


# ---------------------------------------------------------------------------
# polysymmetric bases


@cli.command(name="polysym")
@click.argument("action", type=click.Choice(["convert"]))
@click.option("--from", "source", type=click.Choice(BASES), required=True)
@click.option("--to", "target", type=click.Choice(BASES), required=True)
@click.option("--element", "path", type=click.Path(exists=True), required=True)
def polysym_cmd(action, source, target, path):
    """Convert an element file between bases."""
    with open(path, "r", encoding="utf-8") as handle:
        element = PolysymElement.from_json(json.load(handle))
    if element.basis != source:
        raise ValueError(
            "element file is in basis %r, not %r" % (element.basis, source))
    click.echo(json.dumps(convert(element, target).to_json(), indent=2))


# ---------------------------------------------------------------------------
# zeta factorizations


@cli.command(name="zeta")
@click.argument("direction", type=click.Choice(["invert", "forward"]))
@click.option("--ring", "token", required=True)
@click.option("--values", "path", type=click.Path(exists=True), required=True)
@click.option("--upto", type=int, default=None)
def zeta_cmd(direction, token, path, upto):
    """Invert a closed-stratum sequence, or expand an irreducible one."""
    with open(path, "r", encoding="utf-8") as handle:
        sequence = MeasureSequence.from_json(json.load(handle))
    if sequence.ring.name != token:
        raise ValueError(
            "values file is over ring %r, not %r" % (sequence.ring.name, token))
    if direction == "invert":
        out = invert_zeta(sequence.ring, sequence.values, upto=upto)
        role = "irreducible"
    else:
        out = forward_zeta(sequence.ring, sequence.values, upto=upto)
        role = "closed"
    result = MeasureSequence(sequence.ring, out, role=role)
    click.echo(json.dumps(result.to_json(), indent=2))


# ---------------------------------------------------------------------------
# hypersurface measures


@cli.command(name="hyper")
@click.option("--dim", type=int, required=True)
@click.option("--degree", type=int, required=True)
@click.option("--measure", type=click.Choice(applications.HYPER_MEASURES),
              required=True)
@click.option("--q", "q", type=int, default=None)
@click.option("--stratum", "stratum_text", default=None)
def hyper_cmd(dim, degree, measure, q, stratum_text):
    """Measures of the irreducible-hypersurface strata."""
    if measure == "stratum-mass":
        if stratum_text is None:
            raise ValueError("--measure stratum-mass needs --stratum")
        lam = parse_type(stratum_text)
        if lam.degree() != degree:
            raise ValueError(
                "stratum %s has degree %d, not %d"
                % (lam.label(), lam.degree(), degree))
        click.echo(str(applications.stratum_mass(lam, dim)))
        return
    if stratum_text is not None:
        raise ValueError("--stratum only applies to --measure stratum-mass")
    value = applications.irr_hypersurface(dim, degree, measure, q=q)
    if measure == "rcc":
        click.echo("(%d, %d)" % value)
    else:
        click.echo(str(value))


# ---------------------------------------------------------------------------
# inverse Polya counting


@cli.command(name="polya")
@click.option("--x", "xs_text", required=True,
              help="Comma-separated multiset counts x_1,x_2,...")
@click.option("--symbolic", "symbolic_degree", type=int, default=None)
def polya_cmd(xs_text, symbolic_degree):
    """Count atoms from their multiset counts, or print the general formulas."""
    if symbolic_degree is not None:
        ring, us = symbolic_inverse(symbolic_degree)
        for d, u in enumerate(us, start=1):
            click.echo("u_%d = %s" % (d, u.to_string(ring.names)))
        return
    xs = [int(tok) for tok in xs_text.split(",") if tok.strip()]
    if not xs:
        raise ValueError("empty --x list")
    for d, u in enumerate(applications.inverse_polya(xs), start=1):
        click.echo("u_%d = %d" % (d, u))


# ---------------------------------------------------------------------------
# character varieties


@cli.group(name="charvar")
def charvar_group():
    """Counting results for character varieties."""


@charvar_group.command(name="transitive")
@click.option("--letters", type=int, required=True)
@click.option("--rank", type=int, required=True)
@click.option("--oracle", is_flag=True, default=False,
              help="Cross-check against the brute-force count.")
def charvar_transitive(letters, rank, oracle):
    """Transitive permutation-tuple classes on the given letters."""
    value = applications.transitive_tuples(letters, rank)
    click.echo("%d" % value)
    if oracle:
        check = applications.transitive_oracle(letters, rank)
        if check != value:
            raise MathCheckError(
                "transitive count disagrees with the oracle",
                {"letters": letters, "rank": rank,
                 "formula": value, "oracle": check},
            )
        click.echo("oracle: ok")


@charvar_group.command(name="sl")
@click.option("--degree", type=int, required=True)
@click.option("--rank", type=int, required=True)
@click.option("--mode", type=click.Choice(["epoly", "euler"]),
              default="epoly", show_default=True)
def charvar_sl(degree, rank, mode):
    """Special-linear character-variety invariants, degree by degree."""
    values = applications.sl_character_variety(degree, rank, mode=mode)
    for d, value in enumerate(values, start=1):
        click.echo("U_%d = %s" % (d, value))


# ---------------------------------------------------------------------------
# verification suites


@cli.command(name="verify")
@click.argument("suite", type=click.Choice(
    ["appendix", "figure1", "identities", "oracles"]))
@click.option("--max-degree", type=int, default=None)
@click.pass_context
def verify_cmd(ctx, suite, max_degree):
    """Re-run a verification suite; any mismatch exits with code 2."""
    if suite == "appendix":
        checks = applications.verify_appendix(
            max_degree=max_degree, use_cache=ctx.obj["use_cache"])
    elif suite == "figure1":
        checks = applications.verify_factorization(max_degree=max_degree)
    elif suite == "identities":
        checks = applications.verify_identities(max_degree=max_degree)
    else:
        checks = applications.verify_oracles(max_degree=max_degree)
    for check in checks:
        fields = ", ".join("%s=%s" % (k, check[k]) for k in sorted(check))
        click.echo("ok: %s" % fields)
    click.echo("all %d checks passed" % len(checks))


# ---------------------------------------------------------------------------
# entry point


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False, obj={})
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except MathCheckError as exc:
        record = {"error": "math-check-failure", "message": str(exc),
                  "detail": exc.detail}
        click.echo(json.dumps(record, default=str), err=True)
        return 2
    except ValueError as exc:
        click.echo("error: %s" % exc, err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
