"""Command-line interface.

Exit codes: 0 success, 1 verification failure or OEIS mismatch, 2 bad
arguments, 3 sieve ceiling reached, 4 source cannot be N-sieved, 5 network
unavailable with nothing cached.
"""
from __future__ import annotations

import functools
import json
import sys

import click

from . import sieve_core
from .alt_sum import bulk_alternating, class_by_parity, lateral_class, lateral_rows
from .catalog import CATALOG, generate
from .errors import ArgumentError, ResourceLimitError
from .higher_order import order_k_sequence, order_k_upto
from .n_sieve import SieveSource, render_trace, run_sieve, validate_sievable
from .oeis_client import NetworkUnavailable, OEISClient, OEISError, SequenceNotFound, compare_entries
from .partition import decompose_order, ring_table, verify_partition

EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT, EXIT_UNSIEVABLE, EXIT_NETWORK = 1, 2, 3, 4, 5

CLASS_METHODS = ("bulk", "lateral", "parity", "sieve")


class _Group(click.Group):
    """Maps library errors onto the documented exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ResourceLimitError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_LIMIT)
        except NetworkUnavailable as exc:
            click.echo(f"error: network unavailable: {exc}", err=True)
            ctx.exit(EXIT_NETWORK)
        except (ArgumentError, SequenceNotFound) as exc:
            raise click.UsageError(str(exc), ctx) from exc


def common(fn):
    @click.option("--ceiling", type=click.IntRange(min=2), default=None, help="Sieve maximum bound.")
    @functools.wraps(fn)
    def wrapper(*args, ceiling=None, **kwargs):
        if ceiling is not None:
            sieve_core.configure(ceiling)
        return fn(*args, **kwargs)

    return wrapper


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "tsv", "json-lines"]),
    default="plain",
    show_default=True,
)


@click.group(cls=_Group)
@click.version_option(package_name="hoprimes")
def cli():
    """Higher-order primes, alternating-sum classes and the N-sieve."""


def _emit(values, fmt):
    src = sieve_core.default_source()
    orders = src.orders(list(values)).tolist() if fmt == "json-lines" and values else []
    for n, v in enumerate(values, start=1):
        if fmt == "plain":
            click.echo(v)
        elif fmt == "tsv":
            click.echo(f"{n}\t{v}")
        else:
            click.echo(json.dumps({"index": n, "value": v, "order_of_primeness": orders[n - 1]}))


def _limit_choice(count, bound):
    if count is not None and bound is not None:
        raise click.UsageError("give either --count or --bound, not both")


@cli.group(cls=_Group)
def gen():
    """Print a sequence prefix."""


@gen.command("order-k")
@click.argument("k", type=click.IntRange(min=1))
@click.option("--count", type=click.IntRange(min=1), default=None)
@click.option("--bound", type=click.IntRange(min=1), default=None)
@format_option
@common
def gen_order(k, count, bound, fmt):
    """Terms of P^(K): the first --count (default 10), or all up to --bound."""
    _limit_choice(count, bound)
    if bound is not None:
        values = order_k_upto(k, bound).tolist()
    else:
        values = list(order_k_sequence(k, count or 10).terms)
    _emit(values, fmt)


def class_upto(i, bound, method):
    if method == "bulk":
        return bulk_alternating(i, bound).terms
    if method == "parity":
        return class_by_parity(i, bound).terms
    if method == "lateral":
        if i != 1:
            raise click.UsageError("the lateral method builds class 1 only")
        return lateral_class(bound).terms
    return run_sieve(SieveSource(i - 1), bound).circled_set


@gen.command("class")
@click.argument("i", type=click.IntRange(min=1))
@click.option("--bound", type=click.IntRange(min=2), default=None)
@click.option("--count", type=click.IntRange(min=1), default=None)
@click.option("--method", type=click.Choice(CLASS_METHODS), default="bulk", show_default=True)
@format_option
@common
def gen_class(i, bound, count, method, fmt):
    """Terms of alternating-sum class I: up to --bound, or the first --count (default 10)."""
    _limit_choice(count, bound)
    if bound is not None:
        values = list(class_upto(i, bound, method))
    else:
        count = count or 10
        b = 64
        while len(values := class_upto(i, b, method)) < count:
            b *= 2
        values = list(values[:count])
    _emit(values, fmt)


@gen.command("lateral-rows")
@click.option("--count", type=click.IntRange(min=1), default=11, show_default=True)
@format_option
@common
def gen_lateral_rows(count, fmt):
    """Rows 1..--count of the lateral table: p_r, or 0 for rows that cancel."""
    rows = lateral_rows(count)
    for r, v in enumerate(rows, start=1):
        if fmt == "plain":
            click.echo(v)
        elif fmt == "tsv":
            click.echo(f"{r}\t{v}")
        else:
            click.echo(json.dumps({"index": r, "value": v}))


@cli.command()
@click.argument("source", type=click.Choice(["N", "order-k", "class"]))
@click.argument("param", type=click.IntRange(min=1), required=False)
@click.option("--horizon", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--columns", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--steps", is_flag=True, help="Print the step log instead of the grid.")
@click.option("--unicode", "use_unicode", is_flag=True, help="Mark circled values with U+20DD.")
@common
def sieve(source, param, horizon, columns, steps, use_unicode):
    """N-sieve SOURCE (N, order-k K, or class I) up to --horizon."""
    if source != "N" and param is None:
        param = 1
    src = sieve_core.default_source()
    if source != "N":
        p_top = src.nth_prime(horizon)
        if source == "class":
            seq = class_by_parity(param, max(p_top, 2)).terms
        else:
            seq = order_k_upto(param, p_top).tolist()
        head = [v for v in seq if v <= horizon]
        if not seq:
            raise click.UsageError(f"{source} {param} has no terms up to {p_top}")
        result = validate_sievable(seq, max(len(head), 1))
        if not result.ok:
            v, c = result.counterexample
            click.echo(
                f"{source} {param} cannot be N-sieved: visiting {v} circles p_{v} = {c}, "
                f"which is not in the sequence",
                err=True,
            )
            sys.exit(EXIT_UNSIEVABLE)
        if source == "class":
            raise click.UsageError("only N and order-k sources can be sieved")
    trace = run_sieve(SieveSource(0 if source == "N" else param), horizon)
    if steps:
        click.echo(trace.export(), nl=False)
    else:
        text = render_trace(trace, columns, unicode=use_unicode)
        if text:
            click.echo(text)


@cli.group(cls=_Group)
def verify():
    """Run a finite verification; exit 1 on a violation."""


@verify.command("partition")
@click.option("--class", "class_index", type=click.IntRange(min=1), required=True)
@click.option("--bound", type=click.IntRange(min=2), required=True)
@common
def verify_partition_cmd(class_index, bound):
    w = verify_partition(class_index, bound)
    click.echo(w.report(), nl=False)
    sys.exit(0 if w.verdict.passed else EXIT_FAIL)


@verify.command("decompose")
@click.option("--order", type=click.IntRange(min=1), required=True)
@click.option("--bound", type=click.IntRange(min=2), required=True)
@common
def verify_decompose_cmd(order, bound):
    r = decompose_order(order, bound)
    click.echo(r.report(), nl=False)
    sys.exit(0 if r.verdict.passed else EXIT_FAIL)


@verify.command("equivalence")
@click.option("--bound", type=click.IntRange(min=2), required=True)
@click.option("--classes", default="1,2,3,4", show_default=True, help="Comma-separated class indices.")
@common
def verify_equivalence_cmd(bound, classes):
    """Compare bulk, lateral (class 1), N-sieve and parity constructions."""
    try:
        indices = [int(c) for c in classes.split(",") if c.strip()]
    except ValueError:
        raise click.BadParameter(classes, param_hint="--classes") from None
    if not indices or min(indices) < 1:
        raise click.BadParameter(classes, param_hint="--classes")
    ok = True
    for i in indices:
        oracle = class_by_parity(i, bound).terms
        methods = ["bulk", "sieve"] + (["lateral"] if i == 1 else [])
        for m in methods:
            got = class_upto(i, bound, m)
            same = got == oracle
            ok &= same
            click.echo(f"class {i}\t{m}\t{'pass' if same else 'fail'}\tterms={len(got)}\toracle_terms={len(oracle)}")
    click.echo("verdict: pass" if ok else "verdict: fail")
    sys.exit(0 if ok else EXIT_FAIL)


@verify.command("rings")
@click.option("--bound", type=click.IntRange(min=1), required=True)
@common
def verify_rings_cmd(bound):
    """Print the ring populations over 1..--bound."""
    click.echo(ring_table(bound), nl=False)


@cli.command("oeis-check")
@click.argument("sequence_id", required=False)
@click.option("--all", "check_all", is_flag=True)
@click.option("--terms", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--offline", is_flag=True, help="Use only the cache and vendored fixtures.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@common
def oeis_check(sequence_id, check_all, terms, offline, cache_dir):
    """Regenerate cited sequences and diff them against OEIS b-files."""
    if check_all == (sequence_id is not None):
        raise click.UsageError("give exactly one of SEQUENCE_ID or --all")
    if sequence_id is not None and sequence_id not in CATALOG:
        raise click.UsageError(f"no generator mapped to {sequence_id!r}; known: {', '.join(CATALOG)}")
    ids = list(CATALOG) if check_all else [sequence_id]
    client = OEISClient(cache_dir, offline=offline)
    ok = True
    for sid in ids:
        try:
            bfile = client.fetch_bfile(sid)
        except NetworkUnavailable:
            raise
        except OEISError as exc:
            click.echo(f"{sid}\terror\t{exc}")
            ok = False
            continue
        n = min(terms, len(bfile.entries))
        report = compare_entries(sid, bfile, generate(sid, n))
        click.echo(f"{report}\torigin={bfile.origin}")
        ok &= report.verdict == "pass"
    sys.exit(0 if ok else EXIT_FAIL)


def main():
    cli()


if __name__ == "__main__":
    main()
