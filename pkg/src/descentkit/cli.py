"""dk: command-line front end for exact descent-algebra computations."""

import json
import sys

import click

from .algebra import (
    DescentElement,
    descent_algebra,
    nilpotency_index,
    radical_basis,
    radical_power_dims,
    theta,
)
from .cartan import CartanData, cartan_matrix, verify_apw
from .combinat import CHAR_ZERO, compositions
from .fields import QQ, FieldSpec, GF
from .fixtures import DEFAULT_SEED, run_fixtures
from .idempotents import orthogonal_idempotent_set, simple_labels
from .morphisms import verify_bgr_suite
from .quiver import conjecture_scan, ext_quiver, rep_type

MAX_N = 12


def _field(p, char0) -> FieldSpec:
    if char0 and p is not None:
        raise click.UsageError("--p and --char0 are mutually exclusive")
    if char0:
        return QQ
    if p is None:
        raise click.UsageError("one of --p or --char0 is required")
    try:
        return GF(p)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _check_n(n):
    if not 1 <= n <= MAX_N:
        raise click.UsageError(f"--n must be in [1, {MAX_N}]")


def _emit(data):
    click.echo(json.dumps(data, indent=2, sort_keys=True))


def _part_name(lam):
    return "".join(map(str, lam)) if lam else "0"


@click.group()
def main():
    """Exact computations in descent algebras over Q and F_p."""


@main.command()
@click.option("--n", type=int, required=True)
def basis(n):
    """List the composition basis (ascending lexicographic)."""
    _check_n(n)
    _emit({"n": n, "dim": 2 ** (n - 1), "basis": [list(q) for q in compositions(n)]})


@main.command()
@click.option("--n", type=int, default=None)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
@click.option("--lhs", required=True, help="element as JSON")
@click.option("--rhs", required=True, help="element as JSON")
def multiply(n, p, char0, lhs, rhs):
    """Multiply two elements given as JSON."""
    try:
        x = DescentElement.from_json(lhs)
        y = DescentElement.from_json(rhs)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"bad element JSON: {exc}")
    if n is not None and (x.n != n or y.n != n):
        raise click.UsageError("--n disagrees with the element degrees")
    if (p is not None or char0) and _field(p, char0) != x.field:
        raise click.UsageError("--p/--char0 disagrees with the element field")
    if x.n != y.n or x.field != y.field:
        raise click.UsageError("operands live in different algebras")
    _emit((x * y).to_json())


@main.command(name="theta")
@click.option("--element", required=True, help="element as JSON")
def theta_cmd(element):
    """Image of an element under the surjection onto class functions."""
    try:
        x = DescentElement.from_json(element)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"bad element JSON: {exc}")
    cf = theta(x)
    _emit(
        {
            "n": x.n,
            "field": {"char": x.field.char},
            "values": {
                _part_name(mu): x.field.to_str(c) for mu, c in cf.values.items()
            },
        }
    )


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
def radical(n, p, char0):
    """Radical basis, radical power dimensions, nilpotency index."""
    _check_n(n)
    field = _field(p, char0)
    dims = radical_power_dims(n, field)
    _emit(
        {
            "n": n,
            "field": {"char": field.char},
            "basis": [x.to_json()["terms"] for x in radical_basis(n, field)],
            "power_dims": dims,
            "nilpotency_index": nilpotency_index(n, field),
        }
    )


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
def idempotents(n, p, char0):
    """Complete orthogonal primitive idempotent set plus invariant report."""
    _check_n(n)
    field = _field(p, char0)
    idems = orthogonal_idempotent_set(n, field)
    report = idems.verify()
    _emit({"set": idems.to_json(), "verification": report})
    if not report["all"]:
        sys.exit(1)


def _csv_grid(labels, matrix):
    head = "," + ",".join(_part_name(l) for l in labels)
    rows = [head]
    for lam, row in zip(labels, matrix):
        rows.append(_part_name(lam) + "," + ",".join(str(v) for v in row))
    return "\n".join(rows)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
@click.option("--verify-apw", "apw", is_flag=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def cartan(n, p, char0, apw, fmt):
    """Cartan data; with --verify-apw also check C~ = D^T C D."""
    _check_n(n)
    field = _field(p, char0)
    if apw:
        if field.char == 0:
            raise click.UsageError("--verify-apw needs a prime --p")
        report = verify_apw(n, p)
        _emit(report)
        if not report["ok"]:
            sys.exit(1)
        return
    if field.char == 0:
        labels = sorted(simple_labels(n, field))
        C = cartan_matrix(n, field)
        if fmt == "csv":
            click.echo(_csv_grid(labels, C))
        else:
            _emit(
                {
                    "n": n,
                    "field": {"char": 0},
                    "order": [list(t) for t in labels],
                    "C": C,
                }
            )
        return
    data = CartanData(n, p)
    if fmt == "csv":
        click.echo(_csv_grid(data.col_order, data.C_tilde))
    else:
        _emit(data.to_json())


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
@click.option("--dot", "as_dot", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def quiver(n, p, char0, as_dot, as_json):
    """Ext quiver; JSON by default, DOT with --dot."""
    _check_n(n)
    if n > 8:
        raise click.UsageError("quiver computation is limited to n <= 8")
    Q = ext_quiver(n, _field(p, char0))
    if as_dot and as_json:
        raise click.UsageError("--dot and --json are mutually exclusive")
    if as_dot:
        click.echo(Q.to_dot())
    else:
        _emit(Q.to_json())


@main.command(name="type")
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
def type_cmd(n, p, char0):
    """Representation type (finite/wild) with evidence."""
    _check_n(n)
    field = _field(p, char0)
    _emit(rep_type(n, CHAR_ZERO if field.char == 0 else field.char))


@main.command(name="verify-bgr")
@click.option("--n", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--p", type=int, default=None)
@click.option("--char0", is_flag=True)
def verify_bgr(n, s, p, char0):
    """Degree-lowering map: homomorphism, surjectivity, idempotent images,
    simple pullbacks, subquiver embedding."""
    _check_n(n)
    if not 1 <= s <= n:
        raise click.UsageError(f"--s must be in [1, {n}]")
    field = _field(p, char0)
    report = verify_bgr_suite(n, s, CHAR_ZERO if field.char == 0 else field.char)
    _emit(report)
    if not report["ok"]:
        sys.exit(1)


@main.command()
@click.option("--p", type=int, required=True)
@click.option("--n-max", type=int, default=8)
def conjecture(p, n_max):
    """Scan loop counts and off-diagonal arrow multiplicities (report only)."""
    if not 1 <= n_max <= 8:
        raise click.UsageError("--n-max must be in [1, 8]")
    _field(p, False)
    _emit(conjecture_scan(n_max, p))


@main.command()
@click.option("--only", default=None, help="run only fixture groups with this prefix")
@click.option("--n-max", type=int, default=8)
@click.option("--seed", type=int, default=DEFAULT_SEED)
def fixtures(only, n_max, seed):
    """Replay every stored reference fixture; exit 1 on any failure."""
    results = run_fixtures(only=only, n_max=n_max, seed=seed)
    ok = True
    for r in results:
        status = "PASS" if r["ok"] else "FAIL"
        line = f"{status} {r['group']}/{r['name']}"
        if not r["ok"]:
            ok = False
            line += " " + json.dumps(r["detail"], sort_keys=True)
        click.echo(line)
    click.echo(f"{sum(r['ok'] for r in results)}/{len(results)} fixtures passed")
    if not ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
