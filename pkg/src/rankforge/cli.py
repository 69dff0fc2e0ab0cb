"""Command-line front end.

Subcommands: field info, ideals list, landau, legendre verify,
family construct, family badprimes, nagao ap, nagao series, rank.
Tables are CSV, structured objects JSON; rationals serialize as "num/den".
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import csv
import json
import os
import sys

import click

from . import legendre as legendre_mod
from . import nagao as nagao_mod
from .errors import RankforgeError
from .family import FamilySpec, construct_family, is_good_prime
from .finite_field import FqField
from .number_field import NumberField, landau_sum, prime_ideals_above
from .number_field import enumerate_prime_ideals
from .poly import fraction_from_str, fraction_to_str, poly_from_str, poly_to_str
from .primes import sieve

DEFAULT_SEED = 20140615


def _seed_from_env(seed):
    return int(os.environ.get("RANKFORGE_SEED", seed))


def _fmt(x):
    """Doubles with 12 significant digits; everything else is exact."""
    return f"{x:.12g}"


def _load_field_spec(obj):
    mp = poly_from_str(obj["min_poly"])
    return NumberField(
        [int(c) for c in mp.coeffs],
        excluded_primes=obj.get("excluded_primes"),
        assert_irreducible=obj.get("assert_irreducible", False))


def _load_field(path):
    with open(path, encoding="utf-8") as fh:
        return _load_field_spec(json.load(fh))


def _parse_kelem(K, text):
    parts = [t for t in text.split(",") if t.strip()]
    return K.elem([fraction_from_str(t) for t in parts])


def _kelem_str(x):
    return ",".join(fraction_to_str(c) for c in x.coeffs)


def _load_family(path):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    K = _load_field_spec(obj["field"])
    rho = tuple(_parse_kelem(K, s) for s in obj["rho"])
    alpha = _parse_kelem(K, obj["alpha"])
    return construct_family(FamilySpec(K=K, rho=rho, alpha=alpha))


def _open_out(out):
    if out is None or out == "-":
        return sys.stdout, False
    return open(out, "w", newline="", encoding="utf-8"), True


def _write_csv(out, header, rows):
    fh, close = _open_out(out)
    try:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    finally:
        if close:
            fh.close()


@click.group()
def main():
    """Rank-6 elliptic curve families over number fields: construction and
    numerical rank certification via averaged Frobenius traces."""


@main.group()
def field():
    """Finite-field inspection."""


@field.command("info")
@click.option("--p", "p", type=int, required=True, help="odd prime")
@click.option("--modulus", required=True,
              help='monic modulus over F_p, "c0,c1,...,1"')
@click.option("--out", default=None)
def field_info(p, modulus, out):
    """Print q and a sample character table as CSV."""
    mod = [int(c) for c in poly_from_str(modulus).coeffs]
    fld = FqField(p, mod)
    click.echo(f"q = {fld.q} (p = {fld.p}, r = {fld.r})")
    sample = fld.elements()[: min(fld.q, 32)]
    _write_csv(out, ["code", "coeffs", "chi"],
               [[fld.encode(u), " ".join(map(str, u.coeffs)), fld.chi(u)]
                for u in sample])


@main.group()
def ideals():
    """Prime-ideal enumeration."""


@ideals.command("list")
@click.option("--field", "field_path", required=True, type=click.Path(exists=True))
@click.option("--max-norm", type=int, required=True)
@click.option("--out", default=None)
def ideals_list(field_path, max_norm, out):
    """List prime ideals of norm <= X as CSV."""
    K = _load_field(field_path)
    rows = [[P.norm, P.p, P.f, P.e, poly_to_str(P.factor)]
            for P in enumerate_prime_ideals(K, max_norm)]
    _write_csv(out, ["norm", "p", "f", "e", "factor"], rows)
    skipped = sorted(p for p in K.excluded_primes if p <= max_norm)
    if skipped:
        click.echo(f"excluded rational primes skipped: {skipped}", err=True)


@main.command()
@click.option("--field", "field_path", required=True, type=click.Path(exists=True))
@click.option("--max-norm", type=int, required=True)
def landau(field_path, max_norm):
    """Partial sum of log N(P), its ratio to X, and the ideal count."""
    K = _load_field(field_path)
    total, ratio, count = landau_sum(K, max_norm)
    click.echo(f"sum = {_fmt(total)}")
    click.echo(f"ratio = {_fmt(ratio)}")
    click.echo(f"count = {count}")


@main.group()
def legendre():
    """Quadratic character sum verification."""


@legendre.command("verify")
@click.option("--max-q", type=int, default=343, show_default=True)
@click.option("--exhaustive-max-q", type=int, default=49, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--out", default=None)
def legendre_verify(max_q, exhaustive_max_q, seed, out):
    """Closed form vs. brute force per odd prime power q; exit 1 on any
    mismatch or conic-bound violation."""
    seed = _seed_from_env(seed)
    results = legendre_mod.verify_quad_sums(
        max_q=max_q, exhaustive_max_q=exhaustive_max_q, seed=seed)
    _write_csv(out, ["q", "p", "r", "mode", "checked", "mismatches",
                     "conic_violations", "status"],
               [[r.q, r.p, r.r, r.mode, r.checked, r.mismatches,
                 r.conic_violations, "pass" if r.ok else "FAIL"]
                for r in results])
    if not all(r.ok for r in results):
        sys.exit(1)


@main.group()
def family():
    """Curve-family construction."""


@family.command("construct")
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--out", default=None)
def family_construct(spec_path, out):
    """Construct the family and emit its exact coefficients as JSON."""
    with open(spec_path, encoding="utf-8") as fh:
        obj = json.load(fh)
    K = _load_field_spec(obj["field"])
    rho = tuple(_parse_kelem(K, s) for s in obj["rho"])
    alpha = _parse_kelem(K, obj["alpha"])
    fam = construct_family(FamilySpec(K=K, rho=rho, alpha=alpha))
    doc = {
        "field": obj["field"],
        "rho": [_kelem_str(r) for r in fam.spec.rho],
        "alpha": _kelem_str(fam.spec.alpha),
        "coefficients": {name: _kelem_str(getattr(fam, name))
                         for name in ("a", "b", "c", "A", "B", "C", "D")},
        "g": [_kelem_str(c) for c in fam.g.coeffs],
        "h": [_kelem_str(c) for c in fam.h.coeffs],
        "D_T": [_kelem_str(c) for c in fam.D_T.coeffs],
        "bad_divisor": str(fam.bad_divisor),
    }
    fh, close = _open_out(out)
    try:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    finally:
        if close:
            fh.close()


@family.command("badprimes")
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--max-p", type=int, required=True)
def family_badprimes(family_path, max_p):
    """Rational primes p <= N with a bad ideal above them, with reasons."""
    fam = _load_family(family_path)
    for p in sieve(max_p):
        if p in fam.K.excluded_primes:
            click.echo(f"{p}: excluded (Dedekind enumeration)")
            continue
        reasons = []
        for P in _ideals_above(fam.K, p):
            good, reason = is_good_prime(fam, P)
            if not good:
                reasons.append(reason)
        if reasons:
            click.echo(f"{p}: {reasons[0]}")


def _ideals_above(K, p):
    from .number_field import PrimeIdeal, _ideals_above_two
    from .poly import Poly

    if K.n == 1:
        return [PrimeIdeal(p=p, factor=Poly([0, 1]), f=1, e=1, norm=p)]
    if p == 2:
        return _ideals_above_two(K)
    return prime_ideals_above(K, p)


@main.group()
def nagao():
    """Frobenius-trace averages and rank series."""


@nagao.command("ap")
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--p", "p", type=int, required=True, help="rational prime")
@click.option("--method", type=click.Choice(["direct", "analytic", "both"]),
              default="analytic", show_default=True)
def nagao_ap(family_path, p, method):
    """sum of a_t and A_p for every prime ideal above p."""
    fam = _load_family(family_path)
    if p in fam.K.excluded_primes:
        click.echo(f"bad prime: {p} is excluded from Dedekind enumeration")
        sys.exit(1)
    failed = False
    for P in _ideals_above(fam.K, p):
        good, reason = is_good_prime(fam, P)
        if not good:
            click.echo(f"{P.label()}: bad prime: {reason}")
            failed = True
            continue
        methods = ["direct", "analytic"] if method == "both" else [method]
        for m in methods:
            res = nagao_mod.average_A_p(fam, P, method=m)
            click.echo(f"{P.label()}: norm={P.norm} method={m} "
                       f"sum_a_t={res.sum_a_t} "
                       f"A_p={fraction_to_str(res.A_p)} good={res.good}")
    if failed:
        sys.exit(1)


@nagao.command("series")
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--max-norm", type=int, required=True)
@click.option("--method", type=click.Choice(["direct", "analytic"]),
              default="analytic", show_default=True)
@click.option("--checkpoints", default=None,
              help="comma-separated cutoffs; default geometric grid")
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--out", default=None)
def nagao_series(family_path, max_norm, method, checkpoints, threads, out):
    """Nagao partial sums on a checkpoint grid, as CSV."""
    fam = _load_family(family_path)
    grid = None
    if checkpoints:
        grid = [int(t) for t in checkpoints.split(",")]
    rows = nagao_mod.nagao_partial_sum(
        fam, max_norm, method=method, checkpoints=grid, threads=threads)
    _write_csv(out, ["X", "partial_sum", "ideals_used", "ideals_skipped"],
               [[r.X, _fmt(r.partial_sum), r.ideals_used,
                 r.ideals_skipped_bad] for r in rows])


@main.command()
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--max-norm", type=int, required=True)
@click.option("--method", type=click.Choice(["direct", "analytic"]),
              default="analytic", show_default=True)
def rank(family_path, max_norm, method):
    """Rank verdict from the normalized partial sum at X = max-norm."""
    fam = _load_family(family_path)
    est = nagao_mod.rank_estimate(fam, max_norm, method=method)
    click.echo(f"partial_sum = {_fmt(est.partial_sum)}")
    click.echo(f"theta_good = {_fmt(est.theta_good)}")
    click.echo(f"residual = {_fmt(est.residual)}")
    if est.low_confidence:
        click.echo("rank estimate: 0 (low confidence: no good primes in range)")
    else:
        click.echo(f"rank estimate: {est.nearest_integer}")


def entrypoint():
    try:
        main(standalone_mode=True)
    except RankforgeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    entrypoint()
