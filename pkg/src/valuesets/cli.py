"""Command-line front end.

Subcommands: spectrum, sweep, bound, curve, zeta, repr, ldeg, census.
Exit codes: 0 success, 2 internal identity failure, 64 usage error,
65 domain error, 74 I/O error.  The extension-modulus search seed is taken
from the VALUESET_SEED environment variable (default 0).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import artin, bounds, curves, ffield, spectrum, sweep, symrep
from .errors import DomainError, InvalidDegreeError, NotPrimeError

EXIT_OK = 0
EXIT_IDENTITY = 2
EXIT_USAGE = 64
EXIT_DOMAIN = 65
EXIT_IO = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors must exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


class _UsageError(Exception):
    """Bad command-line arguments (including non-prime -p): exit 64."""


def _env_seed() -> int:
    try:
        return int(os.environ.get("VALUESET_SEED", "0"))
    except ValueError:
        return 0


def _field(args) -> ffield.FieldCtx:
    m = getattr(args, "m", 1)
    try:
        if m == 1:
            return ffield.make_prime_field(args.p)
        return ffield.make_extension(args.p, m, seed=_env_seed())
    except (NotPrimeError, InvalidDegreeError) as exc:
        raise _UsageError(str(exc)) from exc


def _parse_coeffs(ctx, text: str):
    return ffield.poly_from_ints(ctx, [int(t) for t in text.split(",")])


def cmd_spectrum(args) -> int:
    ctx = _field(args)
    f = _parse_coeffs(ctx, args.coeffs)
    s = spectrum.preimage_spectrum(ctx, f)
    print(s.render())
    print(f"N_f = {s.n_f}")
    checks = spectrum.classical_bounds(s)
    print(
        f"wan_ok = {checks.wan_ok}, trivial_ok = {checks.trivial_ok}, "
        f"is_permutation = {checks.is_permutation}"
    )
    ok = spectrum.bsd_identity_check(s)
    print(f"identity_ok = {ok}")
    return EXIT_OK if ok else EXIT_IDENTITY


def cmd_sweep(args) -> int:
    records = sweep.run_sweep(args.a, args.b, args.pmax, jobs=args.jobs)
    sweep.write_csv(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    print(sweep.summarize(records))
    failures = sum(1 for r in records if r.generic == "yes" and not r.bound_ok)
    return EXIT_OK if failures == 0 else EXIT_IDENTITY


def cmd_bound(args) -> int:
    table = symrep.repr_table(args.d)
    print(symrep.render_repr_table(table))
    if args.p is None:
        return EXIT_OK
    ctx = ffield.make_prime_field(args.p)
    degs = artin.l_degree_table(ctx, args.a, args.b, d=args.d)
    print(degs.render())
    report = bounds.theorem_constant(table, degs)
    print(report.render())
    return EXIT_OK


def cmd_curve(args) -> int:
    ctx = _field(args)
    counter = {2: curves.count_t2, 3: curves.count_t3, 4: curves.count_t4}[args.r]
    counts = counter(ctx, args.a, args.b)
    print(counts.render())
    f = artin.family_poly(ctx, ctx.embed(args.a), ctx.embed(args.b))
    s = spectrum.preimage_spectrum(ctx, f)
    n_rp = spectrum.tuple_counts(s)[args.r - 2]
    ok = counts.affine - counts.diagonal == n_rp
    print(f"n_{args.r}' cross-check: {'OK' if ok else 'FAIL'} ({n_rp})")
    return EXIT_OK if ok else EXIT_IDENTITY


def cmd_zeta(args) -> int:
    poly = curves.t2_l_polynomial(args.p, args.a, args.b)
    print(poly.render())
    print(f"hasse_ok = True (c1^2 = {poly.coeffs[0] ** 2} <= {4 * poly.q})")
    return EXIT_OK


def cmd_repr(args) -> int:
    print(symrep.render_repr_table(symrep.repr_table(args.d)))
    return EXIT_OK


def cmd_ldeg(args) -> int:
    ctx = ffield.make_prime_field(args.p)
    print(artin.l_degree_table(ctx, args.a, args.b, d=args.d).render())
    return EXIT_OK


def cmd_census(args) -> int:
    ctx = _field(args)
    f = _parse_coeffs(ctx, args.coeffs)
    census = spectrum.cycle_type_census(ctx, f)
    for shape in sorted(census.counts):
        print(f"shape ({','.join(map(str, shape))}): {census.counts[shape]}")
    print(f"special: {census.special}")
    if census.d == 4:
        verdict = spectrum.genericity_test(census, ctx.q)
        print(f"genericity: {verdict.verdict} (tolerance {verdict.tolerance:.4f})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="valuesets")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="preimage spectrum and identity checks")
    sp.add_argument("-p", type=int, required=True, help="characteristic")
    sp.add_argument("-m", type=int, default=1, help="extension degree")
    sp.add_argument(
        "-f", dest="coeffs", required=True,
        help="coefficients low-to-high, e.g. 0,-1,1,0,1 for x^4+x^2-x",
    )
    sp.set_defaults(func=cmd_spectrum)

    sw = sub.add_parser("sweep", help="prime sweep of the quartic bound")
    sw.add_argument("-a", type=int, default=1)
    sw.add_argument("-b", type=int, default=-1)
    sw.add_argument("--pmax", type=int, default=37830)
    sw.add_argument("--jobs", type=int, default=None)
    sw.add_argument("--out", default="sweep.csv")
    sw.set_defaults(func=cmd_sweep)

    bd = sub.add_parser("bound", help="representation table and bound constant")
    bd.add_argument("-d", type=int, default=4)
    bd.add_argument("-p", type=int, default=None)
    bd.add_argument("-a", type=int, default=1)
    bd.add_argument("-b", type=int, default=-1)
    bd.set_defaults(func=cmd_bound)

    cv = sub.add_parser("curve", help="fiber-product curve counts")
    cv.add_argument("-r", type=int, choices=(2, 3, 4), required=True)
    cv.add_argument("-p", type=int, required=True)
    cv.add_argument("-m", type=int, default=1)
    cv.add_argument("-a", type=int, required=True)
    cv.add_argument("-b", type=int, required=True)
    cv.set_defaults(func=cmd_curve)

    zt = sub.add_parser("zeta", help="pair-curve L-polynomial")
    zt.add_argument("-p", type=int, required=True)
    zt.add_argument("-a", type=int, required=True)
    zt.add_argument("-b", type=int, required=True)
    zt.set_defaults(func=cmd_zeta)

    rp = sub.add_parser("repr", help="representation table only")
    rp.add_argument("-d", type=int, default=4)
    rp.set_defaults(func=cmd_repr)

    ld = sub.add_parser("ldeg", help="Artin L-degree table")
    ld.add_argument("-p", type=int, required=True)
    ld.add_argument("-a", type=int, required=True)
    ld.add_argument("-b", type=int, required=True)
    ld.add_argument("-d", type=int, default=4)
    ld.set_defaults(func=cmd_ldeg)

    cs = sub.add_parser("census", help="factorization-shape census")
    cs.add_argument("-p", type=int, required=True)
    cs.add_argument("-m", type=int, default=1)
    cs.add_argument("-f", dest="coeffs", required=True)
    cs.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
