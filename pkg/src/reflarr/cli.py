"""The ``arr`` command line tool.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, reproduce
from .arrangement import ArrangementError, compute_flat_table
from .io import arrangement_to_json, load_arrangement, load_multinet, save_arrangement
from .linalg import check_prime
from .monodromy import InconsistentRules, char_poly, divisors, monodromy_profile, prime_power
from .multinet import MultinetError, SearchGuardError, search_nets, verify
from .resonance import beta_p, betti_report, primes_up_to, vanishing_report


class UserError(Exception):
    pass


def _arrangement(args):
    if getattr(args, "spec", None):
        try:
            return catalog.build(args.spec)
        except ValueError as exc:
            raise UserError(str(exc)) from None
    if getattr(args, "file", None):
        return load_arrangement(args.file)
    raise UserError("give --spec or --file")


def _table(rows, headers, out):
    widths = [max(len(str(x)) for x in col) for col in zip(headers, *rows)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    print(fmt.format(*headers).rstrip(), file=out)
    for r in rows:
        print(fmt.format(*map(str, r)).rstrip(), file=out)


def _emit(args, payload, human, out):
    if args.json:
        json.dump(payload, out, indent=1, sort_keys=False)
        out.write("\n")
    else:
        human()


def cmd_build(args, out):
    arr = _arrangement(args)
    if args.output:
        save_arrangement(arr, args.output)
        if not args.json:
            print(f"wrote {arr.n} hyperplanes to {args.output}", file=out)
    else:
        json.dump(arrangement_to_json(arr), out, indent=1)
        out.write("\n")
    return 0


def cmd_flats(args, out):
    arr = _arrangement(args)
    flats = compute_flat_table(arr)
    payload = flats.to_json(arr)
    census = None
    if args.census:
        census = catalog.observed_census(arr, flats)
        payload["census"] = {k: {"count": c, "multiplicity": m} for k, (c, m) in sorted(census.items())}

    def human():
        labels = arr.labels
        _table([(i, X.multiplicity, " ".join(labels[h] for h in X.members))
                for i, X in enumerate(flats.flats)], ("#", "mult", "members"), out)
        if census is not None:
            print(file=out)
            _table([(k, c, m) for k, (c, m) in sorted(census.items())],
                   ("type", "count", "multiplicity"), out)

    _emit(args, payload, human, out)
    return 0


def _primes(args, n):
    if args.all_primes:
        return primes_up_to(n)
    if args.prime is None:
        raise UserError("give --prime p or --all-primes")
    try:
        check_prime(args.prime)
    except ValueError as exc:
        raise UserError(str(exc)) from None
    return [args.prime]


def cmd_betti(args, out):
    arr = _arrangement(args)
    flats = compute_flat_table(arr)
    reports = [betti_report(arr, p, flats) for p in _primes(args, arr.n)]
    for r in reports:
        if r["beta"] != r["beta_via_aomoto"]:
            raise AssertionError(f"beta_{r['prime']}: cocycle and Aomoto computations disagree")

    def human():
        _table([(r["prime"], r["dim_Zp"], r["beta"], r["beta_via_aomoto"],
                 sum(c["fires"] for c in r["criteria"])) for r in reports],
               ("p", "dim Z_p", "beta", "beta (aomoto)", "criteria fired"), out)
        if len(reports) == 1:
            print(f"beta = {reports[0]['beta']}", file=out)

    _emit(args, reports if len(reports) > 1 else reports[0], human, out)
    return 0


def cmd_criteria(args, out):
    arr = _arrangement(args)
    p = _primes(args, arr.n)[0]
    crit = vanishing_report(arr, None, p)
    payload = [{"name": c.name, "fires": c.fires, "conclusion": c.conclusion} for c in crit]
    _emit(args, payload,
          lambda: _table([(c.name, "yes" if c.fires else "no", c.conclusion) for c in crit],
                         ("criterion", "fires", "conclusion"), out), out)
    return 0


def cmd_multinet_verify(args, out):
    arr = _arrangement(args)
    net = load_multinet(args.net)
    report = verify(arr, None, net)

    def human():
        print(f"valid: {report.valid}  k = {report.k}  reduced: {report.reduced}"
              f"  reduced mod: {report.reduced_mod or '-'}", file=out)
        _table([(" ".join(m), v) for m, v in report.cross_flat_values.items()],
               ("cross flat", "n_X"), out)
        for m, sums in report.failures:
            print(f"FAIL {' '.join(m)}: block sums {sums}", file=out)

    _emit(args, report.to_json(), human, out)
    return 0 if report.valid else 1


def cmd_multinet_search(args, out):
    arr = _arrangement(args)
    nets = search_nets(arr, None, args.k, max_results=args.max_results, max_n=args.max_n)

    def human():
        print(f"{len(nets)} reduced {args.k}-multinet(s)", file=out)
        for i, net in enumerate(nets):
            print(f"[{i}] " + " | ".join(" ".join(b) for b in net.blocks), file=out)

    _emit(args, [n.to_json() for n in nets], human, out)
    return 0


def cmd_monodromy(args, out):
    arr = _arrangement(args)
    flats = compute_flat_table(arr)
    nets = [load_multinet(path) for path in (args.net or [])]
    primes = sorted({prime_power(d)[0] for d in divisors(arr.n)[1:] if prime_power(d)})
    betti = {p: beta_p(arr, p, flats).value for p in primes}
    profile = monodromy_profile(arr, flats, betti, nets)

    def human():
        rows = [(1, "exact", arr.n - 1, "")]
        for d, s in sorted(profile.statuses.items()):
            val = s.lo if s.kind != "range" else f"[{s.lo}, {'?' if s.hi is None else s.hi}]"
            rows.append((d, s.kind, val, ",".join(s.rules)))
        _table(rows, ("d", "status", "e_d", "rules"), out)
        print(f"Delta(t) = {char_poly(profile)}", file=out)

    _emit(args, profile.to_json(), human, out)
    return 0


def cmd_reproduce(args, out):
    if args.which == "thm-b":
        rows = list(reproduce.beta_table_rows(args.m_max))
        payload = {"golden_version": reproduce.GOLDEN_VERSION,
                   "rows": [{"instance": r.instance, "n": r.n, "p": r.p, "beta": r.beta,
                             "beta_aomoto": r.beta_aomoto, "expected": r.expected, "ok": r.ok}
                            for r in rows]}
        human = lambda: _table(  # noqa: E731
            [(r.instance, r.n, r.p, r.beta, r.beta_aomoto, r.expected, "ok" if r.ok else "MISMATCH")
             for r in rows], ("instance", "n", "p", "beta", "aomoto", "expected", ""), out)
    else:
        rows = list(reproduce.char_poly_rows(args.m_max))
        payload = {"golden_version": reproduce.GOLDEN_VERSION,
                   "rows": [{"instance": r.instance, "n": r.n, "factors": r.factors,
                             "expected": r.expected, "complete": r.complete, "ok": r.ok}
                            for r in rows]}
        human = lambda: _table(  # noqa: E731
            [(r.instance, r.n, r.computed, "ok" if r.ok else "MISMATCH") for r in rows],
            ("instance", "n", "Delta(t)", ""), out)
    _emit(args, payload, human, out)
    return 0 if all(r.ok for r in rows) else 1


def _add_source(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--spec", help="family string: braid:l, monomial:m:l, full-monomial:m:l, "
                                  "G31, G32, G33, hessian")
    g.add_argument("--file", help="arrangement JSON file")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="arr", description=__doc__.splitlines()[0])
    top.add_argument("--json", action="store_true", help="machine-readable output")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a catalog arrangement as JSON")
    _add_source(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("flats", help="rank-2 flats")
    _add_source(p)
    p.add_argument("--census", action="store_true")
    p.set_defaults(func=cmd_flats)

    for name, func in (("betti", cmd_betti), ("criteria", cmd_criteria)):
        p = sub.add_parser(name)
        _add_source(p)
        p.add_argument("--prime", type=int)
        if name == "betti":
            p.add_argument("--all-primes", action="store_true", help="every prime <= n")
        else:
            p.set_defaults(all_primes=False)
        p.set_defaults(func=func)

    p = sub.add_parser("multinet")
    msub = p.add_subparsers(dest="multinet_command", required=True)
    q = msub.add_parser("verify")
    _add_source(q)
    q.add_argument("--net", required=True)
    q.set_defaults(func=cmd_multinet_verify)
    q = msub.add_parser("search")
    _add_source(q)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--max-n", type=int, default=30)
    q.add_argument("--max-results", type=int)
    q.set_defaults(func=cmd_multinet_search)

    p = sub.add_parser("monodromy")
    _add_source(p)
    p.add_argument("--net", action="append", help="multinet JSON (repeatable)")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("reproduce")
    p.add_argument("which", choices=("thm-b", "prop-full"))
    p.add_argument("--m-max", type=int, default=7)
    p.set_defaults(func=cmd_reproduce)
    return top


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args, out)
    except (UserError, ArrangementError, MultinetError, SearchGuardError, ValueError,
            KeyError, OSError) as exc:
        print(f"arr: error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, InconsistentRules) as exc:
        print(f"arr: internal invariant violated: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
