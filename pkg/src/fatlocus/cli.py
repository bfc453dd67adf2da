"""Command-line interface.

Commands: generate, incidence, certify, analyze, locus, audit-penrose.
Exit codes: 0 for success / a Proven verdict, 1 for errors, 2 for an
Inconclusive verdict.  Every output embeds a run manifest (command, flags,
seed, primes, tool version); identical manifests reproduce bit-identical
output bytes regardless of thread count, which is why wall time is reported
on stderr instead of inside the output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from itertools import combinations
from math import comb

from . import __version__, atlas
from .certificates import (
    plane_count_certificate,
    plus_one_certificate,
    removal_audit,
    render_certificate,
    square_certificate,
)
from .errors import FatlocusError, NotSquareError
from .fields import DEFAULT_PRIME, PrimeField
from .incidence import WeakCombinatorics, weak_table
from .interpolation import square_size, unexpectedness_report, zero_locus_test
from .locus import symbolic_locus


def _manifest(args, primes) -> dict:
    # threads never affects results, so it stays out of the manifest: byte
    # identity holds across thread counts, not just across reruns
    skip = {"func", "out", "config", "threads"}
    flags = {
        k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None
    }
    return {
        "command": args.command,
        "flags": flags,
        "seed": getattr(args, "seed", None),
        "primes": sorted(set(int(p) for p in primes)),
        "version": __version__,
    }


def _emit(payload: dict, text: str, args) -> None:
    if args.format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        head = [
            f"# fatlocus {__version__}  command={payload['manifest']['command']}",
            f"# seed={payload['manifest']['seed']} primes={payload['manifest']['primes']}",
        ]
        body = "\n".join(head) + "\n" + text + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(body)
    else:
        sys.stdout.write(body)


def _load_record(ref: str, prime=None):
    """A record from a JSON path, a shipped table name, or a generator name."""
    if ref.endswith(".json"):
        return atlas.load(ref)
    field = PrimeField(prime) if prime else None
    if ref in atlas.TABLE_RECORDS:
        return atlas.load_table_record(ref)
    if ref == "d4":
        return atlas.gen_d4()
    if ref == "penrose20":
        return atlas.gen_penrose20(field)
    if ref in ("a30_3", "a15_1"):
        return atlas.GENERATORS[ref](field)
    raise FatlocusError(
        f"unknown configuration {ref!r}: pass a .json path, a table record "
        f"({', '.join(atlas.TABLE_RECORDS)}), or one of d4, penrose20, a30_3, a15_1"
    )


def cmd_generate(args) -> int:
    field = PrimeField(args.prime) if args.prime else None
    name = args.name
    if name == "a4k1":
        if args.k is None:
            raise FatlocusError("generate a4k1 needs --k")
        record = atlas.gen_a4k1(args.k, field)
    elif name == "dk":
        record = atlas.gen_dk_points(args.variant or "seven")
    elif name == "fermat":
        sets = atlas.gen_fermat_sets(field)
        member = args.member or "z"
        if member == "z1":
            record = sets.z1[args.pindex or 0]
        else:
            record = getattr(sets, member)
    elif name in ("d4", "penrose20", "a30_3", "a15_1"):
        record = _load_record(name, args.prime)
    elif name in atlas.TABLE_RECORDS:
        record = atlas.load_table_record(name)
    else:
        raise FatlocusError(f"unknown generator {name!r}")
    primes = [record.field.p] if record.field and record.field.kind == "Prime" else []
    payload = record.to_json()
    payload["manifest"] = _manifest(args, primes)
    text = (
        f"{record.name}: {record.npoints} points in P^{record.N}"
        + (f" over F_{record.field.p}" if record.field and record.field.kind == "Prime" else "")
        + "\n"
        + "\n".join(f"  {n}" for n in record.validation_notes)
    )
    if args.out and args.format != "json":
        # configuration files are JSON regardless of the display format
        with open(args.out, "w") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        sys.stdout.write(text + f"\nwrote {args.out}\n")
        return 0
    payload_wrap = {"manifest": payload["manifest"], **{k: v for k, v in payload.items() if k != "manifest"}}
    _emit(payload_wrap, text, args)
    return 0


def cmd_incidence(args) -> int:
    record = _load_record(args.config, args.prime)
    inc = record.incidence(min_members=args.min_members)
    wt = weak_table(inc)
    primes = [record.field.p] if record.field and record.field.kind == "Prime" else []
    payload = {
        "manifest": _manifest(args, primes),
        "name": record.name,
        "coordinate_backed": inc.coordinate_backed,
        "weak_table": wt.to_json(),
        "hyperplanes": [
            {
                "coefficients": [record.field.field().to_str(c) for c in h.coefficients]
                if h.coefficients is not None
                else None,
                "members": sorted(h.members),
            }
            for h in inc.hyperplanes
        ],
    }
    lines = [f"{record.name}: {len(inc.hyperplanes)} hyperplanes with >= "
             f"{min((h.size for h in inc.hyperplanes), default=0)} members"]
    lines.append(f"weak table: {wt.to_json()}")
    for h in inc.hyperplanes:
        lines.append(f"  {h.size} points: {sorted(h.members)}")
    _emit(payload, "\n".join(lines), args)
    return 0


def _certify_record(record, d, m):
    """Pick the certificate scheme from the size bookkeeping."""
    N = record.N
    if N == 3:
        if record.npoints == 12 and d == 3 and m in (None, 3):
            return plane_count_certificate(record.configuration())
        if record.npoints == 20 and d == 4 and m in (None, 4):
            return removal_audit(record.incidence())
        raise NotSquareError("no P^3 certificate scheme matches this bookkeeping")
    m = m if m is not None else d - 1
    s_req = square_size(N, d, m)
    wt = record.weak()
    if record.npoints == s_req:
        return square_certificate(wt, d, m)
    if record.npoints == s_req + 1 and m == d - 1:
        return plus_one_certificate(wt, d)
    if record.npoints > s_req:
        # surplus of two or more: exhaustive square certificates over all
        # s_req-point subsets, stopping at the first that falls short
        inc = record.incidence()
        count = 0
        for keep in combinations(range(record.npoints), s_req):
            keep_set = set(keep)
            table = {}
            for h in inc.hyperplanes:
                n = len(h.members & keep_set)
                if n >= 3:
                    table[n] = table.get(n, 0) + 1
            cert = square_certificate(WeakCombinatorics(table, s_req, N), d, m)
            count += 1
            if not cert.proven:
                return replace(
                    cert,
                    notes=cert.notes
                    + (f"subset {count} of {comb(record.npoints, s_req)} already falls short",),
                )
        return replace(
            cert,
            notes=cert.notes + (f"all {count} subsets of {s_req} points are Proven",),
        )
    raise NotSquareError(
        f"|Z| = {record.npoints} is below the square size {s_req}"
    )


def cmd_certify(args) -> int:
    record = _load_record(args.config, args.prime)
    cert = _certify_record(record, args.d, args.m)
    primes = [record.field.p] if record.field and record.field.kind == "Prime" else []
    payload = {"manifest": _manifest(args, primes), "certificate": cert.to_json()}
    _emit(payload, render_certificate(cert), args)
    return 0 if cert.proven else 2


def cmd_analyze(args) -> int:
    record = _load_record(args.config, args.prime)
    prime = args.prime
    if record.field and record.field.kind == "Rational" and prime is None:
        prime = DEFAULT_PRIME  # rank work runs over a prime field by default
    config = record.configuration(prime=prime)
    report = unexpectedness_report(config, args.d, args.m, trials=args.trials, seed=args.seed)
    evidence = None
    try:
        s_req = square_size(config.N, args.d, args.m)
        if len(config) == s_req and config.field.kind == "Prime":
            evidence = zero_locus_test(config, args.d, args.m, trials=args.trials, seed=args.seed)
    except NotSquareError:
        pass
    primes = [config.field.p] if config.field.kind == "Prime" else []
    payload = {
        "manifest": _manifest(args, primes),
        "report": report.to_json(),
        "zero_locus": None
        if evidence is None
        else {
            "kind": evidence.kind,
            "trials": evidence.trials,
            "seed": evidence.seed,
            "prime": str(evidence.prime),
            "error_bound": str(evidence.error_bound) if evidence.error_bound is not None else None,
            "witness": [str(c) for c in evidence.witness] if evidence.witness else None,
        },
    }
    lines = [
        f"{record.name}: (d, m) = ({args.d}, {args.m}), s = {report.s}",
        f"dim of degree-{args.d} ideal part: {report.dim_ideal_d}"
        f" (independent conditions: {report.independent})",
        f"conditions of the fat point: {report.conditions_B}",
        f"generic dim L(d; mB+Z): {report.generic_dim} over {report.trials} samples",
        f"expected: {report.expected}  actual: {report.actual}",
        f"unexpected: {'yes' if report.unexpected else 'no'}",
    ]
    for w in report.warnings:
        lines.append(f"warning: {w}")
    if evidence is not None:
        if evidence.probably_zero:
            lines.append(
                f"F == 0: EVIDENCE (ProbablyZero), {evidence.trials} trials over "
                f"F_{evidence.prime}, error bound {float(evidence.error_bound):.3g}"
            )
        else:
            lines.append(
                f"F != 0: PROOF by witness at trial {evidence.witness_trial} over "
                f"F_{evidence.prime}"
            )
    _emit(payload, "\n".join(lines), args)
    return 0


def cmd_locus(args) -> int:
    record = _load_record(args.config, args.prime)
    config = record.configuration(prime=args.prime) if args.prime else record.configuration()
    poly = symbolic_locus(config, args.d, args.m, budget=args.budget)
    primes = [config.field.p] if config.field.kind == "Prime" else []
    payload = {
        "manifest": _manifest(args, primes),
        "name": record.name,
        "d": args.d,
        "m": args.m,
        "locus": poly.to_json(),
    }
    if args.sample and not poly.is_zero:
        payload["samples"] = _sample_locus(poly, config, args.sample)
    lines = [
        f"{record.name}: locus polynomial for (d, m) = ({args.d}, {args.m})",
        f"zero: {poly.is_zero}; degree {poly.degree}; {len(poly.terms)} terms",
    ]
    _emit(payload, "\n".join(lines), args)
    return 0


def _sample_locus(poly, config, count: int):
    """Real points on {F = 0} in the chart, for external plotting (N = 2,
    rational coordinates only)."""
    import numpy as np

    if config.N != 2 or config.field.kind != "Rational":
        raise FatlocusError("locus sampling is implemented for rational plane loci")
    pts = []
    span = max(abs(float(c)) for q in config.points for c in q) + 2.0
    xs = np.linspace(-span, span, max(count, 8))
    for x in xs:
        # restrict to the affine line a_1 = x: a univariate polynomial in a_2
        coeffs = {}
        for (e0, e1, e2), c in poly.terms.items():
            coeffs[e2] = coeffs.get(e2, 0.0) + float(c) * (x**e1)
        deg = max(coeffs)
        vec = [coeffs.get(i, 0.0) for i in range(deg, -1, -1)]
        for root in np.roots(vec):
            if abs(root.imag) < 1e-9 and abs(root.real) <= span:
                pts.append([float(x), float(root.real)])
        if len(pts) >= count:
            break
    return pts[:count]


def cmd_audit_penrose(args) -> int:
    field = PrimeField(args.prime) if args.prime else None
    record = atlas.gen_penrose20(field)
    audit = removal_audit(
        record.configuration() if record.coordinate_backed else record.incidence(),
        remove_count=args.remove,
        threads=args.threads,
        keep_profiles=args.format == "json",
    )
    payload = {
        "manifest": _manifest(args, [record.field.p]),
        "audit": audit.to_json(include_profiles=args.format == "json"),
    }
    lines = [render_certificate(audit)]
    if audit.all_six_count == 0 and audit.remove_count:
        lines.append(
            f"no {audit.npoints - audit.remove_count}-point subset has six points on "
            "every plane; every subset leaves a plane with >= 7 points, so the locus "
            f"carries plane multiplicity >= {audit.nplanes + 1} > deg F = {audit.nplanes}"
        )
    _emit(payload, "\n".join(lines), args)
    return 0 if audit.proven else 2


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fatlocus",
        description="existence certificates and determinant loci for hypersurfaces "
        "through point sets with a fat general point",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a catalog configuration")
    g.add_argument("name")
    g.add_argument("--k", type=int, default=None, help="family parameter for a4k1")
    g.add_argument("--variant", choices=("seven", "nine"), default=None, help="dk variant")
    g.add_argument("--member", choices=("f3", "f6", "t", "z", "z1"), default=None,
                   help="which Fermat-derived set")
    g.add_argument("--pindex", type=int, default=None, help="grid point index for fermat z1")
    _add_common(g)
    g.set_defaults(func=cmd_generate)

    i = sub.add_parser("incidence", help="detect hyperplanes and the weak table")
    i.add_argument("config")
    i.add_argument("--min-members", type=int, default=None)
    _add_common(i)
    i.set_defaults(func=cmd_incidence)

    c = sub.add_parser("certify", help="run the combinatorial certificate")
    c.add_argument("config")
    c.add_argument("-d", type=int, required=True)
    c.add_argument("-m", type=int, default=None)
    _add_common(c)
    c.set_defaults(func=cmd_certify)

    a = sub.add_parser("analyze", help="dimension counts, unexpectedness verdict, evidence")
    a.add_argument("config")
    a.add_argument("-d", type=int, required=True)
    a.add_argument("-m", type=int, required=True)
    _add_common(a)
    a.set_defaults(func=cmd_analyze)

    l = sub.add_parser("locus", help="expand det M into an explicit polynomial")
    l.add_argument("config")
    l.add_argument("-d", type=int, required=True)
    l.add_argument("-m", type=int, required=True)
    l.add_argument("--budget", type=int, default=10**6)
    l.add_argument("--sample", type=int, default=0)
    _add_common(l)
    l.set_defaults(func=cmd_locus)

    p = sub.add_parser("audit-penrose", help="exhaustive removal audit of the 20-point set")
    p.add_argument("--remove", type=int, default=5)
    _add_common(p)
    p.set_defaults(func=cmd_audit_penrose)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.time()
    try:
        code = args.func(args)
    except FatlocusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"[{time.time() - t0:.2f}s]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
