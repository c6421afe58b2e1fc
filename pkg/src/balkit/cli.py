"""Command-line surface: sequence generation, identity sweeps, convolution
comparison, generating-function expansion, tail-floor certification, and an
umbrella verify-all.

Exit codes: 0 all checks pass, 1 mathematical mismatch or undecided interval,
2 usage error.  Reports print as text by default or as canonical JSON
(--format json); --output writes the JSON report to a file either way.
Big integers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import convolutions as conv
from . import genfunc
from . import identities as ident
from . import sequences as seqs
from . import tailfloors as tails
from .quadfield import binet_pair

SCHEMA_VERSION = 1

_FAMILY_FLAGS = {
    "B": seqs.BALANCING,
    "C": seqs.LUCAS_BALANCING,
    "F": seqs.FIBONACCI,
    "L": seqs.LUCAS,
}


class UsageError(ValueError):
    """Bad parameter combination detected after argparse."""


def _family(flag: str, a: int | None = None) -> seqs.Sequence:
    if flag in _FAMILY_FLAGS:
        return _FAMILY_FLAGS[flag]
    if flag == "G":
        return seqs.gen_fibonacci(a if a is not None else 1)
    raise UsageError(f"unknown family {flag!r} (expected B, C, F, L, or G)")


def _decimal(x):
    """Big integers as decimal strings so JSON consumers cannot overflow."""
    return str(x)


def _report(command: str, params: dict, items: list[dict], failed: int, t0: float) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "items": items,
        "summary": {"checked": len(items), "passed": len(items) - failed, "failed": failed},
        "wall_time_s": round(time.perf_counter() - t0, 6),
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _emit(report: dict, args, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(render_json(report))
    else:
        for line in text_lines:
            print(line)
        s = report["summary"]
        print(f"checked {s['checked']}  passed {s['passed']}  failed {s['failed']}"
              f"  ({report['wall_time_s']:.3f}s)")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(render_json(report))


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("BALKIT_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- seq -----------------------------------------------------------------------

def cmd_seq(args) -> int:
    t0 = time.perf_counter()
    family = _family(args.family, args.a)
    if args.start > args.stop:
        raise UsageError(f"--from {args.start} exceeds --to {args.stop}")
    items = [
        {"n": t.n, "value": _decimal(t.value)}
        for t in seqs.stream(family, args.start, args.stop)
    ]
    report = _report("seq", {"family": args.family, "from": args.start, "to": args.stop},
                     items, 0, t0)
    _emit(report, args, [" ".join(i["value"] for i in items)])
    return 0


# -- gf ------------------------------------------------------------------------

def cmd_gf(args) -> int:
    t0 = time.perf_counter()
    family = _family(args.family)
    g = genfunc.gf(family, args.k, args.r)
    coeffs = genfunc.expand(g, args.terms)
    direct = [seqs.term(family, args.k * i + args.r) for i in range(args.terms)]
    match = coeffs == direct
    items = [
        {"n": i, "coefficient": _decimal(c), "direct": _decimal(d), "ok": c == d}
        for i, (c, d) in enumerate(zip(coeffs, direct))
    ]
    failed = sum(1 for it in items if not it["ok"])
    report = _report(
        "gf",
        {"family": args.family, "k": args.k, "r": args.r, "terms": args.terms,
         "numer": [_decimal(c) for c in g.numer], "denom": [_decimal(c) for c in g.denom]},
        items, failed, t0)
    _emit(report, args, [str(g), " ".join(map(str, coeffs)),
                         "match" if match else "MISMATCH"])
    return 0 if match else 1


# -- conv ----------------------------------------------------------------------

def cmd_conv(args) -> int:
    t0 = time.perf_counter()
    family = _family(args.family)
    if not args.k > args.r >= 0:
        raise UsageError(f"need k > r >= 0, got k={args.k}, r={args.r}")
    item: dict = {"k": args.k, "r": args.r, "n": args.n}
    lines = []
    failed = 0
    if args.method in ("brute", "both"):
        b = conv.brute_conv(family, args.k, args.r, args.n)
        item["brute"] = _decimal(b)
        lines.append(f"brute  {b}")
    if args.method in ("closed", "both"):
        c = conv.conv_closed(family, args.k, args.r, args.n)
        item["closed"] = _decimal(c)
        lines.append(f"closed {c}")
    if args.method == "both":
        item["ok"] = item["brute"] == item["closed"]
        failed = 0 if item["ok"] else 1
        lines.append("match" if item["ok"] else "MISMATCH")
    report = _report("conv", {"family": args.family, "method": args.method}, [item], failed, t0)
    _emit(report, args, lines)
    return 1 if failed else 0


# -- identity ------------------------------------------------------------------
#
# Each catalog entry: grid builder from args, and a module-level case runner
# (picklable for the worker pool).

def _case_catalan(p):
    n, r = p
    return ident.check_catalan(n, r)


def _case_odd_sum(p):
    return ident.check_odd_index_sum(p[0])


def _case_shifted(p):
    return ident.check_shifted_product(p[0], p[1])


def _case_addition(p):
    return ident.check_addition(p[0], p[1])


def _case_combination(p):
    return ident.check_combination(p[0], p[1])


def _case_gcd(p):
    return ident.check_gcd(p[0], p[1])


def _case_prime(p):
    return ident.check_prime_congruences(p[0])


def _case_mod_companion(p):
    return ident.check_mod_companion(p[0])


def _case_binom3(p):
    return ident.check_binomial_3pow(p[0])


def _case_binom_plain(p):
    return ident.check_binomial_plain(p[0])


def _case_second_order(p):
    return ident.check_second_order_product(p[0])


IDENTITY_CATALOG = {
    "catalan": (_case_catalan,
                lambda a: [(n, r) for n in range(a.max + 1) for r in range(n + 1)]),
    "odd-sum": (_case_odd_sum, lambda a: [(n,) for n in range(1, a.max + 1)]),
    "shifted-product": (_case_shifted,
                        lambda a: [(x, y) for x in range(a.max + 1) for y in range(a.max + 1)]),
    "addition": (_case_addition,
                 lambda a: [(m, n) for n in range(a.max + 1) for m in range(n + 1)]),
    "combination": (_case_combination,
                    lambda a: [(m, n) for m in range(1, a.max + 1) for n in range(1, a.max + 1)]),
    "gcd": (_case_gcd,
            lambda a: [(m, n) for m in range(1, a.max + 1) for n in range(1, a.max + 1)]),
    "prime-congruence": (_case_prime,
                         lambda a: [(p,) for p in ident.primes_up_to(a.max_prime - 1) if p > 2]),
    "mod-companion": (_case_mod_companion, lambda a: [(m,) for m in range(1, a.max + 1)]),
    "binomial-3pow": (_case_binom3, lambda a: [(n,) for n in range(a.max + 1)]),
    "binomial-plain": (_case_binom_plain, lambda a: [(n,) for n in range(a.max + 1)]),
    "second-order-product": (_case_second_order,
                             lambda a: [(n,) for n in range(4, a.max + 1)]),
}


def _run_sweep(case, grid, jobs: int) -> tuple[int, list[dict]]:
    """Run Verdict cases over a grid, serially or across a process pool.
    Returns (failed, per-case items)."""
    if jobs > 1 and len(grid) >= 256:
        chunk = max(16, len(grid) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(case, grid, chunksize=chunk))
    else:
        verdicts = [case(p) for p in grid]
    items = []
    failed = 0
    for p, v in zip(grid, verdicts):
        it: dict = {"params": list(p), "ok": v.holds}
        if not v.holds:
            failed += 1
            label, _, lhs, rhs = v.witness
            it.update({"equality": label, "lhs": _decimal(lhs), "rhs": _decimal(rhs)})
        items.append(it)
    return failed, items


def cmd_identity(args) -> int:
    t0 = time.perf_counter()
    if args.name not in IDENTITY_CATALOG:
        raise UsageError(f"unknown identity {args.name!r}; known: "
                         + ", ".join(sorted(IDENTITY_CATALOG)))
    case, grid_fn = IDENTITY_CATALOG[args.name]
    grid = grid_fn(args)
    failed, items = _run_sweep(case, grid, _jobs(args))
    report = _report("identity", {"name": args.name, "max": getattr(args, "max", None),
                                  "max_prime": getattr(args, "max_prime", None)},
                     items, failed, t0)
    failures = [it for it in items if not it["ok"]]
    _emit(report, args, [f"{args.name}: passed {len(grid) - failed}/{len(grid)}"]
          + [f"  FAIL {f}" for f in failures[:10]])
    return 0 if failed == 0 else 1


# -- tailfloor -------------------------------------------------------------------

_TAIL_NAMES: dict[str, tuple[str, str]] = {}
for _shape in tails.SHAPES:
    if _shape.startswith("gf_"):
        _TAIL_NAMES[_shape.replace("_", "-") + "-G"] = ("G", _shape)
    else:
        for _fam in ("B", "C"):
            _TAIL_NAMES[_shape.replace("_", "-") + f"-{_fam}"] = (_fam, _shape)


def _tail_spec(args) -> tails.TailSpec:
    if args.spec not in _TAIL_NAMES:
        raise UsageError(f"unknown tail spec {args.spec!r}; known: "
                         + ", ".join(sorted(_TAIL_NAMES)))
    fam, shape = _TAIL_NAMES[args.spec]
    return tails.TailSpec(fam, shape, l=args.l, a=args.a)


def cmd_tailfloor(args) -> int:
    t0 = time.perf_counter()
    spec = _tail_spec(args)
    if args.n < tails.threshold(spec):
        raise UsageError(f"{args.spec} needs n >= {tails.threshold(spec)}, got {args.n}")
    item: dict = {"spec": args.spec, "n": args.n, "l": spec.l, "a": spec.a}
    lines = []
    failed = 0
    code = 0
    try:
        if args.mode in ("closed", "certify"):
            c = tails.closed_floor(spec, args.n)
            item["closed"] = _decimal(c)
            lines.append(f"closed   {c}")
        if args.mode in ("verified", "certify"):
            cert = tails.certify_floor(spec, args.n)
            item["verified"] = _decimal(cert.value)
            item["terms"] = cert.terms
            lines.append(f"verified {cert.value}  ({cert.terms} terms)")
        if args.mode == "certify":
            item["ok"] = item["closed"] == item["verified"]
            failed = 0 if item["ok"] else 1
            lines.append("match" if item["ok"] else "MISMATCH")
            code = 1 if failed else 0
    except tails.UndecidedIntervalError as exc:
        item["undecided"] = str(exc)
        failed, code = 1, 1
        lines.append(f"undecided: {exc}")
    report = _report("tailfloor", {"spec": args.spec, "mode": args.mode}, [item], failed, t0)
    _emit(report, args, lines)
    return code


# -- verify-all ------------------------------------------------------------------

def _unit_kernel() -> tuple[int, int]:
    checked = failed = 0
    bs = seqs.values(seqs.BALANCING, 0, 5001)
    cs = seqs.values(seqs.LUCAS_BALANCING, 0, 5001)
    for n in range(5001):
        checked += 1
        if seqs.pair_fast(n) != (bs[n], cs[n]):
            failed += 1
    for n in range(-50, 201):
        checked += 1
        want = (bs[n], cs[n]) if n >= 0 else (-bs[-n], cs[-n])
        if binet_pair(n) != want:
            failed += 1
    for n in range(2001):
        checked += 1
        if cs[n] ** 2 - 8 * bs[n] ** 2 != 1:
            failed += 1
    return checked, failed


def _unit_identities(jobs: int) -> tuple[int, int]:
    checked = failed = 0
    sweeps = [
        (_case_gcd, [(m, n) for m in range(1, 151) for n in range(1, 151)]),
        (_case_catalan, [(n, r) for n in range(101) for r in range(n + 1)]),
        (_case_prime, [(p,) for p in ident.primes_up_to(9999) if p > 2]),
        (_case_mod_companion, [(m,) for m in range(1, 61)]),
        (_case_binom3, [(n,) for n in range(61)]),
        (_case_binom_plain, [(n,) for n in range(61)]),
        (_case_second_order, [(n,) for n in range(4, 201)]),
    ]
    for case, grid in sweeps:
        bad, _ = _run_sweep(case, grid, jobs)
        checked += len(grid)
        failed += bad
    return checked, failed


def _unit_genfunc() -> tuple[int, int]:
    checked = failed = 0
    for family in _FAMILY_FLAGS.values():
        for k in range(1, 7):
            for r in range(k):
                got = genfunc.expand(genfunc.gf(family, k, r), 50)
                want = [seqs.term(family, k * i + r) for i in range(50)]
                checked += 1
                if got != want:
                    failed += 1
        for k in range(1, 6):
            for r in range(k):
                prefix = genfunc.expand(genfunc.gf(family, k, r), 31)
                squared = genfunc.series_mul(prefix, prefix, 31)
                checked += 1
                if any(squared[n] != conv.brute_conv(family, k, r, n) for n in range(31)):
                    failed += 1
    return checked, failed


def _unit_convolutions() -> tuple[int, int]:
    checked = failed = 0
    for family in _FAMILY_FLAGS.values():
        for k in range(1, 6):
            for r in range(k):
                for n in range(41):
                    checked += 1
                    if conv.conv_closed(family, k, r, n) != conv.brute_conv(family, k, r, n):
                        failed += 1
    return checked, failed


def _unit_tailfloors() -> tuple[int, int]:
    checked = failed = 0
    for fam in ("B", "C"):
        for shape in tails.SHAPES:
            if shape.startswith("gf_"):
                continue
            for l in (1, 2, 3) if shape == "plain" else (1,):
                spec = tails.TailSpec(fam, shape, l=l)
                c, f = _certify_range(spec)
                checked += c
                failed += f
    for a in (1, 2, 3):
        for shape in tails.SHAPES:
            if shape.startswith("gf_"):
                c, f = _certify_range(tails.TailSpec("G", shape, a=a))
                checked += c
                failed += f
    return checked, failed


def _certify_range(spec: tails.TailSpec) -> tuple[int, int]:
    checked = failed = 0
    for n in range(tails.threshold(spec), 26):
        checked += 1
        try:
            if tails.closed_floor(spec, n) != tails.verified_floor(spec, n, max_terms=16):
                failed += 1
        except tails.UndecidedIntervalError:
            failed += 1
    return checked, failed


VERIFY_UNITS = [
    ("kernel", lambda jobs: _unit_kernel()),
    ("identities", _unit_identities),
    ("genfunc", lambda jobs: _unit_genfunc()),
    ("convolutions", lambda jobs: _unit_convolutions()),
    ("tailfloors", lambda jobs: _unit_tailfloors()),
]


def cmd_verify_all(args) -> int:
    t0 = time.perf_counter()
    jobs = _jobs(args)
    items = []
    lines = []
    total_failed = 0
    for name, unit in VERIFY_UNITS:
        elapsed = time.perf_counter() - t0
        if args.budget is not None and elapsed > args.budget:
            items.append({"unit": name, "skipped": True})
            lines.append(f"{name}: skipped (budget)")
            continue
        u0 = time.perf_counter()
        checked, failed = unit(jobs)
        total_failed += failed
        items.append({"unit": name, "checked": checked, "failed": failed,
                      "seconds": round(time.perf_counter() - u0, 3)})
        lines.append(f"{name}: {checked - failed}/{checked} ok"
                     f" ({time.perf_counter() - u0:.2f}s)")
    report = _report("verify-all", {"budget": args.budget}, items, total_failed, t0)
    total_checked = sum(it.get("checked", 0) for it in items)
    report["summary"] = {"checked": total_checked, "passed": total_checked - total_failed,
                         "failed": total_failed}
    _emit(report, args, lines)
    return 0 if total_failed == 0 else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balkit",
        description="Exact balancing-number toolkit: sequences, identity sweeps, "
                    "convolution closed forms, and certified reciprocal-tail floors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def commons(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", metavar="PATH", default=None,
                       help="also write the JSON report to PATH")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes for sweeps (default: BALKIT_JOBS or CPU count)")

    p = sub.add_parser("seq", help="emit sequence terms")
    p.add_argument("family", choices=("B", "C", "F", "L", "G"))
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--a", type=int, default=1, help="parameter for family G")
    commons(p)
    p.set_defaults(fn=cmd_seq)

    p = sub.add_parser("gf", help="generating function and expansion check")
    p.add_argument("family", choices=("B", "C", "F", "L"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--terms", type=int, default=10)
    commons(p)
    p.set_defaults(fn=cmd_gf)

    p = sub.add_parser("conv", help="convolution sum, brute and/or closed form")
    p.add_argument("family", choices=("B", "C", "F", "L"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "closed", "both"), default="both")
    commons(p)
    p.set_defaults(fn=cmd_conv)

    p = sub.add_parser("identity", help="sweep one identity over a parameter grid")
    p.add_argument("name")
    p.add_argument("--max", type=int, default=40)
    p.add_argument("--max-prime", dest="max_prime", type=int, default=1000)
    commons(p)
    p.set_defaults(fn=cmd_identity)

    p = sub.add_parser("tailfloor", help="closed and/or certified reciprocal-tail floor")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=1, help="stride for plain shapes")
    p.add_argument("--a", type=int, default=1, help="parameter for G shapes")
    p.add_argument("--mode", choices=("closed", "verified", "certify"), default="certify")
    commons(p)
    p.set_defaults(fn=cmd_tailfloor)

    p = sub.add_parser("verify-all", help="run the bundled verification sweep")
    p.add_argument("--budget", type=float, default=None,
                   help="soft time cap in seconds; remaining units are skipped")
    commons(p)
    p.set_defaults(fn=cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
