"""Command-line entry point: ``hilbert``, ``coeffs``, ``verify`` and ``phi``.

Exit codes: 0 success, 1 a theorem-level claim was refuted, 2 invalid
flags or input, 3 an engine precondition failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import verifier
from .cache import SCHEMA_VERSION, ResultCache
from .errors import FitError, PreconditionError
from .fit import fit
from .generic import (FormSyntaxError, GenericIdealSpec, hilbert_data_generic, parse_form,
                      phi_probe)
from .linalg import DEFAULT_PRIME, PrimeFieldContext
from .monomial_engine import from_squarefree_set, hilbert_data


class UsageError(Exception):
    pass


def _parse_pairs(text: str) -> list:
    if not text.strip():
        return []
    pairs = []
    for chunk in text.split(";"):
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise UsageError(f"--m expects pairs like '1,2;1,3', got {chunk!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def _parse_s_values(args) -> list:
    if args.s is not None and args.s_range is not None:
        raise UsageError("give either --s or --s-range, not both")
    if args.s is not None:
        values = [args.s]
    elif args.s_range is not None:
        text = args.s_range.replace("..", "-")
        try:
            lo, hi = (int(x) for x in text.split("-"))
        except ValueError:
            raise UsageError(f"--s-range expects 'a..b', got {args.s_range!r}") from None
        values = list(range(lo, hi + 1))
    else:
        raise UsageError("one of --s or --s-range is required")
    if not values or min(values) < 1:
        raise UsageError("s values must be >= 1")
    return values


def _ring_spec(args) -> dict:
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    if args.kind == "monomial":
        if args.gens or args.r is not None:
            raise UsageError("--kind monomial takes --m, not --gens or --r")
        pairs = sorted(tuple(sorted(p)) for p in _parse_pairs(args.m or ""))
        for i, j in pairs:
            if i == j or not (1 <= i <= args.n and 1 <= j <= args.n):
                raise UsageError(f"pair {i},{j} is not a pair of distinct variables in 1..{args.n}")
        return {"kind": "monomial", "n": args.n, "pairs": [list(p) for p in pairs]}
    prime = args.prime if args.prime is not None else DEFAULT_PRIME
    try:
        PrimeFieldContext(prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.kind == "generic":
        if args.r is None:
            raise UsageError("--kind generic needs --r")
        if args.gens or args.m:
            raise UsageError("--kind generic takes --r/--seed, not --gens or --m")
        return {"kind": "generic", "n": args.n, "r": args.r, "prime": prime, "seed": args.seed}
    if not args.gens:
        raise UsageError("--kind explicit needs --gens")
    gens = [g.strip() for g in args.gens.split(";") if g.strip()]
    ctx = PrimeFieldContext(prime)
    try:
        forms = [parse_form(args.n, g, ctx) for g in gens]
    except FormSyntaxError as exc:
        raise UsageError(str(exc)) from None
    return {"kind": "explicit", "n": args.n, "prime": prime,
            "generators": [list(f.coeffs) for f in forms], "text": gens}


def _compute(ring: dict, s: int):
    n = ring["n"]
    if ring["kind"] == "monomial":
        return hilbert_data(from_squarefree_set(n, [tuple(p) for p in ring["pairs"]]), s)
    if ring["kind"] == "generic":
        try:
            spec = GenericIdealSpec(n=n, r=ring["r"], p=ring["prime"], seed=ring["seed"])
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        return hilbert_data_generic(spec, s)
    from .generic import QuadraticForm
    forms = [QuadraticForm(n, tuple(c)) for c in ring["generators"]]
    try:
        spec = GenericIdealSpec.explicit(n, forms, p=ring["prime"])
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    return hilbert_data_generic(spec, s)


def make_record(ring: dict, s: int, data, seconds: float) -> dict:
    cache_ring = {k: v for k, v in ring.items() if k != "text"}
    return {
        "schema": SCHEMA_VERSION,
        "ring": cache_ring,
        "s": s,
        "dims": [str(h) for h in data.dims],
        "length": str(data.length),
        "interesting": [[d, str(v)] for d, v in data.interesting_part()],
        "timing_seconds": round(seconds, 6),
    }


def _fit_json(f) -> dict:
    return {"n": f.n, "e": [str(x) for x in f.e], "s_onset": f.s_onset,
            "integral": f.integral}


def cmd_hilbert(args) -> int:
    ring = _ring_spec(args)
    s_values = _parse_s_values(args)
    cache = None if args.no_cache else ResultCache(args.cache_dir)
    cache_ring = {k: v for k, v in ring.items() if k != "text"}
    records = []
    for s in s_values:
        record = cache.get(cache_ring, s) if cache else None
        if record is None:
            t0 = time.perf_counter()
            data = _compute(ring, s)
            record = make_record(ring, s, data, time.perf_counter() - t0)
            if cache:
                cache.put(cache_ring, s, record)
        records.append(record)
    if args.fit:
        try:
            f = fit({r["s"]: int(r["length"]) for r in records}, ring["n"])
        except FitError as exc:
            raise UsageError(f"--fit: {exc}") from None
        for r in records:
            r["fit"] = _fit_json(f)
    if args.format == "json":
        print(json.dumps(records, indent=2, sort_keys=True))
    else:
        for r in records:
            print(f"s={r['s']}  length={r['length']}  dims={' '.join(r['dims'])}")
        if args.fit:
            print(f"e = ({', '.join(records[0]['fit']['e'])})  onset s={records[0]['fit']['s_onset']}")
    if cache and args.verbose:
        print(f"cache: {cache.hits} hits, {cache.misses} misses", file=sys.stderr)
    return 0


def load_samples(payload, n: int | None) -> tuple:
    """Samples from either a {"s": "length"} map or a list of hilbert records."""
    if isinstance(payload, dict) and "records" in payload:
        payload = payload["records"]
    if isinstance(payload, list):
        if not payload:
            raise UsageError("no records given")
        ns = {r["ring"]["n"] for r in payload}
        if len(ns) != 1:
            raise UsageError("records mix different rings")
        rec_n = ns.pop()
        if n is not None and n != rec_n:
            raise UsageError(f"--n {n} disagrees with records (n={rec_n})")
        return {int(r["s"]): int(r["length"]) for r in payload}, rec_n
    if isinstance(payload, dict):
        if n is None:
            raise UsageError("--n is required for a plain sample map")
        try:
            return {int(k): int(v) for k, v in payload.items()}, n
        except (TypeError, ValueError):
            raise UsageError("sample map must look like {\"s\": \"length\"}") from None
    raise UsageError("unrecognised sample input")


def cmd_coeffs(args) -> int:
    if args.from_file:
        with open(args.from_file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        payload = json.loads(text)
    except ValueError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None
    samples, n = load_samples(payload, args.n)
    try:
        f = fit(samples, n)
    except FitError as exc:
        msg = str(exc)
        if exc.witness:
            msg += f" (witness s={exc.witness[0]}: predicted {exc.witness[1]}, actual {exc.witness[2]})"
        raise UsageError(msg) from None
    if args.format == "json":
        print(json.dumps(_fit_json(f), indent=2, sort_keys=True))
    else:
        print(f"e = ({', '.join(str(x) for x in f.e)})  onset s={f.s_onset}"
              + ("" if f.integral else "  [non-integral]"))
    return 0


def _parse_primes(text):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--primes expects a comma list, got {text!r}") from None


def cmd_verify(args) -> int:
    if args.list:
        for cid, status, statement in verifier.list_claims():
            print(f"{cid:32s} {status:10s} {statement}")
        return 0
    if not args.all and not args.check:
        raise UsageError("give --all, --check ID or --list")
    ids = sorted(verifier.CLAIMS) if args.all else args.check
    unknown = [c for c in ids if c not in verifier.CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim id(s) {unknown}; valid ids: {', '.join(sorted(verifier.CLAIMS))}")
    primes = _parse_primes(args.primes)
    if primes:
        for p in primes:
            try:
                PrimeFieldContext(p)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    bounds = verifier.Bounds(s_max=args.s_max, n_max=args.n_max, trials=args.trials,
                             primes=primes, seed=args.seed)
    reports = verifier.run_all(bounds, ids, workers=args.workers)
    if args.format in ("json", "both"):
        print(verifier.reports_json(reports))
    if args.format in ("table", "both"):
        print(verifier.summary_table(reports), file=sys.stderr if args.format == "both" else sys.stdout)
    return 1 if verifier.failed_theorems(reports) else 0


def cmd_phi(args) -> int:
    r_min = args.r_min if args.r_min is not None else args.n
    if r_min < args.n:
        raise UsageError("--r-min must be >= --n")
    try:
        PrimeFieldContext(args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = phi_probe(args.n, range(r_min, args.r_max + 1), args.s_max, trials=args.trials,
                      p=args.prime, seed=args.seed)
    if args.format == "json":
        print(json.dumps(table.to_dict(), indent=2, sort_keys=True))
    else:
        for r, s in sorted(table.minimal_s.items()):
            print(f"r={r}: " + (f"s={s}" if s is not None else f"none <= {args.s_max}"))
        print(f"minimal r = {table.minimal_r}")
        for w in table.warnings:
            print(f"warning: {w}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbert-powers",
                                     description="Hilbert series and coefficients of powers "
                                                 "of quadratic ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", help="Hilbert data of S_n/I^s")
    h.add_argument("--kind", choices=("monomial", "generic", "explicit"), required=True)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--m", help="squarefree pairs for I_{n,M}, e.g. '1,2;1,3'")
    h.add_argument("--r", type=int, help="number of random quadrics")
    h.add_argument("--s", type=int)
    h.add_argument("--s-range", help="inclusive range 'a..b'")
    h.add_argument("--prime", type=int)
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--gens", help="';'-separated quadrics, e.g. 'x^2;y^2;x*y+2*y*z'")
    h.add_argument("--fit", action="store_true", help="fit Hilbert coefficients over the range")
    h.add_argument("--format", choices=("json", "table"), default="json")
    h.add_argument("--cache-dir")
    h.add_argument("--no-cache", action="store_true")
    h.add_argument("--verbose", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    c = sub.add_parser("coeffs", help="fit Hilbert coefficients from length samples")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--from", dest="from_file", help="JSON file of samples or hilbert records")
    src.add_argument("--pipe", action="store_true", help="read JSON from stdin")
    c.add_argument("--n", type=int)
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.set_defaults(func=cmd_coeffs)

    v = sub.add_parser("verify", help="check the catalogued claims")
    v.add_argument("--all", action="store_true")
    v.add_argument("--check", action="append", help="claim id (repeatable)")
    v.add_argument("--list", action="store_true")
    v.add_argument("--s-max", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--primes")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--workers", type=int, default=4)
    v.add_argument("--format", choices=("json", "table", "both"), default="both")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("phi", help="least s with I^s = m^{2s} for r random quadrics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r-min", type=int)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--s-max", type=int, default=5)
    p.add_argument("--trials", type=int, default=2)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_phi)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
