"""Command line front end: ``slidewin {mus-scan,maw-scan,verify,gen,bench}``."""
from __future__ import annotations

import argparse
import os
import random
import sys
import time

from . import maw_engine as maw
from .mus_engine import MusEngine, run_sliding
from .verify import verify_tight_grid, verify_mus_corpus

DEFAULT_GUARD = 10**7


def _read_input(path) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def cmd_mus_scan(args) -> int:
    data = _read_input(args.input)
    eng = MusEngine(args.d)
    out = _open_out(args.output)
    try:
        for ev in run_sliding(data, args.d, engine=eng):
            out.write(ev.to_json(args.zero_based) + "\n")
            if args.dump_tree_at is not None and ev.pos == args.dump_tree_at:
                dot = eng.tree.to_dot()
                if args.dot_file:
                    with open(args.dot_file, "w") as fh:
                        fh.write(dot)
                else:
                    sys.stderr.write(dot)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _guard() -> int:
    raw = os.environ.get("SLIDEWIN_GUARD")
    return int(raw) if raw else DEFAULT_GUARD


def cmd_maw_scan(args) -> int:
    data = _read_input(args.input)
    n, d = len(data), args.d
    limit = _guard()
    if n * d > limit and not args.force:
        print(f"refusing: n*d = {n * d} exceeds the desk-scale guard {limit}; "
              "pass --force or raise SLIDEWIN_GUARD", file=sys.stderr)
        return 2
    if d >= n:
        print(f"need d < input length ({n})", file=sys.stderr)
        return 2
    alphabet = args.alphabet.encode("latin-1") if args.alphabet else None
    out = _open_out(args.output)
    try:
        for rec in maw.scan_records(data, d, alphabet, steps=args.steps):
            out.write(maw.to_json(rec) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_verify(args) -> int:
    if args.lemma == 13:
        ok, lines = verify_tight_grid(8)
        for line in lines:
            print(line)
        return 0 if ok else 1
    report = verify_mus_corpus(max_len=args.max_len, n_random=args.random,
                               max_random_len=args.max_random_len, seed=args.seed,
                               fault=args.inject_fault)
    if report is None:
        print(f"0 mismatches (binary strings up to length {args.max_len}, "
              f"{args.random} random strings, seed {args.seed})")
        return 0
    print(report)
    return 1


def cmd_gen(args) -> int:
    if args.kind == "tight-append":
        if args.sigma_prime is None or args.d is None:
            print("tight-append needs --sigma-prime and -d", file=sys.stderr)
            return 2
        z, alpha = maw.gen_tight_append(args.sigma_prime, args.d)
        text, meta = z, f"alpha={alpha.decode('latin-1')}"
    elif args.kind == "total-large-sigma":
        if args.d is None or args.n is None:
            print("total-large-sigma needs -d and -n", file=sys.stderr)
            return 2
        text, meta = maw.gen_tight_total_large_sigma(args.d, args.n), None
    else:
        if args.sigma is None or args.d is None or args.n is None:
            print("total-small-sigma needs --sigma, -d and -n", file=sys.stderr)
            return 2
        text, meta = maw.gen_tight_total_small_sigma(args.sigma, args.d, args.n), None
    if args.output in (None, "-"):
        sys.stdout.write(text.decode("latin-1") + "\n")
    else:
        with open(args.output, "wb") as fh:
            fh.write(text)
    if meta:
        print(meta, file=sys.stderr)
    return 0


def bench(n: int, d: int, seed: int = 0, sigma: int = 256) -> dict:
    """Scan ``n`` random bytes with window ``d`` and collect counters."""
    rng = random.Random(seed)
    data = bytes(rng.randrange(sigma) for _ in range(n))
    eng = MusEngine(d)
    tree = eng.tree
    max_nodes = 0
    t0 = time.perf_counter()
    for c in data:
        eng.apply_append(c)
        if tree.live_nodes > max_nodes:
            max_nodes = tree.live_nodes
        if len(eng) > d:
            eng.apply_delete()
    wall = time.perf_counter() - t0
    cnt = eng.counters()
    ops = cnt["suffix_jumps"] + cnt["edits"]
    return {"n": n, "d": d, "seed": seed, "wall_s": round(wall, 3), "ops": ops,
            "ops_per_char": round(ops / max(n, 1), 3), "max_nodes": max_nodes,
            "node_slots": len(tree._parent), **cnt}


def cmd_bench(args) -> int:
    res = bench(args.n, args.d, args.seed, args.sigma)
    print(maw.to_json(res))
    ok = res["ops"] <= 8 * args.n and res["max_nodes"] <= 2 * args.d + 2
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slidewin", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    m = sub.add_parser("mus-scan", help="MUS events for every window (JSON lines)")
    m.add_argument("input", nargs="?", help="input file (default stdin)")
    m.add_argument("-d", type=int, required=True, help="window width in bytes")
    m.add_argument("-o", "--output")
    m.add_argument("--zero-based", action="store_true")
    m.add_argument("--dump-tree-at", type=int, metavar="POS",
                   help="write the suffix tree as DOT when the window ends at POS")
    m.add_argument("--dot-file", help="DOT destination (default stderr)")
    m.set_defaults(func=cmd_mus_scan)

    a = sub.add_parser("maw-scan", help="MAW changes per slide (JSON lines)")
    a.add_argument("input", nargs="?")
    a.add_argument("-d", type=int, required=True)
    a.add_argument("-o", "--output")
    a.add_argument("--alphabet", help="alphabet letters (default: letters of the input)")
    a.add_argument("--steps", action="store_true", help="report appends and deletes separately")
    a.add_argument("--force", action="store_true", help="ignore the n*d guard")
    a.set_defaults(func=cmd_maw_scan)

    v = sub.add_parser("verify", help="check the engines against brute force")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-len", type=int, default=12)
    v.add_argument("--random", type=int, default=50)
    v.add_argument("--max-random-len", type=int, default=60)
    v.add_argument("--lemma", type=int, choices=[13])
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="worst-case strings")
    g.add_argument("kind", choices=["tight-append", "total-small-sigma", "total-large-sigma"])
    g.add_argument("--sigma-prime", type=int)
    g.add_argument("--sigma", type=int)
    g.add_argument("-d", type=int)
    g.add_argument("-n", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="operation counters on random bytes")
    b.add_argument("-n", type=int, default=10**6)
    b.add_argument("-d", type=int, default=2**16)
    b.add_argument("--sigma", type=int, default=256)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "d", None) is not None and args.d < 1:
        print("-d must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"slidewin: {exc}", file=sys.stderr)
        return 2
