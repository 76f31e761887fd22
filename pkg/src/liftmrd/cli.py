"""``liftmrd`` command-line interface.

Exit codes: 0 verified / success, 2 verification refuted, 3 parameter
or precondition error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, codeio, designs, lincode
from .codes import DEFAULT_PAIR_CAP, DEFAULT_SAMPLES, verify_layered, verify_min_subspace_distance
from .constructions import construction_I, construction_II, construction_III
from .errors import CapExceeded, ParameterError
from .parallelism import (PRINTED_G2_4_2, Parallelism, repair_parallelism, search_parallelism,
                          verify_parallelism)
from .rankmetric import DEFAULT_MATERIALIZE_CAP, lifted_mrd

EXIT_OK, EXIT_REFUTED, EXIT_PRECONDITION, EXIT_CAP = 0, 2, 3, 4


class Refuted(Exception):
    """Raised after output is written when a check fails."""


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the precondition code; 2 means refuted."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PRECONDITION, f"{self.prog}: error: {message}\n")


def _emit(args, obj, human):
    if args.json:
        print(json.dumps(obj, sort_keys=True, default=str))
    else:
        print(human)


def _write_code(args, C, default_name):
    out = args.out
    if out == "-":
        sys.stdout.write(codeio.dumps_json(C) + "\n" if args.format == "json" else codeio.dumps_text(C))
        return None
    path = Path(out) if out else codeio.cache_dir() / f"{default_name}.{'json' if args.format == 'json' else 'txt'}"
    codeio.save_code(C, path, args.format)
    return path


def _code_summary(C, path):
    return {"q": C.q, "n": C.n, "k": C.k, "size": len(C), "claimed_distance": C.claimed_distance,
            "provenance": C.provenance, "path": None if path is None else str(path)}


def cmd_lift_mrd(args):
    q, n, k, delta = args.q, args.n, args.k, args.delta
    if not 1 < k <= n - k:
        raise ParameterError(f"lifted MRD codes are built for 1 < k <= n - k (got n={n}, k={k})")
    C = lifted_mrd(q, n, k, delta, cap=args.cap)
    path = _write_code(args, C, f"lifted-mrd-q{q}-n{n}-k{k}-d{delta}")
    if args.out != "-":
        s = _code_summary(C, path)
        _emit(args, s, f"({n}, {len(C)}, {2 * delta}, {k})_{q} lifted MRD code -> {path}")


def cmd_construct(args):
    q, n = args.q, args.n
    if args.scheme == "I":
        C = construction_I(q, n, args.cap)
    elif args.scheme == "II":
        C = construction_II(q, n, args.cap)
    else:
        if n not in (None, 8):
            raise ParameterError("scheme III builds codes of length 8")
        P = None if q == 2 else search_parallelism(q)
        C = construction_III(q, P, args.cap)
        n = 8
    path = _write_code(args, C, f"construction-{args.scheme}-q{q}-n{n}")
    if args.out != "-":
        s = _code_summary(C, path)
        _emit(args, s, f"({C.n}, {len(C)}, {C.claimed_distance}, {C.k})_{q} code "
                       f"(scheme {args.scheme}) -> {path}")


def cmd_verify(args):
    C = codeio.load_code(args.code)
    if args.min_distance == "layered":
        rep = verify_layered(C, args.sample, args.seed, args.pair_cap)
        d, ok = rep.min_distance, rep.passed
        obj = rep.as_dict()
        w = rep.cross.witness
    else:
        rep = verify_min_subspace_distance(C, args.min_distance, samples=args.sample, seed=args.seed,
                                           pair_cap=args.pair_cap, engine=args.engine)
        d, ok, w = rep.min_distance, rep.passed, rep.witness
        obj = rep.as_dict()
    if d is None and len(C) < 2:
        d = "infinity"
    human = f"min distance {d}, witness {tuple(w) if w else None}"
    if args.min_distance != "exhaustive":
        human += f" ({args.min_distance}, seed {args.seed}, {args.sample} samples)"
    if C.claimed_distance is not None:
        human += f"; claimed {C.claimed_distance}: {'pass' if ok else 'FAIL'}"
    _emit(args, obj, human)
    if not ok:
        raise Refuted


def cmd_design(args):
    C = codeio.load_code(args.code)
    if args.check == "std":
        rep = designs.verify_std(C, args.t)
    else:
        D = designs.td_from_code(C)
        if args.check == "td":
            rep = designs.verify_td(D, args.t, args.lam)
        elif args.check == "oa":
            rep = designs.verify_oa(designs.td_to_oa(D), args.t, args.lam)
        else:
            rep = designs.verify_resolvable(D, designs.parallel_classes(C))
    _emit(args, rep.as_dict(), f"{args.check}: {rep.status} {rep.parameters}"
          + (f" counterexample {rep.counterexample}" if rep.counterexample else ""))
    if not rep.ok:
        raise Refuted


def cmd_bounds(args):
    if args.table == "q-delta":
        rows = [{"q": q, "delta": d, "Q": str(bounds.to_decimal(bounds.q_delta(q, d), 4))}
                for q in (2, 3, 4, 5, 7) for d in (2, 3, 4, 5)]
        human = "\n".join(f"Q_{r['delta']}({r['q']}) = {r['Q']}" for r in rows)
    elif args.table == "k3-ratio":
        rows = [{"q": q, "limit": str(bounds.to_decimal(bounds.k3_ratio_limit(q), 4))}
                for q in (2, 3, 4, 5, 7)]
        human = "\n".join(f"q={r['q']}: {r['limit']}" for r in rows)
    else:
        if None in (args.q, args.n, args.k, args.delta):
            raise ParameterError("bounds needs --q --n --k --delta (or --table)")
        rep = bounds.bound_report(args.q, args.n, args.k, args.delta)
        rows = [rep.as_dict()]
        human = "\n".join(f"{k}: {v}" for k, v in rows[0].items())
    if args.json:
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    else:
        print(human)


def cmd_lincode(args):
    C = codeio.load_code(args.code) if args.code else lifted_mrd(args.q, args.n, args.k, args.delta)
    inc = lincode.incidence_matrix(C)
    if args.emit == "alist":
        sys.stdout.write(lincode.emit_alist(inc.H if args.which == "H" else inc.H.T))
        return
    s = (lincode.analyze_C if args.which == "H" else lincode.analyze_CT)(inc, seed=args.seed)
    spectrum = lincode.spectrum_certificate(inc)
    dims = lincode.dimension_bound_checks(inc)
    obj = {"code": s.as_dict(), "spectrum": spectrum.as_dict(), "dimension_bounds": dims.as_dict()}
    dist = s.min_distance if s.min_distance is not None else f"in [{s.interval[0]}, {s.interval[1]}]"
    _emit(args, obj, f"[{s.length}, {s.dimension}, {dist}] code "
                     f"({'C' if args.which == 'H' else 'C^T'}); even weights: {s.even_weight}; "
                     f"spectrum: {spectrum.status}; dimension bounds: {dims.status}")
    if not (spectrum.ok and dims.ok):
        raise Refuted


def cmd_parallelism(args):
    if args.search:
        P = search_parallelism(args.q, args.node_limit)
        rep = verify_parallelism(P)
        _emit(args, {"verify": rep.as_dict(), "parallelism": P.to_json()},
              f"found {len(P.spreads)} spreads of {len(P.spreads[0])} blocks over GF({args.q}); "
              f"verification {rep.status}")
        if not rep.ok:
            raise Refuted
        return
    raw = verify_parallelism(Parallelism(2, PRINTED_G2_4_2))
    fixed, fixes = repair_parallelism(Parallelism(2, PRINTED_G2_4_2))
    rep = verify_parallelism(fixed)
    first = raw.counterexample or {}
    human = (f"defect found in spread {first.get('spread')}: {first}\n"
             f"repairs: {fixes}\nrepaired table {'verified' if rep.ok else 'FAILED'}")
    _emit(args, {"raw": raw.as_dict(), "repairs": fixes, "repaired": rep.as_dict()}, human)
    if not rep.ok:
        raise Refuted


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1,
                        help="worker count (results never depend on it)")
    common.add_argument("--seed", type=lambda s: int(s, 0), default=0, help="64-bit seed")

    p = _Parser(prog="liftmrd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out_flags(sp):
        sp.add_argument("--out", help="output path ('-' for stdout; default: cache directory)")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--cap", type=int, default=DEFAULT_MATERIALIZE_CAP,
                        help="refuse to materialize more codewords than this")

    sp = sub.add_parser("lift-mrd", parents=[common], help="lifted Gabidulin code")
    for f in ("--q", "--n", "--k", "--delta"):
        sp.add_argument(f, type=int, required=True)
    out_flags(sp)
    sp.set_defaults(func=cmd_lift_mrd)

    sp = sub.add_parser("construct", parents=[common], help="codes extending a lifted MRD code")
    sp.add_argument("--scheme", choices=["I", "II", "III"], required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int)
    out_flags(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", parents=[common], help="minimum subspace distance")
    sp.add_argument("--code", required=True)
    sp.add_argument("--min-distance", choices=["exhaustive", "sampled", "certify", "layered"],
                    default="exhaustive")
    sp.add_argument("--sample", type=int, default=DEFAULT_SAMPLES)
    sp.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP)
    sp.add_argument("--engine", choices=["collision", "pairwise"], default="collision")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("design", parents=[common], help="design checks on a lifted MRD code")
    sp.add_argument("--code", required=True)
    sp.add_argument("--check", choices=["td", "std", "oa", "resolvable"], required=True)
    sp.add_argument("--t", type=int)
    sp.add_argument("--lambda", dest="lam", type=int)
    sp.set_defaults(func=cmd_design)

    sp = sub.add_parser("bounds", parents=[common], help="upper bounds and ratios")
    for f in ("--q", "--n", "--k", "--delta"):
        sp.add_argument(f, type=int)
    sp.add_argument("--table", choices=["q-delta", "k3-ratio"])
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("lincode", parents=[common], help="binary codes from incidence matrices")
    sp.add_argument("--code")
    for f in ("--q", "--n", "--k", "--delta"):
        sp.add_argument(f, type=int)
    sp.add_argument("--emit", choices=["alist", "summary"], default="summary")
    sp.add_argument("--which", choices=["H", "HT"], default="H")
    sp.set_defaults(func=cmd_lincode)

    sp = sub.add_parser("parallelism", parents=[common], help="2-parallelisms of GF(q)^4")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--verify-table5", action="store_true",
                   help="audit and repair the listed parallelism of G_2(4,2)")
    g.add_argument("--search", action="store_true")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--node-limit", type=int, default=10**6)
    sp.set_defaults(func=cmd_parallelism)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:  # usage errors and --help
        return e.code
    if args.command == "lincode" and not args.code and None in (args.q, args.n, args.k, args.delta):
        print("liftmrd: error: lincode needs --code or --q --n --k --delta", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        args.func(args)
    except Refuted:
        return EXIT_REFUTED
    except ParameterError as e:
        print(f"liftmrd: error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CapExceeded as e:
        print(f"liftmrd: cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
