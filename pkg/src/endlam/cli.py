"""Command-line entry point: build, verify, measure, and trace sequences.

Every run writes its primary artifact plus a manifest (all inputs,
constants, and the package version) next to it; identical manifests give
byte-identical outputs.  Exit codes: 0 all assertions pass, 1 an assertion
failed (the report is still written), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from . import __version__
from . import intersect as _intersect
from .diagram import DiagramError
from .surface import SurfaceError
from .mcg import WordError
from .seqgen import (ScheduleError, make_schedule, build_sequence,
                     verify_condition_P)
from .intersect import ScaleError, intersection_number_with_method
from .subproj import (VerifierConstants, annular_coeff_exact,
                      annular_coeff_descent, annular_coeff_estimate,
                      cc_distance_bounds)
from .ergodics import (DepthError, intersection_ratio_table,
                       convergence_report, singularity_ratios)
from .lengthmodel import LengthModelParams, limit_trace
from . import serialize

DOMAIN_ERRORS = (SurfaceError, DiagramError, WordError, ScheduleError,
                 DepthError, ScaleError, ValueError, OSError, KeyError)


def _frac_str(q):
    return serialize.enc_frac(q)


def _float_str(x):
    return format(float(x), ".15g")


def _read_constants(path):
    out = {}
    if path is None:
        return VerifierConstants(), out
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            out[key.strip()] = val.strip()
    kwargs = {}
    for key in ("B0", "G0"):
        if key in out:
            kwargs[key] = int(out[key])
    return VerifierConstants(**kwargs), out


def _write_manifest(args, extra=None):
    skip = {"func"}
    options = {}
    for key, val in sorted(vars(args).items()):
        if key in skip:
            continue
        options[key] = val if not isinstance(val, Fraction) else _frac_str(val)
    manifest = {
        "version": __version__,
        "command": args.command,
        "options": options,
        "constants_resolved": extra or {},
    }
    serialize.dump(manifest, args.out + ".manifest.json")


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)


def _load_seq(args):
    if _intersect.DEFAULT_ORACLE_CAP != args.oracle_cap:
        _intersect.DEFAULT_ORACLE_CAP = args.oracle_cap
    return serialize.sequence_from_json(serialize.load(args.seq))


# -- subcommands -----------------------------------------------------------


def cmd_build(args):
    m = (args.p - 1) // 2
    schedule = make_schedule(args.e0, Fraction(args.ratio),
                             args.depth + m - 1)
    seq = build_sequence(args.p, schedule, args.depth)
    serialize.dump(serialize.sequence_to_json(seq), args.out)
    consts, resolved = _read_constants(args.constants)
    _write_manifest(args, resolved)
    return 0


def cmd_verify_p(args):
    seq = _load_seq(args)
    rows = verify_condition_P(seq)
    _write_csv(args.out, ["clause", "k", "detail", "ok"],
               [[r.clause, r.k, r.detail, "pass" if r.ok else "FAIL"]
                for r in rows])
    consts, resolved = _read_constants(args.constants)
    _write_manifest(args, resolved)
    return 0 if all(r.ok for r in rows) else 1


def cmd_intersections(args):
    seq = _load_seq(args)
    if args.pairs:
        nums = [int(x) for x in args.pairs.split(",")]
        if len(nums) % 2:
            raise ValueError("--pairs needs an even count of indices")
        pairs = list(zip(nums[::2], nums[1::2]))
    else:
        d = seq.depth
        pairs = [(i, j) for i in range(d + 1) for j in range(i + 1, d + 1)]
    rows = []
    for i, j in pairs:
        if not (0 <= i <= seq.depth and 0 <= j <= seq.depth):
            raise ValueError("pair (%d,%d) out of range" % (i, j))
        try:
            n, method = intersection_number_with_method(seq.gamma[i],
                                                        seq.gamma[j])
            rows.append([i, j, str(n), method])
        except ScaleError:
            rows.append([i, j, "", "skipped"])
    _write_csv(args.out, ["i", "j", "intersection", "method"], rows)
    consts, resolved = _read_constants(args.constants)
    _write_manifest(args, resolved)
    return 0


def _read_triples(path):
    out = []
    with open(path) as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip().lstrip("-").isdigit():
                continue
            out.append(tuple(int(x) for x in row[:3]))
    return out


def cmd_annular(args):
    seq = _load_seq(args)
    triples = _read_triples(args.triples)
    rows = []
    ok = True
    for i, k, j in triples:
        axis, a, b = seq.gamma[k], seq.gamma[i], seq.gamma[j]
        try:
            if args.mode == "exact":
                c = annular_coeff_exact(axis, a, b,
                                        window_cap=args.window_cap)
            elif args.mode == "descent":
                c = annular_coeff_descent(axis, a, b)
            else:
                c = annular_coeff_estimate(axis, a, b)
            rows.append([i, k, j, str(c.value), str(c.uncertainty), c.method])
        except ScaleError:
            rows.append([i, k, j, "", "", "skipped"])
    _write_csv(args.out, ["i", "k", "j", "value", "uncertainty", "method"],
               rows)
    consts, resolved = _read_constants(args.constants)
    _write_manifest(args, resolved)
    return 0 if ok else 1


def cmd_distance(args):
    seq = _load_seq(args)
    consts, resolved = _read_constants(args.constants)
    lower, upper = cc_distance_bounds(seq, args.i, args.j, consts,
                                      mode=args.mode)
    _write_csv(args.out, ["i", "j", "lower", "upper"],
               [[args.i, args.j, str(lower), str(upper)]])
    _write_manifest(args, resolved)
    return 0 if lower <= upper else 1


def cmd_ergodic(args):
    seq = _load_seq(args)
    table = intersection_ratio_table(seq)
    conv = convergence_report(seq)
    sing = singularity_ratios(seq, proxy_depth=args.proxy_depth)
    rows = [["kappa0", "", "", "", _frac_str(table.kappa0), ""]]
    rows.append(["band_lo", "", "", "", _frac_str(sing.band[0]), ""])
    rows.append(["band_hi", "", "", "", _frac_str(sing.band[1]), ""])
    all_ok = True
    for h in sorted(conv.residuals):
        for k, r in enumerate(conv.residuals[h]):
            rows.append(["residual", h, k, "", _frac_str(r), ""])
        rows.append(["fit", h, "", "", _frac_str(conv.fit[h]),
                     "pass" if conv.ok[h] else "FAIL"])
        all_ok = all_ok and conv.ok[h]
    for h in sorted(sing.same):
        for t, v in enumerate(sing.same[h]):
            in_band = sing.band[0] <= v <= sing.band[1]
            rows.append(["same", h, h, t, _frac_str(v),
                         "pass" if in_band else "FAIL"])
            all_ok = all_ok and in_band
    for (h, hp) in sorted(sing.cross):
        vals = sing.cross[(h, hp)]
        for t, v in enumerate(vals):
            mono = t == 0 or v < vals[t - 1]
            rows.append(["cross", h, hp, t, _frac_str(v),
                         "pass" if mono else "FAIL"])
            all_ok = all_ok and mono
    _write_csv(args.out, ["kind", "h", "hp_or_k", "step", "value", "ok"],
               rows)
    consts, resolved = _read_constants(args.constants)
    _write_manifest(args, resolved)
    return 0 if all_ok else 1


def cmd_limit_trace(args):
    seq = _load_seq(args)
    if args.p7 and seq.model.p != 7:
        raise ValueError("--p7 requires a p=7 sequence")
    from .ergodics import default_family, _proxy_vector
    family = default_family(seq)
    params = LengthModelParams(samples=args.samples)
    points = limit_trace(seq, family, params)
    header = (["k", "u", "regime", "x_k", "y_k"]
              + ["fam_%d" % t for t in range(len(family))] + ["residual"])
    rows = []
    for pt in points:
        rows.append([pt.k, _float_str(pt.u), pt.tag, _float_str(pt.xk),
                     _float_str(pt.yk)]
                    + [_float_str(v) for v in pt.projective]
                    + [_float_str(pt.residual)])
    _write_csv(args.out, header, rows)
    if args.emit_edges:
        m = seq.model.m
        vrows = []
        for h in range(m):
            kh = (seq.depth - h) // m
            pv = _proxy_vector(seq, h, kh, family)
            top = max(pv.values())
            vrows.append([h, kh] + [_float_str(pv[t] / top)
                                    for t in range(len(family))])
        base = args.out[:-4] if args.out.endswith(".csv") else args.out
        _write_csv(base + ".edges.csv",
                   ["h", "proxy_k"] + ["fam_%d" % t
                                       for t in range(len(family))], vrows)
    consts, resolved = _read_constants(args.constants)
    _write_manifest(args, resolved)
    return 0


# -- argument parsing ------------------------------------------------------


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", default=None,
                        help="key=value file overriding B0, G0")
    common.add_argument("--oracle-cap", type=int, default=20000,
                        dest="oracle_cap")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", required=True)

    parser = argparse.ArgumentParser(
        prog="endlam",
        description="exact curve-sequence toolkit on the doubled polygon")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common])
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--e0", type=int, required=True)
    b.add_argument("--ratio", required=True)
    b.add_argument("--depth", type=int, required=True)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify-p", parents=[common])
    v.add_argument("--seq", required=True)
    v.set_defaults(func=cmd_verify_p)

    it = sub.add_parser("intersections", parents=[common])
    it.add_argument("--seq", required=True)
    it.add_argument("--pairs", default=None,
                    help="flat comma list i,j[,i,j...]; default all pairs")
    it.set_defaults(func=cmd_intersections)

    an = sub.add_parser("annular", parents=[common])
    an.add_argument("--seq", required=True)
    an.add_argument("--triples", required=True,
                    help="CSV of rows i,k,j (axis index in the middle)")
    an.add_argument("--mode", choices=("exact", "descent", "estimate"),
                    default="exact")
    an.add_argument("--window-cap", type=int, default=4096,
                    dest="window_cap")
    an.set_defaults(func=cmd_annular)

    di = sub.add_parser("distance", parents=[common])
    di.add_argument("--seq", required=True)
    di.add_argument("--i", type=int, required=True)
    di.add_argument("--j", type=int, required=True)
    di.add_argument("--mode", choices=("descent", "estimate"),
                    default="descent")
    di.set_defaults(func=cmd_distance)

    er = sub.add_parser("ergodic", parents=[common])
    er.add_argument("--seq", required=True)
    er.add_argument("--proxy-depth", type=int, default=None,
                    dest="proxy_depth")
    er.set_defaults(func=cmd_ergodic)

    lt = sub.add_parser("limit-trace", parents=[common])
    lt.add_argument("--seq", required=True)
    lt.add_argument("--p7", action="store_true",
                    help="assert the sequence lives on the 7-punctured sphere")
    lt.add_argument("--samples", type=int, default=32)
    lt.add_argument("--emit-edges", action="store_true", dest="emit_edges")
    lt.set_defaults(func=cmd_limit_trace)

    return parser


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
