"""Command-line front end.

Verbs: expand, st, product, eval work on single elements; verify runs the
identity suites.  Exit status: 0 all checks passed, 1 at least one check
failed, 2 usage or domain error (malformed input, divergent index).
Exact rationals on the command line are written p/q.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    FormalSum,
    T,
    Word,
    harmonic_product,
    parse_index,
    parse_word,
    star_product,
    t_harmonic_product,
)
from .identities import (
    alt_sum,
    cyclic_C,
    cyclic_Sigma,
    sum_poly,
    sum_words,
    two_one_lhs_index,
    two_one_rhs_word,
    words_of_weight,
)
from .interpolate import s_t, zeta_t_words
from .numeric import eval_element, kernel_name, mzsv, verify_identity
from .reduction import verify_csf_reduction, verify_sf_reduction

_PRODUCTS = {
    "harmonic": harmonic_product,
    "star": star_product,
    "t": t_harmonic_product,
}


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {text!r} (write p/q)") from None


def _emit(args, human, record):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(human)


def _cmd_expand(args):
    idx = parse_index(args.index)
    e = zeta_t_words(idx)
    _emit(args, str(e), {"index": str(idx), "expansion": str(e)})
    return 0


def _cmd_st(args):
    w = parse_word(args.word)
    e = s_t(FormalSum.from_word(w))
    _emit(args, str(e), {"word": str(w), "result": str(e)})
    return 0


def _cmd_product(args):
    left = parse_word(args.left)
    right = parse_word(args.right)
    e = _PRODUCTS[args.mode](FormalSum.from_word(left), FormalSum.from_word(right))
    _emit(
        args,
        str(e),
        {"mode": args.mode, "left": str(left), "right": str(right), "result": str(e)},
    )
    return 0


def _cmd_eval(args):
    idx = parse_index(args.index)
    t = _fraction(args.t)
    res = eval_element(zeta_t_words(idx), t, args.M)
    human = (
        f"zeta^t({idx}) at t={t}, M={args.M}: "
        f"value={res.value!r} err<={res.err:.3e} [{kernel_name()} kernel]"
    )
    record = {
        "index": str(idx),
        "t": str(t),
        "M": args.M,
        "value": res.value,
        "err": res.err,
        "kernel": kernel_name(),
    }
    _emit(args, human, record)
    return 0


def _print_certs(args, suite, certs, extra_records=()):
    ok = all(c.success and c.verify() for c in certs)
    records = [c.to_record() for c in certs]
    if args.json:
        doc = {"suite": suite, "checks": records, "ok": ok}
        if extra_records:
            doc["numeric"] = list(extra_records)
        print(json.dumps(doc, sort_keys=True))
    else:
        for c in certs:
            print(("ok   " if c.success and c.verify() else "FAIL ") + c.label)
        print(f"{suite}: {len(certs)} certificates, {'all ok' if ok else 'FAILURES'}")
    return ok


def _numeric_lines(reports):
    for label, report in reports:
        for check in report.checks:
            yield f"{'ok  ' if check.ok else 'FAIL'} {label}: {check}"


def _cmd_verify_sum_formula(args):
    certs = verify_sf_reduction(args.k)
    reports = []
    if args.numeric:
        t = _fraction(args.t)
        zk = FormalSum.from_word(Word((args.k,)))
        for n in range(1, args.k):
            lhs = s_t(sum_words(args.k, n))
            rhs = zk * sum_poly(args.k, n)
            reports.append(
                (f"k={args.k} n={n}", verify_identity(lhs, rhs, [t], args.M))
            )
    numeric_ok = all(r.ok for _, r in reports)
    extra = [
        {"label": label, "checks": [str(c) for c in rep.checks], "ok": rep.ok}
        for label, rep in reports
    ]
    certs_ok = _print_certs(args, "sum-formula", certs, extra)
    if not args.json:
        for line in _numeric_lines(reports):
            print(line)
    return 0 if certs_ok and numeric_ok else 1


def _cmd_verify_cyclic(args):
    certs = verify_csf_reduction(args.k)
    reports = []
    if args.numeric:
        t = _fraction(args.t)
        k = args.k
        zk1 = FormalSum.from_word(Word((k + 1,)))
        for w in words_of_weight(k):
            if w.depth >= k:
                continue
            lhs = s_t(cyclic_Sigma(w))
            rhs = (1 - T) * s_t(cyclic_C(w)) + (k * T**w.depth) * zk1
            reports.append((f"k={k} word={w}", verify_identity(lhs, rhs, [t], args.M)))
    numeric_ok = all(r.ok for _, r in reports)
    extra = [
        {"label": label, "checks": [str(c) for c in rep.checks], "ok": rep.ok}
        for label, rep in reports
    ]
    certs_ok = _print_certs(args, "cyclic", certs, extra)
    if not args.json:
        for line in _numeric_lines(reports):
            print(line)
    return 0 if certs_ok and numeric_ok else 1


def _cmd_verify_alt_sum(args):
    w = parse_word(args.word)
    if not w.letters:
        raise ValueError("alt-sum needs a nonempty letter sequence")
    e = alt_sum(w.letters)
    ok = e.is_zero()
    human = f"alt-sum {w}: {'vanishes' if ok else f'NONZERO remainder {e}'}"
    _emit(args, human, {"word": str(w), "remainder": str(e), "ok": ok})
    return 0 if ok else 1


def _cmd_verify_two_one(args):
    js = [int(x) for x in args.j.split(",")]
    idx = two_one_lhs_index(js)
    word, scale = two_one_rhs_word(js)
    lhs = mzsv(idx, args.M)
    rhs = eval_element(s_t(FormalSum.from_word(word)), Fraction(1, 2), args.M)
    rhs_value = float(scale) * rhs.value
    rhs_err = float(scale) * rhs.err
    residual = abs(lhs.value - rhs_value)
    tol = lhs.err + rhs_err
    ok = residual <= tol
    human = (
        f"{'ok  ' if ok else 'FAIL'} zeta*({idx}) = {lhs.value!r} vs "
        f"{scale}*zeta^(1/2)({word.to_index()}) = {rhs_value!r} "
        f"|diff|={residual:.3e} tol={tol:.3e}"
    )
    record = {
        "j": str(args.j),
        "star_index": str(idx),
        "half_word": str(word),
        "scale": str(scale),
        "lhs": lhs.value,
        "rhs": rhs_value,
        "residual": residual,
        "tol": tol,
        "M": args.M,
        "ok": ok,
    }
    _emit(args, human, record)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="izeta",
        description="Exact interpolated multiple-zeta algebra and numerics.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="merge-pattern expansion of an index")
    p.add_argument("--index", required=True, help='index like "2,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("st", help="apply the interpolation operator to a word")
    p.add_argument("--word", required=True, help='word like "2,1,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_st)

    p = sub.add_parser("product", help="product of two words")
    p.add_argument("--mode", required=True, choices=sorted(_PRODUCTS))
    p.add_argument("--left", required=True, help='word like "1"')
    p.add_argument("--right", required=True, help='word like "1,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("eval", help="numerically evaluate an interpolated value")
    p.add_argument("--index", required=True)
    p.add_argument("--t", default="0", help="exact rational p/q")
    p.add_argument("--M", type=int, default=100000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eval)

    pv = sub.add_parser("verify", help="run an identity suite")
    vsub = pv.add_subparsers(dest="suite", required=True)

    p = vsub.add_parser("sum-formula", help="fixed-weight sum reductions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--t", default="1/2", help="exact rational p/q")
    p.add_argument("--M", type=int, default=100000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_sum_formula)

    p = vsub.add_parser("cyclic", help="cyclic sum reductions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--t", default="1/2", help="exact rational p/q")
    p.add_argument("--M", type=int, default=100000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_cyclic)

    p = vsub.add_parser("alt-sum", help="alternating-sum vanishing")
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_alt_sum)

    p = vsub.add_parser("two-one", help="star values vs half-parameter values")
    p.add_argument("--j", required=True, help='block sizes like "1,1"')
    p.add_argument("--M", type=int, default=100000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_two_one)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
