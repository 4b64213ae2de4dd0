"""Command-line front end.

Subcommands: ``char`` and ``decomp`` (multiplicity tables through the
Demazure pipeline), ``sam`` (the independent symplectic pipeline), ``xi``
(tensor-factor weight data), ``drinfeld`` (classifying polynomial offsets),
and ``verify`` (internal consistency suites).  Reports go to standard
output as JSON, CSV, or aligned text; diagnostics go to standard error.

Exit codes: 0 success, 2 invalid input, 3 internal verification failure.
Output is byte-stable for a fixed invocation; the elapsed-time field in
JSON metadata reports 0 unless MINAFF_TIMING=1 is set.
"""

import argparse
import csv
import io
import json
import os
import random
import sys
import time

from . import __version__
from .cartan import AffineWeight, check_dominant, eps2, varpi
from .errors import CharacterError, InputError, VerificationError
from .polyring import CharElem
from . import affinization, decomp, spbranch, weyl


# ---------------------------------------------------------------------------
# parsing helpers


def _parse_weight(raw, n):
    try:
        coords = tuple(int(v) for v in raw.split(","))
    except ValueError:
        raise InputError(f"weight {raw!r} is not a comma-separated integer list")
    if len(coords) != n:
        raise InputError(f"weight {raw!r} has {len(coords)} entries, expected {n}")
    return coords


def _parse_epsilon(raw):
    key = raw.strip()
    if key in ("+", "+1", "1"):
        return 1
    if key in ("-", "-1"):
        return -1
    raise InputError(f"epsilon must be + or -, got {raw!r}")


def _fraction_json(q):
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _weight_json(x):
    return {"finite": list(x.finite), "level": x.level, "delta": _fraction_json(x.delta)}


def _height2(n, mu):
    return sum(eps2(n, mu))


def _sorted_mults(n, mults):
    keys = sorted(mults, key=lambda mu: (-_height2(n, mu), tuple(-v for v in mu)))
    return [(mu, mults[mu]) for mu in keys]


def _meta(t0):
    timing = os.environ.get("MINAFF_TIMING") == "1"
    return {
        "tool_version": __version__,
        "elapsed_ms": int((time.monotonic() - t0) * 1000) if timing else 0,
    }


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# reports


def _table_report(args, n, s, lam, table, t0):
    entries = [
        {"mu": list(mu), "m": m, "dim": decomp.dim_irr(n, mu)}
        for mu, m in _sorted_mults(n, table.mults)
    ]
    if getattr(args, "mu", None) is not None:
        mu = _parse_weight(args.mu, n)
        check_dominant(n, mu)
        entries = [e for e in entries if tuple(e["mu"]) == mu]
        if not entries:
            entries = [{"mu": list(mu), "m": 0, "dim": decomp.dim_irr(n, mu)}]
    report = {
        "n": n,
        "s": s,
        "lambda": list(lam),
        "dimension": table.dimension,
        "multiplicities": entries,
        "meta": _meta(t0),
    }
    if args.format == "json":
        return _json_text(report)
    if args.format == "csv":
        rows = [(" ".join(map(str, e["mu"])), e["m"], e["dim"]) for e in entries]
        return _csv_text(("mu", "m", "dim"), rows)
    lines = [
        f"n = {n}  s = {s}  lambda = {','.join(map(str, lam))}",
        f"dimension = {table.dimension}",
        "  mu" + " " * (3 * n - 1) + "m      dim",
    ]
    for e in entries:
        mu = ",".join(map(str, e["mu"]))
        lines.append(f"  {mu:<{3 * n + 1}}{e['m']:<7}{e['dim']}")
    return "\n".join(lines) + "\n"


def _family_str(n, s):
    return {1: "1", n - 1: "n-1", n: "n"}[s]


def _cmd_char(args, t0):
    n = args.n
    lam = _parse_weight(args.lam, n)
    s = affinization.resolve_family(n, args.s)
    ch = affinization.character(n, lam, s)
    table = decomp.decompose(ch)
    return _table_report(args, n, s, lam, table, t0), 0


def _cmd_sam(args, t0):
    n = args.n
    lam = _parse_weight(args.lam, n)
    s = affinization.resolve_family(n, args.s if args.s is not None else 1)
    if s != 1:
        raise InputError("the symplectic pipeline covers the s = 1 family only")
    mults = spbranch.sam_table(n, lam)
    dimension = sum(m * decomp.dim_irr(n, mu) for mu, m in mults.items())
    table = decomp.DecompositionTable(n, dict(mults), dimension)
    return _table_report(args, n, 1, lam, table, t0), 0


def _cmd_xi(args, t0):
    n = args.n
    lam = _parse_weight(args.lam, n)
    s = affinization.resolve_family(n, args.s)
    xs = affinization.xi_sequence(n, lam, s)
    lams = None
    if s != n - 1:
        lams = affinization.lambda_sequence(n, lam, s).entries
    if args.format == "json":
        report = {
            "n": n,
            "s": s,
            "lambda": list(lam),
            "m": xs.m,
            "m_prime": xs.m_prime,
            "cut": xs.cut,
            "lambda_bar": xs.lambda_bar,
            "xi": [_weight_json(x) for x in xs.entries],
            "Lambda": [_weight_json(x) for x in lams] if lams else None,
            "meta": _meta(t0),
        }
        return _json_text(report), 0
    if args.format == "csv":
        rows = []
        for j, x in enumerate(xs.entries, 1):
            rows.append(("xi", j, " ".join(map(str, x.finite)), x.level, str(x.delta)))
        for j, x in enumerate(lams or (), 1):
            rows.append(("Lambda", j, " ".join(map(str, x.finite)), x.level, str(x.delta)))
        return _csv_text(("seq", "j", "finite", "level", "delta"), rows), 0
    lines = [f"n = {n}  s = {_family_str(n, s)}  lambda = {','.join(map(str, lam))}"]
    if xs.m is not None:
        lines.append(f"m = {xs.m}  m' = {xs.m_prime}")
    if xs.cut is not None:
        lines.append(f"cut = {xs.cut}  lambda_bar = {xs.lambda_bar}")
    for j, x in enumerate(xs.entries, 1):
        lines.append(f"xi_{j}     = {','.join(map(str, x.finite))}  level {x.level}  delta {x.delta}")
    for j, x in enumerate(lams or (), 1):
        lines.append(f"Lambda_{j} = {','.join(map(str, x.finite))}  level {x.level}  delta {x.delta}")
    return "\n".join(lines) + "\n", 0


def _cmd_drinfeld(args, t0):
    n = args.n
    lam = _parse_weight(args.lam, n)
    s = affinization.resolve_family(n, args.s)
    eps = _parse_epsilon(args.epsilon)
    data = affinization.drinfeld(n, lam, s, eps)
    if args.format == "json":
        report = {
            "n": n,
            "s": s,
            "epsilon": eps,
            "lambda": list(lam),
            "factors": [{"i": i, "m": m, "c": c} for i, m, c in data.factors],
            "meta": _meta(t0),
        }
        return _json_text(report), 0
    if args.format == "csv":
        return _csv_text(("i", "m", "c"), list(data.factors)), 0
    lines = [f"n = {n}  s = {_family_str(n, s)}  epsilon = {'+' if eps > 0 else '-'}"]
    for i, m, c in data.factors:
        lines.append(f"node {i}: degree {m}, offset q^{c}")
    if not data.factors:
        lines.append("trivial (zero weight)")
    return "\n".join(lines) + "\n", 0


# ---------------------------------------------------------------------------
# verification suites


def _suite_demazure(n, checks):
    rng = random.Random(20240 + n)

    def rand_elem(maxterms=25):
        terms = {}
        for _ in range(rng.randint(1, maxterms)):
            k = AffineWeight(
                tuple(rng.randint(-2, 2) for _ in range(n)),
                rng.randint(0, 2),
                rng.randint(-1, 1),
            )
            terms[k] = rng.choice([-3, -2, -1, 1, 2, 3])
        return CharElem(n, terms)

    ok = True
    for _ in range(25):
        f = rand_elem()
        for i in range(n + 1):
            D = f.demazure(i)
            am = CharElem.monomial(-weyl._alpha_wt(n, i))
            if D - am * D != f - am * f.relabel_weyl(weyl.simple(n, i)):
                ok = False
            if D.demazure(i) != D:
                ok = False
    checks.append(("demazure.defining_identity_and_idempotency", ok))

    ok = True
    tau = weyl.compose(weyl.tau_01(n), weyl.tau_fork(n)).tau
    for _ in range(10):
        f = rand_elem(10)
        if f.twist(tau).twist(tau) != f:
            ok = False
    checks.append(("demazure.twist_involution", ok))

    ok = True
    for _ in range(10):
        raw = weyl.from_word(n, tuple(rng.randint(0, n) for _ in range(8)))
        r = weyl.reduce_word(raw)
        if not weyl.same_element(raw, r) or not weyl.is_reduced(r):
            ok = False
        f = rand_elem(10)
        if f.demazure_word(r) != f.demazure_word(weyl.reduce_word(r)):
            ok = False
    checks.append(("demazure.reduced_word_application", ok))


def _suite_weyl(n, checks):
    sig = weyl.sigma_word(n)
    w0 = weyl.longest_word(n)
    lam0 = AffineWeight((0,) * n, 1, 0)

    def modqd(x):
        return (x.finite, x.level)

    table = {}
    for j in range(n + 1):
        fin = varpi(n, j) if j else (0,) * n
        table[j] = modqd(weyl.act(sig, AffineWeight(fin, 1, 0)))
    expect = {}
    for j in range(n + 1):
        if j <= n - 3:
            expect[j] = (varpi(n, j + 1), 1)
        elif j == n - 2:
            expect[j] = (tuple(a + b for a, b in zip(varpi(n, n - 1), varpi(n, n))), 1)
        elif j == n - 1:
            expect[j] = (tuple(a + b for a, b in zip(varpi(n, n - 1), varpi(n, 1))), 1)
        else:
            expect[j] = (varpi(n, n - 1), 1)
    ok = table == expect
    ok = ok and modqd(weyl.act(sig, AffineWeight(varpi(n, n - 1)))) == (varpi(n, n - 1), 0)
    checks.append(("weyl.rotation_table", ok))

    comp = w0
    for _ in range(n - 1):
        comp = weyl.compose(comp, sig)
    ok = (
        weyl.length(sig) == n - 1
        and weyl.length(w0) == n * (n - 1)
        and weyl.length(comp) == n * (n - 1) + (n - 1) ** 2
    )
    checks.append(("weyl.length_additivity", ok))

    from .cartan import bilinear

    rng = random.Random(777 + n)
    ok = True
    for _ in range(10):
        w = weyl.from_word(n, tuple(rng.randint(0, n) for _ in range(8)))
        x = AffineWeight(tuple(rng.randint(-2, 2) for _ in range(n)), rng.randint(-1, 1), rng.randint(-1, 1))
        y = AffineWeight(tuple(rng.randint(-2, 2) for _ in range(n)), rng.randint(-1, 1), rng.randint(-1, 1))
        if bilinear(weyl.act(w, x), weyl.act(w, y)) != bilinear(x, y):
            ok = False
    checks.append(("weyl.form_invariance", ok))


def _suite_pipeline(n, checks):
    from .decomp import dominant_weights_below
    from .cartan import fw_from_eps2

    if n == 4:
        lams = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (1, 1, 0, 0)]
    else:
        lams = [
            varpi(n, 1),
            varpi(n, 2),
            tuple(a + b for a, b in zip(varpi(n, n - 1), varpi(n, n))),
        ]
    for lam in lams:
        table = decomp.decompose(affinization.character(n, lam, 1))
        doms = [fw_from_eps2(n, d) for d in dominant_weights_below(n, lam)]
        ok = table.mults.get(lam, 0) == 1
        for mu in doms:
            if table.mults.get(mu, 0) != spbranch.sam_mult(n, lam, mu):
                ok = False
        checks.append(("pipeline.crown_" + "".join(map(str, lam)), ok))


def _cmd_verify(args, t0):
    n = args.n
    suites = [args.suite] if args.suite != "all" else ["demazure", "weyl", "pipeline"]
    checks = []
    for suite in suites:
        if suite == "demazure":
            _suite_demazure(n, checks)
        elif suite == "weyl":
            _suite_weyl(n, checks)
        elif suite == "pipeline":
            _suite_pipeline(n, checks)
    passed = sum(1 for _, ok in checks if ok)
    failed = len(checks) - passed
    if args.format == "json":
        report = {
            "n": n,
            "suite": args.suite,
            "checks": [{"name": name, "status": "pass" if ok else "FAIL"} for name, ok in checks],
            "passed": passed,
            "failed": failed,
            "meta": _meta(t0),
        }
        text = _json_text(report)
    elif args.format == "csv":
        text = _csv_text(
            ("check", "status"),
            [(name, "pass" if ok else "FAIL") for name, ok in checks],
        )
    else:
        lines = [f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in checks]
        lines.append(f"{passed} passed, {failed} failed")
        text = "\n".join(lines) + "\n"
    return text, (0 if failed == 0 else 3)


# ---------------------------------------------------------------------------
# driver


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="minaff",
        description="Exact characters and multiplicities of regular minimal "
        "affinizations in type D.",
    )
    parser.add_argument("--version", action="version", version=f"minaff {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_s=True):
        p.add_argument("--n", type=int, required=True, help="rank, at least 4")
        p.add_argument("--lambda", dest="lam", required=True, metavar="L",
                       help="dominant weight, comma-separated coordinates")
        if need_s:
            p.add_argument("--s", required=True, help="family label: 1, n-1, or n")
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    p = sub.add_parser("char", help="multiplicity table via the Demazure character")
    common(p)
    p.add_argument("--mu", help="restrict the report to one dominant weight")

    p = sub.add_parser("decomp", help="same table, filterable to a single weight")
    common(p)
    p.add_argument("--mu", help="restrict the report to one dominant weight")

    p = sub.add_parser("sam", help="multiplicity table via the symplectic pipeline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="L")
    p.add_argument("--s", default=None, help="must resolve to 1 if given")
    p.add_argument("--mu", help="restrict the report to one dominant weight")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    p = sub.add_parser("xi", help="tensor-factor weights and their rotated forms")
    common(p)

    p = sub.add_parser("drinfeld", help="classifying polynomial offsets")
    common(p)
    p.add_argument("--epsilon", default="+", help="sign: + or -")

    p = sub.add_parser("verify", help="run internal consistency suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=("demazure", "weyl", "pipeline", "all"), default="all")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    return parser


_DISPATCH = {
    "char": _cmd_char,
    "decomp": _cmd_char,
    "sam": _cmd_sam,
    "xi": _cmd_xi,
    "drinfeld": _cmd_drinfeld,
    "verify": _cmd_verify,
}


def run(argv):
    """Parse arguments, execute, print the report; returns the exit code."""
    t0 = time.monotonic()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        from .cartan import check_rank

        check_rank(args.n)
        import minaff.polyring as polyring

        polyring.thread_count()  # fail fast on a malformed override
        text, code = _DISPATCH[args.command](args, t0)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (CharacterError, VerificationError) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 3
    sys.stdout.write(text)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
