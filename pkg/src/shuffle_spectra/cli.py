"""Command-line front end: spectra, bounds, profiles, exact verification, CSV."""

import argparse
import math
import sys
from fractions import Fraction

import numpy as np

from . import exact_chain, profiles, spectra
from .partitions import corners, enumerate_partitions, exact_dim, transpose

SEP = ";"


def _fmt(x):
    if isinstance(x, Fraction):
        x = float(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _render(header, rows, fmt):
    if fmt == "csv":
        lines = [SEP.join(header)]
        lines += [SEP.join(_fmt(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    # pretty: fixed-width columns
    cells = [[_fmt(v) for v in row] for row in rows]
    widths = [
        max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
        for i, h in enumerate(header)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _cmd_spectrum(args):
    rows = [
        (",".join(str(p) for p in lam), eig, mult, args.chain)
        for lam, eig, mult in spectra.spectrum_rows(args.chain, args.n)
    ]
    return _render(["partition", "eigenvalue", "multiplicity", "chain"], rows, args.format)


def _cmd_bound(args):
    rep = profiles.comparison_bound(args.n, args.c, args.truncation)
    rows = [(rep.n, rep.c, rep.t, rep.t_star, rep.total, *rep.parts)]
    header = ["n", "c", "t", "tstar", "total", "term1", "term2", "term3", "term4"]
    return _render(header, rows, args.format)


def _cmd_decompose(args):
    terms = profiles.bound_decomposition(args.n, args.c, args.truncation)
    rows = [(args.n, args.c, args.truncation, *terms)]
    header = ["n", "c", "M", "term1", "term2", "term3", "term4"]
    return _render(header, rows, args.format)


def _cmd_profile(args):
    points = profiles.profile_curve(args.c_min, args.c_max, args.step)
    return _render(["c", "phi"], [(p.c, p.value) for p in points], args.format)


def _cmd_exact_tv(args):
    matrix = exact_chain.build_matrix(args.chain, args.n)
    a = matrix.mat.astype(np.float64).multiply(1.0 / matrix.denom).tocsr()
    d = np.zeros(matrix.mat.shape[0])
    d[0] = 1.0
    rows = []
    for t in range(args.t_max + 1):
        rows.append((args.n, args.chain, t, exact_chain.tv_to_uniform(d)))
        d = a.T @ d
    return _render(["n", "chain", "t", "tv"], rows, args.format)


def _cmd_compare(args):
    rep = profiles.comparison_bound(args.n, args.c)
    p = exact_chain.build_matrix("star", args.n)
    q = exact_chain.build_matrix("rt", args.n)
    tv_star = exact_chain.tv_to_uniform(exact_chain.evolve(p, 0, rep.t_star))
    tv_rt = exact_chain.tv_to_uniform(exact_chain.evolve(q, 0, rep.t))
    diff = abs(tv_star - tv_rt)
    rows = [(args.n, args.c, rep.t, rep.t_star, tv_star, tv_rt, diff, rep.total)]
    header = ["n", "c", "t", "tstar", "tv_star", "tv_rt", "diff", "bound"]
    return _render(header, rows, args.format)


def _verify_checks(n):
    """Identity suite at deck size n. Yields (name, "pass"/"fail"/"skip")."""
    lams = enumerate_partitions(n)
    dims = {lam: exact_dim(lam) for lam in lams}

    def status(ok):
        return "pass" if ok else "fail"

    yield "dimension-squares-sum", status(
        sum(d * d for d in dims.values()) == math.factorial(n)
    )
    ok = all(
        dims[lam] == sum(exact_dim(c.reduced) for c in corners(lam)) for lam in lams
    )
    yield "branching-rule", status(ok)
    ok = True
    for lam in lams:
        tr = transpose(lam)
        for c in corners(lam):
            if exact_dim(c.reduced) != exact_dim(
                next(cc for cc in corners(tr) if cc.row == lam[c.row - 1]).reduced
            ):
                ok = False
    yield "transpose-duality", status(ok)
    ok = all(
        dims[lam] ** 2 <= math.comb(n, n - lam[0]) ** 2 * math.factorial(n - lam[0])
        for lam in lams
    )
    yield "dimension-bound", status(ok)
    ok = True
    for lam in lams:
        j = n - lam[0]
        for c in corners(lam):
            if c.row > 1:
                if n * exact_dim(c.reduced) > 4**j * dims[lam]:
                    ok = False
                if not -j <= lam[c.row - 1] - c.row + 1 <= n - j:
                    ok = False
    yield "corner-bounds", status(ok)
    for chain in spectra.CHAINS:
        yield f"completeness-{chain}", status(
            spectra.total_multiplicity(chain, n) == math.factorial(n)
        )
    if n <= spectra.EXACT_TRACE_CAP:
        for chain in spectra.CHAINS:
            yield f"trace-{chain}", status(
                spectra.spectrum_trace(chain, n) == Fraction(math.factorial(n - 1))
            )
    else:
        yield "trace-rt", "skip"
        yield "trace-star", "skip"
    ok = True
    for lam in lams:
        if spectra.rt_r(transpose(lam)) != -spectra.rt_r(lam):
            ok = False
        tr = transpose(lam)
        for c in corners(lam):
            r_bar = Fraction(lam[c.row - 1] - c.row, n - 1)
            r_bar_t = Fraction(tr[lam[c.row - 1] - 1] - lam[c.row - 1], n - 1)
            if r_bar_t != -r_bar:
                ok = False
    yield "transpose-antisymmetry", status(ok)
    if n <= exact_chain.MAX_EXACT_PRODUCT_N:
        yield "commutation", status(exact_chain.commutation_check(n))
    else:
        yield "commutation", "skip"
    if n <= 5:
        ok = True
        for chain in spectra.CHAINS:
            numeric = exact_chain.numeric_eig_multiset(exact_chain.build_matrix(chain, n))
            formula = np.sort(
                np.repeat(
                    [float(e) for lam, e, m in spectra.spectrum_rows(chain, n)],
                    [m for lam, e, m in spectra.spectrum_rows(chain, n)],
                )
            )
            if numeric.size != formula.size or np.abs(numeric - formula).max() > 1e-8:
                ok = False
        yield "spectrum-vs-numeric", status(ok)
    else:
        yield "spectrum-vs-numeric", "skip"
    if n <= exact_chain.MAX_DENSE_EIG_N:
        ok = True
        p = exact_chain.build_matrix("star", n)
        q = exact_chain.build_matrix("rt", n)
        dp = [exact_chain.evolve(p, 0, t) for t in range(21)]
        dq = [exact_chain.evolve(q, 0, t) for t in range(21)]
        for t in range(21):
            for t_star in range(21):
                lhs = 2.0 * exact_chain.tv_between(dq[t], dp[t_star])
                if lhs > exact_chain.spectral_rhs(n, t, t_star) + 1e-10:
                    ok = False
        yield "comparison-inequality", status(ok)
    else:
        yield "comparison-inequality", "skip"


def _cmd_verify(args):
    rows = list(_verify_checks(args.n))
    text = _render(["check", "status"], rows, args.format)
    if any(st == "fail" for _, st in rows):
        raise _VerifyFailure(text)
    return text


class _VerifyFailure(Exception):
    def __init__(self, text):
        super().__init__("verification failed")
        self.text = text


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shuffle-spectra",
        description="Spectra, limit profiles and comparison bounds for the "
        "star-transpositions and random-transpositions shuffles.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--format", choices=["csv", "pretty"], default="csv")

    p = sub.add_parser("spectrum", help="CSV eigenvalue spectrum of one chain")
    p.add_argument("--chain", choices=["rt", "star"], required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("bound", help="comparison bound report at cutoff times")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--M", dest="truncation", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("decompose", help="four-part error decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--M", dest="truncation", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("profile", help="Poisson limit-profile curve")
    p.add_argument("--c-min", type=float, required=True)
    p.add_argument("--c-max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("exact-tv", help="exact TV-to-uniform curve at small n")
    p.add_argument("--chain", choices=["rt", "star"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_exact_tv)

    p = sub.add_parser("compare", help="exact TV difference against the bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="run the identity suite at one deck size")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text = args.func(args)
    except _VerifyFailure as exc:
        _emit(exc.text, args.out)
        return 1
    except ValueError as exc:  # includes SizeLimitError guard violations
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
