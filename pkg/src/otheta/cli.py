"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 property-check failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import algebra as alg
from .algebra import Element, GenPair, Phi, equals, mul, omega
from .classifier import classify, integer_root, lambda_exponent, spectrum_grid
from .expr import ParseError, format_element, format_word, parse_element
from .fixed_point import NotFixedError, build_U, decompose
from .graph import EMPTY, ThetaSpec, ThetaSpecError, Word, load_theta, words_up_to
from .kms import beta_scan, kms_check, kms_suite, omega_product_table, report_line, \
    tensor_split_failures, vanishing_failures
from .matrix_rep import level_basis, normalized_trace, rep
from .periodicity import DEFAULT_BOUND, find_period, mult_dependent

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    theta_source: str = "id"
    m: int | None = None
    n: int | None = None
    max_degree: int = 2
    bound: int = DEFAULT_BOUND
    tolerance: float = 1e-9
    seed: int = 0
    mode: str = "exact"

    def __post_init__(self):
        if self.max_degree < 0 or self.bound < 1:
            raise UsageError("--max-degree must be >= 0 and --bound >= 1")
        if self.tolerance <= 0:
            raise UsageError("--tolerance must be positive")

    def theta(self) -> ThetaSpec:
        return load_theta(self.theta_source, self.m, self.n)


def _out(lines):
    for line in lines:
        print(line)


# commands -------------------------------------------------------------------

def cmd_classify(cfg: RunConfig, args) -> int:
    if cfg.theta_source in ("id", "flip"):
        if cfg.m is None or cfg.n is None:
            raise UsageError("classify needs --m and --n")
        if cfg.m < 2 or cfg.n < 2:
            raise ValueError(f"m > 1 and n > 1 required, got m={cfg.m}, n={cfg.n}")
        m, n = cfg.m, cfg.n
    else:
        th = cfg.theta()
        m, n = th.m, th.n
    _out([f"m={m}", f"n={n}"] + classify(m, n).lines())
    return EXIT_OK


def cmd_check_period(cfg: RunConfig, args) -> int:
    th = cfg.theta()
    report = find_period(th, cfg.bound)
    lines = [f"theta={th.name}", f"m={th.m}", f"n={th.n}", f"verdict={report.verdict}"]
    if report.gamma:
        for u, v in report.gamma.items():
            lines.append(f"gamma {format_word(u)} -> {format_word(v)}")
    lines.append("interpretation=F_theta^+ aperiodic iff O_theta simple")
    _out(lines)
    return EXIT_OK


def cmd_kms(cfg: RunConfig, args) -> int:
    th = cfg.theta()
    ok = True
    lines = []
    table = omega_product_table(th, cfg.max_degree)
    res = kms_suite(th, cfg.max_degree, table)
    name = f"kms_suite[{th.name},m={th.m},n={th.n},deg<=({cfg.max_degree},{cfg.max_degree}),pairs={res.pairs},support={res.support}]"
    lines.append(report_line(res.ok, name, res.max_residual))
    ok &= res.ok

    # symbolic cross-check of the table on seeded random pairs
    rng = random.Random(cfg.seed)
    words = words_up_to((cfg.max_degree, cfg.max_degree), th)
    support = sorted(table, key=lambda k: (k[0].u, k[0].v, k[1].u, k[1].v))
    worst = Fraction(0)
    count = max(1, args.samples)
    for _ in range(count):
        if support and rng.random() < 0.5:
            A, B = rng.choice(support)
        else:
            A = GenPair(rng.choice(words), rng.choice(words))
            B = GenPair(rng.choice(words), rng.choice(words))
        XA, XB = alg.gen(th, A.u, A.v), alg.gen(th, B.u, B.v)
        r = kms_check(XA, XB)
        mismatch = omega(mul(XA, XB)) - table.get((A, B), 0)
        worst = max(worst, abs(r.re), abs(mismatch.re))
    lines.append(report_line(worst == 0, f"kms_symbolic_sample[n={count},seed={cfg.seed}]", worst))
    ok &= worst == 0

    e1 = alg.gen(th, Word((1,), ()), EMPTY)
    for item in beta_scan(e1, alg.adjoint(e1), [-3, -2, -1, 0, 1]):
        good = (item.residual == 0) == (item.beta == -1)
        ok &= good
        lines.append(report_line(good, f"beta_scan[A=S(e1;),B=S(;e1),beta={item.beta}]", item.residual))
    if th.is_identity():
        bad = vanishing_failures(th.m, th.n)
        lines.append(report_line(not bad, "id_vanishing", len(bad)))
        bad2 = tensor_split_failures(th.m, th.n, cfg.max_degree)
        lines.append(report_line(not bad2, f"tensor_split[deg<={cfg.max_degree}]", len(bad2)))
        ok &= not bad and not bad2
    _out(lines)
    return EXIT_OK if ok else EXIT_CHECK


def _parse(cfg: RunConfig, th: ThetaSpec, text: str) -> Element:
    X = parse_element(text, th)
    return X.to_float() if cfg.mode == "float" else X


def cmd_eval(cfg: RunConfig, args) -> int:
    th = cfg.theta()
    X = _parse(cfg, th, args.expr)
    gauge_inv = all(k.u.degree == k.v.degree for k in X.terms)
    lines = [
        f"element={format_element(X)}",
        f"terms={len(X)}",
        f"omega={omega(X)}",
        f"omega_norm2={omega(mul(alg.adjoint(X), X))}",
        f"Phi={format_element(Phi(X))}",
        f"gauge_invariant={'yes' if gauge_inv else 'no'}",
    ]
    _out(lines)
    return EXIT_OK


def cmd_decompose(cfg: RunConfig, args) -> int:
    th = cfg.theta()
    ab = mult_dependent(th.m, th.n)
    if ab is None:
        raise ValueError("m, n multiplicatively independent: the fixed-point algebra is F, nothing to decompose")
    X = _parse(cfg, th, args.expr)
    U = build_U(*ab, th)
    dec = decompose(X, U)
    body = ", ".join(f"{k}: {format_element(A)}" for k, A in dec.parts.items())
    ok = equals(dec.reassemble(U), X, cfg.tolerance) and all(
        k.u.degree == k.v.degree for A in dec.parts.values() for k in A.terms)
    _out([f"a={ab[0]}", f"b={ab[1]}", f"parts={{{body}}}", f"reassembly={'OK' if ok else 'FAILED'}"])
    return EXIT_OK if ok else EXIT_CHECK


def cmd_spectrum(cfg: RunConfig, args) -> int:
    if cfg.m is None or cfg.n is None:
        th = cfg.theta()
        m, n = th.m, th.n
    else:
        m, n = cfg.m, cfg.n
    if m < 2 or n < 2:
        raise ValueError("m > 1 and n > 1 required")
    values = spectrum_grid(m, n, args.K)
    lines = [f"K={args.K}", f"count={len(values)}", "values=" + " ".join(str(v) for v in values)]
    r = integer_root(m, n)
    ok = True
    if r is not None:
        exps = [lambda_exponent(v, r) for v in values]
        ok = all(e is not None for e in exps)
        lines.append(f"lambda_inverse={r}")
        lines.append(report_line(ok, "powers_of_lambda_inverse", sum(e is None for e in exps)))
    _out(lines)
    return EXIT_OK if ok else EXIT_CHECK


def cmd_rep_check(cfg: RunConfig, args) -> int:
    th = cfg.theta()
    k = args.k
    if args.expr:
        X = parse_element(args.expr, th)
        M = rep(X, k)
        if args.dump:
            sys.stdout.write(M.dump())
        _out([f"dim={M.dim}", f"trace={M.trace()}", f"tau={alg.tau(X)}"])
        return EXIT_OK
    basis = level_basis(th, k)
    gens = [alg.gen(th, u, v) for u in basis.words for v in basis.words]
    mats = [rep(g, k) for g in gens]
    mul_bad = 0
    for X, MX in zip(gens, mats):
        for Y, MY in zip(gens, mats):
            if rep(mul(X, Y), k) != MX @ MY:
                mul_bad += 1
    tr_bad = sum(normalized_trace(M) != alg.tau(g) for g, M in zip(gens, mats))
    lines = [
        report_line(mul_bad == 0, f"rep_multiplicative[{th.name},m={th.m},n={th.n},k={k},products={len(gens) ** 2}]", mul_bad),
        report_line(tr_bad == 0, f"trace_equals_tau[k={k}]", tr_bad),
    ]
    _out(lines)
    return EXIT_OK if mul_bad == 0 and tr_bad == 0 else EXIT_CHECK


# argument parsing -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theta", default="id", help="builtin 'id' or 'flip', or a theta-spec file")
    common.add_argument("--m", type=int, help="number of blue generators")
    common.add_argument("--n", type=int, help="number of red generators")
    common.add_argument("--max-degree", type=int, default=2)
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="period search bound")
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")

    p = _Parser(prog="otheta", description="Symbolic workbench for rank-2 graph algebras O_theta.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("classify", parents=[common], help="factor type of the omega GNS algebra")
    sub.add_parser("check-period", parents=[common], help="periodicity search")
    k = sub.add_parser("kms", parents=[common], help="KMS suite, beta scan, theta=id identities")
    k.add_argument("--samples", type=int, default=200, help="random pairs re-checked symbolically")
    d = sub.add_parser("decompose", parents=[common], help="X = sum_k A_k U^k")
    d.add_argument("expr")
    sp = sub.add_parser("spectrum", parents=[common], help="modular spectrum grid")
    sp.add_argument("--K", type=int, default=1)
    r = sub.add_parser("rep-check", parents=[common], help="matrix oracle checks on F_k")
    r.add_argument("--k", type=int, default=1)
    r.add_argument("--expr", help="element of F to represent instead of running the checks")
    r.add_argument("--dump", action="store_true", help="print the matrix (row-major, p/q)")
    e = sub.add_parser("eval", parents=[common], help="evaluate an element")
    e.add_argument("expr")
    return p


COMMANDS = {
    "classify": cmd_classify,
    "check-period": cmd_check_period,
    "kms": cmd_kms,
    "decompose": cmd_decompose,
    "spectrum": cmd_spectrum,
    "rep-check": cmd_rep_check,
    "eval": cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.theta, args.m, args.n, args.max_degree, args.bound,
                        args.tolerance, args.seed, args.mode)
        return COMMANDS[args.command](cfg, args)
    except (UsageError, ThetaSpecError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, NotFixedError, IndexError, ArithmeticError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
