"""Command-line surface.

Exit codes: 0 on success / all checks passing, 1 on a failed check, 2 on
usage or expression errors. With --format records the output is
line-oriented `key<TAB>value` pairs; reports are byte-identical for
identical (theta, seed, level, samples) configurations.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import endo as en
from . import modular as md
from .algebra import Element
from .errors import TwoGraphError
from .exprs import parse_expression
from .kernel import BACKEND
from .oracle import GradedActionModel
from .semigroup import (
    Degree,
    Permutation2D,
    make_theta,
    normal_form,
    parse_theta_text,
    parse_word_letters,
    enumerate_words,
)
from .suites import SUITE_NAMES, run_suite

MAX_LEVEL = (3, 3)


@dataclass
class SessionConfig:
    theta: Permutation2D
    theta_label: str
    seed: int
    level: Degree
    samples: int
    float_tol: float
    fmt: str


class _Output:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def kv(self, key: str, value) -> None:
        if self.fmt == "records":
            print(f"{key}\t{value}")
        else:
            print(f"{key}: {value}")

    def line(self, text: str) -> None:
        if self.fmt == "text":
            print(text)


def _parse_level(text: str) -> Degree:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("level must look like `2,2`")
    return (a, b)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twograph",
        description="Exact computations in the generator algebra of a "
                    "single-vertex 2-graph.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=2, help="number of e-generators")
    common.add_argument("--n", type=int, default=2, help="number of f-generators")
    common.add_argument("--theta", default="identity",
                        help="builtin name (identity, flip) or path to a table file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--level", type=_parse_level, default=(2, 2),
                        help="degree box for random elements, e.g. 2,2")
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--float-tol", type=float, default=1e-9)
    common.add_argument("--format", choices=("text", "records"), default="text")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("nf", parents=[common]).add_argument("word")
    p_mul = sub.add_parser("mul", parents=[common])
    p_mul.add_argument("left")
    p_mul.add_argument("right")
    sub.add_parser("omega", parents=[common]).add_argument("expr")
    p_inner = sub.add_parser("inner", parents=[common])
    p_inner.add_argument("left")
    p_inner.add_argument("right")
    p_tw = sub.add_parser("twisted", parents=[common])
    p_tw.add_argument("u")
    p_tw.add_argument("v")
    p_endo = sub.add_parser("endo", parents=[common])
    p_endo.add_argument("verb", choices=("apply",))
    p_endo.add_argument("pairspec",
                        help="ex312 | ex313 | ex311 | ex39(U) | ex310(U,V) | "
                             "canonical(p,q) | inner(W) | pair(U,V)")
    p_endo.add_argument("expr")
    p_kms = sub.add_parser("kms", parents=[common])
    p_kms.add_argument("left")
    p_kms.add_argument("right")
    sub.add_parser("spectrum", parents=[common]).add_argument("window", type=int)
    sub.add_parser("gram", parents=[common]).add_argument("level_k", type=int)
    p_oracle = sub.add_parser("oracle", parents=[common])
    p_oracle.add_argument("left")
    p_oracle.add_argument("right")
    sub.add_parser("check", parents=[common]).add_argument(
        "suite", choices=SUITE_NAMES + ("all",)
    )
    sub.add_parser("backend", parents=[common])
    return parser


def _load_config(args) -> SessionConfig:
    if args.theta in ("identity", "flip"):
        theta = make_theta(args.m, args.n, args.theta)
        label = args.theta
    else:
        # a table file fixes m and n itself; the flags are ignored
        theta = parse_theta_text(Path(args.theta).read_text())
        label = args.theta
    if not (args.level[0] >= 0 and args.level[1] >= 0):
        raise TwoGraphError("level components must be nonnegative")
    if args.level[0] > MAX_LEVEL[0] or args.level[1] > MAX_LEVEL[1]:
        raise TwoGraphError(f"level capped at {MAX_LEVEL} for cost control")
    if args.samples < 1:
        raise TwoGraphError("samples must be >= 1")
    return SessionConfig(
        theta=theta,
        theta_label=label,
        seed=args.seed,
        level=args.level,
        samples=args.samples,
        float_tol=args.float_tol,
        fmt=args.format,
    )


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for idx, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:idx])
            start = idx + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_pair_spec(spec: str, theta: Permutation2D) -> en.UnitaryPair:
    spec = spec.strip()
    if spec in ("ex312", "ex313", "ex311"):
        return en.gallery(theta, spec)
    for name in ("ex39", "ex310", "canonical", "inner", "pair"):
        if spec.startswith(name + "(") and spec.endswith(")"):
            inner_text = spec[len(name) + 1:-1]
            args = _split_top_level(inner_text)
            if name == "ex39":
                return en.gallery(theta, "ex39", u=parse_expression(args[0], theta))
            if name == "ex310":
                return en.gallery(theta, "ex310",
                                  u=parse_expression(args[0], theta),
                                  v=parse_expression(args[1], theta))
            if name == "canonical":
                return en.canonical_pair(theta, int(args[0]), int(args[1]))
            if name == "inner":
                return en.inner_pair(parse_expression(args[0], theta))
            if name == "pair":
                return en.UnitaryPair(parse_expression(args[0], theta),
                                      parse_expression(args[1], theta))
    raise TwoGraphError(f"unknown pair spec {spec!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args)
    except (TwoGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = _Output(cfg.fmt)
    try:
        return _dispatch(args, cfg, out)
    except TwoGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, cfg: SessionConfig, out: _Output) -> int:
    theta = cfg.theta
    cmd = args.command

    if cmd == "backend":
        out.kv("kernel", BACKEND)
        return 0

    if cmd == "nf":
        word = normal_form(theta, parse_word_letters(args.word))
        out.kv("result", word)
        return 0

    if cmd == "mul":
        product = parse_expression(args.left, theta) * parse_expression(args.right, theta)
        out.kv("result", product)
        return 0

    if cmd == "omega":
        out.kv("result", md.omega(parse_expression(args.expr, theta)))
        return 0

    if cmd == "inner":
        value = md.inner(parse_expression(args.left, theta),
                         parse_expression(args.right, theta))
        out.kv("result", value)
        return 0

    if cmd == "twisted":
        ok, residual = en.twisted_check(parse_expression(args.u, theta),
                                        parse_expression(args.v, theta))
        out.kv("twisted", "true" if ok else "false")
        if not ok and residual is not None:
            out.kv("residual", residual)
        return 0 if ok else 1

    if cmd == "endo":
        pair = parse_pair_spec(args.pairspec, theta)
        lam = en.Endomorphism(pair)
        out.kv("result", lam.apply(parse_expression(args.expr, theta)))
        return 0

    if cmd == "kms":
        ok, lhs, rhs = md.kms_check(parse_expression(args.left, theta),
                                    parse_expression(args.right, theta))
        out.kv("lhs", lhs)
        out.kv("rhs", rhs)
        out.kv("equal", "true" if ok else "false")
        return 0 if ok else 1

    if cmd == "spectrum":
        values = md.modular_spectrum_window(theta, args.window)
        out.kv("count", len(values))
        for value in values:
            out.kv("value", f"{value}\t{value.to_complex().real!r}")
        return 0

    if cmd == "gram":
        k = args.level_k
        words = enumerate_words(theta, (k, k))
        basis = [Element.gen(theta, u, v) for u in words for v in words]
        gram = md.gram_matrix(basis)
        out.kv("size", len(basis))
        for row in gram:
            out.kv("row", "\t".join(str(x) for x in row))
        for row in gram:
            out.kv("row-float", "\t".join(repr(x.to_complex().real) for x in row))
        return 0

    if cmd == "oracle":
        model = GradedActionModel(theta, window=max(cfg.level) + 4)
        equal = model.oracle_equal(parse_expression(args.left, theta),
                                   parse_expression(args.right, theta))
        out.kv("equal", "true" if equal else "false")
        return 0 if equal else 1

    if cmd == "check":
        reports = run_suite(args.suite, theta, cfg.seed, cfg.level,
                            cfg.samples, cfg.float_tol)
        out.kv("theta", cfg.theta_label)
        out.kv("m", theta.m)
        out.kv("n", theta.n)
        out.kv("seed", cfg.seed)
        out.kv("level", f"{cfg.level[0]},{cfg.level[1]}")
        out.kv("samples", cfg.samples)
        all_passed = True
        for report in reports:
            for case in report.cases:
                status = "PASS" if case.passed else "FAIL"
                out.kv(f"case.{report.name}.{case.case_id}", f"{status} {case.detail}")
                all_passed = all_passed and case.passed
        out.kv("result", "PASS" if all_passed else "FAIL")
        return 0 if all_passed else 1

    raise TwoGraphError(f"unknown command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
