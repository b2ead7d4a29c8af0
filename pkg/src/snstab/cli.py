"""Command-line front end: ``snstab {project,reconstruct,spectrum,isoperimetry,generate,verify}``."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from fractions import Fraction

from . import verify as verify_mod
from .config import FORMATS, RunConfig
from .coset_spectral import distance_to_u1, moments
from .families import (
    counterexample_family,
    dictatorship,
    family_B,
    family_C,
    isoperimetry_report,
    lex_initial_segment,
    sharpness_family,
)
from .perms import cap_override, check_cap, format_family, read_family, write_family
from .reconstruct import certify, closed_form_F, closed_form_G
from .report import compare, envelope, render
from .repr_spectra import GRAPH_KINDS, cayley_spectrum, second_largest_modulus_nontrivial

PREFIX = "snstab: error:"
GENERATORS = ("B", "C", "counterexample", "dictatorship", "lex", "sharpness")


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational P/Q: {text!r}") from None


def _partition_str(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def cmd_project(path: str, cfg: RunConfig) -> dict:
    A = read_family(path)
    check_cap(A.n, cfg.exhaustive_cap)
    if A.n < 3:
        raise CliError("project needs n >= 3")
    S = moments(A)
    results = {
        "n": A.n,
        "size": A.size,
        "c": S.c,
        "eps1": S.eps1,
        "distance_to_u1": distance_to_u1(A),
        "E_h2": S.m2,
        "E_h3": S.m3,
        "sum_b2": S.sumsq,
        "sum_b3": S.sumcube,
        "F_nc": closed_form_F(A.n, S.c),
        "G_nc": closed_form_G(A.n, S.c),
    }
    return envelope("project", cfg.public(), results, [])


def cmd_reconstruct(path: str, cfg: RunConfig) -> dict:
    A = read_family(path)
    check_cap(A.n, cfg.exhaustive_cap)
    rep = certify(A, cfg.c0, cfg.eps0)
    rec = rep.reconstruction
    results = {
        "n": rep.n,
        "c": rep.c,
        "eps1": rep.eps1,
        "hypothesis_ok": rep.hypothesis_ok,
        "note": rep.note,
    }
    if rec is not None:
        results.update({
            "round_c": rec.round_c,
            "m_half": rec.m_half,
            "cosets": [str(T) for T in rec.cosets],
            "symdiff": rec.symdiff,
            "bound_ok": rec.bound_ok,
        })
    return envelope("reconstruct", cfg.public(), results, list(rep.checks))


def cmd_spectrum(kind: str, n: int, cfg: RunConfig) -> dict:
    rep = cayley_spectrum(kind, n)
    results = {
        "graph_kind": kind,
        "n": n,
        "degree": rep.degree,
        "lambda_min": rep.lambda_min,
        "mu2": rep.mu2,
        "mu_M": rep.mu_M,
    }
    if n >= 3:
        value, ratio = second_largest_modulus_nontrivial(kind, n)
        results["lambda_K_modulus"] = value
        results["lambda_K_ratio"] = ratio
    results["rows"] = [
        {
            "partition": _partition_str(r.partition),
            "dimension": r.dimension,
            "eigenvalue": r.eigenvalue,
            "multiplicity": r.multiplicity,
            "laplacian": r.laplacian,
        }
        for r in rep.rows
    ]
    return envelope("spectrum", cfg.public(), results, [])


def cmd_isoperimetry(path: str, cfg: RunConfig) -> dict:
    A = read_family(path)
    check_cap(A.n, cfg.exhaustive_cap)
    if A.n < 3:
        raise CliError("isoperimetry needs n >= 3")
    rep = isoperimetry_report(A, cfg.c0, cfg.exhaustive_cap)
    results = {
        "n": rep.n,
        "family_size": rep.family_size,
        "boundary_edges": rep.boundary_edges,
        "dm_bound": rep.dm_bound,
        "delta": rep.delta,
        "c": rep.c,
        "theorem_path": rep.theorem_path,
        "cosets": [str(T) for T in rep.reconstruction.cosets] if rep.reconstruction else None,
        "a_minus_b": rep.a_minus_b,
        "rough_rhs": rep.rough_rhs,
        "note": rep.note,
    }
    checks = [compare("|dA| >= |A|(n!-|A|)/(n-1)!", rep.boundary_edges, rep.dm_bound, ">=")]
    if rep.rough_ok is not None:
        checks.append(compare("|A minus B| <= C0 (c delta (n-1)! + c^2 (n-2)!)", rep.a_minus_b, rep.rough_rhs, "<="))
    return envelope("isoperimetry", cfg.public(), results, checks)


def cmd_generate(which: str, n: int, c: int | None, k: int | None):
    if which == "B":
        return family_B(n)
    if which == "C":
        return family_C(n)
    if which == "counterexample":
        return counterexample_family(n)
    if which == "dictatorship":
        return dictatorship(n, 1 if c is None else c)
    if which == "lex":
        if k is None:
            raise CliError("lex needs --k")
        return lex_initial_segment(n, k)
    if which == "sharpness":
        return sharpness_family(n, 1 if c is None else c, 1 if k is None else k)
    raise CliError(f"unknown family {which!r}")


def cmd_verify(suite: str, cfg: RunConfig) -> tuple[dict, bool]:
    results = verify_mod.run(suite, cfg)
    doc = envelope(
        f"verify {suite}",
        cfg.public(),
        {r.name: {"passed": r.passed, **r.results} for r in results},
        [c for r in results for c in _prefixed(r)],
    )
    return doc, all(r.passed for r in results)


def _prefixed(r):
    return [replace(c, name=f"{r.name}: {c.name}") for c in r.checks]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--c0", type=_rational, default=None, metavar="P/Q")
    common.add_argument("--eps0", type=_rational, default=None, metavar="P/Q")
    common.add_argument("--cap", type=int, default=None, help="exhaustive cap on n (env SNSTAB_CAP)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")

    p = _Parser(prog="snstab", description="Exact Fourier and spectral analysis of families in S_n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("project", "reconstruct", "isoperimetry"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--family", required=True, metavar="PATH")
    s = sub.add_parser("spectrum", parents=[common])
    s.add_argument("--kind", choices=GRAPH_KINDS, required=True)
    s.add_argument("--n", type=int, required=True)
    s = sub.add_parser("generate", parents=[common])
    s.add_argument("which", choices=GENERATORS)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int, default=None)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--out", metavar="PATH", default=None)
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("suite", choices=verify_mod.SUITE_NAMES + ("all",))
    return p


def _config(args) -> RunConfig:
    if args.cap is not None and args.cap < 1:
        raise CliError("--cap must be positive")
    kw = {"output_format": args.format, "seed": args.seed,
          "jobs": args.jobs if args.jobs is not None else os.cpu_count()}
    if args.cap is not None:
        kw["exhaustive_cap"] = args.cap
    if args.c0 is not None:
        kw["c0"] = args.c0
    if args.eps0 is not None:
        kw["eps0"] = args.eps0
    if getattr(args, "n", None) is not None:
        kw["n"] = args.n
    try:
        return RunConfig(**kw)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        with cap_override(args.cap):
            return _dispatch(args, cfg)
    except CliError as exc:
        print(f"{PREFIX} {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        msg = " ".join(str(exc).split())
        print(f"{PREFIX} {type(exc).__name__}: {msg}", file=sys.stderr)
        return 1


def _dispatch(args, cfg: RunConfig) -> int:
    ok = True
    if args.command == "project":
        doc = cmd_project(args.family, cfg)
    elif args.command == "reconstruct":
        doc = cmd_reconstruct(args.family, cfg)
    elif args.command == "isoperimetry":
        doc = cmd_isoperimetry(args.family, cfg)
    elif args.command == "spectrum":
        doc = cmd_spectrum(args.kind, args.n, cfg)
    elif args.command == "generate":
        F = cmd_generate(args.which, args.n, args.c, args.k)
        if args.out:
            write_family(F, args.out, comment=args.which)
        else:
            sys.stdout.write(format_family(F, args.which))
        return 0
    else:
        doc, ok = cmd_verify(args.suite, cfg)
    sys.stdout.write(render(doc, cfg.output_format))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
