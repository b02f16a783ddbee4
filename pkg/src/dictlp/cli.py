"""Command-line surface: ``dictlp COMMAND``.

Commands: ``solve`` (two-phase simplex with exact certificates), ``trace``
(dictionary sequence, optionally with the synchronized dual view), ``dual``
(emit the dual instance), ``dict`` (dictionary for a given basis),
``verify`` (the primal-dual bijection over all bases), and ``random``
(seeded instance generator). Every number is printed in canonical rational
syntax; exit codes are 0 optimal/ok, 2 unbounded, 3 infeasible, 4 verify
failure, 5 enumeration budget refusal, 1 usage or parse errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from dictlp.dictionary import (
    Dictionary,
    NotABasisError,
    PivotError,
    dictionary_from_basis,
    initial_dictionary,
    negative_transpose,
    pivot,
)
from dictlp.duality import BasisCountError, enumerate_bases, verify_bijection
from dictlp.exact import QMatrix, QVector
from dictlp.model import ParseError, StandardLP, augment, dual_lp, parse_lp, serialize_lp
from dictlp.simplex import Infeasible, Optimal, PivotRule, SolveTrace, Unbounded, solve


class UsageError(ValueError):
    pass


def format_dictionary(d: Dictionary) -> str:
    """Render a dictionary in the classic display style.

    One line per basic row (``x4 = 18 - 4x1 - 2x2 + 2x3``), then the
    objective line, labeled ``z`` on the primal side and ``-w`` on the dual.
    Magnitude-1 coefficients drop the ``1``; zero coefficients are skipped;
    the objective constant is skipped when zero unless the line would be
    empty.
    """
    var = "x" if d.side == "primal" else "y"
    lines = []
    for r, v in enumerate(d.basis):
        terms = [(-d.Q.entry(r, j), f"{var}{w}") for j, w in enumerate(d.nonbasis)]
        lines.append(f"{var}{v} = " + _affine(d.p[r], terms, always_constant=True))
    label = "z" if d.side == "primal" else "-w"
    terms = [(d.q[j], f"{var}{w}") for j, w in enumerate(d.nonbasis)]
    lines.append(f"{label} = " + _affine(d.z_star, terms, always_constant=False))
    return "\n".join(lines)


def _affine(constant: Fraction, terms: list[tuple[Fraction, str]], always_constant: bool) -> str:
    nonzero = [(coef, name) for coef, name in terms if coef != 0]
    parts: list[str] = []
    if always_constant or constant != 0 or not nonzero:
        parts.append(str(constant))
    for coef, name in nonzero:
        mag = abs(coef)
        body = name if mag == 1 else f"{mag}{name}"
        if not parts:
            parts.append(f"-{body}" if coef < 0 else body)
        else:
            parts.append(f"- {body}" if coef < 0 else f"+ {body}")
    return " ".join(parts)


def random_lp(m: int, n: int, seed: int, bound: int = 10) -> StandardLP:
    """Deterministic instance for a seed: integer entries uniform in [-bound, bound].

    Draws from ``random.Random(seed)`` (Mersenne Twister) in file order: the
    n objective entries first, then each constraint row followed by its
    right-hand side. Same seed, same instance, byte for byte.
    """
    if m < 1 or n < 1:
        raise UsageError("m and n must be at least 1")
    if bound < 1:
        raise UsageError("bound must be at least 1")
    rng = random.Random(seed)
    c = [rng.randint(-bound, bound) for _ in range(n)]
    rows = []
    b = []
    for _ in range(m):
        rows.append([rng.randint(-bound, bound) for _ in range(n)])
        b.append(rng.randint(-bound, bound))
    return StandardLP(A0=QMatrix(rows), b=QVector(b), c=QVector(c))


def _vec_text(v: QVector) -> str:
    return " ".join(str(x) for x in v)


def _read_instance(path: str) -> StandardLP:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_lp(text)


def _rule(args: argparse.Namespace) -> PivotRule:
    return PivotRule(args.rule)


def cmd_solve(args: argparse.Namespace) -> int:
    lp = _read_instance(args.input)
    outcome, trace = solve(lp, _rule(args))
    lines: list[str]
    if isinstance(outcome, Optimal):
        code = 0
        lines = [
            "outcome = optimal",
            f"value = {outcome.value}",
            f"point = {_vec_text(outcome.point)}",
        ]
    elif isinstance(outcome, Unbounded):
        code = 2
        lines = [
            "outcome = unbounded",
            f"point = {_vec_text(outcome.point)}",
            f"ray = {_vec_text(outcome.ray)}",
        ]
    else:
        assert isinstance(outcome, Infeasible)
        code = 3
        lines = ["outcome = infeasible", f"farkas = {_vec_text(outcome.farkas)}"]
    lines.append(f"pivots = {trace.pivot_count}")
    print("\n".join(lines))
    return code


def _dual_section(d: Dictionary, header: str | None) -> list[str]:
    out = ["", "dual:"]
    if header is not None:
        out.append(header)
    out.extend(format_dictionary(negative_transpose(d)).splitlines())
    return out


def _forced_trace_lines(d: Dictionary, pivots: list[tuple[int, int]], dual_view: bool) -> list[str]:
    lines = format_dictionary(d).splitlines()
    if dual_view:
        lines.extend(_dual_section(d, None))
    for enter, leave in pivots:
        d = pivot(d, enter, leave)
        lines.append("")
        lines.append(f"pivot: enter x{enter}, leave x{leave}")
        lines.extend(format_dictionary(d).splitlines())
        if dual_view:
            lines.extend(_dual_section(d, f"pivot: enter y{leave}, leave y{enter}"))
    return lines


def _solver_trace_lines(trace: SolveTrace, dual_view: bool) -> list[str]:
    lines: list[str] = []
    multi = len(trace.phases) > 1
    for k, phase in enumerate(trace.phases):
        if k > 0:
            lines.append("")
        if multi:
            lines.append(f"== {phase.name} ==")
        lines.extend(format_dictionary(phase.start).splitlines())
        if dual_view:
            lines.extend(_dual_section(phase.start, None))
        for step in phase.steps:
            lines.append("")
            lines.append(f"pivot: enter x{step.enter}, leave x{step.leave}")
            lines.extend(format_dictionary(step.dictionary).splitlines())
            if dual_view:
                lines.extend(
                    _dual_section(step.dictionary, f"pivot: enter y{step.leave}, leave y{step.enter}")
                )
    return lines


def _parse_pivot_flags(raw: list[str]) -> list[tuple[int, int]]:
    out = []
    for item in raw:
        pieces = item.split(",")
        if len(pieces) != 2:
            raise UsageError(f"--pivot expects 'enter,leave', got {item!r}")
        try:
            out.append((int(pieces[0]), int(pieces[1])))
        except ValueError:
            raise UsageError(f"--pivot expects integers, got {item!r}") from None
    return out


def cmd_trace(args: argparse.Namespace) -> int:
    lp = _read_instance(args.input)
    if args.pivot:
        lines = _forced_trace_lines(
            initial_dictionary(lp), _parse_pivot_flags(args.pivot), args.dual_view
        )
    else:
        _, trace = solve(lp, _rule(args))
        lines = _solver_trace_lines(trace, args.dual_view)
    print("\n".join(lines))
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    lp = _read_instance(args.input)
    dual, _ = dual_lp(lp)
    sys.stdout.write(serialize_lp(dual))
    return 0


def cmd_dict(args: argparse.Namespace) -> int:
    lp = _read_instance(args.input)
    try:
        basis = tuple(int(tok) for tok in args.basis.split(","))
    except ValueError:
        raise UsageError(f"--basis expects comma-separated integers, got {args.basis!r}") from None
    d = dictionary_from_basis(augment(lp), basis)
    print(format_dictionary(d))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    lp = _read_instance(args.input)
    try:
        bases = enumerate_bases(lp, limit=args.limit)
    except BasisCountError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 5
    passed = 0
    for basis in bases:
        report = verify_bijection(lp, basis)
        name = ",".join(map(str, basis))
        if report.passed:
            passed += 1
            print(f"basis {name}: pass")
        else:
            print(f"basis {name}: FAIL ({report.details})")
    print(f"verified {passed}/{len(bases)} bases")
    return 0 if passed == len(bases) else 4


def cmd_random(args: argparse.Namespace) -> int:
    lp = random_lp(args.m, args.n, args.seed, args.bound)
    sys.stdout.write(serialize_lp(lp))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="dictlp", description="Exact dictionary-based LP toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, with_input: bool = True, with_rule: bool = False):
        p = sub.add_parser(name, help=help_text)
        if with_input:
            p.add_argument("input", help="LP file path, or '-' for standard input")
        if with_rule:
            p.add_argument("--rule", choices=["bland", "dantzig"], default="bland")
        p.set_defaults(func=func)
        return p

    add("solve", cmd_solve, "solve and print an exact outcome certificate", with_rule=True)
    p_trace = add("trace", cmd_trace, "print the dictionary pivot sequence", with_rule=True)
    p_trace.add_argument(
        "--pivot",
        action="append",
        metavar="ENTER,LEAVE",
        help="force this pivot instead of running the solver (repeatable)",
    )
    p_trace.add_argument("--dual-view", action="store_true", dest="dual_view")
    add("dual", cmd_dual, "emit the dual instance in the same file format")
    p_dict = add("dict", cmd_dict, "print the dictionary for a basis")
    p_dict.add_argument("--basis", required=True, metavar="I1,...,IM")
    p_verify = add("verify", cmd_verify, "check the primal-dual bijection on every basis")
    p_verify.add_argument("--limit", type=int, default=100_000)
    p_random = add("random", cmd_random, "emit a seeded random instance", with_input=False)
    p_random.add_argument("--m", type=int, required=True)
    p_random.add_argument("--n", type=int, required=True)
    p_random.add_argument("--seed", type=int, required=True)
    p_random.add_argument("--bound", type=int, default=10)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (NotABasisError, PivotError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
