"""Command-line front end.

    kzforms abar --n 2 --order 9
    kzforms kummer --i 2 --j 4 --p 5 --s 1 --order 25 --format json
    kzforms padic --k 3 --p 3 --n-max 4

Exit status: 0 on success, 2 for invalid arguments, 1 when the computation
itself fails (for instance a series outside the requested Eisenstein span).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import checks, forms, partitions, quasimodular
from .series import QSeries, format_qseries

DEFAULT_ORDER = 30


class UsageError(Exception):
    pass


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for '{args.command}'")


def _at_least(args, name, minimum):
    value = getattr(args, name)
    if value < minimum:
        raise UsageError(f"--{name.replace('_', '-')} must be >= {minimum}, got {value}")


def _prime(args, name="p"):
    value = getattr(args, name)
    if not checks.is_prime(value):
        raise UsageError(f"--{name} must be a prime, got {value}")


def _series_report(kind: str, params: dict, f: QSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"kind": kind, **params, "series": f.to_json()})
    label = ", ".join(f"{k}={v}" for k, v in params.items())
    return f"{kind}({label}) = {format_qseries(f)}"


def cmd_an(args) -> str:
    _require(args, "n")
    _at_least(args, "n", 0)
    _at_least(args, "order", 1)
    f = forms.a_form(args.n, args.order)
    return _series_report("A", {"n": args.n}, f.series, args.format)


def cmd_abar(args) -> str:
    _require(args, "n")
    _at_least(args, "n", 1)
    _at_least(args, "order", 3)
    f = forms.abar(args.n, args.order)
    return _series_report("Abar", {"n": args.n}, f.series, args.format)


def cmd_theta0(args) -> str:
    _at_least(args, "order", 1)
    if args.x_trunc < 0 or args.x_trunc % 2:
        raise UsageError(f"--x-trunc must be a nonnegative even integer, got {args.x_trunc}")
    build = forms.theta0_direct if args.method == "direct" else forms.theta0
    th = build(args.x_trunc, args.order)
    if args.format == "json":
        return json.dumps(
            {
                "kind": "Theta0",
                "method": args.method,
                "x_trunc": th.x_trunc,
                "coeffs": [c.to_json() for c in th.coeffs],
            }
        )
    return "\n".join(f"X^{k}: {format_qseries(c)}" for k, c in enumerate(th.coeffs))


def cmd_fg(args) -> str:
    _require(args, "g")
    _at_least(args, "g", 2)
    _at_least(args, "order", 1)
    return _series_report("F", {"g": args.g}, forms.f_g(args.g, args.order), args.format)


def cmd_decompose(args) -> str:
    _require(args, "n")
    _at_least(args, "n", 1)
    weight = args.weight if args.weight is not None else 6 * args.n
    if weight < 2 or weight % 2:
        raise UsageError(f"--weight must be a positive even integer, got {weight}")
    needed = len(quasimodular.monomial_basis(weight)) + 2
    if args.order < needed:
        raise UsageError(f"--order must be >= {needed} for weight {weight}, got {args.order}")
    dec = quasimodular.decompose(forms.abar(args.n, args.order).series, weight)
    if args.format == "json":
        return json.dumps(dec.to_json())
    return f"Abar_{args.n} = {dec}"


def cmd_kummer(args) -> str:
    _require(args, "i", "j", "p", "s")
    _at_least(args, "i", 1)
    _at_least(args, "j", 1)
    _prime(args)
    _at_least(args, "s", 1)
    _at_least(args, "order", 3)
    rep = checks.check_kummer(args.i, args.j, args.p, args.s, args.order)
    if args.format == "json":
        return json.dumps(rep.to_json())
    hyp = (2 * args.i - 2 * args.j) % checks.totient(args.p**args.s) == 0
    lines = [
        f"Abar_{rep.i} vs Abar_{rep.j} mod {rep.p}^{rep.s} below q^{rep.order}",
        f"  weight condition 2i = 2j mod phi(p^s): {hyp}",
        f"  holds: {rep.holds}",
    ]
    if rep.first_failure:
        e, ri, rj = rep.first_failure
        lines.append(f"  first failure at q^{e}: {ri} vs {rj}")
    residue_series = QSeries.from_list(list(rep.residues), rep.order)
    lines.append(f"  Abar_{rep.i} mod {rep.p ** rep.s}: {format_qseries(residue_series)}")
    return "\n".join(lines)


def cmd_padic(args) -> str:
    _require(args, "k", "p")
    _at_least(args, "k", 1)
    _prime(args)
    _at_least(args, "n_max", 1)
    table = checks.padic_valuations(args.k, args.p, args.n_max)
    if args.format == "json":
        return json.dumps(table.to_json())
    lines = [f"a_{table.k}(p^n) for p = {table.p} (hypotheses satisfied: {table.applicable})"]
    lines.append(f"{'n':>3}  {'v_p':>4}  coefficient")
    for n, a, v in table.rows:
        lines.append(f"{n:>3}  {checks.INFINITY if v is None else v:>4}  {a}")
    return "\n".join(lines)


def cmd_powersum(args) -> str:
    _require(args, "d", "k")
    _at_least(args, "d", 0)
    _at_least(args, "k", 0)
    value = partitions.power_sum(args.d, args.k)
    if args.format == "json":
        return json.dumps({"d": args.d, "k": args.k, "power_sum": str(value)})
    return f"S_{args.k}({args.d}) = {value}"


COMMANDS: dict[str, tuple[Callable, str]] = {
    "an": (cmd_an, "A_n as a rational q-series"),
    "abar": (cmd_abar, "normalized Abar_n with coprime integer coefficients"),
    "theta0": (cmd_theta0, "Theta_0(X, q) up to a given X-degree"),
    "fg": (cmd_fg, "F_g, the X^(2g-2) coefficient of log Theta_0"),
    "decompose": (cmd_decompose, "Abar_n as a polynomial in E2, E4, E6"),
    "kummer": (cmd_kummer, "check Abar_i = Abar_j mod p^s"),
    "padic": (cmd_padic, "p-adic valuations of a_k(p^n)"),
    "powersum": (cmd_powersum, "S_k(d), the sum of lambda^k over partitions of d"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kzforms", description="Exact computations with the quasimodular forms A_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="q-truncation (exact below q^order)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name in ("an", "abar", "decompose"):
            p.add_argument("--n", type=int)
        if name == "decompose":
            p.add_argument("--weight", type=int, help="defaults to 6n")
        if name == "theta0":
            p.add_argument("--x-trunc", type=int, default=4)
            p.add_argument("--method", choices=("partition", "direct"), default="partition")
        if name == "fg":
            p.add_argument("--g", type=int)
        if name == "kummer":
            for flag in ("i", "j", "p", "s"):
                p.add_argument(f"--{flag}", type=int)
        if name == "padic":
            p.add_argument("--k", type=int)
            p.add_argument("--p", type=int)
            p.add_argument("--n-max", type=int, default=3)
        if name == "powersum":
            p.add_argument("--d", type=int)
            p.add_argument("--k", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        out = handler(args)
    except UsageError as exc:
        print(f"kzforms {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, ValueError, MemoryError) as exc:
        print(f"kzforms {args.command}: computation failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
