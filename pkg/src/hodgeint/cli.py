"""Command-line front end: ``hodgeint <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from hodgeint.errors import HodgeError
from hodgeint.partitions import Partition
from hodgeint.reports import Report
from hodgeint.serialize import serialize, to_obj


@dataclass(frozen=True)
class Config:
    lambda_order: int = 8
    max_size: int = 5
    brute_max_degree: int = 5
    brute_max_r: int = 5
    output_format: str = "json"

    def __post_init__(self):
        if self.lambda_order < 1:
            raise ValueError("lambda order must be at least 1")
        if self.max_size < 1:
            raise ValueError("max size must be at least 1")
        if self.output_format not in ("json", "text"):
            raise ValueError("format must be json or text")


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


SUITES = (
    "orthogonality", "hook-dimension", "h-principal", "w-identities",
    "mv-genus0", "mv-tau0", "mv-bg", "mv-lambda-g", "mv-elsv", "mv-cutjoin", "mv-convolution",
    "mv-structure", "phi-composition", "hurwitz-grid",
    "two-reduction", "two-slot-symmetry", "two-convolution", "two-tau-minus-one", "two-genus0",
    "local-p2", "all",
)


def build_parser() -> argparse.ArgumentParser:
    defaults = Config()
    common = _Parser(add_help=False)
    common.add_argument("--order", type=int, default=defaults.lambda_order, help="lambda truncation order")
    common.add_argument("--max-size", type=int, default=defaults.max_size)
    common.add_argument("--format", choices=("json", "text"), default=defaults.output_format)

    parser = _Parser(prog="hodgeint", description="Exact checks of Hodge-integral generating functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chars", parents=[common], help="characters of symmetric groups")
    p.add_argument("--n", type=int)
    p.add_argument("--nu", type=_partition)
    p.add_argument("--mu", type=_partition)

    p = sub.add_parser("wq", parents=[common], help="W_mu or W_{mu,nu} as a rational function of x")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition)
    p.add_argument("--series", action="store_true", help="also expand in lambda")

    p = sub.add_parser("rseries", parents=[common], help="one-partition series")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--bullet", action="store_true", help="disconnected series")

    p = sub.add_parser("r2series", parents=[common], help="two-partition series")
    p.add_argument("--mu-plus", type=_partition, required=True)
    p.add_argument("--mu-minus", type=_partition, required=True)
    p.add_argument("--bullet", action="store_true", help="disconnected series")

    p = sub.add_parser("hurwitz", parents=[common], help="Hurwitz numbers")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition)
    p.add_argument("--chi", type=int)
    p.add_argument("--genus", type=int)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--max-degree", type=int, default=defaults.brute_max_degree, help="brute-force degree bound")
    p.add_argument("--max-r", type=int, default=defaults.brute_max_r, help="brute-force branch-point bound")

    p = sub.add_parser("localp2", parents=[common], help="local P^2 free energy")
    p.add_argument("--max-degree", type=int, default=3)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int, help="symmetric-group degree for character and Phi suites")
    p.add_argument("--tau0", type=_rational, action="append", help="expansion point (repeatable)")
    p.add_argument("--genus", type=int, default=2, help="top genus for ELSV")
    p.add_argument("--max-degree", type=int, default=3)
    return parser


def _emit(payload, fmt: str, out) -> None:
    if fmt == "json":
        out.write(serialize(payload) + "\n")
        return
    if isinstance(payload, list) and all(isinstance(r, Report) for r in payload):
        for r in payload:
            out.write(r.summary() + "\n")
        return
    out.write(_text(_readable(payload)) + "\n")


def _readable(value):
    """Like :func:`to_obj`, but series and polynomials become one-line strings."""
    from hodgeint.algebra import GaussianRational, LambdaSeries, QRat, TauPoly

    if isinstance(value, LambdaSeries):
        terms = " + ".join(f"[{c}]*lambda^{k}" for k, c in value.items()) or "0"
        return f"{terms} + O(lambda^{value.order + 1})"
    if isinstance(value, (TauPoly, QRat, GaussianRational, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _readable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)) and not isinstance(value, Partition):
        return [_readable(v) for v in value]
    return to_obj(value)


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}" for v in obj)
    return f"{pad}{obj}"


# ------------------------------------------------------------------ commands
def _cmd_chars(args):
    from hodgeint.characters import character_table, chi

    if args.nu is not None and args.mu is not None:
        return {"nu": args.nu, "mu": args.mu, "chi": chi(args.nu, args.mu)}, True
    if args.n is None:
        raise UsageError("chars needs --n, or both --nu and --mu")
    table = character_table(args.n)
    return {"n": args.n, "partitions": list(table.partitions),
            "table": [[int(v) for v in row] for row in table.matrix]}, True


def _cmd_wq(args):
    from hodgeint.algebra.qrat import qrat_to_series
    from hodgeint.qschur import w_one, w_two

    value = w_one(args.mu) if args.nu is None else w_two(args.mu, args.nu)
    out = {"mu": args.mu, "w": value}
    if args.nu is not None:
        out = {"mu": args.mu, "nu": args.nu, "w": value}
    if args.series:
        out["series"] = qrat_to_series(value, args.order)
    return out, True


def _cmd_rseries(args):
    from hodgeint.onepartition import r_bullet, r_connected

    if not args.mu and not args.bullet:
        raise UsageError("the connected series needs a nonempty --mu")
    series = r_bullet(args.mu, args.order) if args.bullet else r_connected(args.mu, args.order)
    return {"mu": args.mu, "connected": not args.bullet, "series": series}, True


def _cmd_r2series(args):
    from hodgeint.twopartition import r2_bullet, r2_connected

    fn = r2_bullet if args.bullet else r2_connected
    series = fn(args.mu_plus, args.mu_minus, args.order)
    return {"mu_plus": args.mu_plus, "mu_minus": args.mu_minus, "connected": not args.bullet,
            "series": series}, True


def _cmd_hurwitz(args):
    from hodgeint import hurwitz

    if args.genus is not None:
        value = hurwitz.connected_single(args.genus, args.mu)
        out = {"genus": args.genus, "mu": args.mu, "burnside": value}
        if args.brute_force:
            brute = hurwitz.brute_force_connected_single(args.genus, args.mu, args.max_degree, args.max_r)
            out.update(brute=brute, match=brute == value)
            return out, brute == value
        return out, True
    if args.nu is None or args.chi is None:
        raise UsageError("hurwitz needs --nu and --chi, or --genus")
    value = hurwitz.double_hurwitz(args.chi, args.nu, args.mu)
    if not args.brute_force:
        return {"burnside": value}, True
    brute = hurwitz.brute_force_double(args.chi, args.nu, args.mu, args.max_degree, args.max_r)
    return {"burnside": value, "brute": brute, "match": brute == value}, brute == value


def _cmd_localp2(args):
    from hodgeint.localp2 import gw_invariants, local_p2_free_energy

    f = local_p2_free_energy(args.max_degree, args.order)
    degrees = []
    for d in range(1, args.max_degree + 1):
        invariants = {str(g): gw_invariants(f, g, d) for g in range(0, (args.order + 2) // 2 + 1)
                      if 2 * g - 2 <= args.order}
        degrees.append({"d": d, "series": f[d], "N": invariants})
    return {"max_degree": args.max_degree, "order": args.order, "degrees": degrees}, True


def run_suite(name: str, args) -> list:
    from hodgeint import characters, hurwitz, localp2, onepartition as one, qschur, twopartition as two

    order, size = args.order, args.max_size
    table = {
        "orthogonality": lambda: [characters.verify_orthogonality(k) for k in ([args.n] if args.n else range(1, 9))],
        "hook-dimension": lambda: [characters.verify_hook_dimension(k) for k in ([args.n] if args.n else range(1, 9))],
        "h-principal": lambda: [qschur.verify_h_principal(6, 40)],
        "w-identities": lambda: [qschur.verify_w_identities(8)],
        "mv-genus0": lambda: [one.verify_genus0(size, order)],
        "mv-tau0": lambda: [one.verify_tau0(size, order)],
        "mv-bg": lambda: [one.verify_bg(5)],
        "mv-lambda-g": lambda: [one.verify_lambda_g(size, order)],
        "mv-elsv": lambda: [one.verify_elsv(min(size, 4), args.genus)],
        "mv-cutjoin": lambda: [one.verify_cutjoin(size, order)],
        "mv-convolution": lambda: [one.verify_convolution(size, order)],
        "mv-structure": lambda: [one.verify_structure(size, order)],
        "phi-composition": lambda: [hurwitz.verify_phi_composition(k, order)
                                    for k in ([args.n] if args.n else range(1, 5))],
        "hurwitz-grid": lambda: [hurwitz.verify_hurwitz_grid(4, 4)],
        "two-reduction": lambda: [two.verify_reduction(size, order)],
        "two-slot-symmetry": lambda: [two.verify_slot_symmetry(size, order)],
        "two-convolution": lambda: [two.verify_convolution2(min(size, 4), order, t)
                                    for t in (args.tau0 or [Fraction(-1), Fraction(2)])],
        "two-tau-minus-one": lambda: [two.check_tau_minus_one(min(size, 4), order)],
        "two-genus0": lambda: [two.verify_genus0_two(size, order)],
        "local-p2": lambda: [localp2.verify_local_p2(args.max_degree, order)],
    }
    if name == "all":
        out = []
        for key in SUITES:
            if key != "all":
                out.extend(table[key]())
        return out
    return table[name]()


def _cmd_verify(args):
    reports = run_suite(args.suite, args)
    return reports, all(r.passed for r in reports)


COMMANDS = {
    "chars": _cmd_chars, "wq": _cmd_wq, "rseries": _cmd_rseries, "r2series": _cmd_r2series,
    "hurwitz": _cmd_hurwitz, "localp2": _cmd_localp2, "verify": _cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        Config(lambda_order=args.order, max_size=args.max_size, output_format=args.format)
        payload, ok = COMMANDS[args.command](args)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except (HodgeError, ValueError) as exc:
        err.write(f"hodgeint: {exc}\n")
        return 2
    _emit(payload, args.format, out)
    return 0 if ok else 1


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())


__all__ = ["Config", "SUITES", "build_parser", "main", "run", "run_suite"]
