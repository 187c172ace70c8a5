"""Command-line front end: ``fibdigits <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 when
``--require-covered`` was given and some scan came back inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .digitscan import (
    TABLE1_ROWS,
    DigitSet,
    ScanConfig,
    max_depth_survey,
    scan_digit_set,
)
from .fibcore import ALPHABET, fib_exact, to_numeral
from .pisano import pisano_csv, pisano_table
from .randmodel import ModelConfig, empirical_digit_frequency, model_report
from .repdigit import find_repdigit_proof, prove_repdigit_impossible

DEFAULT_TABLE1_MAX_N = 5
TABLE1_HEADER = "set\tverdict\tdisregarded\tn"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_digits(text: str, base: int = 10) -> list[int]:
    """Parse ``"12358"`` or ``"1,2,3,5,8"`` into digit values."""
    parts = text.split(",") if "," in text else list(text)
    out = []
    for part in parts:
        part = part.strip().lower()
        if len(part) != 1 or part not in ALPHABET[:base]:
            raise UsageError(f"bad digit {part!r} for base {base}")
        out.append(ALPHABET.index(part))
    if not out:
        raise UsageError("empty digit list")
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _digit_set(args) -> DigitSet:
    if (args.set is None) == (args.omit is None):
        raise UsageError("give exactly one of --set or --omit")
    if args.set is not None:
        return DigitSet.of(parse_digits(args.set, args.base), args.base)
    return DigitSet.omit(parse_digits(args.omit, args.base), args.base)


def _disregarded(verdict) -> str:
    if not verdict.exceptions:
        return "-"
    return ",".join(f"F{k}={v}" for k, v in verdict.exceptions)


def cmd_fib(args) -> int:
    x = fib_exact(args.n)
    if args.format == "json":
        _emit({"n": args.n, "value": str(x)})
    else:
        print(to_numeral(x))
    return 0


def cmd_pisano(args) -> int:
    results = pisano_table(args.m)
    if args.format == "json":
        _emit([{"modulus": r.m, "period": r.period} for r in results])
    elif args.format == "csv":
        sys.stdout.write(pisano_csv(results))
    else:
        for r in results:
            print(f"pi({r.m}) = {r.period}")
    return 0


def cmd_scan(args) -> int:
    config = ScanConfig.build(_digit_set(args), args.digits)
    verdict = scan_digit_set(config, chunks=args.chunks, workers=args.workers)
    if args.format == "json":
        _emit(verdict.to_dict())
    else:
        print(f"set {config.digit_set.label()} base {config.base}: last {config.n_digits} digits, "
              f"modulus {config.modulus}, {config.scan_length} terms")
        if verdict.covered:
            print(f"covered; exceptions: {_disregarded(verdict)}")
        else:
            w = verdict.witness
            print(f"inconclusive at n={config.n_digits}: F({w.index}) ends in {w.tail}, which avoids the set")
            print("(this does not show that some Fibonacci number avoids the set)")
    if args.require_covered and not verdict.covered:
        return 1
    return 0


def cmd_table1(args) -> int:
    rows = []
    for row in TABLE1_ROWS:
        n = min(row.published_n, args.max_n)
        if n < row.published_n:
            print(f"note: {row.digit_set.label()} was checked to n={row.published_n}; running n={n}. "
                  f"Long-running, rerun with --max-n {row.published_n}", file=sys.stderr)
        verdict = scan_digit_set(ScanConfig.build(row.digit_set, n), chunks=args.chunks)
        rows.append((row, verdict))
    if args.format == "json":
        _emit([dict(v.to_dict(), label=row.digit_set.label(), published_n=row.published_n) for row, v in rows])
    else:
        print(TABLE1_HEADER)
        for row, v in rows:
            print(f"{row.digit_set.label()}\t{v.verdict}\t{_disregarded(v)}\t{v.config.n_digits}")
    if args.require_covered and not all(v.covered for _, v in rows):
        return 1
    return 0


def cmd_depth(args) -> int:
    survey = max_depth_survey(args.max_index, _digit_set(args))
    if args.format == "json":
        _emit({
            "set": _digit_set(args).sorted(),
            "max_index": args.max_index,
            "records": [{"index": r.index, "depth": r.depth} for r in survey.records],
            "no_hit": survey.no_hit,
            "max_depth": survey.max_depth,
        })
    else:
        for r in survey.records:
            print(f"F({r.index}): first hit at position {r.depth} from the right")
        if survey.no_hit:
            print("no digit of the set at all:", ", ".join(f"F({k})" for k in survey.no_hit))
    return 0


def cmd_repdigit(args) -> int:
    if args.search:
        proof = find_repdigit_proof(args.digit, args.base)
        if proof is None:
            if args.format == "json":
                _emit({"digit": args.digit, "base": args.base, "conclusive": False, "proof": None})
            else:
                print(f"no prime-power modulus up to the search cap excludes repdigits of {args.digit}")
            return 1 if args.require_covered else 0
    else:
        proof = prove_repdigit_impossible(args.digit, args.prime, args.power, args.base)
    if args.format == "json":
        _emit(proof.to_dict())
    else:
        print(proof.transcript())
    if args.require_covered and not proof.conclusive:
        return 1
    return 0


def cmd_freq(args) -> int:
    report = empirical_digit_frequency(args.max_index, args.digit)
    if args.format == "json":
        _emit(report.to_dict())
    else:
        print(f"{report.contain_count} of F(1)..F({report.N}) contain {report.digit} "
              f"({report.contain_fraction:.6f})")
        print(f"heuristic expected avoiders under the random-digit model: "
              f"{report.heuristic_expected_avoiders:.3f} (heuristic only)")
    return 0


def cmd_model(args) -> int:
    report = model_report(ModelConfig(args.digit, tuple(args.lengths), args.trials, args.seed, args.workers))
    if args.format == "json":
        _emit(report)
    else:
        for row in report["results"]:
            print(f"D={row['length']}: observed {row['observed']:.6f}, model {row['model_probability']:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibdigits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, formats, default, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=default)
        return p

    p = add("fib", cmd_fib, ["human", "json"], "human", "exact value of F(n)")
    p.add_argument("n", type=int)

    p = add("pisano", cmd_pisano, ["csv", "json", "human"], "csv", "Pisano periods")
    p.add_argument("m", type=int, nargs="+")

    p = add("scan", cmd_scan, ["json", "human"], "json", "digit-coverage scan over one period")
    p.add_argument("--set")
    p.add_argument("--omit")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--chunks", type=int, default=1)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--require-covered", action="store_true")

    p = add("table1", cmd_table1, ["tsv", "json"], "tsv", "rerun the eleven published table rows")
    p.add_argument("--max-n", type=int, default=DEFAULT_TABLE1_MAX_N)
    p.add_argument("--chunks", type=int, default=1)
    p.add_argument("--require-covered", action="store_true")

    p = add("depth", cmd_depth, ["json", "human"], "json", "deepest first hit of a digit set")
    p.add_argument("--set")
    p.add_argument("--omit")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--max-index", type=int, required=True)

    p = add("repdigit", cmd_repdigit, ["human", "json"], "human", "repdigit exclusion proof")
    p.add_argument("--digit", type=int, required=True)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--power", type=int, default=5)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--search", action="store_true", help="search p**k for the smallest conclusive modulus")
    p.add_argument("--require-covered", action="store_true")

    p = add("freq", cmd_freq, ["json", "human"], "json", "how often a digit appears in F(1..N)")
    p.add_argument("--digit", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)

    p = add("model", cmd_model, ["json", "human"], "json", "random-digit null model")
    p.add_argument("--digit", type=int, required=True)
    p.add_argument("--lengths", type=_int_list, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        # --help exits 0 through argparse
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
