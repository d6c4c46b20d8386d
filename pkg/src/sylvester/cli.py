"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from sylvester.arith import format_rational
from sylvester.bernoulli import multiplication_rhs, multiplication_sum
from sylvester.oracle import dp_count, series_count
from sylvester.waves import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    GeneratorSet,
    assemble,
    format_quasipoly,
    quasipoly_to_json,
    sigma,
    sylvester_waves,
    unit_weight_lhs,
    wave1,
    wave_j,
    wave_j_reference,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_generators(text: str) -> list[int]:
    try:
        d = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"generators must be comma-separated integers: {text!r}")
    if not d or any(x < 1 for x in d):
        raise UsageError(f"generators must be positive integers: {text!r}")
    return d


def _parse_int(text: str) -> int:
    text = text.strip()
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def parse_s_values(text: str) -> list[int]:
    """``6``, ``10^6``, ``0..20`` or a comma-separated mix of those."""
    out = []
    try:
        for item in text.split(","):
            if ".." in item:
                lo, hi = (_parse_int(x) for x in item.split("..", 1))
                if hi < lo:
                    raise UsageError(f"empty range {item!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(_parse_int(item))
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"cannot parse s values {text!r}")
    if not out or any(s < 0 for s in out):
        raise UsageError("s values must be nonnegative")
    return out


@dataclass(frozen=True)
class RunConfig:
    generators: tuple[int, ...]
    s_values: tuple[int, ...] = ()
    fmt: str = "text"
    cap: int = DEFAULT_CAP
    horizon: int = 100
    threads: int = 1
    check: bool = False
    waves: bool = False


def cmd_eval(cfg: RunConfig, out) -> int:
    g = GeneratorSet.of(cfg.generators)
    q = assemble(sylvester_waves(g, cfg.cap), g.period)
    table = dp_count(max(cfg.s_values), g.d).counts if cfg.check else None
    status = EXIT_OK
    rows = []
    for s in cfg.s_values:
        value = q(s)
        row = {"s": s, "value": format_rational(value)}
        if table is not None:
            match = value == table[s]
            row["check"] = "MATCH" if match else "MISMATCH"
            if not match:
                row["expected"] = str(table[s])
                status = EXIT_FAIL
        rows.append(row)
    if cfg.fmt == "json":
        json.dump({"generators": list(g.d), "values": rows}, out)
        out.write("\n")
    else:
        for row in rows:
            prefix = f"{row['s']}: " if len(rows) > 1 or "check" in row else ""
            line = prefix + row["value"]
            if "check" in row:
                line += " " + row["check"]
                if "expected" in row:
                    line += f" (dp {row['expected']})"
            out.write(line + "\n")
    return status


def cmd_quasipoly(cfg: RunConfig, out) -> int:
    g = GeneratorSet.of(cfg.generators)
    waves = sylvester_waves(g, cfg.cap)
    q = assemble(waves, g.period)
    if cfg.fmt == "text":
        out.write(f"W(s, {list(g.d)}), period {q.period}\n")
        out.write(format_quasipoly(q) + "\n")
        if cfg.waves:
            for j, w in waves.items():
                out.write(f"\nW_{j}, period {w.period}\n{format_quasipoly(w)}\n")
    else:
        json.dump(quasipoly_to_json(g, q, waves if cfg.waves else None), out)
        out.write("\n")
    return EXIT_OK


class _Report:
    def __init__(self, out):
        self.out = out
        self.failures = 0

    def record(self, name: str, ok: bool, detail: str = "", counterexample: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f"  {detail}"
        self.out.write(line + "\n")
        if not ok:
            if not self.failures and counterexample:
                self.out.write(f"  counterexample: {counterexample}\n")
            self.failures += 1


_SIGMA_T = (Fraction(0), Fraction(1), Fraction(-7, 3), Fraction(5, 2))


def _oracle_rows(q, g: GeneratorSet, horizon: int, threads: int):
    dp = dp_count(horizon, g.d).counts
    series = series_count(horizon, g.d)

    def check(s: int):
        v = q(s)
        return s, v, dp[s], series[s]

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            rows = list(pool.map(check, range(horizon + 1)))
    else:
        rows = [check(s) for s in range(horizon + 1)]
    return sorted(rows)


def cmd_verify(cfg: RunConfig, out) -> int:
    g = GeneratorSet.of(cfg.generators)
    report = _Report(out)
    waves = sylvester_waves(g, cfg.cap)
    q = assemble(waves, g.period)
    w1 = wave1(g)

    rows = _oracle_rows(q, g, cfg.horizon, cfg.threads)
    bad = [r for r in rows if not (r[1] == r[2] == r[3])]
    report.record(
        "oracle",
        not bad,
        f"s=0..{cfg.horizon} ({len(rows)} values, dp and series)",
        bad and "s={} closed form {} dp {} series {}".format(
            bad[0][0], format_rational(bad[0][1]), bad[0][2], bad[0][3]
        ),
    )

    for j in g.wave_indices():
        if j == 1:
            continue
        split = g.split(j)
        w, ref = waves[j], wave_j_reference(j, g, cfg.cap)
        diff = [c for c in range(j) if w.classes[c] != ref.classes[c]]
        report.record(
            f"formula-equivalence j={j}",
            not diff,
            f"{j} classes",
            diff and f"class {diff[0]}: extended {w.classes[diff[0]]!r} truncated {ref.classes[diff[0]]!r}",
        )

        high = [c for c in range(j) if w.classes[c].degree > split.k_j - 1]
        report.record(
            f"degree-collapse j={j}",
            not high,
            f"max degree {w.degree} <= k_j-1 = {split.k_j - 1}",
            high and f"class {high[0]} has degree {w.classes[high[0]].degree}",
        )

        uw = unit_weight_lhs(j, g, cfg.cap)
        report.record(
            f"unit-weight j={j}",
            uw == w1,
            "",
            f"lhs {uw!r} wave1 {w1!r}",
        )

        nd = list(split.nondivisible)
        if nd:
            e = [j * x for x in nd]
            nonzero = None
            count = 0
            for nu in range(len(nd)):
                for s in range(j):
                    for t in _SIGMA_T:
                        count += 1
                        v = sigma(nu, s, t, nd, e, j, cfg.cap)
                        if v != 0 and nonzero is None:
                            nonzero = f"nu={nu} s={s} t={format_rational(t)} sigma={format_rational(v)}"
            report.record(
                f"sigma-vanishing j={j}",
                nonzero is None,
                f"{count} instances, d={nd} e={e}",
                nonzero or "",
            )

    scale = [2] * min(2, g.m)
    bad_k = None
    for k in range(g.m):
        lhs = multiplication_sum(k, g.d, scale)
        rhs = multiplication_rhs(k, g.d, scale)
        if lhs != rhs and bad_k is None:
            bad_k = f"k={k}: lhs {lhs!r} rhs {rhs!r}"
    report.record(
        "multiplication-theorem",
        bad_k is None,
        f"k=0..{g.m - 1}, scale factors {scale}",
        bad_k or "",
    )

    out.write(f"{'OK' if not report.failures else 'FAILED'}: {report.failures} failing check(s)\n")
    return EXIT_OK if not report.failures else EXIT_FAIL


def cmd_bench(cfg: RunConfig, out) -> int:
    g = GeneratorSet.of(cfg.generators)
    t0 = time.perf_counter()
    q = assemble(sylvester_waves(g, cfg.cap), g.period)
    build = time.perf_counter() - t0
    print(f"# quasipolynomial construction: {build:.6f} s", file=sys.stderr)
    out.write("s,closed_form_seconds,dp_seconds,agree\n")
    status = EXIT_OK
    for s in cfg.s_values:
        t0 = time.perf_counter()
        value = q(s)
        t_closed = time.perf_counter() - t0
        t0 = time.perf_counter()
        expected = dp_count(s, g.d)[s]
        t_dp = time.perf_counter() - t0
        agree = value == expected
        if not agree:
            status = EXIT_FAIL
        out.write(f"{s},{t_closed:.6f},{t_dp:.6f},{str(agree).lower()}\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvester",
        description="Exact restricted partition counts via Sylvester waves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, s_required=False):
        p.add_argument("-d", "--generators", required=True, help="comma-separated positive integers")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max shift vectors per wave")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if s_required:
            p.add_argument("-s", required=True, help="s value, a..b range, a^b, or a comma list")

    p = sub.add_parser("eval", help="evaluate W(s, d)")
    common(p, s_required=True)
    p.add_argument("--check", action="store_true", help="compare against dynamic programming")

    p = sub.add_parser("quasipoly", help="print the quasipolynomial")
    common(p)
    p.set_defaults(format="json")
    p.add_argument("--waves", action="store_true", help="include every wave separately")

    p = sub.add_parser("verify", help="run every identity check")
    common(p)
    p.add_argument("-H", "--horizon", type=int, default=100)
    p.add_argument("--threads", type=int, default=1, help="worker count")

    p = sub.add_parser("bench", help="closed form vs dynamic programming timings (CSV)")
    common(p, s_required=True)
    return parser


def _config(args) -> RunConfig:
    if args.cap < 1:
        raise UsageError("--cap must be positive")
    horizon = getattr(args, "horizon", 100)
    threads = getattr(args, "threads", 1)
    if horizon < 0:
        raise UsageError("horizon must be nonnegative")
    if threads < 1:
        raise UsageError("--threads must be positive")
    return RunConfig(
        generators=tuple(parse_generators(args.generators)),
        s_values=tuple(parse_s_values(args.s)) if getattr(args, "s", None) else (),
        fmt=args.format,
        cap=args.cap,
        horizon=horizon,
        threads=threads,
        check=getattr(args, "check", False),
        waves=getattr(args, "waves", False),
    )


COMMANDS = {
    "eval": cmd_eval,
    "quasipoly": cmd_quasipoly,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](cfg, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapExceeded as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
