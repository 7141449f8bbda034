"""Command-line front end: ``gen``, ``solve``, ``bench`` and ``check``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
``SIGREDUCE_MODULUS`` overrides the default characteristic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import signal
import sys
import time
from dataclasses import asdict, dataclass, fields
from typing import Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .engine import ADD, RAT, EngineConfig, incremental_sig_gb
from .ffield import DEFAULT_MODULUS, is_prime
from .poly import Poly, Ring, render_poly
from .postproc import buchberger, gb_check, same_basis
from .reduce import STRATEGIES
from .systems import (FAMILIES, SystemSpec, SystemSyntaxError, generate, homogenize_system,
                      load_system, parse_name, render_system)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MODULUS_ENV = "SIGREDUCE_MODULUS"
REWRITES = (ADD, RAT)

DESK_SUITE = (
    ["cyclic-%d" % n for n in range(3, 7)]
    + ["katsura-%d" % n for n in range(3, 8)]
    + ["eco-%d" % n for n in range(4, 8)]
    + ["noon-%d" % n for n in range(3, 7)]
    + ["random(5,2)#1", "random(5,2)#2"]
)


class UsageError(Exception):
    pass


class CellTimeout(Exception):
    pass


def default_modulus() -> int:
    raw = os.environ.get(MODULUS_ENV)
    if not raw:
        return DEFAULT_MODULUS
    try:
        p = int(raw)
    except ValueError:
        raise UsageError("%s must be an integer, got %r" % (MODULUS_ENV, raw)) from None
    if not is_prime(p):
        raise UsageError("%s=%d is not prime" % (MODULUS_ENV, p))
    return p


# ---------------------------------------------------------------------------
# reports


@dataclass
class RunReport:
    benchmark: str
    strategy: str
    rewrite: str
    homogeneous: bool
    status: str = "ok"
    sgb_all: int | None = None
    sgb_sred: int | None = None
    rgb_all: int | None = None
    sgb_mults: int | None = None
    sgb_sred_mults: int | None = None
    rgb_mults: int | None = None
    rgb_sred_mults: int | None = None
    spair_mults: int | None = None
    normalize_mults: int | None = None
    usual_mults: int | None = None
    sf: int | None = None
    not_sf: int | None = None
    sgb_size: int | None = None
    minimal_size: int | None = None
    reduced_size: int | None = None
    pairs_processed: int | None = None
    pairs_discarded: int | None = None
    check: str = ""
    wall_time: float | None = None

    def data(self) -> dict:
        """Everything except wall time, which varies run to run."""
        d = asdict(self)
        d.pop("wall_time")
        return d


REPORT_COLUMNS = [f.name for f in fields(RunReport) if f.name != "wall_time"]


def make_report(name: str, F: Sequence[Poly], strategy: str, rewrite: str,
                validate: bool = False):
    """Run one configuration; returns the report and the reduced basis."""
    t0 = time.perf_counter()
    res = incremental_sig_gb(F, EngineConfig(strategy, rewrite, validate))
    wall = time.perf_counter() - t0
    sgb, rgb = res.sgb_counters, res.counters
    rep = RunReport(
        benchmark=name, strategy=strategy, rewrite=rewrite,
        homogeneous=all(f.is_homogeneous() for f in F),
        sgb_all=sgb.reductions, sgb_sred=sgb.s_red_steps, rgb_all=rgb.reductions,
        sgb_mults=sgb.field_mults, sgb_sred_mults=sgb.sred_mults,
        rgb_mults=rgb.field_mults, rgb_sred_mults=rgb.sred_mults,
        spair_mults=rgb.spair_mults, normalize_mults=rgb.normalize_mults,
        usual_mults=rgb.usual_mults,
        sf=res.sf_stats.sf, not_sf=res.sf_stats.not_sf,
        sgb_size=res.sgb_size, minimal_size=len(res.minimal), reduced_size=len(res.reduced),
        pairs_processed=res.pairs_processed, pairs_discarded=res.pairs_discarded,
        wall_time=wall,
    )
    return rep, res.reduced


def log2_str(n: int | None) -> str:
    if n is None:
        return "-"
    if n == 0:
        return "0"
    return "2^%.3f" % math.log2(n)


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]], left: int = 2) -> str:
    """Plain-text table; the first ``left`` columns are left-aligned, the rest right-aligned."""
    widths = [len(h) for h in header]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    sep = "-+-".join("-" * w for w in widths)
    out = [" | ".join(h.ljust(w) for h, w in zip(header, widths)), sep]
    for r in rows:
        out.append(" | ".join(c.ljust(w) if i < left else c.rjust(w)
                              for i, (c, w) in enumerate(zip(r, widths))))
    return "\n".join(line.rstrip() for line in out)


def reports_csv(reports: Sequence[RunReport], timing: bool = False) -> str:
    buf = io.StringIO()
    cols = REPORT_COLUMNS + (["wall_time"] if timing else [])
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for rep in reports:
        d = asdict(rep)
        row = []
        for c in cols:
            v = d[c]
            if v is None:
                row.append("")
            elif isinstance(v, bool):
                row.append("yes" if v else "no")
            elif isinstance(v, float):
                row.append("%.3f" % v)
            else:
                row.append(str(v))
        w.writerow(row)
    return buf.getvalue()


def _cell(reports: dict, name: str, strategy: str, rewrite: str) -> RunReport | None:
    return reports.get((name, strategy, rewrite))


def bench_tables(names: Sequence[str], reports: Sequence[RunReport], homogeneous: bool) -> str:
    """Reduction, multiplication and SF tables in the ADD | RAT layout."""
    kind = "homogeneous" if homogeneous else "inhomogeneous"
    by_key = {(r.benchmark, r.strategy, r.rewrite): r for r in reports}
    cols = ["SGB ALL", "SGB s-RED", "RGB ALL"]
    header = ["benchmark", "strategy"] + ["%s %s" % (rw.upper(), c) for rw in REWRITES for c in cols]
    blocks = []
    for title, keys in (
        ("reductions", ("sgb_all", "sgb_sred", "rgb_all")),
        ("multiplications", ("sgb_mults", "sgb_sred_mults", "rgb_mults")),
    ):
        rows = []
        for name in names:
            for strategy in STRATEGIES:
                row = [name, strategy]
                for rw in REWRITES:
                    rep = _cell(by_key, name, strategy, rw)
                    for k in keys:
                        if rep is None or rep.status != "ok":
                            row.append(rep.status if rep is not None else "-")
                        else:
                            row.append(log2_str(getattr(rep, k)))
                rows.append(row)
        blocks.append("Number of %s (%s)\n%s" % (title, kind, render_table(header, rows)))
    sf_header = ["benchmark", "ADD SF", "ADD not SF", "RAT SF", "RAT not SF"]
    rows = []
    for name in names:
        row = [name]
        for rw in REWRITES:
            rep = _cell(by_key, name, STRATEGIES[-1], rw)
            if rep is None or rep.status != "ok":
                row += ["-", "-"]
            else:
                row += [str(rep.sf), str(rep.not_sf)]
        rows.append(row)
    blocks.append("S-pairs satisfying / failing SF under selective-full (%s)\n%s"
                  % (kind, render_table(sf_header, rows, left=1)))
    return "\n\n".join(blocks) + "\n"


# ---------------------------------------------------------------------------
# helpers


def load_input(arg: str, modulus: int) -> tuple[str, Ring, list[Poly]]:
    """A ``.gbsys`` path, or a benchmark name such as ``cyclic-3``."""
    if os.path.exists(arg):
        ring, F = load_system(arg, modulus)
        name = os.path.splitext(os.path.basename(arg))[0]
        return name, ring, F
    try:
        spec = parse_name(arg, modulus)
    except ValueError:
        raise UsageError("no such file or benchmark: %r" % arg) from None
    ring, F = spec.build()
    return spec.name, ring, F


def _alarm(signum, frame):
    raise CellTimeout()


def run_with_timeout(fn, timeout: float | None, *args):
    """``fn(*args)``; raises CellTimeout after ``timeout`` seconds (main thread only)."""
    if not timeout or timeout <= 0:
        return fn(*args)
    old = signal.signal(signal.SIGALRM, _alarm)
    signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        return fn(*args)
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def oracle_basis(F: Sequence[Poly], timeout: float | None):
    """Reduced basis from the Buchberger oracle, or None if it timed out."""
    try:
        return run_with_timeout(buchberger, timeout, F)
    except CellTimeout:
        return None


def warn(msg: str) -> None:
    print("warning: " + msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# gen


def cmd_gen(args) -> int:
    modulus = default_modulus()
    family = args.family.lower()
    if family not in FAMILIES:
        raise UsageError("unknown family %r (known: %s)" % (args.family, ", ".join(FAMILIES)))
    if args.degree is not None and family != "random":
        raise UsageError("a degree only applies to the random family")
    try:
        ring, F = generate(family, args.n, modulus=modulus,
                           degree=args.degree if args.degree is not None else 2,
                           count=args.count, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.homogenize:
        ring, F = homogenize_system(ring, F)
    spec = SystemSpec(family, args.n, args.degree or 2, args.count, args.seed,
                      args.homogenize, modulus)
    text = render_system(ring, F, comment=spec.name)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# solve


def cmd_solve(args) -> int:
    modulus = default_modulus()
    name, ring, F = load_input(args.input, modulus)
    rep, reduced = make_report(name, F, args.strategy, args.rewrite, args.validate)
    basis = [render_poly(f) for f in reduced]
    if args.format == "json":
        out = {"report": rep.data(), "basis": basis}
        if args.timing:
            out["wall_time"] = round(rep.wall_time, 3)
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(reports_csv([rep], timing=args.timing))
    else:
        print("reduced Groebner basis (%d elements, vars %s):" % (len(basis), ", ".join(ring.names)))
        for b in basis:
            print("  " + b)
        print()
        rows = []
        for k, v in asdict(rep).items():
            if k == "wall_time":
                v = "%.3f s" % v
            elif k in ("sgb_all", "sgb_sred", "rgb_all", "sgb_mults", "rgb_mults"):
                v = "%d (%s)" % (v, log2_str(v))
            rows.append([k, str(v)])
        print(render_table(["field", "value"], rows, left=1))
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def check_system(F: Sequence[Poly], oracle_timeout: float | None, validate: bool = False,
                 out=sys.stdout) -> bool:
    bases = []
    for rw in REWRITES:
        for strategy in STRATEGIES:
            res = incremental_sig_gb(F, EngineConfig(strategy, rw, validate))
            bases.append(("%s/%s" % (strategy, rw), res.reduced))
    ok = True
    ref_label, ref = bases[0]
    for label, B in bases[1:]:
        if not same_basis(B, ref):
            print("MISMATCH: %s differs from %s" % (label, ref_label), file=out)
            ok = False
    if not gb_check(ref):
        print("FAIL: engine output is not a Groebner basis", file=out)
        ok = False
    oracle = oracle_basis(F, oracle_timeout)
    if oracle is None:
        warn("oracle did not finish within %ss; skipped" % oracle_timeout)
    elif not same_basis(oracle, ref):
        print("MISMATCH: engine and Buchberger oracle disagree", file=out)
        ok = False
    return ok


def cmd_check(args) -> int:
    modulus = default_modulus()
    name, ring, F = load_input(args.input, modulus)
    ok = check_system(F, args.oracle_timeout, args.validate)
    print("%s: %s" % (name, "OK" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# bench


@dataclass
class BenchItem:
    name: str
    homogenize: bool
    path: str | None = None


def _build_item(item: BenchItem, modulus: int) -> tuple[str, list[Poly]]:
    if item.path is None:
        spec = parse_name(item.name, modulus)
        if item.homogenize and not spec.homogenize:
            spec = SystemSpec(spec.family, spec.n, spec.degree, spec.count, spec.seed,
                              True, spec.modulus)
        return spec.name, spec.build()[1]
    ring, F = load_system(item.path, modulus)
    name = item.name
    if item.homogenize and not all(f.is_homogeneous() for f in F):
        ring, F = homogenize_system(ring, F)
        name = "h" + name
    return name, F


def run_bench_item(item: BenchItem, modulus: int, timeout: float | None, check: bool,
                   validate: bool) -> list[RunReport]:
    """All six cells of one benchmark; each cell gets its own time budget."""
    name, F = _build_item(item, modulus)
    hom = all(f.is_homogeneous() for f in F)
    reports = []
    oracle = None
    if check:
        oracle = oracle_basis(F, timeout)
    for rw in REWRITES:
        for strategy in STRATEGIES:
            try:
                rep, reduced = run_with_timeout(make_report, timeout, name, F, strategy, rw, validate)
            except CellTimeout:
                reports.append(RunReport(name, strategy, rw, hom, status="timeout"))
                continue
            if check:
                if not gb_check(reduced):
                    rep.check = "fail"
                elif oracle is None:
                    rep.check = "no-oracle"
                else:
                    rep.check = "ok" if same_basis(reduced, oracle) else "fail"
            reports.append(rep)
    return reports


def _bench_worker(job):
    return run_bench_item(*job)


def load_suite(path: str) -> dict:
    with open(path, "rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise UsageError("%s: %s" % (path, exc)) from None
    known = {"systems", "files", "homogeneous", "timeout", "check", "jobs"}
    extra = set(data) - known
    if extra:
        raise UsageError("%s: unknown keys %s" % (path, ", ".join(sorted(extra))))
    return data


def bench_items(systems: Sequence[str], files: Sequence[str], homogeneous: str) -> list[BenchItem]:
    modes = {"yes": [True], "no": [False], "both": [False, True]}[homogeneous]
    items = []
    for hom in modes:
        for s in systems:
            try:
                parse_name(s)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            items.append(BenchItem(s, hom))
        for path in files:
            if not os.path.exists(path):
                raise UsageError("no such file: %r" % path)
            items.append(BenchItem(os.path.splitext(os.path.basename(path))[0], hom, path))
    return items


def cmd_bench(args) -> int:
    modulus = default_modulus()
    suite = load_suite(args.suite) if args.suite else {}
    systems = args.systems if args.systems is not None else suite.get("systems")
    files = args.files if args.files is not None else suite.get("files", [])
    if systems is None:
        systems = [] if (args.suite or files) else list(DESK_SUITE)
    homogeneous = args.homogeneous or suite.get("homogeneous", "both")
    if homogeneous not in ("yes", "no", "both"):
        raise UsageError("homogeneous must be yes, no or both")
    timeout = args.timeout if args.timeout is not None else suite.get("timeout", 300)
    check = args.check or bool(suite.get("check", False))
    jobs = args.jobs if args.jobs is not None else suite.get("jobs", 1)
    items = bench_items(systems, files, homogeneous)

    work = [(item, modulus, timeout, check, args.validate) for item in items]
    if jobs > 1 and len(work) > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_bench_worker, work)
    else:
        results = [_bench_worker(w) for w in work]
    reports = [r for batch in results for r in batch]

    for hom in (False, True):
        if homogeneous == "yes" and not hom or homogeneous == "no" and hom:
            continue
        part = [r for r in reports if r.homogeneous == hom]
        names = list(dict.fromkeys(r.benchmark for r in part))
        sys.stdout.write(bench_tables(names, part, hom) + "\n")
    if reports:
        rows = []
        for r in reports:
            if r.wall_time is not None:
                rows.append([r.benchmark, r.strategy, r.rewrite.upper(), "%.3f" % r.wall_time])
            else:
                rows.append([r.benchmark, r.strategy, r.rewrite.upper(), r.status])
        print("Wall time (s)\n" + render_table(["benchmark", "strategy", "rewrite", "seconds"], rows))
    if args.csv:
        text = reports_csv(reports)
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            with open(args.csv, "w") as fh:
                fh.write(text)
    failed = [r for r in reports if r.check == "fail"]
    for r in failed:
        print("CHECK FAILED: %s %s/%s" % (r.benchmark, r.strategy, r.rewrite), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="sigreduce",
                 description="Signature Groebner bases over GF(p) with instrumented reduction strategies.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("gen", help="write a benchmark system in .gbsys format")
    g.add_argument("family", help="one of: %s" % ", ".join(FAMILIES))
    g.add_argument("n", type=int, help="size parameter (variable count for random)")
    g.add_argument("degree", type=int, nargs="?", help="total degree (random family only)")
    g.add_argument("--homogenize", action="store_true")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, help="number of polynomials (random family)")
    g.add_argument("-o", "--output", help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="compute a reduced Groebner basis and report counts")
    s.add_argument("input", help=".gbsys file or benchmark name such as hcyclic-5")
    s.add_argument("--strategy", choices=STRATEGIES, default="selective-full")
    s.add_argument("--rewrite", choices=REWRITES, default=ADD)
    s.add_argument("--format", choices=("table", "csv", "json"), default="table")
    s.add_argument("--timing", action="store_true", help="include wall time in csv/json output")
    s.add_argument("--validate", action="store_true", help="assert reduction invariants while running")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="strategy x rewrite-order count tables")
    b.add_argument("suite", nargs="?", help="TOML suite file (keys: systems, files, homogeneous, "
                                            "timeout, check, jobs)")
    b.add_argument("--systems", nargs="*", help="benchmark names, e.g. cyclic-5 'random(5,2)#1'")
    b.add_argument("--files", nargs="*", help=".gbsys files to include")
    b.add_argument("--homogeneous", choices=("yes", "no", "both"))
    b.add_argument("--check", action="store_true", help="verify each cell against the oracle")
    b.add_argument("--timeout", type=float, help="seconds per cell (default 300, 0 disables)")
    b.add_argument("--jobs", type=int, help="benchmarks run in parallel (default 1)")
    b.add_argument("--csv", help="write raw counts as CSV to this path ('-' for stdout)")
    b.add_argument("--validate", action="store_true")
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("check", help="all six configurations and the oracle must agree")
    c.add_argument("input", help=".gbsys file or benchmark name")
    c.add_argument("--oracle-timeout", type=float, default=120.0,
                   help="skip the oracle after this many seconds (default 120)")
    c.add_argument("--validate", action="store_true")
    c.set_defaults(func=cmd_check)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print("sigreduce: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (SystemSyntaxError, OSError) as exc:
        print("sigreduce: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
