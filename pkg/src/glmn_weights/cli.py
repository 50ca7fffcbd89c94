"""Command-line interface: JSON/JSONL/CSV plumbing around the library.

Subcommands: transform, classify, orbit-rep, roots, enumerate, verify.
Weights travel as {"lambda": [...], "theta": [...]} JSON objects, one per
line.  Exit codes: 0 success, 1 verification failure or bad input lines,
2 usage/validation error, 3 capacity/limit error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field

from . import oracle
from .classify import (
    GroupConvention,
    is_mixed_highest_weight,
    is_relevant_orbit,
    is_standard_dominant,
    orbit_representative,
)
from .core import CapacityError, Modulus, SuperRank, ValidationError, Weight
from .oracle import Box
from .roots import BorelWord, excess_pairs, hasse_edges, mixed_word, positive_roots, standard_word
from .serganova import StepOrder, forward, inverse, order_v1, order_v2

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


@dataclass
class RunConfig:
    command: str
    rank: SuperRank
    p: Modulus | None = None
    convention: GroupConvention = GroupConvention.UPLUS
    direction: str = "forward"
    order: StepOrder | None = None
    omega: BorelWord | None = None
    box: Box | None = None
    checks: tuple[str, ...] = ()
    fmt: str = "jsonl"
    trace: bool = False
    filter_name: str = "all"
    cap: int = oracle.DEFAULT_EXTENSION_CAP
    limit: int = oracle.DEFAULT_LIMIT
    failure_cap: int = oracle.DEFAULT_FAILURE_CAP
    errors: list[str] = field(default_factory=list)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glmn-weights",
        description="GL(M|N) weight transforms, classification predicates, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rank(sp):
        sp.add_argument("--M", type=int, required=True, help="number of even basis vectors")
        sp.add_argument("--N", type=int, required=True, help="number of odd basis vectors")

    def add_p(sp):
        sp.add_argument("--p", type=int, required=True, help="modulus: 0 (exact) or a prime")

    sp = sub.add_parser("transform", help="run the transform on weights from stdin")
    add_rank(sp)
    add_p(sp)
    sp.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    sp.add_argument("--order", default="v1", help="v1, v2, or file:PATH with a JSON pair list")
    sp.add_argument("--trace", action="store_true", help="include the step trace in the output")
    sp.add_argument("--format", dest="fmt", choices=("jsonl", "json"), default="jsonl")

    sp = sub.add_parser("classify", help="classify weights from stdin")
    add_rank(sp)
    add_p(sp)
    sp.add_argument("--convention", choices=("uminus", "uplus"), default="uplus")
    sp.add_argument("--format", dest="fmt", choices=("jsonl", "json", "csv"), default="jsonl")

    sp = sub.add_parser("orbit-rep", help="emit orbit representative matrices for stdin weights")
    add_rank(sp)
    sp.add_argument("--format", dest="fmt", choices=("jsonl", "json"), default="jsonl")

    sp = sub.add_parser("roots", help="print positive roots, excess pairs, and their Hasse relation")
    add_rank(sp)
    sp.add_argument(
        "--omega",
        default="standard",
        help="Borel word: standard, mixed, or a comma-separated permutation of 1..M+N",
    )

    sp = sub.add_parser("enumerate", help="stream every weight in a coordinate box")
    add_rank(sp)
    sp.add_argument("--box", required=True, help="coordinate range LO:HI")
    sp.add_argument(
        "--filter",
        dest="filter_name",
        choices=("all", "dominant", "mixed", "relevant"),
        default="all",
    )
    sp.add_argument("--p", type=int, default=0, help="modulus for mixed/relevant filters")
    sp.add_argument("--convention", choices=("uminus", "uplus"), default="uplus")
    sp.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT)
    sp.add_argument("--format", dest="fmt", choices=("jsonl", "json", "csv"), default="jsonl")

    sp = sub.add_parser("verify", help="run exhaustive checks over a coordinate box")
    add_rank(sp)
    add_p(sp)
    sp.add_argument("--box", required=True, help="coordinate range LO:HI")
    sp.add_argument(
        "--check",
        choices=("image", "order", "theorem", "trace", "all"),
        default="all",
    )
    sp.add_argument("--cap", type=int, default=oracle.DEFAULT_EXTENSION_CAP,
                    help="max linear extensions for the order check")
    sp.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT,
                    help="max box cardinality per check")
    sp.add_argument("--failure-cap", type=int, default=oracle.DEFAULT_FAILURE_CAP,
                    help="max counterexamples kept per report")
    return parser


def _merge_box_values(argv: list[str]) -> list[str]:
    # argparse treats "-2:2" as an option; fold "--box -2:2" into "--box=-2:2".
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--box":
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"--box={nxt}")
        else:
            out.append(tok)
    return out


def _parse_box(text: str) -> Box:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValidationError(f"box must be LO:HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValidationError(f"box bounds must be integers, got {text!r}") from None
    return Box(lo, hi)


def _parse_order(spec: str, M: int) -> StepOrder:
    if spec == "v1":
        return order_v1(M)
    if spec == "v2":
        return order_v2(M)
    if spec.startswith("file:"):
        path = spec[len("file:") :]
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ValidationError(f"cannot read order file {path!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValidationError(f"order file {path!r} is not valid JSON: {exc}") from exc
        if not isinstance(data, list):
            raise ValidationError(f"order file {path!r} must hold a JSON array of [i, j] pairs")
        return StepOrder(M, tuple(tuple(pair) for pair in data))
    raise ValidationError(f"order must be v1, v2, or file:PATH, got {spec!r}")


def _parse_omega(spec: str, rank: SuperRank) -> BorelWord:
    if spec == "standard":
        return standard_word(rank)
    if spec == "mixed":
        return mixed_word(rank)
    try:
        word = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise ValidationError(f"omega must be standard, mixed, or a comma list, got {spec!r}") from None
    w = BorelWord(word)
    if len(word) != rank.total:
        raise ValidationError(f"omega has length {len(word)}, rank total is {rank.total}")
    return w


def parse_args(argv: list[str]) -> RunConfig:
    """Parse and fully validate argv; all validation failures are collected
    and reported together."""
    ns = _build_parser().parse_args(_merge_box_values(argv))
    errors: list[str] = []

    rank = None
    try:
        rank = SuperRank(ns.M, ns.N)
    except ValidationError as exc:
        errors.append(str(exc))

    p = None
    if hasattr(ns, "p"):
        try:
            p = Modulus(ns.p)
        except ValidationError as exc:
            errors.append(str(exc))

    box = None
    if getattr(ns, "box", None) is not None:
        try:
            box = _parse_box(ns.box)
        except ValidationError as exc:
            errors.append(str(exc))

    order = None
    if ns.command == "transform" and rank is not None:
        try:
            order = _parse_order(ns.order, rank.M)
        except ValidationError as exc:
            errors.append(str(exc))

    omega = None
    if ns.command == "roots" and rank is not None:
        try:
            omega = _parse_omega(ns.omega, rank)
        except ValidationError as exc:
            errors.append(str(exc))

    checks: tuple[str, ...] = ()
    if ns.command == "verify":
        checks = oracle.CHECK_NAMES if ns.check == "all" else (ns.check,)
        if p is not None and p.p == 0 and "theorem" in checks:
            errors.append(
                "the theorem check requires a prime modulus; "
                "select --check image/order/trace for p=0"
            )

    if errors:
        raise ValidationError("; ".join(errors))
    assert rank is not None
    return RunConfig(
        command=ns.command,
        rank=rank,
        p=p,
        convention=GroupConvention(getattr(ns, "convention", "uplus")),
        direction=getattr(ns, "direction", "forward"),
        order=order,
        omega=omega,
        box=box,
        checks=checks,
        fmt=getattr(ns, "fmt", "jsonl"),
        trace=getattr(ns, "trace", False),
        filter_name=getattr(ns, "filter_name", "all"),
        cap=getattr(ns, "cap", oracle.DEFAULT_EXTENSION_CAP),
        limit=getattr(ns, "limit", oracle.DEFAULT_LIMIT),
        failure_cap=getattr(ns, "failure_cap", oracle.DEFAULT_FAILURE_CAP),
    )


def _input_weights(fin, rank, ferr):
    """Yield (lineno, weight) for each stdin line; report bad lines and keep
    going.  Yields (lineno, None) for a bad line so callers can track it."""
    for lineno, line in enumerate(fin, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            print(f"line {lineno}: invalid JSON: {exc}", file=ferr)
            yield lineno, None
            continue
        try:
            yield lineno, Weight.from_json_dict(obj, rank)
        except ValidationError as exc:
            print(f"line {lineno}: {exc}", file=ferr)
            yield lineno, None


class _Emitter:
    """Writes output objects as JSONL (default), a JSON array, or CSV."""

    def __init__(self, fmt, fout, csv_columns=None, csv_row=None):
        self.fmt = fmt
        self.fout = fout
        self.csv_columns = csv_columns
        self.csv_row = csv_row
        self.collected = []
        self.writer = None

    def emit(self, obj):
        if self.fmt == "jsonl":
            print(json.dumps(obj), file=self.fout)
        elif self.fmt == "json":
            self.collected.append(obj)
        else:
            if self.writer is None:
                self.writer = csv.writer(self.fout, lineterminator="\n")
                self.writer.writerow(self.csv_columns)
            self.writer.writerow(self.csv_row(obj))

    def close(self):
        if self.fmt == "json":
            print(json.dumps(self.collected), file=self.fout)


def _weight_columns(rank):
    return [f"lambda_{i}" for i in range(1, rank.M + 1)] + [
        f"theta_{i}" for i in range(1, rank.N + 1)
    ]


def _trace_json(tr):
    return [
        {
            "k": rec.k,
            "pair": [rec.pair.i, rec.pair.j],
            "action": rec.action.value,
            "sum_before": rec.sum_before,
            "state_after": rec.state_after.to_json_dict(),
        }
        for rec in tr.records
    ]


def _run_transform(config, fin, fout, ferr):
    fn = forward if config.direction == "forward" else inverse
    emitter = _Emitter(config.fmt, fout)
    had_errors = False
    for _, w in _input_weights(fin, config.rank, ferr):
        if w is None:
            had_errors = True
            continue
        out, tr = fn(w, config.p, config.order, config.rank)
        obj = out.to_json_dict()
        if config.trace:
            obj["trace"] = _trace_json(tr)
        emitter.emit(obj)
    emitter.close()
    return EXIT_FAILURES if had_errors else EXIT_OK


def _run_classify(config, fin, fout, ferr):
    rank, p = config.rank, config.p
    emitter = _Emitter(
        config.fmt,
        fout,
        csv_columns=_weight_columns(rank)
        + ["standard_dominant", "mixed_highest_weight", "relevant"],
        csv_row=lambda obj: list(obj["weight"]["lambda"])
        + list(obj["weight"]["theta"])
        + [
            str(obj["standard_dominant"]).lower(),
            str(obj["mixed_highest_weight"]).lower(),
            str(obj["relevant"]).lower(),
        ],
    )
    had_errors = False
    for _, w in _input_weights(fin, rank, ferr):
        if w is None:
            had_errors = True
            continue
        emitter.emit(
            {
                "weight": w.to_json_dict(),
                "standard_dominant": is_standard_dominant(w, rank),
                "mixed_highest_weight": is_mixed_highest_weight(w, rank, p),
                "relevant": is_relevant_orbit(w, rank, p, config.convention),
            }
        )
    emitter.close()
    return EXIT_FAILURES if had_errors else EXIT_OK


def _run_orbit_rep(config, fin, fout, ferr):
    emitter = _Emitter(config.fmt, fout)
    had_errors = False
    for _, w in _input_weights(fin, config.rank, ferr):
        if w is None:
            had_errors = True
            continue
        emitter.emit(orbit_representative(w, config.rank).to_json_dict())
    emitter.close()
    return EXIT_FAILURES if had_errors else EXIT_OK


def _run_roots(config, fin, fout, ferr):
    rank = config.rank
    obj = {
        "M": rank.M,
        "N": rank.N,
        "omega": list(config.omega.word),
        "positive_roots": [list(r) for r in sorted(positive_roots(config.omega, rank))],
        "excess_pairs": [list(pq) for pq in excess_pairs(rank)],
        "hasse": [[list(x), list(y)] for x, y in hasse_edges(rank.M)],
    }
    print(json.dumps(obj), file=fout)
    return EXIT_OK


def _run_enumerate(config, fin, fout, ferr):
    rank, p = config.rank, config.p
    predicate = None
    if config.filter_name == "dominant":
        predicate = lambda w: is_standard_dominant(w, rank)
    elif config.filter_name == "mixed":
        predicate = lambda w: is_mixed_highest_weight(w, rank, p)
    elif config.filter_name == "relevant":
        predicate = lambda w: is_relevant_orbit(w, rank, p, config.convention)
    emitter = _Emitter(
        config.fmt,
        fout,
        csv_columns=_weight_columns(rank),
        csv_row=lambda obj: list(obj["lambda"]) + list(obj["theta"]),
    )
    for w in oracle.enumerate_box(rank, config.box, predicate, limit=config.limit):
        emitter.emit(w.to_json_dict())
    emitter.close()
    return EXIT_OK


def _run_verify(config, fin, fout, ferr):
    all_passed = True
    for name in config.checks:
        report = oracle.run_check(
            name,
            config.rank,
            config.p,
            config.box,
            cap=config.cap,
            limit=config.limit,
            failure_cap=config.failure_cap,
        )
        obj = report.to_json_dict()
        obj["params"] = {
            "M": config.rank.M,
            "N": config.rank.N,
            "p": config.p.p,
            "box": [config.box.lo, config.box.hi],
        }
        print(json.dumps(obj), file=fout)
        all_passed = all_passed and report.passed
    return EXIT_OK if all_passed else EXIT_FAILURES


_RUNNERS = {
    "transform": _run_transform,
    "classify": _run_classify,
    "orbit-rep": _run_orbit_rep,
    "roots": _run_roots,
    "enumerate": _run_enumerate,
    "verify": _run_verify,
}


def run(config: RunConfig, fin, fout, ferr) -> int:
    """Dispatch a validated config against the given streams."""
    return _RUNNERS[config.command](config, fin, fout, ferr)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    fin = stdin if stdin is not None else sys.stdin
    fout = stdout if stdout is not None else sys.stdout
    ferr = stderr if stderr is not None else sys.stderr
    try:
        config = parse_args(argv)
    except SystemExit as exc:  # argparse usage error or --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=ferr)
        return EXIT_USAGE
    try:
        return run(config, fin, fout, ferr)
    except (ValidationError, OverflowError) as exc:
        print(f"error: {exc}", file=ferr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=ferr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    raise SystemExit(main())
