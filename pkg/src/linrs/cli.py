"""Command line front end.

    linrs info         --p 2 --m 4 --d 1 --k 3
    linrs distribution --p 2 --m 2 --d 1 --k 2 --format json
    linrs hierarchy    --p 3 --m 2 --d 1 --k 2 --format csv
    linrs encode       --p 2 --m 2 --d 1 --k 2 --message 1 0
    linrs verify       [--grid FILE] [--cap N] [--workers N]

Exit status: 0 success, 2 invalid input, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bruteforce import DEFAULT_ENUMERATION_CAP, brute_distribution, check_enumeration
from .closedform import full_distribution
from .code import check_message, encode
from .errors import InvalidParameters
from .field import DEFAULT_TABLE_CAP, build_field
from .params import CodeParams
from .qcomb import gauss_binomial

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3

DEFAULT_GRID = (
    (2, 2, 1, 2), (2, 3, 1, 2), (2, 3, 1, 3), (2, 4, 1, 2), (2, 4, 1, 3), (2, 4, 1, 4),
    (2, 4, 2, 2), (2, 6, 2, 2), (2, 6, 2, 3), (3, 2, 1, 2), (3, 3, 1, 3), (5, 2, 1, 2),
)

CSV_COLUMNS = ["p", "m", "d", "e", "k", "r", "i", "weight", "count"]

# verify compares brute force against this; tests swap it for fault injection
closed_form = full_distribution


@dataclass
class RunConfig:
    subcommand: str
    params: CodeParams | None
    output_format: str = "json"
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    grid: list[CodeParams] | None = None
    output_path: str | None = None
    r: int | None = None
    message: list[int] | None = None
    workers: int = 1


def read_grid(path: str) -> list[CodeParams]:
    """One ``p m d k`` tuple per line; blank lines and ``#`` comments skipped."""
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4:
                raise InvalidParameters(f"{path}:{lineno}: expected 'p m d k', got {line!r}")
            try:
                out.append(CodeParams(*map(int, parts)))
            except ValueError as exc:
                raise InvalidParameters(f"{path}:{lineno}: {exc}") from None
    return out


# -- renderers ----------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_distribution(report, fmt: str, r: int | None = None) -> str:
    rows = [x for x in report.rows if r is None or x.r == r]
    if fmt == "json":
        data = report.to_dict()
        data["rows"] = [row for row in data["rows"] if r is None or row["r"] == r]
        return _dump_json(data)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    P = report.params
    for x in rows:
        w.writerow([P.p, P.m, P.d, P.e, P.k, x.r, x.i, x.weight, x.count])
    return buf.getvalue()


def render_hierarchy(report, fmt: str) -> str:
    if fmt == "json":
        return _dump_json({"params": report.params.to_dict(), "hierarchy": list(report.hierarchy)})
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "m", "d", "e", "k", "r", "d_r"])
    P = report.params
    for r, dr in enumerate(report.hierarchy, 1):
        w.writerow([P.p, P.m, P.d, P.e, P.k, r, dr])
    return buf.getvalue()


# -- subcommands ----------------------------------------------------------------

def run_info(cfg: RunConfig) -> tuple[int, str]:
    P = cfg.params
    info = {"params": P.to_dict(), "q": P.q, "subfield_q": P.sub_q,
            "dimension_over_subfield": P.ext_degree,
            "subspace_counts": {str(r): str(gauss_binomial(P.k, r, P.q)) for r in range(1, P.k + 1)}}
    if P.q <= DEFAULT_TABLE_CAP:
        ctx = build_field(P)
        info["field"] = {"modulus": list(ctx.modulus), "pi": ctx.pi,
                         "subfield_elements": ctx.subfield_elements(),
                         "subfield_basis": list(ctx.subfield_basis)}
    return EXIT_OK, _dump_json(info)


def run_distribution(cfg: RunConfig) -> tuple[int, str]:
    if cfg.r is not None and not 1 <= cfg.r <= cfg.params.k:
        raise InvalidParameters(f"r must satisfy 1 <= r <= k (got r={cfg.r})")
    return EXIT_OK, render_distribution(full_distribution(cfg.params), cfg.output_format, cfg.r)


def run_hierarchy(cfg: RunConfig) -> tuple[int, str]:
    return EXIT_OK, render_hierarchy(full_distribution(cfg.params), cfg.output_format)


def run_encode(cfg: RunConfig) -> tuple[int, str]:
    ctx = build_field(cfg.params)
    msg = check_message(ctx, cfg.message or [])
    word = encode(ctx, msg)
    if cfg.output_format == "json":
        return EXIT_OK, _dump_json({"params": cfg.params.to_dict(), "message": msg, "codeword": word})
    return EXIT_OK, ",".join(map(str, word)) + "\n"


def _brute_point(params: CodeParams, cap: int, r_filter):
    ctx = build_field(params)
    rs = [r_filter] if r_filter else range(1, params.k + 1)
    return {r: brute_distribution(ctx, r, cap) for r in rs}


def run_verify(cfg: RunConfig) -> tuple[int, str]:
    grid = cfg.grid if cfg.grid is not None else [CodeParams(*g) for g in DEFAULT_GRID]
    # all validation happens before any enumeration starts
    for P in grid:
        if P.q > DEFAULT_TABLE_CAP:
            raise InvalidParameters(f"p^m = {P.q} too large for field tables at {P.as_tuple()}")
        if cfg.r is not None and not 1 <= cfg.r <= P.k:
            raise InvalidParameters(f"r={cfg.r} out of range at {P.as_tuple()}")
        for r in ([cfg.r] if cfg.r else range(1, P.k + 1)):
            check_enumeration(build_field(P), r, cfg.enumeration_cap)

    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_brute_point, P, cfg.enumeration_cap, cfg.r) for P in grid]
            brute = [f.result() for f in futures]
    else:
        brute = [_brute_point(P, cfg.enumeration_cap, cfg.r) for P in grid]

    lines = []
    results = []
    mismatches = []
    for P, got in zip(grid, brute):
        expected = closed_form(P).by_r()
        point_bad = []
        for r, dist in got.items():
            exp_r = expected.get(r, {})
            for w in sorted(set(dist) | set(exp_r), reverse=True):
                if dist.get(w, 0) != exp_r.get(w, 0):
                    point_bad.append({"params": list(P.as_tuple()), "r": r, "weight": w,
                                      "brute": str(dist.get(w, 0)), "closed_form": str(exp_r.get(w, 0))})
        status = "FAIL" if point_bad else "PASS"
        lines.append(f"{status} p={P.p} m={P.m} d={P.d} k={P.k}")
        for bad in point_bad:
            lines.append(f"  mismatch r={bad['r']} weight={bad['weight']}: "
                         f"brute={bad['brute']} closed_form={bad['closed_form']}")
        results.append({"params": list(P.as_tuple()), "status": status})
        mismatches.extend(point_bad)
    summary = {"points": len(grid), "passed": sum(x["status"] == "PASS" for x in results),
               "failed": sum(x["status"] == "FAIL" for x in results),
               "results": results, "mismatches": mismatches}
    text = "\n".join(lines) + "\n" + json.dumps(summary) + "\n"
    return (EXIT_MISMATCH if mismatches else EXIT_OK), text


COMMANDS = {
    "info": run_info,
    "distribution": run_distribution,
    "hierarchy": run_hierarchy,
    "encode": run_encode,
    "verify": run_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linrs", description="Higher weight distributions of linearized Reed-Solomon codes.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        need = name != "verify"
        for flag in ("p", "m", "d", "k"):
            sp.add_argument(f"--{flag}", type=int, required=need)
        sp.add_argument("--r", type=int, default=None, help="restrict to one dimension")
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="enumeration cap")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        if name == "verify":
            sp.add_argument("--grid", default=None, help="file of 'p m d k' lines")
            sp.add_argument("--workers", type=int, default=1)
        if name == "encode":
            sp.add_argument("--message", type=int, nargs="*", default=[], help="k element indices")
    return parser


def config_from_args(args) -> RunConfig:
    params = None
    grid = None
    if args.subcommand == "verify":
        given = [getattr(args, f) for f in ("p", "m", "d", "k")]
        if args.grid:
            grid = read_grid(args.grid)
        elif all(v is not None for v in given):
            grid = [CodeParams(*given)]
        elif any(v is not None for v in given):
            raise InvalidParameters("verify needs all of --p --m --d --k, or --grid")
    else:
        params = CodeParams(args.p, args.m, args.d, args.k)
    return RunConfig(
        subcommand=args.subcommand, params=params, output_format=args.format,
        enumeration_cap=args.cap, grid=grid, output_path=args.out, r=args.r,
        message=getattr(args, "message", None), workers=getattr(args, "workers", 1),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        status, text = COMMANDS[cfg.subcommand](cfg)
    except InvalidParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
