"""Command-line frontend.

Exit codes: 0 success, 1 formula/oracle disagreement under ``--verify``,
2 usage or equation error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from .eqdsl import Equation, parse_equation, render, validate
from .equations import SolutionMode
from .errors import BudgetExceeded, EquationError, RainbowRadoError
from .gallai_rado import gr_dispatch, rado_nonexistence_check, verify_notexist
from .lambda_classes import lambda_classes
from .oracle import DEFAULT_BUDGET, SearchConfig, SearchStats, oracle_gr, oracle_rado, oracle_rb
from .rainbow import mu_algorithm2, rb_general, rb_linear
from .verdicts import NotExist, Value, verdict_to_json

log = logging.getLogger("rainbowrado")

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mode", choices=["distinct", "repeats"], default=None)
    p.add_argument("--format", choices=["json", "csv", "table"], default=None)
    p.add_argument("--out", default=None, help="write the report to FILE instead of stdout")
    p.add_argument("--trace", action="store_true", default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--config", default=None, help="key=value file merged under the flags")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="rainbowrado", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and validate an equation")
    p.add_argument("--eq", required=True)

    p = sub.add_parser("classes", parents=[common], help="dump the lambda-classes of y=f(x) in [n]")
    p.add_argument("--eq", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("rb", parents=[common], help="rainbow number rb([n], y=f(x))")
    p.add_argument("--eq", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check with the exhaustive oracle")

    p = sub.add_parser("mu", parents=[common], help="monochromatic parameter of y=f(x) and n")
    p.add_argument("--eq", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("gr", parents=[common], help="Gallai-Rado number GR_k(rainbow : mono)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rainbow", required=True)
    p.add_argument("--mono", required=True)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--verify", action="store_true", help="cross-check with the avoider oracle")

    p = sub.add_parser("rado-nonexist", parents=[common], help="check the block coloring for y=ax+b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--nmax", type=int, default=10**4)

    p = sub.add_parser("oracle-rb", parents=[common], help="rainbow number by exhaustive search")
    p.add_argument("--eq", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("oracle-rado", parents=[common], help="Rado number by backtracking search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eq", required=True)
    p.add_argument("--nmax", type=int, default=None)

    p = sub.add_parser("oracle-gr", parents=[common], help="Gallai-Rado avoider scan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rainbow", required=True)
    p.add_argument("--mono", required=True)
    p.add_argument("--nmax", type=int, default=None)
    return parser


def _read_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value.strip("\"'")
    return out


_DEFAULTS = {"format": "table", "trace": False, "jobs": 1, "budget": DEFAULT_BUDGET}
_INT_KEYS = {"jobs", "budget", "nmax", "n", "k", "a", "b"}


def _merge_config(args: argparse.Namespace):
    cfg = _read_config(args.config) if args.config else {}
    for key, value in cfg.items():
        if getattr(args, key, None) is None:
            if key in _INT_KEYS:
                value = int(value)
            elif key == "trace":
                value = value.lower() in ("1", "true", "yes")
            setattr(args, key, value)
    for key, value in _DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _equation(text: str) -> Equation:
    return validate(parse_equation(text))


def _search_config(args, default_mode: str, default_nmax: int) -> SearchConfig:
    return SearchConfig(
        n_max=args.nmax if getattr(args, "nmax", None) is not None else default_nmax,
        mode=SolutionMode(args.mode or default_mode),
        parallelism=args.jobs,
        budget=args.budget,
    )


# -- subcommand handlers: each returns (json report, table rows, exit code) -----


def cmd_parse(args):
    parsed = parse_equation(args.eq)
    report = {"input": args.eq, "kind": parsed.kind.value, "canonical": render(parsed)}
    if parsed.is_binary:
        report["poly"] = list(parsed.coeffs)
    else:
        report.update(t=len(parsed.coeffs), a=list(parsed.coeffs), c=parsed.constant)
    eq = validate(parsed)
    report["domain_floor"] = eq.domain_floor
    return report, [(k, v) for k, v in report.items()], EXIT_OK


def cmd_classes(args):
    eq = _equation(args.eq)
    classes = lambda_classes(eq, args.n)
    report = {"equation": render(eq), "n": args.n, "classes": [list(c.members) for c in classes]}
    lines = [",".join(map(str, c.members)) for c in classes]
    return report, lines, EXIT_OK


def cmd_rb(args):
    eq = _equation(args.eq)
    params = eq.affine_params()
    if params is not None:
        value, route = rb_linear(params[0], params[1], args.n), "linear-closed-form"
    else:
        value, route = rb_general(eq, args.n), "monochromatic-parameter"
    report = {"equation": render(eq), "n": args.n, "rb": value, "route": route}
    code = EXIT_OK
    if args.verify:
        stats = SearchStats()
        oracle = oracle_rb(args.n, eq, config=_search_config(args, "distinct", args.n), stats=stats)
        report["oracle"] = oracle
        report["agree"] = oracle == value
        _progress(f"oracle-rb: {stats.nodes} nodes")
        code = EXIT_OK if oracle == value else EXIT_DISAGREE
    return report, list(report.items()), code


def cmd_mu(args):
    eq = _equation(args.eq)
    res = mu_algorithm2(eq, args.n, trace=args.trace)
    report = {"equation": render(eq), **res.to_json(), "rb": args.n - res.mu + 1}
    rows = [(k, v) for k, v in report.items() if k != "trace"]
    if res.trace is not None:
        rows += [(f"trace[{i}]", f"t={t} {action}") for i, (t, action) in enumerate(res.trace)]
    return report, rows, EXIT_OK


def cmd_gr(args):
    rainbow = parse_equation(args.rainbow)
    mono = _equation(args.mono)
    is_rado = rainbow.is_binary and rainbow.coeffs == (0, 1)
    cfg = _search_config(args, "repeats" if is_rado else "distinct", 20)
    verdict = gr_dispatch(args.k, rainbow, mono, config=cfg)
    report = {"k": args.k, "rainbow": render(rainbow), "mono": render(mono), **verdict_to_json(verdict)}
    code = EXIT_OK
    if args.verify and not is_rado:
        rainbow_eq = validate(rainbow)
        stats = SearchStats()
        oracle = oracle_gr(args.k, rainbow_eq, mono, config=cfg, stats=stats)
        _progress(f"oracle-gr: {stats.nodes} nodes")
        report["oracle"] = {"candidate": oracle.candidate, "monotone": oracle.monotone, "n_max": oracle.n_max}
        if isinstance(verdict, Value):
            agree = verdict.N > cfg.n_max or (oracle.monotone and oracle.candidate == verdict.N)
        elif isinstance(verdict, NotExist):
            failure = verify_notexist(verdict.rule, rainbow_eq, mono, cfg.mode, max(cfg.n_max, 200))
            agree = failure is None and oracle.candidate is None
            report["oracle"]["rule_failure"] = failure
        else:
            agree = True
        report["agree"] = agree
        code = EXIT_OK if agree else EXIT_DISAGREE
    return report, list(report.items()), code


def cmd_rado_nonexist(args):
    rep = rado_nonexistence_check(args.a, args.b, args.nmax)
    report = rep.to_json()
    return report, list(report.items()), EXIT_OK if rep.verified else EXIT_DISAGREE


def cmd_oracle_rb(args):
    eq = _equation(args.eq)
    stats = SearchStats()
    value = oracle_rb(args.n, eq, config=_search_config(args, "distinct", args.n), stats=stats)
    _progress(f"oracle-rb: {stats.nodes} nodes")
    report = {"equation": render(eq), "n": args.n, "rb": value, "nodes": stats.nodes,
              "mode": args.mode or "distinct"}
    return report, list(report.items()), EXIT_OK


def cmd_oracle_rado(args):
    eq = _equation(args.eq)
    stats = SearchStats()
    cfg = _search_config(args, "repeats", 20)
    verdict = oracle_rado(args.k, eq, config=cfg, stats=stats)
    _progress(f"oracle-rado: {stats.nodes} nodes")
    report = {"k": args.k, "equation": render(eq), **verdict_to_json(verdict), "nodes": stats.nodes}
    return report, list(report.items()), EXIT_OK


def cmd_oracle_gr(args):
    rainbow = _equation(args.rainbow)
    mono = _equation(args.mono)
    cfg = _search_config(args, "distinct", 20)
    stats = SearchStats()
    rep = oracle_gr(args.k, rainbow, mono, config=cfg, stats=stats)
    _progress(f"oracle-gr: {stats.nodes} nodes")
    report = {"rainbow": render(rainbow), "mono": render(mono), **rep.to_json()}
    rows = [("candidate", rep.candidate), ("monotone", rep.monotone), ("nodes", rep.nodes)]
    rows += [(f"avoider[{n}]", c.compact() if c is not None and c.n <= 62 else c)
             for n, c in rep.avoiders.items()]
    return report, rows, EXIT_OK


HANDLERS = {
    "parse": cmd_parse,
    "classes": cmd_classes,
    "rb": cmd_rb,
    "mu": cmd_mu,
    "gr": cmd_gr,
    "rado-nonexist": cmd_rado_nonexist,
    "oracle-rb": cmd_oracle_rb,
    "oracle-rado": cmd_oracle_rado,
    "oracle-gr": cmd_oracle_gr,
}


def _progress(msg: str):
    print(msg, file=sys.stderr)


def _render(report, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if rows and isinstance(rows[0], str):
        # plain line dump (classes)
        if fmt == "csv":
            return "".join(f'"{line}"\n' for line in rows)
        return "".join(line + "\n" for line in rows)
    rows = [(k, json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue()
    width = max((len(str(k)) for k, _ in rows), default=0)
    return "".join(f"{str(k):<{width}}  {v}\n" for k, v in rows)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        _merge_config(args)
        start = time.perf_counter()
        report, rows, code = HANDLERS[args.command](args)
        log.debug("%s finished in %.3fs", args.command, time.perf_counter() - start)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, EquationError, RainbowRadoError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(report, rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
