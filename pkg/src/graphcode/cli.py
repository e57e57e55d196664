"""Command-line entry point: ``graphcode {convert,verify,crosscheck,export}``.

Exit codes: 0 verified or in agreement, 1 verification failed, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coincidence import CoincidenceMatrix, InvalidXi
from .exports import FORMATS, UnknownFormat, XiFileError, dumps_json, export, format_matrix, load_xi
from .detection import verify_correction
from .oracle import DEFAULT_CAP, TooManyQubits, cross_validate
from .pipeline import PipelineError, detection_to_dict, oracle_codespace
from .pipeline import convert as convert_code
from .stabilizer import CodeFileError, load_code

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _fmt_e(config) -> str:
    return "{" + ",".join(str(v + 1) for v in config) + "}"


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _load_code(path: str):
    try:
        return load_code(path)
    except CodeFileError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load_xi(path: str) -> CoincidenceMatrix:
    try:
        return load_xi(path)
    except (XiFileError, InvalidXi, ValueError, KeyError) as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def cmd_convert(args) -> int:
    code = _load_code(args.code)
    record = convert_code(code)
    out = Path(args.out) if args.out else Path(Path(args.code).stem)
    cm = record.coincidence
    _write(out / "gamma.txt", format_matrix(cm.gamma.adjacency))
    _write(out / "xi.txt", export(cm, "matrix"))
    _write(out / "xi.json", export(cm, "json"))
    _write(out / "graph.dot", export(cm, "dot", code.name or "graphcode"))
    _write(out / "record.json", dumps_json(record.to_dict()))
    print(f"code: [[{code.n},{code.k}]] {code.name}")
    print(f"hadamard subset: {[q + 1 for q in record.hadamard_set]}")
    print(f"lc sequence: {[v + 1 for v in record.lc_sequence]}")
    rep = record.conditions
    print(f"attachment conditions: i={rep.cond_i} ii={rep.cond_ii} iii={rep.cond_iii}")
    print(f"wrote {out}/{{gamma.txt,xi.txt,xi.json,graph.dot,record.json}}")
    return EXIT_OK


def _print_detection(report) -> None:
    print(f"{'E':<14} strong weak")
    for v in report.per_config:
        print(f"{_fmt_e(v.config):<14} {int(v.strong):>6} {int(v.weak):>4}")
    total = len(report.per_config)
    print(f"{report.mode}: {report.detected}/{total} configurations detectable")


def cmd_verify(args) -> int:
    cm = _load_xi(args.xi)
    if 2 * args.e > cm.n:
        raise InputError(f"2e = {2 * args.e} exceeds the {cm.n} output vertices")
    report = verify_correction(cm, args.e, args.mode, args.threads)
    _print_detection(report)
    if args.json:
        _write(Path(args.json), dumps_json(detection_to_dict(report)))
    if report.ok:
        print(f"corrects e={args.e}")
        return EXIT_OK
    print(f"first failing E: {_fmt_e(report.first_failure.config)}")
    return EXIT_FAIL


def cmd_crosscheck(args) -> int:
    code = _load_code(args.code)
    if code.n > args.oracle_cap:
        raise TooManyQubits(code.n, args.oracle_cap)
    record = convert_code(code)
    cs = oracle_codespace(code, args.oracle_cap)
    agreement = cross_validate(record.coincidence, cs, args.e, args.mode)
    record.agreement = agreement
    print(f"{'E':<14} graph oracle")
    for config, g, o in agreement.rows:
        mark = "" if g == o else "  <- disagree"
        print(f"{_fmt_e(config):<14} {int(g):>5} {int(o):>6}{mark}")
    print(f"{len(agreement.disagreements)} disagreements over {len(agreement.rows)} configurations")
    if args.json:
        _write(Path(args.json), dumps_json(record.to_dict()))
    return EXIT_OK if agreement.ok else EXIT_FAIL


def cmd_export(args) -> int:
    if args.format not in FORMATS:
        raise UnknownFormat(args.format)
    cm = _load_xi(args.input)
    text = export(cm, args.format, Path(args.input).stem)
    if args.output:
        _write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcode",
        description="Convert stabilizer codes to graph codes and verify error detection.",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized harnesses")
    parser.add_argument("--threads", type=int, default=1, help="worker threads for detection")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="realize, standardize and attach inputs")
    p.add_argument("code", help="code definition file")
    p.add_argument("-o", "--out", help="output directory (default: code file stem)")
    p.set_defaults(func=cmd_convert)

    def add_check_flags(p):
        p.add_argument("--e", type=int, default=1, help="number of correctable errors")
        p.add_argument("--mode", choices=("strong", "weak"), default="strong")
        p.add_argument("--json", help="also write a machine-readable report here")

    p = sub.add_parser("verify", help="check detection of every |E| <= 2e")
    p.add_argument("xi", help="coincidence matrix (text, JSON, or pipeline record)")
    add_check_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crosscheck", help="compare graph verdicts with the state-vector oracle")
    p.add_argument("code", help="code definition file")
    add_check_flags(p)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP, help="largest n simulated")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("export", help="write a coincidence matrix as dot, json or matrix")
    p.add_argument("input", help="coincidence matrix or pipeline record")
    p.add_argument("--format", default="dot", help="dot | json | matrix")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UnknownFormat, TooManyQubits) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PipelineError as exc:
        print(f"error in step {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
