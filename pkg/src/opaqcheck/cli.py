"""Command-line frontend.

Subcommands::

    opaq check static|orwellian --system FILE (--secret FILE | --secret-re PATTERN)
    opaq check ni|ini --system FILE [--method direct|decomposed|both]
    opaq reduce to-ni|to-ini|from-ini --system FILE [--secret ...] -o FILE
    opaq oracle --system FILE [--secret ...] --obs natural|orwellian --max-len K

Exit codes: 0 the property holds, 1 it is violated (the witness is printed,
one event per token), 2 input or usage error.  ``--report json-lines``
emits one JSON record per sub-check with fields ``state``, ``holds`` and
``witness``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automata import InvalidModel, Lts, format_word, incorporate_secret, render_state
from .interference import check_ini, check_ni
from .modelfile import parse_model, render_model
from .observation import ObservationKind
from .opacity import check_opacity_orwellian, check_opacity_static
from .oracle import oracle_check_opacity
from .reductions import ini_to_opacity, opacity_to_ini, opacity_to_ni
from .regexlang import compile_regex
from .verdicts import SubCheck


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opaq", description="Decide opacity and (intransitive) non-interference for finite transition systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, secret=False, report=True):
        p.add_argument("--system", required=True, help="model file")
        if secret:
            p.add_argument("--secret", help="secret automaton file (same alphabet)")
            p.add_argument("--secret-re", help="secret as a regular expression over declared events")
        if report:
            p.add_argument("--report", choices=["json-lines"], help="machine-readable per-sub-check records")

    check = sub.add_parser("check", help="decide a property")
    check.add_argument("property", choices=["static", "orwellian", "ni", "ini"])
    add_common(check, secret=True)
    check.add_argument("--method", choices=["direct", "decomposed", "both"], default="both", help="INI method")

    reduce_p = sub.add_parser("reduce", help="translate a problem into another one")
    reduce_p.add_argument("direction", choices=["to-ni", "to-ini", "from-ini"])
    add_common(reduce_p, secret=True, report=False)
    reduce_p.add_argument("-o", "--output", required=True, help="where to write the produced model")

    oracle_p = sub.add_parser("oracle", help="bounded brute-force evaluation, for auditing the deciders")
    oracle_p.add_argument("--obs", choices=["natural", "orwellian"], required=True)
    oracle_p.add_argument("--max-len", type=int, default=10)
    add_common(oracle_p, secret=True)

    return parser


def _load_system(args) -> Lts:
    return parse_model(Path(args.system).read_text())


def _with_secret(args, system: Lts) -> Lts:
    """Fold the requested secret in; fall back to a file-declared Fphi."""
    if getattr(args, "secret", None) and getattr(args, "secret_re", None):
        raise InvalidModel("give either --secret or --secret-re, not both")
    if getattr(args, "secret", None):
        secret = parse_model(Path(args.secret).read_text())
        name = "Fphi" if "Fphi" in secret.accepting_sets else "F"
        return incorporate_secret(system, "F", secret, name)
    if getattr(args, "secret_re", None):
        return incorporate_secret(system, "F", compile_regex(args.secret_re, system.alphabet), "F")
    if "Fphi" in system.accepting_sets:
        return system
    raise InvalidModel("no secret: give --secret or --secret-re, or declare Fphi in the system file")


def _emit(verdict, checked: Lts, report: str | None) -> int:
    breakdown = tuple(verdict.breakdown) or (SubCheck(checked.initial, verdict.holds, verdict.witness),)
    if report == "json-lines":
        for sub in breakdown:
            print(json.dumps({
                "state": render_state(sub.state),
                "holds": sub.holds,
                "witness": format_word(sub.witness) if sub.witness is not None else None,
            }))
    else:
        print("holds" if verdict.holds else "violated")
        print(format_word(verdict.witness) if verdict.witness is not None else "")
        if verdict.breakdown:
            for sub in verdict.breakdown:
                tail = f": {format_word(sub.witness)}" if sub.witness is not None else ""
                print(f"q={render_state(sub.state)} {'holds' if sub.holds else 'violated'}{tail}")
    return 0 if verdict.holds else 1


def _run_check(args) -> int:
    system = _load_system(args)
    if args.property == "static":
        checked = _with_secret(args, system)
        return _emit(check_opacity_static(checked), checked, args.report)
    if args.property == "orwellian":
        checked = _with_secret(args, system)
        return _emit(check_opacity_orwellian(checked), checked, args.report)
    if args.property == "ni":
        return _emit(check_ni(system), system, args.report)
    return _emit(check_ini(system, args.method), system, args.report)


def _run_reduce(args) -> int:
    system = _load_system(args)
    if args.direction == "to-ni":
        out = opacity_to_ni(_with_secret(args, system))
    elif args.direction == "to-ini":
        out = opacity_to_ini(_with_secret(args, system))
    else:
        out = ini_to_opacity(system)
    Path(args.output).write_text(render_model(out.lts))
    return 0


def _run_oracle(args) -> int:
    if args.max_len < 0:
        raise InvalidModel("--max-len must be non-negative")
    checked = _with_secret(args, _load_system(args))
    alpha = checked.alphabet
    if args.obs == "natural":
        kind = ObservationKind.natural(alpha.observable)
    else:
        kind = ObservationKind.orwellian(alpha.observable, alpha.downgrading)
    verdict = oracle_check_opacity(checked, kind, args.max_len)
    if verdict.approximate:
        print("note: bound below the exactness bound; a holds verdict may be approximate", file=sys.stderr)
    return _emit(verdict, checked, args.report)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "check":
            return _run_check(args)
        if args.command == "reduce":
            return _run_reduce(args)
        return _run_oracle(args)
    except (InvalidModel, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
