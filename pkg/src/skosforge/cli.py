"""Command-line entry point: parse, materialize, check, report.

Grammar::

    skosforge <validate|infer|stats|axioms> [FILES...]
              [--profile reference|rdf-schema|owl-dl-prune]
              [--format text|json] [--trace]
              [--enable ID] [--disable ID] [--config PATH]

Exit codes: 0 clean, 1 at least one error-severity finding (validate), 2
unreadable or unparseable input, 3 usage error. Warnings never affect the
exit code. ``SKOSFORGE_NO_COLOR`` disables ANSI styling;
``SKOSFORGE_TIMING`` opts into real elapsed milliseconds in JSON reports
(zeroed otherwise so reports stay byte-reproducible).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, TextIO

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .graph import Graph
from .guidelines import DEFAULT_RULES, GuidelineRule, check_guidelines
from .inference import materialize
from .integrity import Severity, check_integrity
from .ntriples import ParseError, parse_ntriples, serialize_ntriples, serialize_triple
from .report import (
    InputDigest,
    build_report,
    compute_stats,
    format_report,
    format_stats,
)
from .vocab import Profile, catalog_as_dicts

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_INPUT = 2
EXIT_USAGE = 3

_PROFILES = {p.value: p for p in Profile}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    mode: str
    inputs: list[str] = field(default_factory=list)
    profile: Profile = Profile.REFERENCE
    fmt: str = "text"
    trace: bool = False
    enable: list[str] = field(default_factory=list)
    disable: list[str] = field(default_factory=list)
    config_path: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skosforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="mode", required=True)

    def add_common(p: argparse.ArgumentParser, files: bool) -> None:
        if files:
            p.add_argument("files", nargs="+", metavar="FILES",
                           help="N-Triples input files (merged as graph union)")
            p.add_argument("--profile", choices=sorted(_PROFILES), default="reference",
                           help="axiom profile to materialize under")
        p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")

    validate = sub.add_parser("validate", help="materialize, check, and report findings")
    add_common(validate, files=True)
    validate.add_argument("--enable", action="append", default=[], metavar="ID",
                          help="enable a guideline rule (repeatable)")
    validate.add_argument("--disable", action="append", default=[], metavar="ID",
                          help="disable a guideline rule (repeatable)")
    validate.add_argument("--config", dest="config_path", metavar="PATH",
                          help="TOML file with a [guidelines] section")

    infer = sub.add_parser("infer", help="write the materialized graph as N-Triples")
    add_common(infer, files=True)
    infer.add_argument("--trace", action="store_true",
                       help="write a JSON derivation trace to stderr")

    stats = sub.add_parser("stats", help="vocabulary statistics")
    add_common(stats, files=True)

    axioms = sub.add_parser("axioms", help="dump the S1-S62 axiom catalog")
    add_common(axioms, files=False)
    return parser


def _load_inputs(paths: list[str]) -> tuple[Graph, list[InputDigest]]:
    merged = Graph()
    digests = []
    for path in paths:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(f"{path}: cannot read: {exc.strerror or exc}") from None
        try:
            graph = parse_ntriples(data)
        except ParseError as exc:
            detail = "\n".join(f"{path}:{i.line}:{i.column}: {i.message}" for i in exc.issues)
            raise InputError(detail) from None
        digests.append(InputDigest(path, hashlib.sha256(data).hexdigest(), len(graph)))
        merged.update(graph)
    return merged, digests


def _resolve_rules(config: RunConfig) -> tuple[GuidelineRule, ...]:
    known = {r.id for r in DEFAULT_RULES}

    def check_ids(ids, where):
        unknown = set(ids) - known
        if unknown:
            raise UsageError(f"unknown guideline rule id(s) in {where}: "
                             + ", ".join(sorted(unknown)))

    enabled = {r.id for r in DEFAULT_RULES if r.enabled}
    if config.config_path:
        try:
            with open(config.config_path, "rb") as fh:
                data = tomllib.load(fh)
        except OSError as exc:
            raise InputError(f"{config.config_path}: cannot read: {exc.strerror or exc}") from None
        except tomllib.TOMLDecodeError as exc:
            raise UsageError(f"{config.config_path}: invalid TOML: {exc}") from None
        section = data.get("guidelines", {})
        if not isinstance(section, dict):
            raise UsageError(f"{config.config_path}: [guidelines] must be a table")
        if "enabled" in section:
            check_ids(section["enabled"], "config 'enabled'")
            enabled = set(section["enabled"])
        if "disabled" in section:
            check_ids(section["disabled"], "config 'disabled'")
            enabled -= set(section["disabled"])
    check_ids(config.enable, "--enable")
    check_ids(config.disable, "--disable")
    enabled |= set(config.enable)
    enabled -= set(config.disable)
    return tuple(GuidelineRule(r.id, r.description, r.id in enabled) for r in DEFAULT_RULES)


def _use_color(stream: TextIO) -> bool:
    if os.environ.get("SKOSFORGE_NO_COLOR"):
        return False
    return bool(getattr(stream, "isatty", lambda: False)())


def run(config: RunConfig, stdout: TextIO = None, stderr: TextIO = None) -> int:
    """Execute one CLI run; returns the process exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        return _dispatch(config, stdout, stderr)
    except UsageError as exc:
        print(f"skosforge: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"skosforge: {exc}", file=stderr)
        return EXIT_INPUT


def _dispatch(config: RunConfig, stdout: TextIO, stderr: TextIO) -> int:
    if config.mode == "axioms":
        if config.fmt == "json":
            stdout.write(json.dumps(catalog_as_dicts(), indent=2) + "\n")
        else:
            for row in catalog_as_dicts():
                flags = "".join((
                    "R" if row["in_rdf_schema"] else "-",
                    "D" if row["in_owl_dl_prune"] else "-",
                    "I" if row["is_integrity_condition"] else "-",
                ))
                args = " ".join(f"{a['role']}=<{a['iri']}>" for a in row["arguments"])
                stdout.write(f"{row['id']:<4} {flags} {row['kind']:<27} {args}\n")
        return EXIT_OK

    if not config.inputs:
        raise UsageError(f"{config.mode} requires at least one input file")

    started = time.perf_counter()
    graph, digests = _load_inputs(config.inputs)

    if config.mode == "infer":
        mg = materialize(graph, config.profile)
        stdout.write(serialize_ntriples(mg.graph).decode("utf-8"))
        if config.trace:
            entries = sorted(
                (
                    {
                        "derived": serialize_triple(t),
                        "axiom": entry.axiom_id,
                        "premises": [serialize_triple(p) for p in entry.premises],
                    }
                    for t, entry in mg.trace.items()
                ),
                key=lambda e: (e["derived"], e["axiom"]),
            )
            stderr.write(json.dumps(entries, indent=2) + "\n")
        return EXIT_OK

    if config.mode == "stats":
        mg = materialize(graph, config.profile)
        stdout.write(format_stats(compute_stats(mg), config.fmt).decode("utf-8"))
        return EXIT_OK

    if config.mode == "validate":
        rules = _resolve_rules(config)
        mg = materialize(graph, config.profile)
        findings = check_integrity(mg) + check_guidelines(mg, rules)
        elapsed_ms = int((time.perf_counter() - started) * 1000)
        report = build_report(digests, mg, findings, elapsed_ms)
        rendered = format_report(
            report,
            config.fmt,
            color=config.fmt == "text" and _use_color(stdout),
            include_timing=bool(os.environ.get("SKOSFORGE_TIMING")),
        )
        stdout.write(rendered.decode("utf-8"))
        has_errors = any(f.severity is Severity.ERROR for f in report.findings)
        return EXIT_FINDINGS if has_errors else EXIT_OK

    raise UsageError(f"unknown mode: {config.mode}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        print(f"skosforge: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    config = RunConfig(
        mode=ns.mode,
        inputs=list(getattr(ns, "files", [])),
        profile=_PROFILES[getattr(ns, "profile", "reference")],
        fmt=ns.fmt,
        trace=getattr(ns, "trace", False),
        enable=list(getattr(ns, "enable", [])),
        disable=list(getattr(ns, "disable", [])),
        config_path=getattr(ns, "config_path", None),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
