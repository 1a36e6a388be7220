"""Command-line front end: analyse, generate, validate-lexicon, classify.

Data goes to stdout, diagnostics to stderr, never interleaved.  Exit
codes: 0 success (no-parse lines included), 1 configuration or I/O
error, 2 lexicon invariant failure.  Output is byte-identical across
runs on identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import defaults
from .alphabet import AlphabetError
from .analyzer import Analysis, GenerationError, analyse, generate, gloss_render
from .classifier import classify_corpus, render_table
from .lexicon import LexiconError, load_lexicon, validate_lexicon
from .phonology import load_rules

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INVARIANT = 2


def _add_data_flags(parser):
    parser.add_argument("--lexicon", help="root inventory TSV")
    parser.add_argument("--suffixes", help="suffix inventory TSV")
    parser.add_argument("--rules", help="boundary rule TSV")
    parser.add_argument("--slots", help="slot table TSV (cross-check only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapumorph",
        description="Mapudüngun verb morphology: analyse, generate, classify.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyse", help="segment and gloss words, one per line")
    _add_data_flags(p)
    p.add_argument("--format", choices=["gloss-text", "json-lines"],
                   default="gloss-text")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all-analyses", action="store_true", default=True)
    group.add_argument("--best", action="store_true",
                       help="print only the top-ranked analysis per word")
    p.add_argument("--source", default=None,
                   help="corpus id recorded on JSON output")

    p = sub.add_parser("generate",
                       help="realize root<TAB>sense<TAB>suffix ids per line")
    _add_data_flags(p)

    p = sub.add_parser("validate-lexicon", help="report lexicon diagnostics")
    _add_data_flags(p)

    p = sub.add_parser("classify",
                       help="valency table from JSON-lines analyses on stdin")
    _add_data_flags(p)
    p.add_argument("--threshold", type=int, default=1,
                   help="diagnostic hits needed per class (>= 1)")
    p.add_argument("--no-soft", action="store_true",
                   help="ignore soft stative/habitual tallies")
    return parser


def _load_tables(args, strict=True):
    if args.lexicon or args.suffixes:
        root_path = args.lexicon or defaults.data_path("roots.tsv")
        suffix_path = args.suffixes or defaults.data_path("suffixes.tsv")
        lexicon = load_lexicon(root_path, suffix_path, strict=strict)
    else:
        lexicon = defaults.default_lexicon()
    rules = load_rules(args.rules) if args.rules else defaults.default_rules()
    if args.slots:
        _cross_check_slots(args.slots, lexicon)
    return lexicon, rules


def _cross_check_slots(path, lexicon):
    for lineno, raw in enumerate(open(path, encoding="utf-8"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        sid, slot = line.split("\t")[:2]
        entry = lexicon.suffixes.get(sid)
        if entry is not None and entry.slot != int(slot):
            raise LexiconError(
                f"slot table disagrees with suffix inventory for {sid}",
                path, lineno)


def _cmd_analyse(args, stdin, stdout, stderr) -> int:
    lexicon, rules = _load_tables(args)
    for raw in stdin:
        word = raw.strip()
        if not word:
            continue
        try:
            found = analyse(word, lexicon, rules)
        except AlphabetError as err:
            print(f"{word}\tERROR\t{err}", file=stdout)
            print(f"analyse: {err}", file=stderr)
            continue
        if args.best:
            found = found[:1]
        if args.format == "json-lines":
            payload = {"word": word,
                       "analyses": [a.to_json() for a in found]}
            if args.source:
                payload["source"] = args.source
                for item in payload["analyses"]:
                    item["source"] = args.source
            print(json.dumps(payload, ensure_ascii=False, sort_keys=True),
                  file=stdout)
        else:
            if not found:
                print(f"{word}\tNO-PARSE", file=stdout)
            for analysis in found:
                print(f"{word}\t{gloss_render(analysis)}", file=stdout)
    return EXIT_OK


def _cmd_generate(args, stdin, stdout, stderr) -> int:
    lexicon, rules = _load_tables(args)
    for raw in stdin:
        line = raw.strip()
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) < 2:
            print(f"{line}\tERROR\texpected root<TAB>sense[<TAB>suffixes]",
                  file=stdout)
            continue
        root, sense = cols[0], cols[1]
        suffix_ids = [s for s in cols[2].replace(",", " ").split()] \
            if len(cols) > 2 else []
        try:
            surface = generate(root, sense, suffix_ids, lexicon, rules)
        except GenerationError as err:
            from .morphotactics import violations_json
            print(f"{line}\tERROR\t{violations_json(err.violations)}",
                  file=stdout)
            print(f"generate: {err}", file=stderr)
            continue
        except (KeyError, ValueError) as err:
            print(f"{line}\tERROR\t{err}", file=stdout)
            print(f"generate: {err}", file=stderr)
            continue
        print(f"{line}\t{surface}", file=stdout)
    return EXIT_OK


def _cmd_validate(args, stdin, stdout, stderr) -> int:
    lexicon, _ = _load_tables(args, strict=False)
    diagnostics = validate_lexicon(lexicon)
    for diag in diagnostics:
        print(f"{diag.code}\t{diag.subject}\t{diag.message}", file=stdout)
    if any(d.invariant for d in diagnostics):
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_classify(args, stdin, stdout, stderr) -> int:
    lexicon, _ = _load_tables(args)
    corpus = []
    for raw in stdin:
        line = raw.strip()
        if not line:
            continue
        data = json.loads(line)
        if "analyses" in data:  # output of `analyse --format json-lines`
            for item in data["analyses"]:
                item.setdefault("source", data.get("source"))
                corpus.append(Analysis.from_json(item))
        else:
            corpus.append(Analysis.from_json(data))
    table = classify_corpus(corpus, lexicon, threshold=args.threshold,
                            soft=not args.no_soft)
    stdout.write(render_table(table))
    return EXIT_OK


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "analyse": _cmd_analyse,
        "generate": _cmd_generate,
        "validate-lexicon": _cmd_validate,
        "classify": _cmd_classify,
    }
    try:
        return handlers[args.command](args, stdin, stdout, stderr)
    except LexiconError as err:
        print(f"lexicon: {err}", file=stderr)
        return EXIT_INVARIANT
    except OSError as err:
        print(f"io: {err}", file=stderr)
        return EXIT_CONFIG
    except ValueError as err:
        print(f"error: {err}", file=stderr)
        return EXIT_CONFIG


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
