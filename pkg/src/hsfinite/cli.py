"""Command-line surface.

Exit codes: 0 success, 1 usage, 2 parse error, 3 domain error (invalid
sequence, not Artinian, no catalog), 4 sampling failure.  ``--json`` switches
any command to machine output; all output is deterministic (no timestamps,
sorted keys).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import normal_forms, are_isomorphic, sample_ideal, verify_catalog
from .errors import DomainError, InvalidColength, ParseError, SamplingFailed
from .ideals import format_ideal, hilbert_samuel, parse_ideal_text
from .sequences import (
    classify,
    enumerate_sequences,
    format_sequence,
    gt_dimension,
    parse_sequence_text,
    validate,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_SAMPLING = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _read_ideal(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_ideal_text(handle.read())


def _label_payload(label):
    return {
        "finite": label.finite,
        "label": label.kind if label.finite else None,
        "params": label.param_dict(),
        "dim": label.dimension,
        "canonical_n": label.canonical_n,
    }


def cmd_hs(args):
    seq = hilbert_samuel(_read_ideal(args.path))
    if args.json:
        _emit_json({"sequence": list(seq)})
    else:
        print(format_sequence(seq))
    return EXIT_OK


def cmd_classify(args):
    seq = validate(parse_sequence_text(args.sequence))
    label = classify(seq)
    if args.json:
        _emit_json(_label_payload(label))
        return EXIT_OK
    if label.finite:
        params = "" if not label.params else \
            "(%s)" % ", ".join("%s=%d" % kv for kv in label.params)
        print("finite, %s%s, dim %d" % (label.kind, params, label.dimension))
        if label.params:
            print("canonical n = %d" % label.canonical_n)
    else:
        print("infinite, dim %d" % label.dimension)
    return EXIT_OK


def cmd_enumerate(args):
    if args.colength is not None:
        colengths = [args.colength]
    else:
        if args.max_colength < 3:
            raise InvalidColength("colength must be >= 3")
        colengths = list(range(3, args.max_colength + 1))
    rows = []
    for n_total in colengths:
        for entries in enumerate_sequences(n_total):
            label = classify(validate(entries))
            rows.append((entries, label))
    if args.json:
        _emit_json({
            "colengths": colengths,
            "rows": [
                {
                    "sequence": list(entries),
                    "dim": label.dimension,
                    "finite": label.finite,
                    "label": label.kind if label.finite else None,
                    "params": label.param_dict(),
                }
                for entries, label in rows
            ],
        })
        return EXIT_OK
    for entries, label in rows:
        verdict = "finite" if label.finite else "infinite"
        name = str(label) if label.finite else "-"
        print("%s  dim %d  %s  %s" % (format_sequence(entries),
                                      label.dimension, verdict, name))
    return EXIT_OK


def cmd_catalog(args):
    seq = validate(parse_sequence_text(args.sequence))
    label = classify(seq)
    entries = normal_forms(label)  # raises NoCatalog on infinite labels
    os.makedirs(args.out, exist_ok=True)
    paths = []
    for i, entry in enumerate(entries, start=1):
        path = os.path.join(args.out, "entry_%d.ideal" % i)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("# %s\n" % entry.provenance)
            handle.write(format_ideal(entry.ideal))
        paths.append(path)
    report = verify_catalog(label)
    report_path = os.path.join(args.out, "report.json")
    with open(report_path, "w", encoding="utf-8") as handle:
        handle.write(json.dumps(report.to_dict(), indent=2, sort_keys=True))
        handle.write("\n")
    if args.json:
        _emit_json(report.to_dict())
        return EXIT_OK
    for path in paths:
        print("wrote %s" % path)
    print("classes: %d (unknown pairs: %d)" %
          (report.class_count, len(report.unknown_pairs)))
    print("report: %s" % report_path)
    return EXIT_OK


def cmd_iso(args):
    left = _read_ideal(args.left)
    right = _read_ideal(args.right)
    verdict = are_isomorphic(left, right)
    if args.json:
        _emit_json({
            "verdict": verdict.kind,
            "witness": None if verdict.witness is None
            else [[str(c) for c in row] for row in verdict.witness.matrix()],
            "field": verdict.field,
        })
    else:
        print(str(verdict))
    return EXIT_OK


def cmd_diagram(args):
    seq = validate(parse_sequence_text(args.sequence))
    entries = seq.entries
    height = max(entries)
    for level in range(height, 0, -1):
        print("".join("#" if t >= level else " " for t in entries).rstrip())
    return EXIT_OK


def cmd_sample(args):
    seq = validate(parse_sequence_text(args.sequence))
    os.makedirs(args.out, exist_ok=True)
    paths = []
    for i in range(args.count):
        ideal = sample_ideal(seq, args.seed + i)
        path = os.path.join(args.out, "sample_%d.ideal" % (i + 1))
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("# sequence %s  seed %d\n"
                         % (format_sequence(seq.entries), args.seed + i))
            handle.write(format_ideal(ideal))
        paths.append(path)
    if args.json:
        _emit_json({"sequence": list(seq.entries), "files": paths})
    else:
        for path in paths:
            print("wrote %s" % path)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="hsfinite",
                     description="Hilbert-Samuel sequences of graded quotients "
                                 "of K[x, y] and their finite-type catalogs")
    sub = parser.add_subparsers(dest="command", metavar="command",
                                parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("hs", help="Hilbert-Samuel sequence of an ideal file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hs)

    p = sub.add_parser("classify", help="finite/infinite verdict for a sequence")
    p.add_argument("sequence")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="all valid sequences of a colength")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--colength", type=int)
    group.add_argument("--max-colength", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="write and verify the normal-form catalog")
    p.add_argument("sequence")
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("iso", help="isomorphism verdict for two ideal files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("diagram", help="staircase diagram of a sequence")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("sample", help="random ideals realizing a sequence")
    p.add_argument("sequence")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=".")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except SamplingFailed as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_SAMPLING


if __name__ == "__main__":
    sys.exit(main())
