"""Command-line front end.

Every subcommand writes one result per line to standard output.  Errors go
to standard error as ``freegroup: <kind> error: <detail>`` and select a
distinct exit status per kind (see ``EXIT_CODES``).
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, List, Optional, TextIO

from .errors import (
    AlphabetError,
    EvaluationError,
    ExponentOverflowError,
    FreeGroupError,
    InvalidSymbolError,
    ParseError,
    RandomSpecError,
    RecyclingError,
)
from .expr import Evaluator
from .random import RandomSpec, random_words
from .textio import (
    DEFAULT_ALPHABET,
    Alphabet,
    format_word,
    parse_canonical,
    parse_compact,
    parse_matrix_csv,
    serialize,
)
from .vector import abelianize_vec, is_identity_vec
from .words import Word

EXIT_CODES = {
    "assertion": 1,
    "usage": 2,
    "io": 3,
    "parse": 4,
    "spec": 5,
    "evaluation": 6,
    "recycling": 7,
    "overflow": 8,
    "alphabet": 9,
    "symbol": 10,
}

EPILOG = """\
expression syntax, tightest binding first:
  -x          inverse
  x^y         conjugate, -y+x+y (left-associative)
  x*n, n*x    repeat by integer n; n may be a range such as 0:3
  x+y, x-y    juxtapose; x-y is x+(-y)
  [x,y]       commutator -x-y+x+y
words are written a^2.b^-3.c^5; the identity is 0.
functions: alpha(1:9), abc(1:9), rfree(n, m), sum(x), c(x, y, ...).
a bare name bound with --let refers to the binding; otherwise it names a
generator.
"""


class _Fail(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _classify(exc: BaseException) -> str:
    for cls, kind in (
        (ParseError, "parse"),
        (RandomSpecError, "spec"),
        (RecyclingError, "recycling"),
        (ExponentOverflowError, "overflow"),
        (AlphabetError, "alphabet"),
        (InvalidSymbolError, "symbol"),
        (EvaluationError, "evaluation"),
    ):
        if isinstance(exc, cls):
            return kind
    return "evaluation"


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--symbols", metavar="FILE",
                   help="alphabet file, one generator name per line (default a..z)")
    p.add_argument("--strict", action="store_true",
                   help="fail on generators beyond the alphabet instead of printing NA")
    p.add_argument("--format", choices=("text", "interchange"), default="text",
                   help="text: one word per line; interchange: JSON list of [symbol, exponent] pairs")
    return p


def _expr_opts() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--let", dest="lets", action="append", default=[], metavar="NAME=EXPR",
                   help="bind NAME to a word or expression (repeatable, evaluated in order)")
    p.add_argument("--seed", type=int, default=0, help="seed for rfree() calls (default 0)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common, expr_opts = _common(), _expr_opts()
    parser = argparse.ArgumentParser(
        prog="freegroup",
        description="Words in the free group: evaluate, reduce, abelianize, generate.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common, expr_opts], help="evaluate an expression",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("expression")

    p = sub.add_parser("reduce", parents=[common], help="reduce words read from a file or stdin")
    p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
    p.add_argument("--from", dest="source", choices=("canonical", "matrix", "compact"),
                   default="canonical",
                   help="canonical: one word per line; matrix: two CSV rows per word, "
                        "words separated by blank lines; compact: letters, uppercase inverts")

    p = sub.add_parser("abelianize", parents=[common],
                       help="abelianize canonical words read from a file or stdin")
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("random", parents=[common], help="generate seeded random words")
    p.add_argument("--spec", metavar="FILE", help="key=value file with RandomSpec fields")
    p.add_argument("--count", type=int)
    p.add_argument("--syllables", type=int)
    p.add_argument("--max-symbol", type=int)
    p.add_argument("--max-abs-exponent", type=int)
    p.add_argument("--seed", type=int)

    p = sub.add_parser("check-identity", parents=[common, expr_opts],
                       help="print true/false per element for whether it is the identity",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("expression")
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 unless every element is the identity")
    return parser


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail("io", f"cannot read {path}: {exc.strerror}") from None


def _alphabet(args) -> Alphabet:
    if not args.symbols:
        return DEFAULT_ALPHABET
    try:
        return Alphabet.from_file(args.symbols)
    except OSError as exc:
        raise _Fail("io", f"cannot read {args.symbols}: {exc.strerror}") from None


def _emit(words: Iterable[Word], args, alphabet: Alphabet, out: TextIO) -> None:
    words = list(words)
    if args.format == "interchange":
        out.write(serialize(words) + "\n")
        return
    for w in words:
        out.write(format_word(w, alphabet, args.strict) + "\n")


def _evaluator(args, alphabet: Alphabet) -> Evaluator:
    ev = Evaluator(alphabet=alphabet, seed=args.seed)
    for item in args.lets:
        name, eq, src = item.partition("=")
        if not eq:
            raise _Fail("usage", f"--let expects NAME=EXPR, got {item!r}")
        ev.bind(name.strip(), src)
    return ev


def _lines(text: str) -> List[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def _matrix_blocks(text: str) -> List[str]:
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append("\n".join(cur))
            cur = []
    if cur:
        blocks.append("\n".join(cur))
    return blocks


def _run(args, stdin: TextIO, out: TextIO) -> int:
    alphabet = _alphabet(args)
    cmd = args.command
    if cmd == "eval":
        _emit(_evaluator(args, alphabet).evaluate(args.expression), args, alphabet, out)
    elif cmd == "check-identity":
        flags = is_identity_vec(_evaluator(args, alphabet).evaluate(args.expression))
        for flag in flags:
            out.write(("true" if flag else "false") + "\n")
        if args.assert_ and not all(flags):
            return EXIT_CODES["assertion"]
    elif cmd == "reduce":
        text = _read(args.input, stdin)
        if args.source == "matrix":
            words = [parse_matrix_csv(b) for b in _matrix_blocks(text)]
        elif args.source == "compact":
            words = [parse_compact(line) for line in _lines(text)]
        else:
            words = [parse_canonical(line, alphabet) for line in _lines(text)]
        _emit(words, args, alphabet, out)
    elif cmd == "abelianize":
        words = [parse_canonical(line, alphabet) for line in _lines(_read(args.input, stdin))]
        for ab in abelianize_vec(words):
            if args.format == "interchange":
                out.write(serialize([Word._trusted(ab.terms)]) + "\n")
            else:
                out.write(format_word(ab, alphabet, args.strict) + "\n")
    elif cmd == "random":
        spec = RandomSpec.from_text(_read(args.spec, stdin)) if args.spec else RandomSpec()
        overrides = {
            k: getattr(args, k)
            for k in ("count", "syllables", "max_symbol", "max_abs_exponent", "seed")
            if getattr(args, k) is not None
        }
        spec = RandomSpec(**{**spec.__dict__, **overrides})
        _emit(random_words(spec), args, alphabet, out)
    return 0


def main(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, stdin, stdout)
    except _Fail as exc:
        kind, msg = exc.kind, str(exc)
    except FreeGroupError as exc:
        kind, msg = _classify(exc), str(exc)
    stderr.write(f"freegroup: {kind} error: {msg}\n")
    return EXIT_CODES[kind]


if __name__ == "__main__":
    sys.exit(main())
