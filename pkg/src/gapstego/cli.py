"""Command line interface.

Exit codes are a stable contract: 0 success, 1 self-test failure,
2 usage or input error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path
from typing import Sequence

from .analysis import build_report, gap_density
from .codec import (
    SaltSpec,
    build_gap_index,
    decode_message,
    desalt_stream,
    encode_message,
    salt_stream,
    verify_stream,
)
from .errors import GapstegoError
from .formats import KeyFile, parse_key, parse_stream, serialize_key, serialize_stream
from .formulas import davison_check, wilf_check
from .keygen import (
    DEFAULT_MODULUS,
    KeygenParams,
    MODES,
    check_viability,
    choose_salt_pair,
    generate_key,
)
from .semigroup import build_table, is_telescopic, minimal_generators
from .selftest import run_selftest

_APERY_PRINT_LIMIT = 64


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _bool_word(flag: bool) -> str:
    return "true" if flag else "false"


def _fresh_seed() -> int:
    return int.from_bytes(os.urandom(8), "big")


def _load_key(path: str) -> KeyFile:
    return parse_key(_read_text(path))


def cmd_keygen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _fresh_seed()
    params = KeygenParams(seed=seed, n_elements=args.n_elements, mode=args.mode)
    gens = generate_key(params, modulus=args.modulus)
    table = build_table(gens)
    key = KeyFile(gens, args.mode, seed, choose_salt_pair(gens, table))
    _write_text(args.out, serialize_key(key))
    print(
        f"generators={','.join(str(g) for g in gens)}"
        f" frobenius={table.frobenius} genus={table.genus}"
        f" symmetric={_bool_word(table.is_symmetric())}"
        f" telescopic={_bool_word(is_telescopic(gens))}"
        f" seed={seed}"
    )
    return 0


def cmd_inspect(args: argparse.Namespace) -> int:
    key = _load_key(args.key)
    table = build_table(key.generators)
    minimal = minimal_generators(key.generators)
    print(f"generators {','.join(str(g) for g in key.generators)}")
    print(f"multiplicity {table.multiplicity}")
    print(f"frobenius {table.frobenius}")
    print(f"genus {table.genus}")
    print(f"gap_density {gap_density(table)}")
    print(f"symmetric {_bool_word(table.is_symmetric())}")
    print(f"telescopic {_bool_word(is_telescopic(key.generators))}")
    print(f"minimal_generators {','.join(str(g) for g in minimal)}")

    apery = [str(int(v)) for v in table.min_rep]
    if len(apery) > _APERY_PRINT_LIMIT:
        shown = ",".join(apery[:_APERY_PRINT_LIMIT])
        print(f"apery {shown} (+{len(apery) - _APERY_PRINT_LIMIT} more)")
    else:
        print(f"apery {','.join(apery)}")

    counts = check_viability(table, args.modulus)
    print(f"class_counts {','.join(str(c) for c in counts.per_class_gap_count)}")
    print(f"viable {_bool_word(counts.viable)}")

    wilf = wilf_check(len(minimal), table.frobenius, table.genus)
    lhs = len(minimal) * (table.frobenius + 1 - table.genus)
    print(f"wilf {'holds' if wilf.holds else 'fails'} ({lhs} >= {table.frobenius + 1})")
    if len(minimal) == 3:
        a1, a2, a3 = minimal.elements
        dav = davison_check(a1, a2, a3, table.frobenius)
        print(
            f"davison {'holds' if dav.holds else 'fails'}"
            f" ({int(dav.lhs)} >= {dav.rhs_display:.2f})"
        )
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    key = _load_key(args.key)
    payload = _read_bytes(args.input)
    index = build_gap_index(build_table(key.generators), DEFAULT_MODULUS)
    seed = args.seed if args.seed is not None else _fresh_seed()
    rng = random.Random(seed)
    stream = encode_message(payload, index, rng)
    if args.salt:
        i, j = key.salt_pair if key.salt_pair is not None else (0, 1)
        spec = SaltSpec.from_generators(key.generators, i, j, args.k_max)
        stream = salt_stream(stream, spec, rng)
    _write_text(args.out, serialize_stream(stream))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    key = _load_key(args.key)
    stream = parse_stream(_read_text(args.input))
    if stream.salted:
        stream = desalt_stream(stream)
    if args.verify:
        table = build_table(key.generators)
        verdicts = verify_stream(stream, table)
        bad = [str(i) for i, is_gap in enumerate(verdicts) if not is_gap]
        if bad:
            shown = ",".join(bad[:20]) + (",..." if len(bad) > 20 else "")
            print(
                f"verification failed: {len(bad)} stream value(s) are not gaps"
                f" (positions {shown})",
                file=sys.stderr,
            )
            return 3
    _write_bytes(args.out, decode_message(stream))
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    stream = parse_stream(_read_text(args.input))
    table = build_table(_load_key(args.key).generators) if args.key else None
    report = build_report(stream, modulus=args.modulus, table=table)
    print(f"n_values {report.n_values}")
    print(f"modulus {report.modulus}")
    print(f"class_histogram {','.join(str(c) for c in report.class_histogram)}")
    print(f"chi_square {report.chi_square:.4f}")
    print(f"df {report.df}")
    print(f"reject_uniformity {_bool_word(report.reject_uniformity)}")
    if report.gap_density is not None:
        print(f"gap_density {report.gap_density}")
    if report.window_fractions:
        shown = ",".join(str(f) for f in report.window_fractions)
        print(f"window_fractions {shown}")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    ok = run_selftest(seed=args.seed, echo=print)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapstego",
        description="Hide byte streams in the gap structure of secret numerical semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a private key file")
    p.add_argument("--out", required=True, help="key file path ('-' for stdout)")
    p.add_argument("--n-elements", type=int, default=5)
    p.add_argument("--mode", choices=MODES, default="telescopic")
    p.add_argument("--seed", type=int, default=None, help="default: OS entropy, recorded in the file")
    p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)
    p.set_defaults(handler=cmd_keygen)

    p = sub.add_parser("inspect", help="print structural facts about a key")
    p.add_argument("--key", required=True)
    p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)
    p.set_defaults(handler=cmd_inspect)

    p = sub.add_parser("encode", help="encode raw bytes as a gap stream")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="input", default="-", help="payload path (default stdin)")
    p.add_argument("--out", default="-", help="stream path (default stdout)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--salt", action="store_true", help="salt values with the key's salt pair")
    p.add_argument("--k-max", type=int, default=64)
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("decode", help="decode a gap stream back to bytes")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="input", default="-")
    p.add_argument("--out", default="-")
    p.add_argument("--verify", action="store_true", help="fail unless every value is a gap")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("analyze", help="run the statistical screens on a stream")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--key", default=None, help="optional key; enables density and window checks")
    p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("selftest", help="run reduced-scale property suites")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (GapstegoError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
