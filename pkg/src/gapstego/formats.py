"""Key and stream file formats.

Both are line-oriented UTF-8 text so files diff cleanly and can be read
or written from any language.

Key file::

    frobkey/1
    mode <appendix-c|telescopic>
    seed <u64>
    salt-pair <i> <j>     (optional)
    <one decimal generator per line>

Stream file::

    salt <L>              (only when salted)
    <one decimal value per line>

Parsing is strict: unknown lines, bad numbers or out-of-range values
raise FormatError rather than being skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import CipherStream
from .errors import FormatError, GapstegoError
from .keygen import MODES
from .semigroup import GeneratingSet, validate_generators

KEY_MAGIC = "frobkey/1"
_U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class KeyFile:
    """Parsed key file: generators plus provenance needed to reproduce it."""

    generators: GeneratingSet
    mode: str
    seed: int
    salt_pair: tuple[int, int] | None = None
    format_version: int = 1


def serialize_key(key: KeyFile) -> str:
    lines = [KEY_MAGIC, f"mode {key.mode}", f"seed {key.seed}"]
    if key.salt_pair is not None:
        lines.append(f"salt-pair {key.salt_pair[0]} {key.salt_pair[1]}")
    lines.extend(str(g) for g in key.generators)
    return "\n".join(lines) + "\n"


def _parse_uint(text: str, what: str, maximum: int = _U64_MAX) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise FormatError(f"{what}: expected a decimal integer, got {text!r}") from None
    if not 0 <= value <= maximum:
        raise FormatError(f"{what}: {value} outside [0, {maximum}]")
    return value


def parse_key(text: str) -> KeyFile:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != KEY_MAGIC:
        raise FormatError(f"key file must start with {KEY_MAGIC!r}")
    if len(lines) < 3:
        raise FormatError("key file truncated before the seed line")

    mode_parts = lines[1].split()
    if len(mode_parts) != 2 or mode_parts[0] != "mode":
        raise FormatError(f"line 2 must be 'mode <tag>', got {lines[1]!r}")
    mode = mode_parts[1]
    if mode not in MODES:
        raise FormatError(f"unknown mode {mode!r}, expected one of {MODES}")

    seed_parts = lines[2].split()
    if len(seed_parts) != 2 or seed_parts[0] != "seed":
        raise FormatError(f"line 3 must be 'seed <u64>', got {lines[2]!r}")
    seed = _parse_uint(seed_parts[1], "seed")

    rest = lines[3:]
    salt_pair = None
    if rest and rest[0].startswith("salt-pair"):
        pair_parts = rest[0].split()
        if len(pair_parts) != 3:
            raise FormatError(f"salt-pair line needs two indices, got {rest[0]!r}")
        i = _parse_uint(pair_parts[1], "salt-pair index")
        j = _parse_uint(pair_parts[2], "salt-pair index")
        salt_pair = (i, j)
        rest = rest[1:]

    if not rest:
        raise FormatError("key file lists no generators")
    raw = [_parse_uint(ln, "generator") for ln in rest]
    try:
        gens = validate_generators(raw)
    except GapstegoError as exc:
        raise FormatError(f"invalid generators: {exc}") from exc
    if len(gens) != len(raw) or list(gens) != raw:
        raise FormatError("generators must be listed strictly increasing, no repeats")
    if salt_pair is not None:
        i, j = salt_pair
        if i == j or max(i, j) >= len(gens):
            raise FormatError(f"salt-pair ({i}, {j}) does not index two distinct generators")
    return KeyFile(gens, mode, seed, salt_pair)


def serialize_stream(stream: CipherStream) -> str:
    lines = []
    if stream.salted:
        lines.append(f"salt {stream.salt_period}")
    lines.extend(str(v) for v in stream.values)
    # trailing newline unless the file would be empty
    return "\n".join(lines) + "\n" if lines else ""


def parse_stream(text: str) -> CipherStream:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    salt_period = None
    if lines and lines[0].startswith("salt"):
        parts = lines[0].split()
        if len(parts) != 2 or parts[0] != "salt":
            raise FormatError(f"salt header must be 'salt <L>', got {lines[0]!r}")
        salt_period = _parse_uint(parts[1], "salt period")
        if salt_period < 1:
            raise FormatError("salt period must be >= 1")
        lines = lines[1:]
    values = tuple(_parse_uint(ln, "stream value") for ln in lines)
    return CipherStream(values, salt_period)
