"""Hide a message in gap values, recover it, and catch a forgery.

The encoder draws, for each nibble of the payload, a random gap of the
secret semigroup congruent to that nibble mod 16.  Residues mod 16 are
public arithmetic, so decoding needs no key at all; what the key buys
is the ability to check that every value really is a gap.
"""

from __future__ import annotations

import random

from gapstego import (
    CipherStream,
    KeygenParams,
    build_gap_index,
    build_table,
    choose_salt_pair,
    decode_message,
    encode_message,
    generate_key,
    verify_stream,
)

MESSAGE = b"meet at dawn"


def main() -> None:
    params = KeygenParams(seed=7, mode="telescopic")
    gens = generate_key(params)
    table = build_table(gens)
    print(f"secret generators : {tuple(gens)}")
    print(f"frobenius         : {table.frobenius}")
    print(f"genus             : {table.genus} gaps to hide in")
    print(f"salt pair on offer: {choose_salt_pair(gens, table)}")

    index = build_gap_index(table)
    sizes = index.class_sizes()
    print(f"gaps per nibble class mod 16: min {min(sizes)}, max {max(sizes)}")

    rng = random.Random(99)
    stream = encode_message(MESSAGE, index, rng)
    print()
    print(f"payload {MESSAGE!r} becomes {len(stream)} integers:")
    for pos in range(0, len(stream.values), 8):
        print("  " + " ".join(f"{v:7d}" for v in stream.values[pos : pos + 8]))

    # residues carry the data in plain sight
    nibbles = [v % 16 for v in stream.values]
    rebuilt = bytes((nibbles[i] << 4) | nibbles[i + 1] for i in range(0, len(nibbles), 2))
    print(f"residues mod 16 pair back into: {rebuilt!r}")
    print(f"decode_message agrees         : {decode_message(stream)!r}")

    print()
    verdicts = verify_stream(stream, table)
    print(f"verify_stream: all {len(verdicts)} values are gaps = {all(verdicts)}")

    # a forger without the key can fake residues but not gap-ness
    forged_values = list(stream.values)
    target = forged_values[0]
    fake = target + table.multiplicity  # same residue class mod m is wrong on purpose
    while not table.is_member(fake) or fake % 16 != target % 16:
        fake += 1
    forged_values[0] = fake
    forged = CipherStream(tuple(forged_values))
    verdicts = verify_stream(forged, table)
    print(f"replacing value 0 with member {fake} (same nibble {fake % 16}):")
    print(f"  decoded text unchanged: {decode_message(forged)!r}")
    print(f"  but verify_stream flags position {verdicts.index(False)}")


if __name__ == "__main__":
    main()
