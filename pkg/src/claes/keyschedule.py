"""Four-stage key derivation and the two benchmarkable keystream paths.

Key1 comes from the lookup cube, Key2 from chaotic cycles XORed onto Key1,
Key3 from a rotate/XOR pass driven by an 8-bit LFSR, and the final key is
the bytewise XOR of the three.  A message-length keystream is then produced
by running the chaotic generator on, one byte of final key folded into each
output byte; that call is the size-dependent cost the benchmark measures.

Chaos streams for different purposes are separated by domain tags mixed
into the seed, so Key2 bytes, keystream bytes, and round-key bytes never
reuse one orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chaos import ChaoticState, seed_from_key1
from .errors import EmptyKey, LengthMismatch, ZeroState
from .keymatrix import Matrix3D, default_matrix, derive_key1, encode_byte

DOMAIN_KEY2 = 0x01
DOMAIN_KEYSTREAM = 0x5A
DOMAIN_ROUND_KEYS = 0xA5

LFSR_TAPS = (7, 5, 4, 3)  # x^8 + x^6 + x^5 + x^4 + 1, maximal length
DEFAULT_LFSR_SEED = 0x5C

# Chaotic iterations spent per Key2 byte: four byte extractions of four
# steps each, keeping only the last byte.
KEY2_CYCLES = 4


def _rotl8(b: int, k: int) -> int:
    return ((b << k) | (b >> (8 - k))) & 0xFF


def _rotr8(b: int, k: int) -> int:
    return ((b >> k) | (b << (8 - k))) & 0xFF


class Lfsr8:
    """8-bit Fibonacci LFSR with taps at bits 7, 5, 4, 3 (period 255)."""

    __slots__ = ("state",)

    def __init__(self, state: int):
        if state == 0:
            raise ZeroState("LFSR state must never be zero")
        if not 0 < state <= 0xFF:
            raise ValueError("LFSR state must be a nonzero byte")
        self.state = state

    def __repr__(self) -> str:
        return f"Lfsr8(state={self.state:#04x})"


def lfsr_next(l: Lfsr8) -> tuple[int, Lfsr8]:
    """Eight single-bit shifts; output is the resulting state byte. Pure."""
    s = l.state
    for _ in range(8):
        feedback = ((s >> 7) ^ (s >> 5) ^ (s >> 4) ^ (s >> 3)) & 1
        s = ((s << 1) & 0xFF) | feedback
    return s, Lfsr8(s)


def fold_seed_prefix(key1: bytes) -> bytes:
    """Compress Key1 into the 9 bytes of chaos seed material.

    Key1 is XOR-folded with stride 9, so every master-key byte reaches the
    seed.  For keys of at most 9 bytes this is exactly the zero-padded
    prefix; taking only the literal first 9 bytes would leave the chaos
    streams blind to later master-key bytes and destroy key avalanche.
    """
    prefix = bytearray(9)
    for i, b in enumerate(key1):
        prefix[i % 9] ^= b
    return bytes(prefix)


def derive_key2(seed: ChaoticState, key1: bytes) -> bytes:
    """Second key: 16 chaotic iterations per byte, XORed onto Key1.

    Advances ``seed``; pass a copy to keep the original.
    """
    out = bytearray()
    for b in key1:
        out.append(seed.take(KEY2_CYCLES)[-1] ^ b)
    return bytes(out)


def derive_key3(key2: bytes, lfsr_seed: int = DEFAULT_LFSR_SEED) -> bytes:
    """Third key: rotate-left 1, XOR the LFSR byte, rotate-right 1."""
    register = Lfsr8(lfsr_seed)
    out = bytearray()
    for b in key2:
        lj, register = lfsr_next(register)
        out.append(_rotr8(_rotl8(b, 1) ^ lj, 1))
    return bytes(out)


def derive_final_key(key1: bytes, key2: bytes, key3: bytes) -> bytes:
    if not len(key1) == len(key2) == len(key3):
        raise LengthMismatch(
            f"key lengths differ: {len(key1)}, {len(key2)}, {len(key3)}"
        )
    return bytes(a ^ b ^ c for a, b, c in zip(key1, key2, key3))


def generate_keystream(seed: ChaoticState, final_key: bytes, n: int) -> bytes:
    """Message-length keystream: chaos byte XOR cycled final-key byte.

    Cost is linear in ``n`` (4 map steps per byte); this is the call the
    benchmark times.  Advances ``seed``, so its iteration counter reflects
    the work done.
    """
    raw = seed.take(n)
    kl = len(final_key)
    return bytes(raw[t] ^ final_key[t % kl] for t in range(n))


def derive_round_keys(seed: ChaoticState) -> tuple[bytes, ...]:
    """176 chaotic bytes partitioned into eleven 16-byte round keys.

    Advances ``seed``.
    """
    raw = seed.take(176)
    return tuple(raw[i * 16:(i + 1) * 16] for i in range(11))


@dataclass(frozen=True)
class KeyMaterial:
    """Everything derived from one master key, immutable once built."""

    key1: bytes
    key2: bytes
    key3: bytes
    final_key: bytes
    round_keys: tuple[bytes, ...]
    master_len: int


def derive_key_material(master_key: bytes, matrix: Matrix3D | None = None) -> KeyMaterial:
    """Run the full derivation chain for one master key."""
    if not master_key:
        raise EmptyKey("master key must not be empty")
    m = matrix if matrix is not None else default_matrix()
    key1 = derive_key1(m, master_key)
    prefix = fold_seed_prefix(key1)
    key2 = derive_key2(seed_from_key1(prefix, DOMAIN_KEY2), key1)
    key3 = derive_key3(key2)
    final_key = derive_final_key(key1, key2, key3)
    round_keys = derive_round_keys(seed_from_key1(prefix, DOMAIN_ROUND_KEYS))
    return KeyMaterial(key1, key2, key3, final_key, round_keys, len(master_key))


def keystream_seed(key1: bytes) -> ChaoticState:
    """Fresh chaos state for the message keystream domain."""
    return seed_from_key1(fold_seed_prefix(key1), DOMAIN_KEYSTREAM)


def baseline_keystream(matrix: Matrix3D, key1: bytes, n: int) -> bytes:
    """Chaos-free reference path: one cube lookup chained per output byte.

    Used only for relative benchmarking against `generate_keystream`; both
    are linear in ``n`` per byte of output.
    """
    out = bytearray(n)
    s = 0
    kl = len(key1)
    for t in range(n):
        c0, c1, c2 = encode_byte(matrix, key1[t % kl] ^ s)
        s = c0 ^ _ROTL3[c1] ^ _ROTR2[c2]
        out[t] = s
    return bytes(out)


# rotation lookup tables keep the per-byte baseline loop free of calls
# other than the cube lookup itself
_ROTL3 = tuple(_rotl8(x, 3) for x in range(256))
_ROTR2 = tuple(_rotr8(x, 2) for x in range(256))
