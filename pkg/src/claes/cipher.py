"""AES-128 block core driven by externally supplied round keys, a counter
mode around it, and the full message pipeline with a binary envelope.

The block core is the standard round structure (SubBytes, ShiftRows,
MixColumns, AddRoundKey) with the published S-box; what varies is where the
round keys come from.  Normal operation feeds it chaos-derived round keys;
`rijndael_round_keys` provides the classic expansion so the core can be
checked against standard vectors and driven in a compatibility mode.

Messages are processed as: optional LZ78 compression, XOR with the
message-length chaotic keystream, then counter-mode block encryption.
There is no authentication tag; corruption is surfaced only through the
declared-length check and LZ78 decode failures, so a same-length wrong
plaintext cannot be detected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lz78
from .errors import BadMagic, BadVersion, EmptyKey, LengthMismatch, Truncated
from .keymatrix import Matrix3D
from .keyschedule import derive_key_material, generate_keystream, keystream_seed

SBOX = (
    0x63, 0x7C, 0x77, 0x7B, 0xF2, 0x6B, 0x6F, 0xC5, 0x30, 0x01, 0x67, 0x2B, 0xFE, 0xD7, 0xAB, 0x76,
    0xCA, 0x82, 0xC9, 0x7D, 0xFA, 0x59, 0x47, 0xF0, 0xAD, 0xD4, 0xA2, 0xAF, 0x9C, 0xA4, 0x72, 0xC0,
    0xB7, 0xFD, 0x93, 0x26, 0x36, 0x3F, 0xF7, 0xCC, 0x34, 0xA5, 0xE5, 0xF1, 0x71, 0xD8, 0x31, 0x15,
    0x04, 0xC7, 0x23, 0xC3, 0x18, 0x96, 0x05, 0x9A, 0x07, 0x12, 0x80, 0xE2, 0xEB, 0x27, 0xB2, 0x75,
    0x09, 0x83, 0x2C, 0x1A, 0x1B, 0x6E, 0x5A, 0xA0, 0x52, 0x3B, 0xD6, 0xB3, 0x29, 0xE3, 0x2F, 0x84,
    0x53, 0xD1, 0x00, 0xED, 0x20, 0xFC, 0xB1, 0x5B, 0x6A, 0xCB, 0xBE, 0x39, 0x4A, 0x4C, 0x58, 0xCF,
    0xD0, 0xEF, 0xAA, 0xFB, 0x43, 0x4D, 0x33, 0x85, 0x45, 0xF9, 0x02, 0x7F, 0x50, 0x3C, 0x9F, 0xA8,
    0x51, 0xA3, 0x40, 0x8F, 0x92, 0x9D, 0x38, 0xF5, 0xBC, 0xB6, 0xDA, 0x21, 0x10, 0xFF, 0xF3, 0xD2,
    0xCD, 0x0C, 0x13, 0xEC, 0x5F, 0x97, 0x44, 0x17, 0xC4, 0xA7, 0x7E, 0x3D, 0x64, 0x5D, 0x19, 0x73,
    0x60, 0x81, 0x4F, 0xDC, 0x22, 0x2A, 0x90, 0x88, 0x46, 0xEE, 0xB8, 0x14, 0xDE, 0x5E, 0x0B, 0xDB,
    0xE0, 0x32, 0x3A, 0x0A, 0x49, 0x06, 0x24, 0x5C, 0xC2, 0xD3, 0xAC, 0x62, 0x91, 0x95, 0xE4, 0x79,
    0xE7, 0xC8, 0x37, 0x6D, 0x8D, 0xD5, 0x4E, 0xA9, 0x6C, 0x56, 0xF4, 0xEA, 0x65, 0x7A, 0xAE, 0x08,
    0xBA, 0x78, 0x25, 0x2E, 0x1C, 0xA6, 0xB4, 0xC6, 0xE8, 0xDD, 0x74, 0x1F, 0x4B, 0xBD, 0x8B, 0x8A,
    0x70, 0x3E, 0xB5, 0x66, 0x48, 0x03, 0xF6, 0x0E, 0x61, 0x35, 0x57, 0xB9, 0x86, 0xC1, 0x1D, 0x9E,
    0xE1, 0xF8, 0x98, 0x11, 0x69, 0xD9, 0x8E, 0x94, 0x9B, 0x1E, 0x87, 0xE9, 0xCE, 0x55, 0x28, 0xDF,
    0x8C, 0xA1, 0x89, 0x0D, 0xBF, 0xE6, 0x42, 0x68, 0x41, 0x99, 0x2D, 0x0F, 0xB0, 0x54, 0xBB, 0x16,
)

INV_SBOX = tuple(SBOX.index(i) for i in range(256))


def _xtime(a: int) -> int:
    return ((a << 1) ^ 0x1B) & 0xFF if a & 0x80 else a << 1


MUL2 = tuple(_xtime(a) for a in range(256))
MUL3 = tuple(_xtime(a) ^ a for a in range(256))
_MUL4 = tuple(_xtime(x) for x in MUL2)
_MUL8 = tuple(_xtime(x) for x in _MUL4)
MUL9 = tuple(_MUL8[a] ^ a for a in range(256))
MUL11 = tuple(_MUL8[a] ^ MUL2[a] ^ a for a in range(256))
MUL13 = tuple(_MUL8[a] ^ _MUL4[a] ^ a for a in range(256))
MUL14 = tuple(_MUL8[a] ^ _MUL4[a] ^ MUL2[a] for a in range(256))

# flat states are column-major (index r + 4c); row r rotates left by r
SHIFT = tuple((i % 4) + 4 * (((i // 4) + (i % 4)) % 4) for i in range(16))
INV_SHIFT = tuple((i % 4) + 4 * (((i // 4) - (i % 4)) % 4) for i in range(16))

RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


class RoundKeys:
    """Eleven 16-byte round keys, immutable once constructed."""

    __slots__ = ("_blocks",)

    def __init__(self, material):
        if isinstance(material, (bytes, bytearray, memoryview)):
            data = bytes(material)
            if len(data) != 176:
                raise LengthMismatch(f"round-key material is {len(data)} bytes, expected 176")
            blocks = tuple(data[i * 16:(i + 1) * 16] for i in range(11))
        else:
            blocks = tuple(bytes(b) for b in material)
            if len(blocks) != 11 or any(len(b) != 16 for b in blocks):
                raise LengthMismatch("round keys must be 11 blocks of 16 bytes")
        self._blocks = blocks

    def __getitem__(self, i: int) -> bytes:
        return self._blocks[i]

    def __len__(self) -> int:
        return 11

    def __iter__(self):
        return iter(self._blocks)

    def __bytes__(self) -> bytes:
        return b"".join(self._blocks)

    def __eq__(self, other) -> bool:
        if isinstance(other, RoundKeys):
            return self._blocks == other._blocks
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._blocks)


def rijndael_round_keys(key: bytes) -> RoundKeys:
    """Classic AES-128 key expansion; the compatibility/test schedule."""
    if len(key) != 16:
        raise LengthMismatch(f"AES-128 key must be 16 bytes, got {len(key)}")
    words = [list(key[4 * i:4 * i + 4]) for i in range(4)]
    for i in range(4, 44):
        t = words[i - 1]
        if i % 4 == 0:
            t = [
                SBOX[t[1]] ^ RCON[i // 4 - 1],
                SBOX[t[2]],
                SBOX[t[3]],
                SBOX[t[0]],
            ]
        words.append([a ^ b for a, b in zip(words[i - 4], t)])
    return RoundKeys(bytes(b for w in words for b in w))


def block_encrypt(block: bytes, round_keys) -> bytes:
    """One AES-128 block with the supplied round keys used verbatim."""
    if len(block) != 16:
        raise ValueError("block must be 16 bytes")
    rk = round_keys[0]
    s = [block[i] ^ rk[i] for i in range(16)]
    for rnd in range(1, 10):
        rk = round_keys[rnd]
        t = [SBOX[s[j]] for j in SHIFT]
        mixed = [0] * 16
        for c in (0, 4, 8, 12):
            a0, a1, a2, a3 = t[c], t[c + 1], t[c + 2], t[c + 3]
            mixed[c] = MUL2[a0] ^ MUL3[a1] ^ a2 ^ a3 ^ rk[c]
            mixed[c + 1] = a0 ^ MUL2[a1] ^ MUL3[a2] ^ a3 ^ rk[c + 1]
            mixed[c + 2] = a0 ^ a1 ^ MUL2[a2] ^ MUL3[a3] ^ rk[c + 2]
            mixed[c + 3] = MUL3[a0] ^ a1 ^ a2 ^ MUL2[a3] ^ rk[c + 3]
        s = mixed
    rk = round_keys[10]
    return bytes(SBOX[s[SHIFT[i]]] ^ rk[i] for i in range(16))


def block_decrypt(block: bytes, round_keys) -> bytes:
    """Exact inverse of :func:`block_encrypt`."""
    if len(block) != 16:
        raise ValueError("block must be 16 bytes")
    rk = round_keys[10]
    s = [block[i] ^ rk[i] for i in range(16)]
    for rnd in range(9, 0, -1):
        rk = round_keys[rnd]
        t = [INV_SBOX[s[INV_SHIFT[i]]] ^ rk[i] for i in range(16)]
        mixed = [0] * 16
        for c in (0, 4, 8, 12):
            a0, a1, a2, a3 = t[c], t[c + 1], t[c + 2], t[c + 3]
            mixed[c] = MUL14[a0] ^ MUL11[a1] ^ MUL13[a2] ^ MUL9[a3]
            mixed[c + 1] = MUL9[a0] ^ MUL14[a1] ^ MUL11[a2] ^ MUL13[a3]
            mixed[c + 2] = MUL13[a0] ^ MUL9[a1] ^ MUL14[a2] ^ MUL11[a3]
            mixed[c + 3] = MUL11[a0] ^ MUL13[a1] ^ MUL9[a2] ^ MUL14[a3]
        s = mixed
    rk = round_keys[0]
    return bytes(INV_SBOX[s[INV_SHIFT[i]]] ^ rk[i] for i in range(16))


# --- batched counter mode -------------------------------------------------
#
# Counter-mode keystream blocks are independent, so they are produced in one
# vectorized pass over all blocks.  Must stay bit-identical to per-block
# block_encrypt; tests compare the two paths.

_NP_SBOX = np.array(SBOX, dtype=np.uint8)
_NP_MUL2 = np.array(MUL2, dtype=np.uint8)
_NP_MUL3 = np.array(MUL3, dtype=np.uint8)
_NP_SHIFT = np.array(SHIFT, dtype=np.intp)


def _encrypt_blocks(states: np.ndarray, round_keys) -> np.ndarray:
    rk = [np.frombuffer(bytes(round_keys[i]), dtype=np.uint8) for i in range(11)]
    s = states ^ rk[0]
    for rnd in range(1, 10):
        t = _NP_SBOX[s[:, _NP_SHIFT]].reshape(-1, 4, 4)
        a0, a1, a2, a3 = t[:, :, 0], t[:, :, 1], t[:, :, 2], t[:, :, 3]
        mixed = np.empty_like(t)
        mixed[:, :, 0] = _NP_MUL2[a0] ^ _NP_MUL3[a1] ^ a2 ^ a3
        mixed[:, :, 1] = a0 ^ _NP_MUL2[a1] ^ _NP_MUL3[a2] ^ a3
        mixed[:, :, 2] = a0 ^ a1 ^ _NP_MUL2[a2] ^ _NP_MUL3[a3]
        mixed[:, :, 3] = _NP_MUL3[a0] ^ a1 ^ a2 ^ _NP_MUL2[a3]
        s = mixed.reshape(-1, 16) ^ rk[rnd]
    return _NP_SBOX[s[:, _NP_SHIFT]] ^ rk[10]


def _ctr_keystream(nonce: bytes, nblocks: int, round_keys) -> bytes:
    if nblocks == 0:
        return b""
    blocks = np.empty((nblocks, 16), dtype=np.uint8)
    blocks[:, :12] = np.frombuffer(nonce, dtype=np.uint8)
    counters = np.arange(nblocks, dtype=np.uint32).astype(">u4")
    blocks[:, 12:] = counters.view(np.uint8).reshape(-1, 4)
    return _encrypt_blocks(blocks, round_keys).tobytes()


def _xor(a: bytes, b: bytes) -> bytes:
    if len(a) != len(b):
        raise LengthMismatch(f"cannot XOR {len(a)} bytes with {len(b)}")
    return (int.from_bytes(a, "little") ^ int.from_bytes(b, "little")).to_bytes(len(a), "little")


# --- envelope --------------------------------------------------------------

MAGIC = b"CLAES"
VERSION = 0x01
FLAG_LZ78 = 0x01
_HEADER_LEN = 27


@dataclass(frozen=True)
class Envelope:
    """Binary message container; all integers big-endian.

    Layout: magic "CLAES", version byte, flags byte (bit 0 = LZ78 applied),
    12-byte nonce, 8-byte pre-compression plaintext length, payload.
    """

    flags: int
    nonce: bytes
    plain_len: int
    payload: bytes

    def __post_init__(self):
        if not 0 <= self.flags <= 0xFF:
            raise ValueError("flags must be a single byte")
        if len(self.nonce) != 12:
            raise LengthMismatch("nonce must be exactly 12 bytes")
        if self.plain_len < 0:
            raise ValueError("plain_len must be non-negative")

    def encode(self) -> bytes:
        return b"".join(
            (
                MAGIC,
                bytes((VERSION, self.flags)),
                self.nonce,
                self.plain_len.to_bytes(8, "big"),
                self.payload,
            )
        )

    @classmethod
    def decode(cls, blob: bytes) -> "Envelope":
        if len(blob) < _HEADER_LEN:
            raise Truncated(f"envelope is {len(blob)} bytes, header needs {_HEADER_LEN}")
        if blob[:5] != MAGIC:
            raise BadMagic(f"bad magic {bytes(blob[:5])!r}")
        if blob[5] != VERSION:
            raise BadVersion(f"unsupported envelope version {blob[5]:#04x}")
        return cls(
            flags=blob[6],
            nonce=bytes(blob[7:19]),
            plain_len=int.from_bytes(blob[19:27], "big"),
            payload=bytes(blob[27:]),
        )


# --- message pipeline -------------------------------------------------------

def encrypt_message(
    master_key: bytes,
    nonce: bytes,
    plaintext: bytes,
    compress: bool = True,
    *,
    matrix: Matrix3D | None = None,
    standard_schedule: bool = False,
) -> Envelope:
    """Compress (optionally), whiten with the chaotic keystream, then
    counter-mode encrypt.

    ``standard_schedule`` swaps the chaos-derived round keys for the classic
    expansion of the master key (which must then be 16 bytes); decryption
    must use the same setting.
    """
    if not master_key:
        raise EmptyKey("master key must not be empty")
    if len(nonce) != 12:
        raise LengthMismatch(f"nonce must be 12 bytes, got {len(nonce)}")
    km = derive_key_material(master_key, matrix)
    if compress:
        data = lz78.encode_tokens(lz78.compress(bytes(plaintext)))
    else:
        data = bytes(plaintext)
    ks = generate_keystream(keystream_seed(km.key1), km.final_key, len(data))
    whitened = _xor(data, ks)
    if standard_schedule:
        round_keys = rijndael_round_keys(master_key)
    else:
        round_keys = RoundKeys(km.round_keys)
    stream = _ctr_keystream(bytes(nonce), (len(whitened) + 15) // 16, round_keys)
    payload = _xor(whitened, stream[: len(whitened)])
    return Envelope(
        flags=FLAG_LZ78 if compress else 0,
        nonce=bytes(nonce),
        plain_len=len(plaintext),
        payload=payload,
    )


def decrypt_message(
    env: Envelope,
    master_key: bytes,
    *,
    matrix: Matrix3D | None = None,
    standard_schedule: bool = False,
) -> bytes:
    """Invert :func:`encrypt_message`; verifies the declared plaintext length."""
    if not master_key:
        raise EmptyKey("master key must not be empty")
    km = derive_key_material(master_key, matrix)
    if standard_schedule:
        round_keys = rijndael_round_keys(master_key)
    else:
        round_keys = RoundKeys(km.round_keys)
    stream = _ctr_keystream(env.nonce, (len(env.payload) + 15) // 16, round_keys)
    whitened = _xor(env.payload, stream[: len(env.payload)])
    ks = generate_keystream(keystream_seed(km.key1), km.final_key, len(whitened))
    data = _xor(whitened, ks)
    if env.flags & FLAG_LZ78:
        plaintext = lz78.decompress(lz78.decode_tokens(data))
    else:
        plaintext = data
    if len(plaintext) != env.plain_len:
        raise LengthMismatch(
            f"decoded {len(plaintext)} bytes, envelope declares {env.plain_len}"
        )
    return plaintext
