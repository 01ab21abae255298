import random

import pytest

from claes.cipher import (
    FLAG_LZ78,
    Envelope,
    RoundKeys,
    _ctr_keystream,
    block_decrypt,
    block_encrypt,
    decrypt_message,
    encrypt_message,
    rijndael_round_keys,
)
from claes.errors import (
    BadMagic,
    BadVersion,
    ClaesError,
    EmptyKey,
    LengthMismatch,
    Truncated,
)
from claes.keyschedule import derive_key_material
from claes import vectors

import oracles

FIPS_KEY = bytes.fromhex("000102030405060708090a0b0c0d0e0f")
FIPS_PLAINTEXT = bytes.fromhex("00112233445566778899aabbccddeeff")
FIPS_CIPHERTEXT = bytes.fromhex("69c4e0d86a7b0430d8cdb78070b4c55a")

# frozen from the first-principles oracle
ZERO_BLOCK_ZERO_KEYS = bytes.fromhex("36363636363636363636363636363636")
ZERO_KEY_EXPANSION_RK1 = bytes.fromhex("62636363626363636263636362636363")
ZERO_KEY_EXPANSION_RK10 = bytes.fromhex("b4ef5bcb3e92e21123e951cf6f8f188e")


def _random_round_keys(rng):
    return RoundKeys(rng.randbytes(176))


# --- block core ---------------------------------------------------------------

def test_standard_vector():
    rk = rijndael_round_keys(FIPS_KEY)
    assert block_encrypt(FIPS_PLAINTEXT, rk) == FIPS_CIPHERTEXT
    assert block_decrypt(FIPS_CIPHERTEXT, rk) == FIPS_PLAINTEXT


def test_zero_block_zero_round_keys_golden():
    rk = RoundKeys(bytes(176))
    assert block_encrypt(bytes(16), rk) == ZERO_BLOCK_ZERO_KEYS


def test_block_core_matches_independent_reference():
    rng = random.Random(42)
    for _ in range(64):
        key = rng.randbytes(16)
        block = rng.randbytes(16)
        rk = rijndael_round_keys(key)
        oracle_rk = oracles.expand_key(key)
        assert list(rk) == oracle_rk
        assert block_encrypt(block, rk) == oracles.aes_encrypt(block, oracle_rk)
        assert block_decrypt(block, rk) == oracles.aes_decrypt(block, oracle_rk)


def test_block_roundtrip_many_random_pairs():
    rng = random.Random(77)
    for _ in range(10_000):
        rk = _random_round_keys(rng)
        block = rng.randbytes(16)
        assert block_decrypt(block_encrypt(block, rk), rk) == block


def test_block_composition_both_orders():
    rng = random.Random(3)
    rk = _random_round_keys(rng)
    block = rng.randbytes(16)
    assert block_decrypt(block_encrypt(block, rk), rk) == block
    assert block_encrypt(block_decrypt(block, rk), rk) == block


def test_block_requires_16_bytes():
    rk = RoundKeys(bytes(176))
    with pytest.raises(ValueError):
        block_encrypt(bytes(15), rk)
    with pytest.raises(ValueError):
        block_decrypt(bytes(17), rk)


def test_rijndael_expansion_shape_and_first_round():
    rk = rijndael_round_keys(FIPS_KEY)
    assert len(rk) == 11
    assert rk[0] == FIPS_KEY
    assert bytes(rk) == b"".join(rk)


def test_rijndael_expansion_zero_key_golden():
    rk = rijndael_round_keys(bytes(16))
    assert rk[0] == bytes(16)
    assert rk[1] == ZERO_KEY_EXPANSION_RK1
    assert rk[10] == ZERO_KEY_EXPANSION_RK10


def test_rijndael_rejects_wrong_key_size():
    with pytest.raises(LengthMismatch):
        rijndael_round_keys(bytes(15))


def test_round_keys_validation():
    with pytest.raises(LengthMismatch):
        RoundKeys(bytes(175))
    with pytest.raises(LengthMismatch):
        RoundKeys([bytes(16)] * 10)
    rk = RoundKeys([bytes(16)] * 11)
    assert rk == RoundKeys(bytes(176))


def test_batched_counter_mode_matches_per_block():
    rng = random.Random(11)
    rk = _random_round_keys(rng)
    nonce = rng.randbytes(12)
    batched = _ctr_keystream(nonce, 33, rk)
    reference = b"".join(
        block_encrypt(nonce + i.to_bytes(4, "big"), rk) for i in range(33)
    )
    assert batched == reference


# --- envelope -------------------------------------------------------------------

def test_envelope_codec_roundtrip():
    env = Envelope(flags=1, nonce=bytes(12), plain_len=77, payload=b"abc")
    again = Envelope.decode(env.encode())
    assert again == env


def test_envelope_bad_magic():
    blob = bytearray(Envelope(flags=0, nonce=bytes(12), plain_len=0, payload=b"").encode())
    blob[0] = ord("X")
    with pytest.raises(BadMagic):
        Envelope.decode(bytes(blob))


def test_envelope_bad_version():
    blob = bytearray(Envelope(flags=0, nonce=bytes(12), plain_len=0, payload=b"").encode())
    blob[5] = 0x02
    with pytest.raises(BadVersion):
        Envelope.decode(bytes(blob))


def test_envelope_truncated_header():
    with pytest.raises(Truncated):
        Envelope.decode(b"CLAES\x01\x00")


def test_envelope_validates_fields():
    with pytest.raises(LengthMismatch):
        Envelope(flags=0, nonce=bytes(11), plain_len=0, payload=b"")
    with pytest.raises(ValueError):
        Envelope(flags=300, nonce=bytes(12), plain_len=0, payload=b"")


# --- message pipeline --------------------------------------------------------------

def test_message_roundtrip_both_flags():
    rng = random.Random(500)
    for compress in (False, True):
        for size in (0, 1, 15, 16, 17, 1000):
            master = rng.randbytes(16)
            nonce = rng.randbytes(12)
            plaintext = rng.randbytes(size)
            env = encrypt_message(master, nonce, plaintext, compress)
            assert env.plain_len == size
            assert bool(env.flags & FLAG_LZ78) == compress
            assert decrypt_message(env, master) == plaintext


def test_empty_plaintext_without_compression():
    env = encrypt_message(b"key", bytes(12), b"", compress=False)
    assert env.payload == b""
    assert env.plain_len == 0
    assert decrypt_message(env, b"key") == b""


def test_envelope_golden_bytes():
    master = bytes.fromhex(vectors.ENVELOPE_MASTER)
    nonce = bytes.fromhex(vectors.ENVELOPE_NONCE)
    plaintext = bytes.fromhex(vectors.ENVELOPE_PLAINTEXT)
    assert encrypt_message(master, nonce, plaintext, False).encode().hex() == vectors.ENVELOPE_PLAIN
    assert encrypt_message(master, nonce, plaintext, True).encode().hex() == vectors.ENVELOPE_COMPRESSED


def test_encrypt_requires_key_and_nonce():
    with pytest.raises(EmptyKey):
        encrypt_message(b"", bytes(12), b"data")
    with pytest.raises(LengthMismatch):
        encrypt_message(b"key", bytes(11), b"data")
    with pytest.raises(EmptyKey):
        decrypt_message(Envelope(flags=0, nonce=bytes(12), plain_len=0, payload=b""), b"")


def test_wrong_plain_len_detected():
    env = encrypt_message(b"key", bytes(12), b"0123456789", compress=False)
    tampered = Envelope(env.flags, env.nonce, env.plain_len + 1, env.payload)
    with pytest.raises(LengthMismatch):
        decrypt_message(tampered, b"key")


def test_corrupted_compressed_payload_never_silently_wrong_length():
    rng = random.Random(9090)
    master = b"fault injection key"
    nonce = rng.randbytes(12)
    plaintext = rng.randbytes(512) + b"ABCD" * 64
    env = encrypt_message(master, nonce, plaintext, compress=True)
    outcomes = {"error": 0, "same_length": 0}
    for _ in range(1000):
        corrupted = bytearray(env.payload)
        pos = rng.randrange(len(corrupted))
        corrupted[pos] ^= 1 + rng.randrange(255)
        bad = Envelope(env.flags, env.nonce, env.plain_len, bytes(corrupted))
        try:
            out = decrypt_message(bad, master)
        except ClaesError:
            outcomes["error"] += 1
        else:
            # a same-length wrong plaintext is possible and accepted; a
            # wrong-length silent success is not
            assert len(out) == env.plain_len
            assert out != plaintext
            outcomes["same_length"] += 1
    assert outcomes["error"] + outcomes["same_length"] == 1000


def test_wrong_key_never_recovers_plaintext():
    rng = random.Random(321)
    plaintext = rng.randbytes(300)
    nonce = rng.randbytes(12)
    master = rng.randbytes(16)
    env = encrypt_message(master, nonce, plaintext, compress=True)
    for _ in range(1000):
        wrong = bytearray(master)
        bit = rng.randrange(128)
        wrong[bit // 8] ^= 1 << (bit % 8)
        try:
            out = decrypt_message(env, bytes(wrong))
        except ClaesError:
            continue
        assert out != plaintext
    assert decrypt_message(env, master) == plaintext


def test_nonce_separation():
    rng = random.Random(654)
    master = b"nonce separation"
    plaintext = b"same plaintext every time"
    differing = 0
    for _ in range(1000):
        n1 = rng.randbytes(12)
        n2 = rng.randbytes(12)
        if n1 == n2:
            continue
        a = encrypt_message(master, n1, plaintext, compress=False)
        b = encrypt_message(master, n2, plaintext, compress=False)
        differing += a.payload != b.payload
    assert differing == 1000


def test_standard_schedule_mode():
    master = FIPS_KEY
    nonce = bytes(range(12))
    plaintext = b"standard schedule interop"
    env = encrypt_message(master, nonce, plaintext, compress=True, standard_schedule=True)
    assert decrypt_message(env, master, standard_schedule=True) == plaintext
    # chaos-schedule decryption of a standard-schedule envelope must not work
    try:
        out = decrypt_message(env, master)
    except ClaesError:
        out = None
    assert out != plaintext


def test_standard_schedule_requires_16_byte_master():
    with pytest.raises(LengthMismatch):
        encrypt_message(b"short", bytes(12), b"x", standard_schedule=True)


def test_chaos_round_keys_feed_the_block_core():
    # pipeline keystream blocks must come from block_encrypt(nonce||counter)
    # under the chaos round keys
    master = b"pipeline wiring check"
    km = derive_key_material(master)
    nonce = bytes(12)
    env = encrypt_message(master, nonce, bytes(16), compress=False)
    ks_seed_block = block_encrypt(nonce + (0).to_bytes(4, "big"), RoundKeys(km.round_keys))
    from claes.keyschedule import generate_keystream, keystream_seed

    whitening = generate_keystream(keystream_seed(km.key1), km.final_key, 16)
    expected_payload = bytes(w ^ k for w, k in zip(whitening, ks_seed_block))
    assert env.payload == expected_payload
