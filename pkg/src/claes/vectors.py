"""Pinned known-answer vectors.

The key-material vectors were generated once by an independent big-integer
reference implementation of the derivation chain and are asserted bit-exact
ever since, by both the test suite and the CLI self-test.  Key sequences are
pinned on their first 64 bytes (whole sequence when shorter).
"""

# Published AES-128 single-block vector (classic key expansion).
AES_KEY = "000102030405060708090a0b0c0d0e0f"
AES_PLAINTEXT = "00112233445566778899aabbccddeeff"
AES_CIPHERTEXT = "69c4e0d86a7b0430d8cdb78070b4c55a"

# Key-material chains for three fixed master keys (default matrix).
GOLDEN_KEYS = {
    "zeros16": {
        "master": "00000000000000000000000000000000",
        "key1": "000007000007000007000007000007000007000007000007000007000007000007000007000007000007000007000007",
        "key2": "d8db05d821f5af81ee5eeefce1c33a3dbe92d65784c8b579dc2a8fbe98fe75fb3e7d926e238fd65bd4df0ba5e3a3e9f1",
        "key3": "de123cdd4c10285ab91ad84087ee982805210971eef8c026f4e57f82f07617a7b26ee0e4f9c459ec7ad7675caff9acdb",
        "final_key": "06c93e056de287db504436bb662da515bbb4df266d30755828cff73c688f625c8b13728dda4b88b7ae0f6cf94b5a452d",
        "keystream64": "cd8c1d78d74e1f8b835d5af5ea80f89a58a7e898a4e414c00b453faf95dca0d29607dc73d3b31008e53acb122d6d289199c9bc2062c7a07405f6e63d235a4e38",
        "round_keys64": "42dad9e37e26b4b68e551cdc23db8052f34b93bd275148a5aeb6b5d04901b08c8fb56d57ce1753e972e70bc2bbd339a1ed1e07abc4f906edf8a25d3582c8645b",
    },
    "counting16": {
        "master": "000102030405060708090a0b0c0d0e0f",
        "key1": "0000071f0d26021a0921272804340b23052a06120d251f2c0d1f142c2c330f39162e0a3511171830243713311a320239",
        "key2": "78a6c985f87bc883075ae33f861441177949e01bf697cf47b610107eb7b5e2a3c06c27dd3827eac1caac690e89f1c93b",
        "key3": "7e6ff080959e4f58501ed583e039e302c2fa3f3d9ca7ba189edfe042df3d80ff4c7f5557e26c657664a405f7c5ab8c11",
        "final_key": "06c93e1a60c385c15e6511946219a936be99d93467156a7325d0e41044bb6d659a3d78bfcb5c97878a3f7fc856684713",
        "keystream64": "cf82d685e4a762850a9b894247ab8695d0c8a713ccda061085f1cd3b9c6ffa172e273228a52096dceb3870d1d7e72801602a3caaabd2eb746adf5efe7b7f172b",
        "round_keys64": "738974f6025ff43df15d2184d3ce0b142e76c3f712d79f690a67225f21a666678ef27ec8f54be053d43c445715fdad9ed5b924e3371b87c3c79ca611afd4cb8c",
    },
    "descending32": {
        "master": "fffefdfcfbfaf9f8f7f6f5f4f3f2f1f0efeeedecebeae9e8e7e6e5e4e3e2e1e0",
        "key1": "1d1d083a10251b0306383223192504361821170b02343a1f103a372d2d180e20352b13160c06332935140a2831271b12031b2a200e0b0101281e30093b23261c",
        "key2": "43f23f1835b832e7dd4eff98033f088b30c4730de6e9f1e736aa457eb6b1b260221fbec817694cc1936337791c31972f7a9e4f59d84adef179574fba17d93a7a",
        "key3": "453b061d585db53c8a0ac9246512aa9e8b77ac2b8cd984b81e65b542de39d03cae0ccc42cd22c3763d6b5b80506bd2050d7970958caa34cfa9c82e424748fe42",
        "final_key": "1bd4313f7dc09cd8517c049f7f08a623a392c82d68044f4038f5c71145906c7cb938619cd64dbc9e9b1c66d17d7d5e3874fc15ec5aebeb3ff88151f16bb2e224",
        "keystream64": "49c03ba0d5a114cbbf825393c64e9a504e7a2a0298c6f8b5daaa30af2ca938d7216f03eba8369b55bc1dbc3560fc6be939ea3614a8d42cae8bc18de45bd67a8f",
        "round_keys64": "af7f921f22de396b2a77295708398a9b8624e398b7d9974c2ec768b9dd456ab3a2857133c9fdcdb6714bf41fbdee6996d9335e0e90a484a4d64ece3ce8d70643",
    },
}

# End-to-end message pipeline with a fixed key, nonce, and 64-byte input:
# one envelope per compression flag, pinned byte-for-byte.
ENVELOPE_MASTER = "2b7e151628aed2a6abf7158809cf4f3c"
ENVELOPE_NONCE = "000102030405060708090a0b"
ENVELOPE_PLAINTEXT = (
    "030a11181f262d343b424950575e656c737a81888f969da4abb2b9c0c7ced5dc"
    "e3eaf1f8ff060d141b222930373e454c535a61686f767d848b9299a0a7aeb5bc"
)
ENVELOPE_PLAIN = (
    "434c4145530100000102030405060708090a0b0000000000000040"
    "7062b5604e912b1bcdac54a39cd517b8e0e4dd3e0aa3f110c94dbef83c909ac4"
    "297e85ed78cc625cb38068fe99817d3a070a59257711e918948e946c0cdca1ca"
)
ENVELOPE_COMPRESSED = (
    "434c4145530101000102030405060708090a0b0000000000000040"
    "7369a77850bd062ee7ee1cebcb8a6dd492b85cb7a8356d8062fe3c38fa1c4f19"
    "8394754587cb3848a9fc41cfcbbf391a54514b4d191d949d9e1c0c44ab739b76"
    "4041f3aa411056e2223e2fe137f0d52493703b06c1bde79429f2d2ec711e1536"
    "689d8add89555bb625ba61035ec02d60d207ec9c09ff31d73d6446d703e00e86"
    "a00ec775c4b97f1a8a4eb4b028e3492671c61c61329b3c22d36bf9de14c082f9"
    "bd20d1cc74e3af2479054628b458e0577ad9e524a9af2bef7ce790ac8155f517"
)
