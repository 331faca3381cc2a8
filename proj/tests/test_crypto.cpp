#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <random>

#include "ecike/aead.hpp"
#include "ecike/rng.hpp"
#include "ecike/sha256.hpp"
#include "test_util.hpp"

using namespace ecike;

namespace {

Bytes openssl_hmac_sha256(BytesView key, BytesView msg) {
    Bytes out(32);
    unsigned int len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(),
         out.data(), &len);
    REQUIRE(len == 32);
    return out;
}

Bytes openssl_chacha_seal(BytesView key, BytesView nonce, BytesView pt, BytesView aad) {
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    REQUIRE(ctx);
    Bytes out(pt.size() + 16);
    int len = 0;
    REQUIRE(EVP_EncryptInit_ex(ctx, EVP_chacha20_poly1305(), nullptr, key.data(), nonce.data()) == 1);
    if (!aad.empty())
        REQUIRE(EVP_EncryptUpdate(ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) == 1);
    int clen = 0;
    REQUIRE(EVP_EncryptUpdate(ctx, out.data(), &len, pt.data(), static_cast<int>(pt.size())) == 1);
    clen = len;
    REQUIRE(EVP_EncryptFinal_ex(ctx, out.data() + clen, &len) == 1);
    clen += len;
    REQUIRE(EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_AEAD_GET_TAG, 16, out.data() + clen) == 1);
    EVP_CIPHER_CTX_free(ctx);
    out.resize(clen + 16);
    return out;
}

}  // namespace

TEST_CASE("SHA-256 known answers") {
    CHECK(to_hex(Sha256::digest({})) ==
          "E3B0C44298FC1C149AFBF4C8996FB92427AE41E4649B934CA495991B7852B855");
    CHECK(to_hex(Sha256::digest(to_bytes("abc"))) ==
          "BA7816BF8F01CFEA414140DE5DAE2223B00361A396177A9CB410FF61F20015AD");
    CHECK(to_hex(Sha256::digest(to_bytes("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"))) ==
          "248D6A61D20638B8E5C026930C3E6039A33CE45964FF2167F6ECEDD419DB06C1");
}

TEST_CASE("SHA-256 incremental updates match one-shot") {
    std::mt19937_64 rng(301);
    for (int i = 0; i < 100; ++i) {
        const Bytes data = testutil::random_bytes(rng() % 300, rng);
        Sha256 h;
        std::size_t off = 0;
        while (off < data.size()) {
            const std::size_t take = std::min<std::size_t>(rng() % 70 + 1, data.size() - off);
            h.update({data.data() + off, take});
            off += take;
        }
        REQUIRE(h.finish() == Sha256::digest(data));
    }
}

TEST_CASE("HMAC-SHA256 RFC 4231 vectors") {
    CHECK(to_hex(hmac_sha256(Bytes(20, 0x0b), to_bytes("Hi There"))) ==
          "B0344C61D8DB38535CA8AFCEAF0BF12B881DC200C9833DA726E9376C2E32CFF7");
    CHECK(to_hex(hmac_sha256(to_bytes("Jefe"), to_bytes("what do ya want for nothing?"))) ==
          "5BDCC146BF60754E6A042426089575C75A003F089D2739839DEC58B964EC3843");
    CHECK(to_hex(hmac_sha256(Bytes(20, 0xaa), Bytes(50, 0xdd))) ==
          "773EA91E36800E46854DB8EBD09181A72959098B3EF8C122D9635514CED565FE");
    Bytes key4(25);
    for (int i = 0; i < 25; ++i) key4[i] = static_cast<std::uint8_t>(i + 1);
    CHECK(to_hex(hmac_sha256(key4, Bytes(50, 0xcd))) ==
          "82558A389A443C0EA4CC819899F2083A85F0FAA3E578F8077A2E3FF46729665B");
}

TEST_CASE("HMAC-SHA256 agrees with OpenSSL on random inputs") {
    std::mt19937_64 rng(302);
    for (int i = 0; i < 500; ++i) {
        const Bytes key = testutil::random_bytes(rng() % 100, rng);
        const Bytes msg = testutil::random_bytes(rng() % 300, rng);
        REQUIRE(hmac_sha256(key, msg) == openssl_hmac_sha256(key, msg));
    }
}

TEST_CASE("ChaCha20-Poly1305 RFC 8439 vector") {
    Bytes key(32);
    for (int i = 0; i < 32; ++i) key[i] = static_cast<std::uint8_t>(0x80 + i);
    const Bytes nonce = from_hex("070000004041424344454647");
    const Bytes aad = from_hex("50515253C0C1C2C3C4C5C6C7");
    const Bytes pt = to_bytes(
        "Ladies and Gentlemen of the class of '99: If I could offer you "
        "only one tip for the future, sunscreen would be it.");

    const Bytes sealed = aead_seal(key, nonce, pt, aad);
    const Bytes ct(sealed.begin(), sealed.end() - 16);
    const Bytes tag(sealed.end() - 16, sealed.end());
    CHECK(to_hex(ct) ==
          "D31A8D34648E60DB7B86AFBC53EF7EC2A4ADED51296E08FEA9E2B5A736EE62D6"
          "3DBEA45E8CA9671282FAFB69DA92728B1A71DE0A9E060B2905D6A5B67ECD3B36"
          "92DDBD7F2D778B8C9803AEE328091B58FAB324E4FAD675945585808B4831D7BC"
          "3FF4DEF08E4B7A9DE576D26586CEC64B6116");
    CHECK(to_hex(tag) == "1AE10B594F09E26A7E902ECBD0600691");
    CHECK(aead_open(key, nonce, sealed, aad) == pt);
}

TEST_CASE("AEAD agrees with OpenSSL both directions") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 200; ++i) {
        const Bytes key = testutil::random_bytes(32, rng);
        const Bytes nonce = testutil::random_bytes(12, rng);
        const Bytes aad = testutil::random_bytes(rng() % 40, rng);
        const Bytes pt = testutil::random_bytes(rng() % 500, rng);

        const Bytes ours = aead_seal(key, nonce, pt, aad);
        const Bytes theirs = openssl_chacha_seal(key, nonce, pt, aad);
        REQUIRE(ours == theirs);
        REQUIRE(aead_open(key, nonce, theirs, aad) == pt);
    }
}

TEST_CASE("AEAD rejects tampering") {
    std::mt19937_64 rng(304);
    const Bytes key = testutil::random_bytes(32, rng);
    const Bytes nonce = testutil::random_bytes(12, rng);
    const Bytes pt = to_bytes("attack at dawn");
    Bytes sealed = aead_seal(key, nonce, pt, {});

    for (std::size_t i = 0; i < sealed.size(); ++i) {
        Bytes mutated = sealed;
        mutated[i] ^= 0x01;
        REQUIRE_THROWS_AS(aead_open(key, nonce, mutated, {}), CryptoError);
    }
    CHECK_THROWS_AS(aead_open(key, nonce, Bytes(8, 0), {}), CryptoError);
    // wrong key
    Bytes other = key;
    other[0] ^= 1;
    CHECK_THROWS_AS(aead_open(other, nonce, sealed, {}), CryptoError);
}

TEST_CASE("deterministic rng reproduces and separates by label and seed") {
    DeterministicRng a(7, "x"), b(7, "x"), c(8, "x"), d(7, "y");
    const Bytes s1 = a.bytes(64), s2 = b.bytes(64), s3 = c.bytes(64), s4 = d.bytes(64);
    CHECK(s1 == s2);
    CHECK(s1 != s3);
    CHECK(s1 != s4);

    // chunked reads equal bulk reads
    DeterministicRng e(7, "x");
    Bytes chunks = e.bytes(10);
    append(chunks, e.bytes(30));
    append(chunks, e.bytes(24));
    CHECK(chunks == s1);
}
