#include "ecike/kdf.hpp"

#include "ecike/sha256.hpp"

namespace ecike::kdf {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw DomainError(std::string("key derivation input missing: ") + what);
}

void check_common(const KeyMaterialInputs& in) {
    require(in.params != nullptr, "curve params");
    require(in.cky_i.size() == 8, "CKY-I");
    require(in.cky_r.size() == 8, "CKY-R");
}

void check_nonces(const KeyMaterialInputs& in) {
    require(!in.ni_b.empty(), "Ni_b");
    require(!in.nr_b.empty(), "Nr_b");
}

Bytes shared_octets(const KeyMaterialInputs& in) {
    return point_secret_octets(in.shared_point, *in.params);
}

}  // namespace

Bytes prf(BytesView key, BytesView msg) {
    return hmac_sha256(key, msg);
}

Bytes hash(BytesView msg) {
    return Sha256::digest(msg);
}

Bytes derive_key(BytesView secret, std::string_view context) {
    return prf(secret, to_bytes(context));
}

Bytes point_secret_octets(const curve::Point& p, const curve::Params& params) {
    if (p.is_infinity()) throw DomainError("cannot encode the point at infinity as a secret");
    if (p.x().field() != params.field) throw DomainError("point from a different field");
    return p.x().to_bytes();
}

Bytes skeyid_sig(const KeyMaterialInputs& in) {
    check_common(in);
    check_nonces(in);
    return prf(concat({in.ni_b, in.nr_b}), shared_octets(in));
}

Bytes skeyid_pke(const KeyMaterialInputs& in) {
    check_common(in);
    check_nonces(in);
    return prf(hash(concat({in.ni_b, in.nr_b})), concat({in.cky_i, in.cky_r}));
}

Bytes skeyid_psk(BytesView pre_shared_key, const KeyMaterialInputs& in) {
    check_common(in);
    check_nonces(in);
    require(!pre_shared_key.empty(), "pre-shared key");
    return prf(pre_shared_key, concat({in.ni_b, in.nr_b}));
}

std::array<Bytes, 3> chain_inputs(BytesView skeyid, const KeyMaterialInputs& in) {
    check_common(in);
    const Bytes shared = shared_octets(in);
    std::array<Bytes, 3> out;
    out[0] = concat({shared, in.cky_i, in.cky_r});
    out[0].push_back(0x00);
    const Bytes d = prf(skeyid, out[0]);
    out[1] = concat({d, shared, in.cky_i, in.cky_r});
    out[1].push_back(0x01);
    const Bytes a = prf(skeyid, out[1]);
    out[2] = concat({a, shared, in.cky_i, in.cky_r});
    out[2].push_back(0x02);
    return out;
}

SkeyidSet derive_chain(BytesView skeyid, const KeyMaterialInputs& in) {
    const auto inputs = chain_inputs(skeyid, in);
    SkeyidSet set;
    set.skeyid.assign(skeyid.begin(), skeyid.end());
    set.skeyid_d = prf(skeyid, inputs[0]);
    set.skeyid_a = prf(skeyid, inputs[1]);
    set.skeyid_e = prf(skeyid, inputs[2]);
    return set;
}

namespace {

Bytes ke_octets(const KeyMaterialInputs& in, const curve::Point& p, const char* what) {
    require(!p.is_infinity(), what);
    return point_secret_octets(p, *in.params);
}

}  // namespace

Bytes hash_i_baseline(BytesView skeyid, const KeyMaterialInputs& in) {
    check_common(in);
    require(!in.sa_i_b.empty(), "SAi_b");
    require(!in.id_i_b.empty(), "IDii_b");
    return prf(skeyid, concat({ke_octets(in, in.ke_i, "KEi"), ke_octets(in, in.ke_r, "KEr"),
                               in.cky_i, in.cky_r, in.sa_i_b, in.id_i_b}));
}

Bytes hash_r_baseline(BytesView skeyid, const KeyMaterialInputs& in) {
    check_common(in);
    require(!in.sa_i_b.empty(), "SAi_b");
    require(!in.id_r_b.empty(), "IDir_b");
    return prf(skeyid, concat({ke_octets(in, in.ke_r, "KEr"), ke_octets(in, in.ke_i, "KEi"),
                               in.cky_r, in.cky_i, in.sa_i_b, in.id_r_b}));
}

Bytes hash_i_improved(BytesView skeyid, const KeyMaterialInputs& in) {
    check_common(in);
    require(!in.sa_i_b.empty(), "SAi");
    require(!in.sa_r_b.empty(), "SAr");
    require(!in.id_i_b.empty(), "IDi");
    require(!in.id_r_b.empty(), "IDr");
    return prf(skeyid, concat({ke_octets(in, in.ke_i, "KEi"), ke_octets(in, in.ke_r, "KEr"),
                               in.cky_i, in.cky_r, in.sa_i_b, in.sa_r_b, in.id_i_b, in.id_r_b}));
}

Bytes hash_r_improved(BytesView skeyid, const KeyMaterialInputs& in) {
    check_common(in);
    require(!in.sa_i_b.empty(), "SAi");
    require(!in.sa_r_b.empty(), "SAr");
    require(!in.id_i_b.empty(), "IDi");
    require(!in.id_r_b.empty(), "IDr");
    return prf(skeyid, concat({ke_octets(in, in.ke_r, "KEr"), ke_octets(in, in.ke_i, "KEi"),
                               in.cky_r, in.cky_i, in.sa_r_b, in.sa_i_b, in.id_r_b, in.id_i_b}));
}

}  // namespace ecike::kdf
