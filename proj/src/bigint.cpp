#include "ecike/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "ecike/rng.hpp"

namespace ecike {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_u64(u64 v) {
    BigUint r;
    if (v) r.limbs_.push_back(v);
    return r;
}

BigUint BigUint::from_bytes_be(BytesView in) {
    BigUint r;
    r.limbs_.assign((in.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::size_t bit = (in.size() - 1 - i) * 8;
        r.limbs_[bit / 64] |= u64{in[i]} << (bit % 64);
    }
    r.trim();
    return r;
}

BigUint BigUint::from_hex(std::string_view hex) {
    std::string compact;
    for (char c : hex) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.size() % 2) compact.insert(compact.begin(), '0');
    return from_bytes_be(ecike::from_hex(compact));
}

std::string BigUint::to_hex() const {
    if (is_zero()) return "0";
    std::string full = ecike::to_hex(to_bytes_be(limbs_.size() * 8));
    const auto pos = full.find_first_not_of('0');
    return full.substr(pos);
}

Bytes BigUint::to_bytes_be(std::size_t width) const {
    if (bit_length() > width * 8) throw DomainError("value does not fit requested width");
    Bytes out(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        const std::size_t bit = (width - 1 - i) * 8;
        if (bit / 64 < limbs_.size()) out[i] = static_cast<std::uint8_t>(limbs_[bit / 64] >> (bit % 64));
    }
    return out;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return limbs_.size() * 64 - std::countl_zero(limbs_.back());
}

bool BigUint::bit(std::size_t i) const {
    const std::size_t li = i / 64;
    if (li >= limbs_.size()) return false;
    return (limbs_[li] >> (i % 64)) & 1;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.assign(n + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const u64 av = i < a.limbs_.size() ? a.limbs_[i] : 0;
        const u64 bv = i < b.limbs_.size() ? b.limbs_[i] : 0;
        const u128 sum = u128{av} + bv + carry;
        r.limbs_[i] = static_cast<u64>(sum);
        carry = static_cast<u64>(sum >> 64);
    }
    r.limbs_[n] = carry;
    r.trim();
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (a < b) throw DomainError("unsigned subtraction underflow");
    BigUint r;
    r.limbs_.assign(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        const u64 bv = i < b.limbs_.size() ? b.limbs_[i] : 0;
        const u128 av = u128{a.limbs_[i]};
        const u128 sub = u128{bv} + static_cast<u64>(borrow);
        if (av >= sub) {
            r.limbs_[i] = static_cast<u64>(av - sub);
            borrow = 0;
        } else {
            r.limbs_[i] = static_cast<u64>((u128{1} << 64) + av - sub);
            borrow = 1;
        }
    }
    r.trim();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            const u128 cur = u128{a.limbs_[i]} * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + b.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

BigUint operator<<(const BigUint& a, std::size_t bits) {
    if (a.is_zero()) return {};
    const std::size_t lo = bits / 64;
    const unsigned bo = bits % 64;
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + lo + 1, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        r.limbs_[i + lo] |= bo ? a.limbs_[i] << bo : a.limbs_[i];
        if (bo) r.limbs_[i + lo + 1] |= a.limbs_[i] >> (64 - bo);
    }
    r.trim();
    return r;
}

BigUint operator>>(const BigUint& a, std::size_t bits) {
    const std::size_t lo = bits / 64;
    const unsigned bo = bits % 64;
    if (lo >= a.limbs_.size()) return {};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() - lo, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] = bo ? a.limbs_[i + lo] >> bo : a.limbs_[i + lo];
        if (bo && i + lo + 1 < a.limbs_.size()) r.limbs_[i] |= a.limbs_[i + lo + 1] << (64 - bo);
    }
    r.trim();
    return r;
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw DomainError("division by zero");
    if (num < den) return {BigUint{}, num};

    // Single-limb divisor fast path.
    if (den.limbs_.size() == 1) {
        const u64 d = den.limbs_[0];
        BigUint q;
        q.limbs_.assign(num.limbs_.size(), 0);
        u128 rem = 0;
        for (std::size_t i = num.limbs_.size(); i-- > 0;) {
            const u128 cur = (rem << 64) | num.limbs_[i];
            q.limbs_[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        q.trim();
        return {q, BigUint::from_u64(static_cast<u64>(rem))};
    }

    // Knuth algorithm D with 64-bit limbs.
    const unsigned shift = std::countl_zero(den.limbs_.back());
    BigUint u = num << shift;
    const BigUint v = den << shift;
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() >= n ? u.limbs_.size() - n : 0;
    u.limbs_.resize(num.limbs_.size() + 1 + (shift ? 1 : 0), 0);  // headroom for u[j+n]
    const u64 vtop = v.limbs_[n - 1];
    const u64 vnext = v.limbs_[n - 2];

    BigUint q;
    q.limbs_.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        const u128 top = (u128{u.limbs_[j + n]} << 64) | u.limbs_[j + n - 1];
        u128 qhat = top / vtop;
        u128 rhat = top % vtop;
        while (qhat >> 64 || qhat * vnext > ((rhat << 64) | u.limbs_[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >> 64) break;
        }
        // u[j..j+n] -= qhat * v
        u128 borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const u128 prod = qhat * v.limbs_[i] + carry;
            carry = prod >> 64;
            const u64 plo = static_cast<u64>(prod);
            const u128 sub = u128{u.limbs_[i + j]} - plo - borrow;
            u.limbs_[i + j] = static_cast<u64>(sub);
            borrow = (sub >> 64) ? 1 : 0;
        }
        const u128 subtop = u128{u.limbs_[j + n]} - carry - borrow;
        u.limbs_[j + n] = static_cast<u64>(subtop);
        if (subtop >> 64) {
            // qhat one too large: add v back
            --qhat;
            u128 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const u128 sum = u128{u.limbs_[i + j]} + v.limbs_[i] + c;
                u.limbs_[i + j] = static_cast<u64>(sum);
                c = sum >> 64;
            }
            u.limbs_[j + n] += static_cast<u64>(c);
        }
        q.limbs_[j] = static_cast<u64>(qhat);
    }
    q.trim();

    u.limbs_.resize(n);
    u.trim();
    return {q, u >> shift};
}

BigUint BigUint::mod_mul(const BigUint& a, const BigUint& b, const BigUint& n) {
    return (a * b) % n;
}

BigUint BigUint::mod_exp(BigUint base, const BigUint& exp, const BigUint& n) {
    if (n.is_zero()) throw DomainError("zero modulus");
    BigUint result = from_u64(1) % n;
    base = base % n;
    for (std::size_t i = exp.bit_length(); i-- > 0;) {
        result = mod_mul(result, result, n);
        if (exp.bit(i)) result = mod_mul(result, base, n);
    }
    return result;
}

BigUint BigUint::mod_inv_prime(const BigUint& a, const BigUint& p) {
    const BigUint reduced = a % p;
    if (reduced.is_zero()) throw DomainError("no inverse for zero residue");
    return mod_exp(reduced, p - from_u64(2), p);
}

bool BigUint::is_probable_prime(unsigned rounds, Rng& rng) const {
    static const BigUint one = from_u64(1);
    static const BigUint two = from_u64(2);
    static const BigUint three = from_u64(3);
    if (*this < two) return false;
    if (*this == two || *this == three) return true;
    if (!is_odd()) return false;

    const BigUint n_minus_1 = *this - one;
    BigUint d = n_minus_1;
    std::size_t s = 0;
    while (!d.is_odd()) {
        d = d >> 1;
        ++s;
    }

    const BigUint span = *this - three;  // bases drawn from [2, n-2]
    const std::size_t width = (bit_length() + 7) / 8;
    for (unsigned round = 0; round < rounds; ++round) {
        Bytes raw(width);
        rng.fill(raw);
        const BigUint base = from_bytes_be(raw) % (span + one) + two;
        BigUint x = mod_exp(base, d, *this);
        if (x == one || x == n_minus_1) continue;
        bool composite = true;
        for (std::size_t i = 1; i < s; ++i) {
            x = mod_mul(x, x, *this);
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace ecike
