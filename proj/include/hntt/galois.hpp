/**************************************************************************
 * galois.hpp
 *
 * Copyright 2026 The hntt-watermark Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hntt {

/// Element of the prime field GF(p). The modulus travels with the value so
/// mixing elements of different fields is caught at runtime.
class GfElement {
public:
    constexpr GfElement() = default;

    /// Reduces `value` into [0, p-1]. Negative inputs wrap.
    constexpr GfElement(std::int64_t value, std::uint32_t p) : p_(p) {
        if (p < 2)
            throw std::invalid_argument("GfElement: modulus must be >= 2");
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0)
            r += p;
        value_ = static_cast<std::uint32_t>(r);
    }

    constexpr std::uint32_t value() const { return value_; }
    constexpr std::uint32_t modulus() const { return p_; }
    constexpr bool is_zero() const { return value_ == 0; }

    friend constexpr bool operator==(const GfElement&, const GfElement&) = default;

private:
    std::uint32_t value_ = 0;
    std::uint32_t p_ = 3;
};

inline std::ostream& operator<<(std::ostream& os, const GfElement& a) {
    return os << a.value();
}

namespace detail {

constexpr void check_same_field(const GfElement& a, const GfElement& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("GF(p): modulus mismatch (" +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()) + ")");
}

} // namespace detail

constexpr GfElement gf_add(const GfElement& a, const GfElement& b) {
    detail::check_same_field(a, b);
    return {static_cast<std::int64_t>(a.value()) + b.value(), a.modulus()};
}

constexpr GfElement gf_sub(const GfElement& a, const GfElement& b) {
    detail::check_same_field(a, b);
    return {static_cast<std::int64_t>(a.value()) - b.value(), a.modulus()};
}

constexpr GfElement gf_neg(const GfElement& a) {
    return {-static_cast<std::int64_t>(a.value()), a.modulus()};
}

constexpr GfElement gf_mul(const GfElement& a, const GfElement& b) {
    detail::check_same_field(a, b);
    return {static_cast<std::int64_t>(a.value()) * b.value(), a.modulus()};
}

/// Multiplicative inverse via the extended Euclidean algorithm.
constexpr GfElement gf_inv(const GfElement& a) {
    if (a.is_zero())
        throw std::domain_error("GF(p): inversion of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = a.modulus(), new_r = a.value();
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        throw std::domain_error("GF(p): element not invertible (modulus not prime?)");
    return {t, a.modulus()};
}

constexpr GfElement operator+(const GfElement& a, const GfElement& b) { return gf_add(a, b); }
constexpr GfElement operator-(const GfElement& a, const GfElement& b) { return gf_sub(a, b); }
constexpr GfElement operator-(const GfElement& a) { return gf_neg(a); }
constexpr GfElement operator*(const GfElement& a, const GfElement& b) { return gf_mul(a, b); }

/// Element a + jb of the Gaussian-integer field GI(p), where j^2 = -1.
/// GI(p) is a field only for p = 3 (mod 4); `FieldParams` enforces that.
struct GaussInt {
    GfElement re;
    GfElement im;

    constexpr GaussInt() = default;
    constexpr GaussInt(GfElement re_, GfElement im_) : re(re_), im(im_) {
        detail::check_same_field(re, im);
    }
    constexpr GaussInt(std::int64_t a, std::int64_t b, std::uint32_t p)
        : re(a, p), im(b, p) {}

    constexpr std::uint32_t modulus() const { return re.modulus(); }
    constexpr bool is_zero() const { return re.is_zero() && im.is_zero(); }
    constexpr bool is_real() const { return im.is_zero(); }

    static constexpr GaussInt one(std::uint32_t p) { return {1, 0, p}; }
    static constexpr GaussInt j(std::uint32_t p) { return {0, 1, p}; }

    friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    return os << z.re << "+j" << z.im;
}

constexpr GaussInt gi_add(const GaussInt& x, const GaussInt& y) {
    return {x.re + y.re, x.im + y.im};
}

constexpr GaussInt gi_sub(const GaussInt& x, const GaussInt& y) {
    return {x.re - y.re, x.im - y.im};
}

/// (a+jb)(c+jd) = (ac-bd) + j(ad+bc)
constexpr GaussInt gi_mul(const GaussInt& x, const GaussInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

constexpr GaussInt gi_conj(const GaussInt& x) { return {x.re, -x.im}; }

/// (a+jb)^-1 = (a-jb) / (a^2+b^2). The norm is nonzero for x != 0 whenever
/// -1 is a nonresidue, i.e. p = 3 (mod 4).
constexpr GaussInt gi_inv(const GaussInt& x) {
    if (x.is_zero())
        throw std::domain_error("GI(p): inversion of zero");
    const GfElement norm = x.re * x.re + x.im * x.im;
    if (norm.is_zero())
        throw std::domain_error("GI(p): zero divisor (p is not 3 mod 4)");
    const GfElement inv_norm = gf_inv(norm);
    return {x.re * inv_norm, -x.im * inv_norm};
}

/// Square-and-multiply; negative exponents go through gi_inv.
constexpr GaussInt gi_pow(const GaussInt& x, std::int64_t k) {
    GaussInt base = k < 0 ? gi_inv(x) : x;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1u
                            : static_cast<std::uint64_t>(k);
    GaussInt acc = GaussInt::one(x.modulus());
    while (e != 0) {
        if (e & 1u)
            acc = gi_mul(acc, base);
        base = gi_mul(base, base);
        e >>= 1u;
    }
    return acc;
}

constexpr bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// True iff x^2 = a (mod p) has no solution. Exhaustive scan; p is small.
constexpr bool is_quadratic_nonresidue(const GfElement& a) {
    const std::uint32_t p = a.modulus();
    for (std::uint32_t x = 0; x < p; ++x) {
        const GfElement xx(x, p);
        if (xx * xx == a)
            return false;
    }
    return true;
}

constexpr bool is_unimodular(const GaussInt& z) {
    return (z.re * z.re + z.im * z.im) == GfElement(1, z.modulus());
}

/// Smallest k >= 1 with z^k = 1, found by iterated multiplication.
/// The multiplicative group of GI(p) has p^2 - 1 elements, which caps the scan.
constexpr std::uint64_t multiplicative_order(const GaussInt& z) {
    if (z.is_zero())
        throw std::domain_error("multiplicative_order: zero has no order");
    const std::uint64_t p = z.modulus();
    const GaussInt one = GaussInt::one(z.modulus());
    GaussInt acc = z;
    for (std::uint64_t k = 1; k <= p * p - 1; ++k) {
        if (acc == one)
            return k;
        acc = gi_mul(acc, z);
    }
    throw std::domain_error("multiplicative_order: no finite order found (ring is not a field)");
}

/// Parameter triple (p, zeta, N) of the Hartley NTT.
///
/// Note on j: j^2 = -1 is taken modulo p. For p = 3 (mod 4), -1 is a
/// quadratic nonresidue and GI(p) is a field, which is the only case
/// accepted here.
class FieldParams {
public:
    /// Validates p and zeta and derives N as the order of zeta. Throws
    /// std::invalid_argument describing the first violated condition.
    static FieldParams create(std::uint32_t p, const GaussInt& zeta) {
        if (!is_prime(p) || p == 2)
            throw std::invalid_argument("FieldParams: p = " + std::to_string(p) +
                                        " is not an odd prime");
        if (p % 4 != 3)
            throw std::invalid_argument("FieldParams: p = " + std::to_string(p) +
                                        " is not 3 (mod 4)");
        if (zeta.modulus() != p)
            throw std::invalid_argument("FieldParams: zeta lives in a different field");
        if (zeta.is_zero())
            throw std::invalid_argument("FieldParams: zeta must be nonzero");
        if (!is_unimodular(zeta))
            throw std::invalid_argument("FieldParams: zeta is not unimodular");
        return FieldParams(p, zeta, multiplicative_order(zeta));
    }

    /// Like create(), and additionally requires ord(zeta) == n.
    static FieldParams create(std::uint32_t p, const GaussInt& zeta, std::uint64_t n) {
        FieldParams fp = create(p, zeta);
        if (fp.order_n() != n)
            throw std::invalid_argument("FieldParams: zeta has order " +
                                        std::to_string(fp.order_n()) + ", expected " +
                                        std::to_string(n));
        return fp;
    }

    /// p = 3, zeta = j, N = 4.
    static FieldParams defaults() { return create(3, GaussInt::j(3), 4); }

    std::uint32_t p() const { return p_; }
    const GaussInt& zeta() const { return zeta_; }
    std::uint64_t order_n() const { return n_; }

private:
    FieldParams(std::uint32_t p, GaussInt zeta, std::uint64_t n) : p_(p), zeta_(zeta), n_(n) {}

    std::uint32_t p_;
    GaussInt zeta_;
    std::uint64_t n_;
};

/// cos(i) = (zeta^i + zeta^-i) / 2, computed in GI(p).
inline GaussInt finite_cos(const FieldParams& fp, std::int64_t i) {
    const std::uint32_t p = fp.p();
    const GaussInt half(gf_inv(GfElement(2, p)), GfElement(0, p));
    return gi_mul(gi_add(gi_pow(fp.zeta(), i), gi_pow(fp.zeta(), -i)), half);
}

/// sin(i) = (zeta^i - zeta^-i) / 2j, computed in GI(p).
inline GaussInt finite_sin(const FieldParams& fp, std::int64_t i) {
    const std::uint32_t p = fp.p();
    const GaussInt inv_2j = gi_inv(GaussInt(0, 2, p));
    return gi_mul(gi_sub(gi_pow(fp.zeta(), i), gi_pow(fp.zeta(), -i)), inv_2j);
}

/// cas(i) = cos(i) + sin(i), for i = 0..N-1. Each value must land in GF(p);
/// a nonzero imaginary part means the parameters are not unimodular.
inline std::vector<GfElement> cas_table(const FieldParams& fp) {
    std::vector<GfElement> table;
    table.reserve(fp.order_n());
    for (std::uint64_t i = 0; i < fp.order_n(); ++i) {
        const GaussInt c = gi_add(finite_cos(fp, static_cast<std::int64_t>(i)),
                                  finite_sin(fp, static_cast<std::int64_t>(i)));
        if (!c.is_real())
            throw std::domain_error("cas_table: cas(" + std::to_string(i) +
                                    ") has nonzero imaginary part");
        table.push_back(c.re);
    }
    return table;
}

} // namespace hntt
