#pragma once

#include "ncdef/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace ncdef {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this witness set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t to_u64(const mpz_class& z) {
    // Fits by construction: callers pass values reduced mod a 62-bit prime.
    return std::stoull(z.get_str());
}

}  // namespace detail

// Deterministic seed-to-prime mapping; always returns a prime > 2^60.
inline std::uint64_t prime_from_seed(std::uint64_t seed, unsigned attempt = 0) {
    const std::uint64_t base = 1ull << 61;
    std::uint64_t offset = detail::splitmix64(seed * 0x100000001b3ull + attempt) >> 4;  // < 2^60
    std::uint64_t candidate = (base + offset) | 1ull;
    while (!detail::is_prime_u64(candidate)) candidate += 2;
    return candidate;
}

// Element of the prime field F_p for a word-sized prime p > 2^60.
//
// Generic templated code constructs ring literals as F(0), F(1); those pick
// up the modulus from the active Fp::Context.
class Fp {
public:
    Fp() : r_(0), p_(ambient()) {}
    Fp(int v) : Fp(static_cast<long>(v)) {}
    Fp(long v) : p_(ambient()) {
        if (p_ == 0) throw std::logic_error("Fp: no ambient modulus set");
        long m = v % static_cast<long>(p_);
        r_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p_) : m);
    }
    Fp(std::uint64_t residue, std::uint64_t modulus) : r_(residue % modulus), p_(modulus) {}

    static std::uint64_t& ambient() {
        thread_local std::uint64_t modulus = 0;
        return modulus;
    }

    // RAII scope for the ambient modulus.
    struct Context {
        std::uint64_t saved;
        explicit Context(std::uint64_t p) : saved(ambient()) { ambient() = p; }
        ~Context() { ambient() = saved; }
        Context(const Context&) = delete;
        Context& operator=(const Context&) = delete;
    };

    static Fp zero(std::uint64_t p) { return Fp(0, p); }
    static Fp one(std::uint64_t p) { return Fp(1, p); }

    // Reduces a rational mod p. Throws if p divides the denominator.
    static Fp from_rational(const Rational& q, std::uint64_t p) {
        mpz_class pz(std::to_string(p));
        mpz_class dm = q.den() % pz;
        if (dm == 0) throw std::domain_error("Fp: prime divides denominator");
        mpz_class nm = q.num() % pz;
        std::uint64_t n = detail::to_u64(nm < 0 ? nm + pz : nm);
        std::uint64_t d = detail::to_u64(dm);
        Fp r(n, p);
        return r * Fp(d, p).inv();
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }
    bool is_unit() const { return r_ != 0; }

    Fp operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_); }
    Fp& operator+=(const Fp& o) {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        r_ += p_ - o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) { r_ = detail::mulmod_u64(r_, o.r_, p_); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    Fp inv() const {
        if (r_ == 0) throw std::domain_error("Fp: inverse of zero");
        return Fp(detail::powmod_u64(r_, p_ - 2, p_), p_);
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.r_ == b.r_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.r_ != b.r_; }

private:
    std::uint64_t r_, p_;
};

}  // namespace ncdef
