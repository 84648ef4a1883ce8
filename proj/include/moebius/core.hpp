#pragma once

// Shared small types: extended/capped naturals, errors, deterministic RNG.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>
#include <algorithm>
#include <optional>

namespace mbs {

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
    if (!ok) fail(code, what);
}

// Natural number with infinity. Used for distances, separations, degrees.
class ExtNat {
    std::uint64_t v_;
    static constexpr std::uint64_t INF = std::numeric_limits<std::uint64_t>::max();
    constexpr explicit ExtNat(std::uint64_t raw, int) : v_(raw) {}

public:
    constexpr ExtNat() : v_(0) {}
    constexpr ExtNat(std::uint64_t n) : v_(n) {}
    static constexpr ExtNat infinity() { return ExtNat(INF, 0); }

    constexpr bool is_inf() const { return v_ == INF; }
    constexpr std::uint64_t value() const { return v_; }  // only when finite
    std::uint64_t finite() const {
        require(!is_inf(), "Infinite", "expected a finite value");
        return v_;
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExtNat a, ExtNat b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(ExtNat a, ExtNat b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return a.v_ >= b.v_; }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.is_inf() || b.is_inf()) return infinity();
        return ExtNat(a.v_ + b.v_);
    }
    friend ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
    friend ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }
};

// Degree answer under a truncation cap N: either an exact value <= N,
// the token ">= N+1", or infinity (identically zero input).
class CapNat {
    enum class Kind { Exact, AtLeast, Inf } kind_;
    std::uint64_t v_;
    CapNat(Kind k, std::uint64_t v) : kind_(k), v_(v) {}

public:
    static CapNat exact(std::uint64_t v) { return {Kind::Exact, v}; }
    static CapNat at_least(std::uint64_t v) { return {Kind::AtLeast, v}; }
    static CapNat infinity() { return {Kind::Inf, 0}; }

    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_inf() const { return kind_ == Kind::Inf; }
    std::uint64_t value() const { return v_; }  // exact value or the at-least bound

    // Both "inf" and ">=k" certify >= t when k >= t.
    bool ge(std::uint64_t t) const { return kind_ == Kind::Inf || v_ >= t; }
    bool le(std::uint64_t t) const { return kind_ == Kind::Exact && v_ <= t; }

    friend bool operator==(const CapNat& a, const CapNat& b) {
        return a.kind_ == b.kind_ && (a.kind_ == Kind::Inf || a.v_ == b.v_);
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Exact: return std::to_string(v_);
            case Kind::AtLeast: return ">=" + std::to_string(v_);
            default: return "inf";
        }
    }
};

// splitmix64: deterministic, seed-stable across platforms.
class Rng {
    std::uint64_t state_;

public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return next() & 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        require(!v.empty(), "EmptyPick", "pick from empty vector");
        return v[below(v.size())];
    }
    Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }
};

// Enumerate subsets of {0..n-1} of size exactly k, in lexicographic order.
template <class Fn>
inline void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(const_cast<const std::vector<std::size_t>&>(idx));
        bool advanced = false;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] < n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace mbs
