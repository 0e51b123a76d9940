#pragma once

// Brute-force reference implementations used as test oracles. They only touch
// ring addition and multiplication and share no code with the library's
// ideal, lattice or content machinery.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pruefer/ring_core.hpp"

namespace oracle {

using pruefer::Elem;
using pruefer::FiniteRing;
using Set = std::vector<bool>;

inline std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline Set from_bits(const pruefer::ElementSet& bits) {
    Set s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits.test(i);
    return s;
}

inline bool is_ideal(const FiniteRing& r, const Set& s) {
    const std::size_t n = r.order();
    if (!s[0]) return false;
    for (Elem a = 0; a < n; ++a) {
        if (!s[a]) continue;
        for (Elem b = 0; b < n; ++b) {
            if (s[b] && !s[r.add(a, b)]) return false;
            if (!s[r.mul(a, b)]) return false;
        }
    }
    return true;
}

/// Every subset tested; only for order ≤ 16.
inline std::vector<Set> all_ideals(const FiniteRing& r) {
    const std::size_t n = r.order();
    std::vector<Set> out;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // zero always in
        Set s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
        if (is_ideal(r, s)) out.push_back(s);
    }
    return out;
}

/// Closure of `gens` under addition and multiplication by ring elements.
inline Set generated(const FiniteRing& r, const std::vector<Elem>& gens) {
    const std::size_t n = r.order();
    Set s(n, false);
    s[0] = true;
    std::vector<Elem> todo(gens.begin(), gens.end());
    while (!todo.empty()) {
        Elem x = todo.back();
        todo.pop_back();
        if (s[x]) continue;
        s[x] = true;
        for (Elem y = 0; y < n; ++y) {
            if (s[y]) todo.push_back(r.add(x, y));
            todo.push_back(r.mul(x, y));
        }
    }
    return s;
}

inline std::vector<Elem> members(const Set& s) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) out.push_back(static_cast<Elem>(i));
    }
    return out;
}

inline Set meet(const Set& a, const Set& b) {
    Set s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] && b[i];
    return s;
}

inline Set join(const FiniteRing& r, const Set& a, const Set& b) {
    auto gens = members(a);
    auto more = members(b);
    gens.insert(gens.end(), more.begin(), more.end());
    return generated(r, gens);
}

inline Set product(const FiniteRing& r, const Set& a, const Set& b) {
    std::vector<Elem> gens;
    for (Elem x : members(a)) {
        for (Elem y : members(b)) gens.push_back(r.mul(x, y));
    }
    return generated(r, gens);
}

inline bool subset(const Set& a, const Set& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
    }
    return true;
}

inline bool is_unit(const FiniteRing& r, Elem a) {
    for (Elem x = 0; x < r.order(); ++x) {
        if (r.mul(a, x) == r.one()) return true;
    }
    return false;
}

inline bool is_nilpotent(const FiniteRing& r, Elem a) {
    Elem p = a;
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (p == 0) return true;
        p = r.mul(p, a);
    }
    return false;
}

/// Ideals form a distributive lattice: I ∩ (J + K) = I∩J + I∩K for all triples.
/// For finite rings this characterizes arithmetical rings independently of localization.
inline bool distributive(const FiniteRing& r, const std::vector<Set>& ideals) {
    for (const auto& i : ideals) {
        for (const auto& j : ideals) {
            for (const auto& k : ideals) {
                if (meet(i, join(r, j, k)) != join(r, meet(i, j), meet(i, k))) return false;
            }
        }
    }
    return true;
}

inline std::vector<Elem> poly_mul(const FiniteRing& r, const std::vector<Elem>& f, const std::vector<Elem>& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<Elem> out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
    }
    return out;
}

inline bool content_multiplicative(const FiniteRing& r, const std::vector<Elem>& f, const std::vector<Elem>& g) {
    return generated(r, poly_mul(r, f, g)) == product(r, generated(r, f), generated(r, g));
}

/// All coefficient vectors of length `len` in numeric order.
inline std::vector<std::vector<Elem>> all_polys(std::size_t order, std::size_t len) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> c(len, 0);
    while (true) {
        out.push_back(c);
        std::size_t i = 0;
        for (; i < len; ++i) {
            if (++c[i] < order) break;
            c[i] = 0;
        }
        if (i == len) return out;
    }
}

inline std::vector<Elem> random_coeffs(std::mt19937_64& rng, std::size_t order, std::size_t max_len) {
    std::vector<Elem> c(1 + rng() % max_len);
    for (auto& x : c) x = static_cast<Elem>(rng() % order);
    return c;
}

/// Multiplication in F_p[x]/(m), coefficient vectors of length k.
inline std::vector<std::uint32_t> gf_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                         const std::vector<std::uint32_t>& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    std::vector<std::uint64_t> t(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) t[i + j] = (t[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    const std::uint64_t lead_inv = [&] {
        for (std::uint64_t x = 1; x < p; ++x) {
            if (x * m[k] % p == 1) return x;
        }
        return std::uint64_t{1};
    }();
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
        const std::uint64_t q = t[d] * lead_inv % p;
        for (std::size_t i = 0; i <= k; ++i) t[d - k + i] = (t[d - k + i] + (p - q) * m[i]) % p;
    }
    return std::vector<std::uint32_t>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace oracle
