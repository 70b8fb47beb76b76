#pragma once

// Slow reference computations built from explicit sumsets. They share no code
// with the library and are only meant for small windows.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

/// Elements of the semigroup generated by `gens` inside [0, window).
inline std::vector<bool> members(const std::vector<int>& gens, int window) {
    std::vector<bool> in(static_cast<std::size_t>(window), false);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x >= window || in[static_cast<std::size_t>(x)]) continue;
        in[static_cast<std::size_t>(x)] = true;
        for (int g : gens) stack.push_back(x + g);
    }
    return in;
}

inline int frobenius(const std::vector<int>& gens) {
    const int mx = *std::max_element(gens.begin(), gens.end());
    const int window = mx * mx + mx + 1;
    auto in = members(gens, window);
    int g = -1;
    for (int x = 0; x < window; ++x) {
        if (!in[static_cast<std::size_t>(x)]) g = x;
    }
    return g;
}

/// Generators not expressible through the others, ascending.
inline std::vector<int> minimalize(std::vector<int> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<int> out;
    for (int g : gens) {
        std::vector<int> others;
        for (int h : gens) {
            if (h != g) others.push_back(h);
        }
        if (others.empty() || !members(others, g + 1)[static_cast<std::size_t>(g)]) out.push_back(g);
    }
    return out;
}

/// hM ∩ [0, window) as a set, via repeated sumsets M + M + ... + M.
inline std::set<int> power(const std::vector<int>& gens, int h, int window) {
    auto in = members(gens, window);
    std::set<int> m;
    for (int x = 1; x < window; ++x) {
        if (in[static_cast<std::size_t>(x)]) m.insert(x);
    }
    if (h == 0) {
        m.insert(0);
        return m;
    }
    std::set<int> acc = m;
    for (int k = 1; k < h; ++k) {
        std::set<int> next;
        for (int a : acc) {
            for (int b : m) {
                if (a + b >= window) break;
                next.insert(a + b);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// ord(s) by testing s ∈ hM for increasing h.
inline int ord(const std::vector<int>& gens, int s) {
    if (!members(gens, s + 1)[static_cast<std::size_t>(s)]) return -1;
    int h = 0;
    while (power(gens, h + 1, s + 1).count(s)) ++h;
    return h;
}

inline std::vector<int> apery(const std::vector<int>& gens, int modulus) {
    const int window = 4 * (frobenius(gens) + 2) + 4 * modulus;
    auto in = members(gens, window);
    std::vector<int> out(static_cast<std::size_t>(modulus), -1);
    for (int x = 0; x < window; ++x) {
        auto& slot = out[static_cast<std::size_t>(x % modulus)];
        if (slot < 0 && in[static_cast<std::size_t>(x)]) slot = x;
    }
    return out;
}

/// Least h ≥ 1 with (h+1)M = g₁ + hM on [0, window).
inline int reduction_number(const std::vector<int>& gens, int window) {
    const int g1 = *std::min_element(gens.begin(), gens.end());
    for (int h = 1;; ++h) {
        auto lhs = power(gens, h + 1, window);
        auto base = power(gens, h, window);
        std::set<int> rhs;
        for (int x : base) {
            if (x + g1 < window) rhs.insert(x + g1);
        }
        if (lhs == rhs) return h;
    }
}

}  // namespace brute
