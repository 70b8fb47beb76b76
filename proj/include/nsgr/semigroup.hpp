#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nsgr {

/// Upper limit for any materialized table (membership or order), read once
/// from NSGR_MAX_TABLE. Defaults to 50'000'000 entries.
std::size_t table_limit();

/// A numerical semigroup given by its minimal generating system.
///
/// Values are immutable after construction. Membership is materialized on
/// [0, bound()) and answered by cofiniteness beyond it.
class NumericalSemigroup {
public:
    /// Canonicalizes `raw` to the minimal generating system.
    /// Throws EmptyInput, GcdNotOne, or ParseError for nonpositive entries.
    static NumericalSemigroup from_generators(std::span<const int> raw);

    const std::vector<int>& generators() const noexcept { return gens_; }
    int multiplicity() const noexcept { return gens_.front(); }
    int largest_generator() const noexcept { return gens_.back(); }
    std::size_t embedding_dimension() const noexcept { return gens_.size(); }
    /// -1 for ℕ.
    int frobenius() const noexcept { return frobenius_; }
    int conductor() const noexcept { return frobenius_ + 1; }
    bool is_naturals() const noexcept { return frobenius_ < 0; }

    bool contains(long long x) const noexcept {
        if (x < 0) return false;
        if (x >= conductor()) return true;
        return member_[static_cast<std::size_t>(x)] != 0;
    }

    std::size_t bound() const noexcept { return member_.size(); }
    std::vector<int> gaps() const;

    /// "<4,5,11>"
    std::string to_string() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ == b.gens_;
    }
    friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ <=> b.gens_;
    }

private:
    NumericalSemigroup() = default;

    std::vector<int> gens_;
    int frobenius_ = -1;
    std::vector<char> member_;
};

inline NumericalSemigroup new_semigroup(std::span<const int> raw) {
    return NumericalSemigroup::from_generators(raw);
}
inline NumericalSemigroup new_semigroup(std::initializer_list<int> raw) {
    return NumericalSemigroup::from_generators(std::span<const int>(raw.begin(), raw.size()));
}

inline bool contains(const NumericalSemigroup& s, long long x) { return s.contains(x); }

/// For every integer x in [0, g], exactly one of x and g - x lies in S.
bool is_symmetric(const NumericalSemigroup& s);

/// Ap(S) with respect to the multiplicity: entry i is the least element of S
/// congruent to i modulo g₁.
std::vector<int> apery(const NumericalSemigroup& s);

/// Apéry set of S with respect to an arbitrary positive modulus m (only used
/// internally for the blow-up, whose multiplicity may be smaller than g₁).
std::vector<int> apery_wrt(const NumericalSemigroup& s, int modulus);

/// ord(s) = largest h with s ∈ hM, tabulated for 0 ≤ s < bound.
///
/// Filled by the recurrence ord(s) = 1 + max ord(s - g_j) over generators with
/// s - g_j ∈ S. Non-members hold `kAbsent`.
class OrderTable {
public:
    static constexpr int kAbsent = -1;

    OrderTable(const NumericalSemigroup& s, std::size_t bound);

    std::size_t bound() const noexcept { return ord_.size(); }

    /// kAbsent for s ∉ S. Requires 0 ≤ s < bound() when s ≥ 0.
    int ord(long long s) const;

    /// True iff s ∈ hM, with 0M := S.
    bool in_power(long long s, int h) const {
        int o = ord(s);
        return o != kAbsent && o >= h;
    }

    /// Returns a table covering `bound` whose prefix equals this one.
    OrderTable extended(const NumericalSemigroup& s, std::size_t bound) const;

    std::span<const int> values() const noexcept { return ord_; }

private:
    OrderTable() = default;
    void fill_from(const NumericalSemigroup& s, std::size_t start);

    std::vector<int> ord_;
};

OrderTable order_table(const NumericalSemigroup& s, std::size_t bound);

/// s ∈ hM. Builds a table just large enough; prefer OrderTable::in_power in loops.
bool in_ideal_power(const NumericalSemigroup& s, long long x, int h);

}  // namespace nsgr
