#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsgr/semigroup.hpp"

namespace nsgr {

/// Per residue class i mod g₁: ω_i ∈ Ap(S), ω'_i ∈ Ap_{g₁}(S'), the shift
/// a with ω'_i + a·g₁ = ω_i, b = ord(ω_i), and the level l_i when a > b.
struct AperyRecord {
    int class_index = 0;
    int omega = 0;
    int omega_prime = 0;
    int a = 0;
    int b = 0;
    std::optional<int> level;

    bool is_defect() const noexcept { return a > b; }
    friend bool operator==(const AperyRecord&, const AperyRecord&) = default;
};

struct SocleEntry {
    int exponent = 0;
    int order = 0;
    friend auto operator<=>(const SocleEntry&, const SocleEntry&) = default;
};

/// Monomial basis of H⁰ = (0 :_{G(m)} 𝓜^r), sorted by exponent.
struct SocleBasis {
    std::vector<SocleEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
    std::vector<int> exponents() const;
    friend bool operator==(const SocleBasis&, const SocleBasis&) = default;
};

/// The associated graded ring G(m) of k[[t^S]], computed at the level of the
/// value semigroup.
///
/// Everything is monomial here. Annihilators of monomial ideals in G(m) are
/// spanned by the monomials t̄^s they contain, so every membership question
/// reduces to a statement about the sets hM = {s : ord(s) ≥ h}. A product
/// t̄^u·t̄^v is t̄^{u+v} when ord(u+v) = ord(u)+ord(v) and zero otherwise.
///
/// The constructor computes r, the order table, the blow-up and the Apéry
/// records; afterwards the object is immutable and safe to share between
/// threads.
class GradedRing {
public:
    explicit GradedRing(NumericalSemigroup s);

    const NumericalSemigroup& semigroup() const noexcept { return s_; }
    /// S' = ⟨g₁, g₂−g₁, …, g_n−g₁⟩, re-minimalized.
    const NumericalSemigroup& blowup() const noexcept { return blowup_; }
    const OrderTable& orders() const noexcept { return table_; }

    /// ord(s) for any s; kAbsent when s ∉ S. Beyond the materialized table,
    /// (h+1)M = g₁ + hM for h ≥ r gives ord(s) = ord(s − q·g₁) + q.
    int ord(long long s) const;

    int reduction_number() const noexcept { return r_; }
    /// s_J(m) = max ord(ω_i).
    int nilpotency_index() const;

    const std::vector<int>& apery() const noexcept { return apery_; }
    const std::vector<AperyRecord>& apery_records() const noexcept { return records_; }
    std::vector<int> defect_classes() const;

    /// t̄^s ∈ (0 : 𝓜^r) via the blow-up: with h = ord(s), 1 ≤ h ≤ r−2 and
    /// s − (h+1)g₁ ∈ S'. Requires s ∈ M.
    bool socle_membership(long long s) const;

    /// l_i: the largest l with t̄^{ω_i + l·g₁} in the socle module. Scans all
    /// l ≤ r−2−b_i and throws InvariantViolation unless the passing levels
    /// form a prefix 0..l_i.
    int defect_level(int class_index) const;

    SocleBasis socle_basis() const;

    /// Independent route to the same basis: s with h = ord(s) ∈ [1, r−2] and
    /// s + rM ⊆ (h+r+1)M, checked directly on the order table.
    SocleBasis socle_basis_oracle() const;

    /// t̄^s·t̄^{g_j} = 0 for every generator, i.e. ord(s+g_j) ≥ ord(s)+2.
    bool annihilated_by_M(long long s) const;
    /// t̄^s ∈ (0 : 𝓜^k).
    bool annihilated_by_Mk(long long s, int k) const;

    /// levels[k-1][x - lo] says whether t̄^x ∈ (0 : 𝓜^k) for x ∈ [lo, hi] and
    /// k = 1..max_k. Non-members of S are reported as false.
    std::vector<std::vector<char>> annihilator_levels(long long lo, long long hi, int max_k) const;

    bool is_cm_full() const;
    bool is_cm_maxap() const;

    /// u ≤_M v: v − u ∈ S and ord(u) + ord(v−u) = ord(v). Requires u, v ∈ S.
    bool le_M(long long u, long long v) const;
    /// Apéry elements maximal for ≤_M, ascending.
    std::vector<int> max_ap_M() const;
    /// Apéry elements maximal for ≤_S, ascending.
    std::vector<int> max_ap_S() const;
    bool is_m_pure() const;

    /// Every basis monomial of (0 : 𝓜^r) is killed by 𝓜.
    bool is_buchsbaum_general() const;
    /// When every defect class has a − b = 1 it suffices to test l = 0.
    /// nullopt when that hypothesis fails.
    std::optional<bool> is_buchsbaum_fast() const;
    bool is_buchsbaum() const;

    int socle_length() const { return static_cast<int>(socle_basis_.size()); }
    bool is_symmetric() const { return symmetric_; }
    bool is_g_gorenstein() const;

private:
    void compute_reduction_number();
    void require_member(long long s) const;

    NumericalSemigroup s_;
    NumericalSemigroup blowup_;
    OrderTable table_;
    int r_ = 1;
    bool symmetric_ = false;
    std::vector<int> apery_;
    std::vector<AperyRecord> records_;
    SocleBasis socle_basis_;
};

NumericalSemigroup blowup(const NumericalSemigroup& s);
int reduction_number(const NumericalSemigroup& s);
int nilpotency_index(const NumericalSemigroup& s);
std::vector<AperyRecord> apery_invariants(const NumericalSemigroup& s);
bool socle_membership(const NumericalSemigroup& s, long long x);
int defect_level(const NumericalSemigroup& s, int class_index);
SocleBasis socle_basis(const NumericalSemigroup& s);
SocleBasis socle_basis_oracle(const NumericalSemigroup& s);
bool annihilated_by_M(const NumericalSemigroup& s, long long x);
bool annihilated_by_Mk(const NumericalSemigroup& s, long long x, int k);
bool is_cm_full(const NumericalSemigroup& s);
bool is_cm_maxap(const NumericalSemigroup& s);
bool le_M(const NumericalSemigroup& s, long long u, long long v);
std::vector<int> max_ap_M(const NumericalSemigroup& s);
bool is_m_pure(const NumericalSemigroup& s);
bool is_buchsbaum(const NumericalSemigroup& s);
int socle_length(const NumericalSemigroup& s);
bool is_g_gorenstein(const NumericalSemigroup& s);

struct AnalysisReport {
    std::vector<int> generators;
    int multiplicity = 0;
    int frobenius = -1;
    bool symmetric = false;
    int reduction_number = 1;
    int nilpotency_index = 0;
    std::vector<AperyRecord> apery_records;
    std::vector<int> defect_classes;
    SocleBasis socle_basis;
    int lambda = 0;
    std::vector<int> max_ap_M;
    std::vector<int> max_ap_S;
    bool m_pure = false;
    bool cm = false;
    bool buchsbaum = false;
    bool g_gorenstein = false;
};

AnalysisReport make_report(const GradedRing& ring);

/// A theorem-level property that failed on a concrete semigroup.
struct Violation {
    std::vector<int> generators;
    std::string invariant;
    std::string details;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckOptions {
    /// Compare socle_basis with socle_basis_oracle.
    bool oracle = true;
    /// Compare (0 : 𝓜^k) over k ≤ r with the socle test on a full window.
    bool annihilator_chain = true;
};

/// Evaluates every cross-check between the deciders. Empty on a correct build.
std::vector<Violation> check_invariants(const GradedRing& ring, const CheckOptions& opts = {});

/// Full analysis; throws InvariantViolation when check_invariants reports anything.
AnalysisReport analyze(const NumericalSemigroup& s, const CheckOptions& opts = {});

}  // namespace nsgr
