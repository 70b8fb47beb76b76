#pragma once

#include <vector>

#include "nsgr/graded.hpp"

namespace nsgr {

/// Facts about the socle of G(m) for S = ⟨g₁, g₂, g₃⟩.
struct ThreeGenReport {
    int k = 0;
    /// At most one residue class has a > b.
    bool defect_unique = false;
    /// The defect Apéry element (if any) equals k·g₃.
    bool defect_is_k_g3 = false;
    /// "Buchsbaum and not CM", "basis is {k·g₃} with t̄^{k·g₃} ∈ (0:𝓜)" and
    /// "λ = 1" are either all true or all false.
    bool equivalences_hold = false;

    bool buchsbaum = false;
    bool cm = false;
    bool symmetric = false;
    int lambda = 0;
    std::vector<int> defect_omegas;
    /// ord(k·g₃).
    int k_g3_order = 0;

    friend bool operator==(const ThreeGenReport&, const ThreeGenReport&) = default;
};

/// k = min{ j ≥ 0 : g₂ | (j+1)g₃ or (j+1)g₃ − g₁ ∈ S }.
int k_invariant(const NumericalSemigroup& s);

/// Computes the report without judging it.
ThreeGenReport threegen_report(const GradedRing& ring);

/// The structure results for 3-generated semigroups, as violations.
std::vector<Violation> threegen_violations(const GradedRing& ring, const ThreeGenReport& rep);

/// Throws NotThreeGenerated, or InvariantViolation if a structure result fails.
ThreeGenReport verify_structure(const NumericalSemigroup& s);

/// Buchsbaum ⇒ CM for 3-generated symmetric S. A false return disproves it.
bool symmetric_threegen_check(const NumericalSemigroup& s);

}  // namespace nsgr
