#include "nsgr/threegen.hpp"

#include "nsgr/errors.hpp"

namespace nsgr {

namespace {

void require_three(const NumericalSemigroup& s) {
    if (s.embedding_dimension() != 3) throw NotThreeGenerated(s.embedding_dimension());
}

}  // namespace

int k_invariant(const NumericalSemigroup& s) {
    require_three(s);
    const long long g1 = s.generators()[0];
    const long long g2 = s.generators()[1];
    const long long g3 = s.generators()[2];
    const long long cap = static_cast<long long>(s.conductor()) + g3;
    for (long long j = 0; j <= cap; ++j) {
        const long long m = (j + 1) * g3;
        if (m % g2 == 0 || s.contains(m - g1)) return static_cast<int>(j);
    }
    throw InternalError("k search exceeded conductor + g₃ for " + s.to_string());
}

ThreeGenReport threegen_report(const GradedRing& ring) {
    const auto& s = ring.semigroup();
    require_three(s);
    ThreeGenReport rep;
    rep.k = k_invariant(s);
    const int kg3 = rep.k * s.generators()[2];
    rep.k_g3_order = ring.ord(kg3);
    rep.buchsbaum = ring.is_buchsbaum();
    rep.cm = ring.is_cm_full();
    rep.symmetric = ring.is_symmetric();
    rep.lambda = ring.socle_length();
    for (const auto& rec : ring.apery_records()) {
        if (rec.is_defect()) rep.defect_omegas.push_back(rec.omega);
    }
    rep.defect_unique = rep.defect_omegas.size() <= 1;
    rep.defect_is_k_g3 = rep.defect_omegas.size() == 1 && rep.defect_omegas.front() == kg3;

    const bool first = rep.buchsbaum && !rep.cm;
    const auto basis = ring.socle_basis().exponents();
    const bool second =
        rep.k >= 1 && basis == std::vector<int>{kg3} && ring.annihilated_by_M(kg3);
    const bool third = rep.lambda == 1;
    rep.equivalences_hold = first == second && second == third;
    return rep;
}

std::vector<Violation> threegen_violations(const GradedRing& ring, const ThreeGenReport& rep) {
    std::vector<Violation> out;
    const auto& gens = ring.semigroup().generators();
    auto add = [&](const char* id, std::string details) {
        out.push_back({gens, id, std::move(details)});
    };
    if (rep.buchsbaum && !rep.cm) {
        if (!rep.defect_unique) add("threegen-defect-unique", "more than one class with a > b");
        if (!rep.defect_is_k_g3) add("threegen-defect-is-k-g3", "k = " + std::to_string(rep.k));
        if (rep.k_g3_order != rep.k) add("threegen-k-g3-order", "ord(k·g₃) ≠ k");
        if (rep.lambda != 1) add("threegen-lambda-one", "λ = " + std::to_string(rep.lambda));
    }
    if (rep.cm && rep.lambda != 0) add("threegen-cm-lambda-zero", "λ = " + std::to_string(rep.lambda));
    if (!rep.equivalences_hold) add("threegen-equivalences", "Buchsbaum-non-CM, principal socle, λ=1 disagree");
    if (rep.symmetric && rep.buchsbaum && !rep.cm) add("threegen-symmetric-buchsbaum-cm", "");
    return out;
}

ThreeGenReport verify_structure(const NumericalSemigroup& s) {
    require_three(s);
    GradedRing ring(s);
    auto rep = threegen_report(ring);
    auto violations = threegen_violations(ring, rep);
    if (!violations.empty()) {
        std::string msg = s.to_string() + " violates:";
        for (const auto& v : violations) msg += " [" + v.invariant + "]";
        throw InvariantViolation(msg);
    }
    return rep;
}

bool symmetric_threegen_check(const NumericalSemigroup& s) {
    require_three(s);
    if (!is_symmetric(s)) throw NotSymmetric();
    GradedRing ring(s);
    return !ring.is_buchsbaum() || ring.is_cm_full();
}

}  // namespace nsgr
