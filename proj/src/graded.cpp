#include "nsgr/graded.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "nsgr/errors.hpp"

namespace nsgr {

namespace {

// Every x ≥ max(conductor, 1) + (h−1)·g_n lies in hM.
long long power_conductor(const NumericalSemigroup& s, int h) {
    const long long c1 = std::max(s.conductor(), 1);
    return c1 + static_cast<long long>(h - 1) * s.largest_generator();
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << '}';
    return os.str();
}

}  // namespace

std::vector<int> SocleBasis::exponents() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.exponent);
    return out;
}

NumericalSemigroup blowup(const NumericalSemigroup& s) {
    const auto& g = s.generators();
    std::vector<int> raw;
    raw.reserve(g.size());
    raw.push_back(g.front());
    for (std::size_t j = 1; j < g.size(); ++j) raw.push_back(g[j] - g.front());
    return NumericalSemigroup::from_generators(raw);
}

GradedRing::GradedRing(NumericalSemigroup s)
    : s_(std::move(s)),
      blowup_(nsgr::blowup(s_)),
      table_(s_, static_cast<std::size_t>(power_conductor(s_, 5) + s_.multiplicity() + 1)) {
    compute_reduction_number();
    table_ = table_.extended(s_, static_cast<std::size_t>(power_conductor(s_, 2 * r_ + 3)));
    symmetric_ = nsgr::is_symmetric(s_);

    const int g1 = s_.multiplicity();
    apery_ = nsgr::apery(s_);
    const auto ap_prime = apery_wrt(blowup_, g1);
    records_.resize(apery_.size());
    for (int i = 0; i < g1; ++i) {
        auto& rec = records_[static_cast<std::size_t>(i)];
        rec.class_index = i;
        rec.omega = apery_[static_cast<std::size_t>(i)];
        rec.omega_prime = ap_prime[static_cast<std::size_t>(i)];
        const int diff = rec.omega - rec.omega_prime;
        if (diff < 0 || diff % g1 != 0) {
            throw InternalError("blow-up Apéry element " + std::to_string(rec.omega_prime) +
                                " does not shift onto " + std::to_string(rec.omega));
        }
        rec.a = diff / g1;
        rec.b = ord(rec.omega);
    }
    for (auto& rec : records_) {
        if (rec.is_defect()) rec.level = defect_level(rec.class_index);
    }
    for (const auto& rec : records_) {
        if (!rec.level) continue;
        for (int l = 0; l <= *rec.level; ++l) {
            const int x = rec.omega + l * g1;
            socle_basis_.entries.push_back({x, ord(x)});
        }
    }
    std::sort(socle_basis_.entries.begin(), socle_basis_.entries.end());
}

void GradedRing::compute_reduction_number() {
    const int g1 = s_.multiplicity();
    const long long cap = static_cast<long long>(s_.conductor()) + s_.largest_generator();
    for (int h = 1; h <= std::max(cap, 1LL); ++h) {
        // Outside [(h+1)g₁, hi] both (h+1)M and g₁ + hM are empty or full.
        const long long hi = power_conductor(s_, h + 1) + g1;
        if (static_cast<std::size_t>(hi) >= table_.bound()) {
            table_ = table_.extended(s_, static_cast<std::size_t>(2 * hi + 1));
        }
        bool equal = true;
        for (long long x = static_cast<long long>(h + 1) * g1; x <= hi && equal; ++x) {
            const bool lhs = table_.in_power(x, h + 1);
            const bool rhs = x - g1 >= 0 && table_.in_power(x - g1, h);
            equal = lhs == rhs;
        }
        if (equal) {
            r_ = h;
            return;
        }
    }
    throw InternalError("reduction number search exceeded conductor + g_n for " + s_.to_string());
}

int GradedRing::ord(long long s) const {
    if (s < 0) return OrderTable::kAbsent;
    const auto bound = static_cast<long long>(table_.bound());
    if (s < bound) return table_.ord(s);
    // The tail of the table sits far above r, where ord grows by one per g₁.
    const long long g1 = s_.multiplicity();
    const long long q = (s - bound) / g1 + 1;
    return table_.ord(s - q * g1) + static_cast<int>(q);
}

int GradedRing::nilpotency_index() const {
    int best = 0;
    for (const auto& rec : records_) best = std::max(best, rec.b);
    return best;
}

std::vector<int> GradedRing::defect_classes() const {
    std::vector<int> out;
    for (const auto& rec : records_) {
        if (rec.is_defect()) out.push_back(rec.class_index);
    }
    return out;
}

void GradedRing::require_member(long long s) const {
    if (s <= 0 || !s_.contains(s)) throw NotInSemigroup(s, "M");
}

bool GradedRing::socle_membership(long long s) const {
    require_member(s);
    const int h = ord(s);
    if (h < 1 || h > r_ - 2) return false;
    return blowup_.contains(s - static_cast<long long>(h + 1) * s_.multiplicity());
}

int GradedRing::defect_level(int class_index) const {
    if (class_index < 0 || class_index >= s_.multiplicity()) throw NotDefectClass(class_index);
    const auto& rec = records_[static_cast<std::size_t>(class_index)];
    if (!rec.is_defect()) throw NotDefectClass(class_index);

    const int g1 = s_.multiplicity();
    std::vector<int> passing;
    for (int l = 0; l <= r_ - 2 - rec.b; ++l) {
        if (socle_membership(rec.omega + static_cast<long long>(l) * g1)) passing.push_back(l);
    }
    if (passing.empty()) {
        throw InvariantViolation(s_.to_string() + ": defect class " + std::to_string(class_index) +
                                 " has no socle monomial ω_i + l·g₁");
    }
    const int level = passing.back();
    if (static_cast<int>(passing.size()) != level + 1) {
        throw InvariantViolation(s_.to_string() + ": socle levels of class " +
                                 std::to_string(class_index) + " are not down-closed: " +
                                 join(passing));
    }
    return level;
}

SocleBasis GradedRing::socle_basis() const { return socle_basis_; }

SocleBasis GradedRing::socle_basis_oracle() const {
    SocleBasis out;
    if (r_ < 3) return out;
    const long long g1 = s_.multiplicity();
    const long long top = power_conductor(s_, r_ - 1);
    for (long long s = 1; s < top; ++s) {
        const int h = ord(s);
        if (h < 1 || h > r_ - 2) continue;
        // s + u ∈ (h+r+1)M is automatic once s + u reaches the conductor of that power.
        const long long limit = power_conductor(s_, h + r_ + 1) - s;
        bool in_colon = true;
        for (long long u = r_ * g1; u < limit && in_colon; ++u) {
            if (ord(u) < r_) continue;
            if (ord(s + u) < h + r_ + 1) in_colon = false;
        }
        if (in_colon) out.entries.push_back({static_cast<int>(s), h});
    }
    return out;
}

bool GradedRing::annihilated_by_M(long long s) const {
    require_member(s);
    const int h = ord(s);
    for (int g : s_.generators()) {
        if (ord(s + g) < h + 2) return false;
    }
    return true;
}

std::vector<std::vector<char>> GradedRing::annihilator_levels(long long lo, long long hi,
                                                             int max_k) const {
    if (max_k < 1 || hi < lo) return {};
    const long long gn = s_.largest_generator();
    const long long ext = hi + static_cast<long long>(max_k - 1) * gn;
    const auto width = static_cast<std::size_t>(ext - lo + 1);

    std::vector<int> ords(width + static_cast<std::size_t>(gn));
    for (std::size_t i = 0; i < ords.size(); ++i) ords[i] = ord(lo + static_cast<long long>(i));

    // zero[j][i]: t̄^x · t̄^{g_j} = 0 for x = lo + i.
    const auto& gens = s_.generators();
    std::vector<std::vector<char>> zero(gens.size(), std::vector<char>(width, 0));
    std::vector<char> valid(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        const long long x = lo + static_cast<long long>(i);
        const int h = ords[i];
        valid[i] = x > 0 && h != OrderTable::kAbsent;
        if (!valid[i]) continue;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            zero[j][i] = ords[i + static_cast<std::size_t>(gens[j])] >= h + 2;
        }
    }

    std::vector<std::vector<char>> levels;
    std::vector<char> prev(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        bool all = valid[i] != 0;
        for (std::size_t j = 0; j < gens.size() && all; ++j) all = zero[j][i] != 0;
        prev[i] = all;
    }
    levels.emplace_back(prev.begin(), prev.begin() + (hi - lo + 1));
    for (int k = 2; k <= max_k; ++k) {
        const auto span = static_cast<std::size_t>(ext - static_cast<long long>(k - 1) * gn - lo + 1);
        std::vector<char> cur(width, 0);
        for (std::size_t i = 0; i < span; ++i) {
            bool all = valid[i] != 0;
            for (std::size_t j = 0; j < gens.size() && all; ++j) {
                all = zero[j][i] || prev[i + static_cast<std::size_t>(gens[j])];
            }
            cur[i] = all;
        }
        levels.emplace_back(cur.begin(), cur.begin() + (hi - lo + 1));
        prev = std::move(cur);
    }
    return levels;
}

bool GradedRing::annihilated_by_Mk(long long s, int k) const {
    require_member(s);
    if (k < 1) throw PreconditionError("annihilator exponent must be ≥ 1");
    return annihilator_levels(s, s, k).back().front() != 0;
}

bool GradedRing::is_cm_full() const {
    return std::all_of(records_.begin(), records_.end(),
                       [](const AperyRecord& r) { return r.a == r.b; });
}

bool GradedRing::is_cm_maxap() const {
    const int g1 = s_.multiplicity();
    for (int w : max_ap_M()) {
        const auto& rec = records_[static_cast<std::size_t>(w % g1)];
        if (rec.a != rec.b) return false;
    }
    return true;
}

bool GradedRing::le_M(long long u, long long v) const {
    if (!s_.contains(u)) throw NotInSemigroup(u, "S");
    if (!s_.contains(v)) throw NotInSemigroup(v, "S");
    const long long d = v - u;
    if (!s_.contains(d)) return false;
    return ord(u) + ord(d) == ord(v);
}

std::vector<int> GradedRing::max_ap_M() const {
    std::vector<int> out;
    for (int w : apery_) {
        bool maximal = true;
        for (int other : apery_) {
            if (other != w && le_M(w, other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> GradedRing::max_ap_S() const {
    std::vector<int> out;
    for (int w : apery_) {
        bool maximal = true;
        for (int other : apery_) {
            if (other != w && s_.contains(static_cast<long long>(other) - w)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GradedRing::is_m_pure() const {
    const auto top = max_ap_M();
    return std::all_of(top.begin(), top.end(),
                       [&](int w) { return ord(w) == ord(top.front()); });
}

bool GradedRing::is_buchsbaum_general() const {
    return std::all_of(socle_basis_.entries.begin(), socle_basis_.entries.end(),
                       [&](const SocleEntry& e) { return annihilated_by_M(e.exponent); });
}

std::optional<bool> GradedRing::is_buchsbaum_fast() const {
    bool ok = true;
    for (const auto& rec : records_) {
        if (!rec.is_defect()) continue;
        if (rec.a - rec.b != 1) return std::nullopt;
        ok = ok && annihilated_by_M(rec.omega);
    }
    return ok;
}

bool GradedRing::is_buchsbaum() const { return is_buchsbaum_general(); }

bool GradedRing::is_g_gorenstein() const {
    return symmetric_ && is_m_pure() && is_buchsbaum();
}

int reduction_number(const NumericalSemigroup& s) { return GradedRing(s).reduction_number(); }
int nilpotency_index(const NumericalSemigroup& s) { return GradedRing(s).nilpotency_index(); }
std::vector<AperyRecord> apery_invariants(const NumericalSemigroup& s) {
    return GradedRing(s).apery_records();
}
bool socle_membership(const NumericalSemigroup& s, long long x) {
    return GradedRing(s).socle_membership(x);
}
int defect_level(const NumericalSemigroup& s, int class_index) {
    return GradedRing(s).defect_level(class_index);
}
SocleBasis socle_basis(const NumericalSemigroup& s) { return GradedRing(s).socle_basis(); }
SocleBasis socle_basis_oracle(const NumericalSemigroup& s) {
    return GradedRing(s).socle_basis_oracle();
}
bool annihilated_by_M(const NumericalSemigroup& s, long long x) {
    return GradedRing(s).annihilated_by_M(x);
}
bool annihilated_by_Mk(const NumericalSemigroup& s, long long x, int k) {
    return GradedRing(s).annihilated_by_Mk(x, k);
}
bool is_cm_full(const NumericalSemigroup& s) { return GradedRing(s).is_cm_full(); }
bool is_cm_maxap(const NumericalSemigroup& s) { return GradedRing(s).is_cm_maxap(); }
bool le_M(const NumericalSemigroup& s, long long u, long long v) { return GradedRing(s).le_M(u, v); }
std::vector<int> max_ap_M(const NumericalSemigroup& s) { return GradedRing(s).max_ap_M(); }
bool is_m_pure(const NumericalSemigroup& s) { return GradedRing(s).is_m_pure(); }
bool is_buchsbaum(const NumericalSemigroup& s) { return GradedRing(s).is_buchsbaum(); }
int socle_length(const NumericalSemigroup& s) { return GradedRing(s).socle_length(); }
bool is_g_gorenstein(const NumericalSemigroup& s) { return GradedRing(s).is_g_gorenstein(); }

AnalysisReport make_report(const GradedRing& ring) {
    const auto& s = ring.semigroup();
    AnalysisReport rep;
    rep.generators = s.generators();
    rep.multiplicity = s.multiplicity();
    rep.frobenius = s.frobenius();
    rep.symmetric = ring.is_symmetric();
    rep.reduction_number = ring.reduction_number();
    rep.nilpotency_index = ring.nilpotency_index();
    rep.apery_records = ring.apery_records();
    rep.defect_classes = ring.defect_classes();
    rep.socle_basis = ring.socle_basis();
    rep.lambda = ring.socle_length();
    rep.max_ap_M = ring.max_ap_M();
    rep.max_ap_S = ring.max_ap_S();
    rep.m_pure = ring.is_m_pure();
    rep.cm = ring.is_cm_full();
    rep.buchsbaum = ring.is_buchsbaum();
    rep.g_gorenstein = rep.symmetric && rep.m_pure && rep.buchsbaum;
    return rep;
}

std::vector<Violation> check_invariants(const GradedRing& ring, const CheckOptions& opts) {
    const auto& s = ring.semigroup();
    const int g1 = s.multiplicity();
    const int r = ring.reduction_number();
    std::vector<Violation> out;
    auto add = [&](const char* id, std::string details) {
        out.push_back({s.generators(), id, std::move(details)});
    };

    // Semigroup level.
    const auto& ap = ring.apery();
    const int gmax = *std::max_element(ap.begin(), ap.end());
    if (gmax != s.frobenius() + g1) {
        add("apery-max", "max Ap = " + std::to_string(gmax));
    }
    const auto ngaps = static_cast<long long>(s.gaps().size());
    const bool by_count = 2 * ngaps == static_cast<long long>(s.frobenius()) + 1;
    bool by_pairing = true;
    for (int w : ap) {
        const long long partner = static_cast<long long>(s.frobenius()) + g1 - w;
        if (std::find(ap.begin(), ap.end(), partner) == ap.end()) by_pairing = false;
    }
    if (ring.is_symmetric() != by_count || ring.is_symmetric() != by_pairing) {
        add("symmetry-equivalence", "definition/gap count/Apéry pairing disagree");
    }

    // Apéry records.
    const auto basis = ring.socle_basis();
    long long excess = 0;
    int defects = 0;
    long long level_sum = 0;
    bool unit_excess = true;
    for (const auto& rec : ring.apery_records()) {
        const int i = rec.class_index;
        const std::string cls = "class " + std::to_string(i);
        if (rec.omega % g1 != i || rec.omega_prime % g1 != i) add("apery-residue", cls);
        if (i == 0 ? (rec.a != 0 || rec.b != 0) : (rec.b < 1 || rec.b > rec.a)) {
            add("apery-b-le-a", cls + ": a=" + std::to_string(rec.a) + " b=" + std::to_string(rec.b));
        }
        if (rec.level.has_value() != rec.is_defect()) add("level-presence", cls);
        if (i != 0 && rec.is_defect() != ring.socle_membership(rec.omega)) {
            add("defect-socle-equivalence", cls + ", ω=" + std::to_string(rec.omega));
        }
        if (!rec.is_defect()) continue;
        ++defects;
        excess += rec.a - rec.b;
        unit_excess = unit_excess && rec.a - rec.b == 1;
        level_sum += *rec.level + 1;
        if (r < rec.b + 2) add("defect-reduction-bound", cls + ": r < b+2");
        if (*rec.level > r - 2 - rec.b) add("level-bound", cls);
    }

    // Socle basis.
    for (std::size_t k = 0; k < basis.entries.size(); ++k) {
        const auto& e = basis.entries[k];
        if (k > 0 && basis.entries[k - 1].exponent == e.exponent) add("socle-distinct", std::to_string(e.exponent));
        if (!ring.socle_membership(e.exponent)) add("socle-entry-membership", std::to_string(e.exponent));
        if (e.order != ring.ord(e.exponent) || e.order < 1 || e.order > r - 2) {
            add("socle-entry-order", std::to_string(e.exponent));
        }
    }
    const bool cm = ring.is_cm_full();
    if (cm != basis.empty()) add("cm-iff-empty-socle", "basis " + join(basis.exponents()));
    if (cm != ring.is_cm_maxap()) add("cm-maxap-equivalence", "full vs maxAp_M criteria disagree");

    if (opts.oracle) {
        const auto oracle = ring.socle_basis_oracle();
        if (oracle != basis) {
            add("oracle-equivalence",
                "blow-up basis " + join(basis.exponents()) + " vs colon basis " + join(oracle.exponents()));
        }
        for (const auto& e : oracle.entries) {
            const auto& rec = ring.apery_records()[static_cast<std::size_t>(e.exponent % g1)];
            if (!rec.is_defect() || e.exponent < rec.omega) {
                add("monomial-form", std::to_string(e.exponent) + " is not ω_i + l·g₁ for a defect class");
            }
        }
    }

    if (opts.annihilator_chain && r >= 1) {
        const long long hi = std::max(s.conductor(), 1) + static_cast<long long>(r) * s.largest_generator();
        const auto levels = ring.annihilator_levels(1, hi, r);
        for (long long x = 1; x <= hi; ++x) {
            if (!s.contains(x)) continue;
            const auto idx = static_cast<std::size_t>(x - 1);
            for (int k = 1; k < r; ++k) {
                if (levels[static_cast<std::size_t>(k - 1)][idx] && !levels[static_cast<std::size_t>(k)][idx]) {
                    add("annihilator-chain", std::to_string(x) + " leaves (0:M^k) at k=" + std::to_string(k + 1));
                }
            }
            if (static_cast<bool>(levels.back()[idx]) != ring.socle_membership(x)) {
                add("annihilator-socle-equivalence", std::to_string(x));
            }
            if (levels.front()[idx] != static_cast<char>(ring.annihilated_by_M(x))) {
                add("annihilator-level-one", std::to_string(x));
            }
        }
    }

    // Ordering and purity.
    const auto top_m = ring.max_ap_M();
    const auto top_s = ring.max_ap_S();
    if (!std::includes(top_m.begin(), top_m.end(), top_s.begin(), top_s.end())) {
        add("maxap-S-in-maxap-M", join(top_s) + " ⊄ " + join(top_m));
    }
    const bool m_pure = ring.is_m_pure();
    if (m_pure && top_m != top_s) add("m-pure-maxap", join(top_m) + " vs " + join(top_s));

    // Buchsbaum structure.
    const bool buchsbaum = ring.is_buchsbaum();
    if (auto fast = ring.is_buchsbaum_fast(); fast && *fast != buchsbaum) {
        add("buchsbaum-fast-path", "l = 0 shortcut disagrees with full test");
    }
    const int lambda = ring.socle_length();
    if (lambda <= 1 && !buchsbaum) add("lambda-le-1-buchsbaum", "λ = " + std::to_string(lambda));
    if (cm && !buchsbaum) add("cm-implies-buchsbaum", "");
    if (buchsbaum) {
        std::vector<int> defect_omegas;
        for (const auto& rec : ring.apery_records()) {
            if (!rec.is_defect()) continue;
            const std::string cls = "class " + std::to_string(rec.class_index);
            if (*rec.level >= rec.a - rec.b) add("buchsbaum-level-bound", cls);
            if (!std::binary_search(top_m.begin(), top_m.end(), rec.omega)) {
                add("buchsbaum-defect-in-maxap", cls + ", ω=" + std::to_string(rec.omega));
            }
            defect_omegas.push_back(rec.omega);
        }
        for (std::size_t p = 0; p < defect_omegas.size(); ++p) {
            for (std::size_t q = 0; q < defect_omegas.size(); ++q) {
                if (p != q && ring.le_M(defect_omegas[p], defect_omegas[q])) {
                    add("buchsbaum-defects-incomparable",
                        std::to_string(defect_omegas[p]) + " ≤_M " + std::to_string(defect_omegas[q]));
                }
            }
        }
        if (lambda > excess) add("buchsbaum-lambda-bound", "λ > Σ(a−b)");
        if (unit_excess && lambda != defects) add("buchsbaum-lambda-count", "λ ≠ |I|");
        if (lambda != level_sum) add("buchsbaum-lambda-sum", "λ ≠ Σ(l_i+1)");
    }

    if (ring.nilpotency_index() > r) add("nilpotency-le-r", "s_J > r");
    if (ring.is_g_gorenstein() && !cm) add("gorenstein-implies-cm", "symmetric, M-pure, Buchsbaum, not CM");
    return out;
}

AnalysisReport analyze(const NumericalSemigroup& s, const CheckOptions& opts) {
    GradedRing ring(s);
    auto violations = check_invariants(ring, opts);
    if (!violations.empty()) {
        std::string msg = s.to_string() + " violates:";
        for (const auto& v : violations) msg += " [" + v.invariant + ": " + v.details + "]";
        throw InvariantViolation(msg);
    }
    return make_report(ring);
}

}  // namespace nsgr
