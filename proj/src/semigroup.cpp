#include "nsgr/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "nsgr/errors.hpp"

namespace nsgr {

std::size_t table_limit() {
    static const std::size_t limit = [] {
        constexpr std::size_t fallback = 50'000'000;
        const char* env = std::getenv("NSGR_MAX_TABLE");
        if (env == nullptr || *env == '\0') return fallback;
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) return fallback;
        return static_cast<std::size_t>(v);
    }();
    return limit;
}

namespace {

void check_table_size(std::size_t n, const char* what) {
    if (n > table_limit()) {
        throw TableLimitExceeded(std::string(what) + " table of " + std::to_string(n) +
                                 " entries exceeds NSGR_MAX_TABLE=" +
                                 std::to_string(table_limit()));
    }
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> raw) {
    if (raw.empty()) throw EmptyInput();
    std::vector<int> sorted(raw.begin(), raw.end());
    for (int g : sorted) {
        if (g <= 0) throw ParseError("generator " + std::to_string(g) + " is not positive");
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    long long d = 0;
    for (int g : sorted) d = std::gcd(d, static_cast<long long>(g));
    if (d != 1) throw GcdNotOne(d);

    const long long max_raw = sorted.back();
    const long long sieve = max_raw * max_raw + max_raw;
    check_table_size(static_cast<std::size_t>(sieve), "membership");

    NumericalSemigroup s;
    // Minimal generators in ascending order: g is minimal iff the smaller
    // minimal generators do not already reach it.
    std::vector<char> reach(static_cast<std::size_t>(max_raw) + 1, 0);
    reach[0] = 1;
    for (int g : sorted) {
        if (reach[static_cast<std::size_t>(g)]) continue;
        s.gens_.push_back(g);
        for (std::size_t x = static_cast<std::size_t>(g); x < reach.size(); ++x) {
            if (reach[x - static_cast<std::size_t>(g)]) reach[x] = 1;
        }
    }

    std::vector<char> member(static_cast<std::size_t>(sieve), 0);
    member[0] = 1;
    for (std::size_t x = 1; x < member.size(); ++x) {
        for (int g : s.gens_) {
            auto gu = static_cast<std::size_t>(g);
            if (gu > x) break;
            if (member[x - gu]) {
                member[x] = 1;
                break;
            }
        }
    }
    s.frobenius_ = -1;
    for (std::size_t x = member.size(); x-- > 0;) {
        if (!member[x]) {
            s.frobenius_ = static_cast<int>(x);
            break;
        }
    }
    member.resize(static_cast<std::size_t>(s.frobenius_ + 2));
    s.member_ = std::move(member);
    return s;
}

std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> out;
    for (int x = 1; x <= frobenius_; ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return out;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ',';
        os << gens_[i];
    }
    os << '>';
    return os.str();
}

bool is_symmetric(const NumericalSemigroup& s) {
    const int g = s.frobenius();
    for (int x = 0; x <= g; ++x) {
        if (s.contains(x) == s.contains(g - x)) return false;
    }
    return true;
}

std::vector<int> apery_wrt(const NumericalSemigroup& s, int modulus) {
    std::vector<int> ap(static_cast<std::size_t>(modulus), -1);
    int found = 0;
    for (int x = 0; found < modulus; ++x) {
        auto& slot = ap[static_cast<std::size_t>(x % modulus)];
        if (slot < 0 && s.contains(x)) {
            slot = x;
            ++found;
        }
    }
    return ap;
}

std::vector<int> apery(const NumericalSemigroup& s) { return apery_wrt(s, s.multiplicity()); }

OrderTable::OrderTable(const NumericalSemigroup& s, std::size_t bound) {
    check_table_size(bound, "order");
    ord_.assign(std::max<std::size_t>(bound, 1), kAbsent);
    fill_from(s, 0);
}

void OrderTable::fill_from(const NumericalSemigroup& s, std::size_t start) {
    const auto& gens = s.generators();
    for (std::size_t x = start; x < ord_.size(); ++x) {
        if (x == 0) {
            ord_[0] = 0;
            continue;
        }
        int best = kAbsent;
        for (int g : gens) {
            auto gu = static_cast<std::size_t>(g);
            if (gu > x) break;
            best = std::max(best, ord_[x - gu]);
        }
        ord_[x] = best == kAbsent ? kAbsent : best + 1;
    }
}

int OrderTable::ord(long long s) const {
    if (s < 0) return kAbsent;
    if (static_cast<std::size_t>(s) >= ord_.size()) {
        throw InternalError("ord(" + std::to_string(s) + ") requested beyond table bound " +
                            std::to_string(ord_.size()));
    }
    return ord_[static_cast<std::size_t>(s)];
}

OrderTable OrderTable::extended(const NumericalSemigroup& s, std::size_t bound) const {
    OrderTable out;
    if (bound <= ord_.size()) {
        out.ord_ = ord_;
        return out;
    }
    check_table_size(bound, "order");
    out.ord_ = ord_;
    std::size_t start = ord_.size();
    out.ord_.resize(bound, kAbsent);
    out.fill_from(s, start);
    return out;
}

OrderTable order_table(const NumericalSemigroup& s, std::size_t bound) { return OrderTable(s, bound); }

bool in_ideal_power(const NumericalSemigroup& s, long long x, int h) {
    if (x < 0) return false;
    if (h == 0) return s.contains(x);
    return OrderTable(s, static_cast<std::size_t>(x) + 1).in_power(x, h);
}

}  // namespace nsgr
