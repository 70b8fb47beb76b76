#include "nsgr/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <numeric>
#include <thread>

#include "nsgr/errors.hpp"
#include "nsgr/threegen.hpp"

namespace nsgr {

void validate(const EnumerationParams& p) {
    if (p.max_generators < 2) throw InvalidBounds("max generators must be at least 2");
    if (p.max_generator_value < 1) throw InvalidBounds("max generator value must be at least 1");
    if (p.max_frobenius && *p.max_frobenius < -1) throw InvalidBounds("max Frobenius must be ≥ -1");
    double candidates = 0;
    double binom = 1;
    for (int k = 1; k <= std::min(p.max_generators, p.max_generator_value); ++k) {
        binom = binom * (p.max_generator_value - k + 1) / k;
        candidates += binom;
    }
    if (candidates > static_cast<double>(p.max_candidates)) {
        throw BoundsTooLarge("bounds allow about " + std::to_string(static_cast<long long>(candidates)) +
                             " generator tuples, cap is " + std::to_string(p.max_candidates));
    }
}

namespace {

struct Enumerator {
    const EnumerationParams& params;
    const std::function<void(const NumericalSemigroup&)>& sink;
    std::vector<int> prefix;

    void emit() {
        if (params.three_generated_only && prefix.size() != 3) return;
        auto s = NumericalSemigroup::from_generators(prefix);
        if (params.max_frobenius && s.frobenius() > *params.max_frobenius) return;
        if (params.symmetric_only && !is_symmetric(s)) return;
        if (params.m_pure_only && !GradedRing(s).is_m_pure()) return;
        sink(s);
    }

    // `reach` marks the sums of prefix elements up to the value bound; a new
    // generator must not be one of them.
    void extend(const std::vector<char>& reach, int gcd) {
        if (!prefix.empty() && gcd == 1) emit();
        if (static_cast<int>(prefix.size()) == params.max_generators) return;
        const int start = prefix.empty() ? 1 : prefix.back() + 1;
        const int top = params.max_generator_value;
        for (int c = start; c <= top; ++c) {
            if (reach[static_cast<std::size_t>(c)]) continue;
            std::vector<char> next = reach;
            for (int x = c; x <= top; ++x) {
                if (next[static_cast<std::size_t>(x - c)]) next[static_cast<std::size_t>(x)] = 1;
            }
            prefix.push_back(c);
            extend(next, std::gcd(gcd, c));
            prefix.pop_back();
        }
    }
};

template <class Item, class Fn>
std::vector<Item> parallel_map(const std::vector<NumericalSemigroup>& batch, int jobs, Fn fn) {
    std::vector<Item> out(batch.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(batch.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < batch.size(); ++i) out[i] = fn(batch[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < batch.size(); i = next++) out[i] = fn(batch[i]);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

struct ItemResult {
    std::vector<Violation> violations;
    bool hit = false;
};

template <class Fn>
SweepResult run_batched(const Corpus& corpus, int jobs, Fn fn) {
    constexpr std::size_t kBatch = 2048;
    SweepResult result;
    std::vector<NumericalSemigroup> batch;
    auto flush = [&] {
        auto items = parallel_map<ItemResult>(batch, jobs, fn);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            auto& it = items[i];
            result.violations.insert(result.violations.end(), it.violations.begin(), it.violations.end());
            if (it.hit) result.hits.push_back(batch[i].generators());
        }
        result.corpus_size += batch.size();
        batch.clear();
    };
    corpus.for_each([&](const NumericalSemigroup& s) {
        batch.push_back(s);
        if (batch.size() == kBatch) flush();
    });
    flush();
    return result;
}

}  // namespace

void enumerate(const EnumerationParams& params,
               const std::function<void(const NumericalSemigroup&)>& sink) {
    validate(params);
    Enumerator e{params, sink, {}};
    std::vector<char> reach(static_cast<std::size_t>(params.max_generator_value) + 1, 0);
    reach[0] = 1;
    e.extend(reach, 0);
}

std::vector<NumericalSemigroup> enumerate(const EnumerationParams& params) {
    std::vector<NumericalSemigroup> out;
    enumerate(params, [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

void SweepResult::normalize() {
    std::sort(violations.begin(), violations.end());
    std::sort(hits.begin(), hits.end());
}

void Corpus::for_each(const std::function<void(const NumericalSemigroup&)>& sink) const {
    if (params_) {
        enumerate(*params_, sink);
        return;
    }
    for (const auto& s : items_) sink(s);
}

SweepResult sweep_theorems(const Corpus& corpus, int jobs, const CheckOptions& opts) {
    return run_batched(corpus, jobs, [&](const NumericalSemigroup& s) {
        ItemResult item;
        try {
            GradedRing ring(s);
            item.violations = check_invariants(ring, opts);
            if (s.embedding_dimension() == 3) {
                auto extra = threegen_violations(ring, threegen_report(ring));
                item.violations.insert(item.violations.end(), extra.begin(), extra.end());
            }
        } catch (const Error& e) {
            item.violations.push_back({s.generators(), "exception", e.what()});
        }
        return item;
    });
}

bool hunt_predicate(Question q, const GradedRing& ring) {
    switch (q) {
        case Question::Q57:
            // For ℕ the reduction number is clamped to 1 while s_J = 0; the
            // ring is regular and not a meaningful instance of the question.
            return !ring.semigroup().is_naturals() && ring.is_symmetric() && ring.is_buchsbaum() &&
                   ring.nilpotency_index() != ring.reduction_number();
        case Question::Q58:
            return ring.is_buchsbaum() && !ring.is_cm_full() && ring.is_m_pure();
    }
    return false;
}

SweepResult hunt(Question q, const Corpus& corpus, int jobs) {
    return run_batched(corpus, jobs, [&](const NumericalSemigroup& s) {
        ItemResult item;
        try {
            item.hit = hunt_predicate(q, GradedRing(s));
        } catch (const Error& e) {
            item.violations.push_back({s.generators(), "exception", e.what()});
        }
        return item;
    });
}

std::vector<int> parse_generator_list(std::string_view text) {
    std::vector<int> out;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
        while (!tok.empty() && is_space(tok.back())) tok.remove_suffix(1);
        if (tok.empty()) throw ParseError("empty entry in generator list '" + std::string(text) + "'");
        int value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || end != tok.data() + tok.size()) {
            throw ParseError("'" + std::string(tok) + "' is not an integer");
        }
        if (value <= 0) throw ParseError("generator " + std::string(tok) + " is not positive");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<NumericalSemigroup> read_corpus(std::istream& in) {
    std::vector<NumericalSemigroup> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(NumericalSemigroup::from_generators(parse_generator_list(line)));
        } catch (const InputError& e) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<NumericalSemigroup> read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file " + path);
    return read_corpus(in);
}

}  // namespace nsgr
