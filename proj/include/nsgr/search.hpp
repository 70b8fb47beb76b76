#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsgr/graded.hpp"

namespace nsgr {

struct EnumerationParams {
    int max_generators = 3;
    int max_generator_value = 10;
    std::optional<int> max_frobenius;
    bool symmetric_only = false;
    bool m_pure_only = false;
    bool three_generated_only = false;
    /// Refuse bounds whose candidate count Σ_{k ≤ n} C(V, k) exceeds this.
    long long max_candidates = 50'000'000;
};

/// Throws InvalidBounds or BoundsTooLarge.
void validate(const EnumerationParams& params);

/// Streams every semigroup whose minimal generating system has at most
/// max_generators entries, all ≤ max_generator_value, in lexicographic order
/// of the generator tuples. ℕ = ⟨1⟩ comes first.
void enumerate(const EnumerationParams& params,
               const std::function<void(const NumericalSemigroup&)>& sink);
std::vector<NumericalSemigroup> enumerate(const EnumerationParams& params);

enum class Question { Q57, Q58 };

struct SweepResult {
    std::size_t corpus_size = 0;
    std::vector<Violation> violations;
    std::vector<std::vector<int>> hits;

    /// Sorts violations and hits so results can be compared as sets.
    void normalize();
    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// A corpus is either an explicit list or an enumeration.
class Corpus {
public:
    explicit Corpus(std::vector<NumericalSemigroup> items) : items_(std::move(items)) {}
    explicit Corpus(EnumerationParams params) : params_(params) {}

    void for_each(const std::function<void(const NumericalSemigroup&)>& sink) const;

private:
    std::vector<NumericalSemigroup> items_;
    std::optional<EnumerationParams> params_;
};

/// Runs the full invariant suite (graded checks plus the 3-generated checks
/// when applicable) on every semigroup. Violations are collected, never thrown.
SweepResult sweep_theorems(const Corpus& corpus, int jobs = 1, const CheckOptions& opts = {});

/// Q57: symmetric ∧ Buchsbaum ∧ s_J ≠ r. Q58: M-pure ∧ Buchsbaum ∧ ¬CM.
bool hunt_predicate(Question q, const GradedRing& ring);
SweepResult hunt(Question q, const Corpus& corpus, int jobs = 1);

/// Newline-delimited generator lists, e.g. "4,5,11"; '#' starts a comment.
/// Throws ParseError (with the line number) or the construction errors.
std::vector<NumericalSemigroup> read_corpus(std::istream& in);
std::vector<NumericalSemigroup> read_corpus_file(const std::string& path);

/// "4, 5,11" → {4,5,11}. Throws ParseError.
std::vector<int> parse_generator_list(std::string_view text);

}  // namespace nsgr
