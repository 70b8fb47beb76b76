#include "nsgr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "nsgr/errors.hpp"
#include "nsgr/report.hpp"
#include "nsgr/search.hpp"

namespace nsgr {

namespace {

constexpr const char* kFooter =
    "Exit codes: 0 success, 1 violations found (verify) or internal error,\n"
    "2 input error (bad arguments, generators, gcd != 1, bounds), 3 search hits found.\n"
    "NSGR_MAX_TABLE caps the size of any membership or order table.";

struct CorpusArgs {
    int max_gen = 0;
    int max_ngens = 4;
    std::string corpus_file;
    int jobs = 1;
};

void add_corpus_options(CLI::App& cmd, CorpusArgs& args) {
    auto* gen = cmd.add_option("--max-gen", args.max_gen, "Largest generator value to enumerate");
    cmd.add_option("--max-ngens", args.max_ngens, "Largest number of minimal generators")
        ->capture_default_str()
        ->needs(gen);
    auto* file = cmd.add_option("--corpus", args.corpus_file, "Corpus file, one generator list per line");
    gen->excludes(file);
    cmd.add_option("--jobs", args.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

Corpus make_corpus(const CLI::App& cmd, const CorpusArgs& args) {
    if (cmd.count("--corpus") > 0) return Corpus(read_corpus_file(args.corpus_file));
    if (cmd.count("--max-gen") == 0) throw InvalidBounds("one of --max-gen or --corpus is required");
    EnumerationParams params;
    params.max_generators = args.max_ngens;
    params.max_generator_value = args.max_gen;
    validate(params);
    return Corpus(params);
}

void print_violations(std::ostream& out, const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        out << "violation " << v.invariant << " <";
        for (std::size_t i = 0; i < v.generators.size(); ++i) out << (i ? "," : "") << v.generators[i];
        out << ">";
        if (!v.details.empty()) out << ": " << v.details;
        out << '\n';
    }
}

int cmd_analyze(const std::string& gens, bool as_json, std::ostream& out) {
    const auto s = NumericalSemigroup::from_generators(parse_generator_list(gens));
    GradedRing ring(s);
    auto violations = check_invariants(ring);
    std::optional<ThreeGenReport> three;
    if (s.embedding_dimension() == 3) {
        three = threegen_report(ring);
        auto extra = threegen_violations(ring, *three);
        violations.insert(violations.end(), extra.begin(), extra.end());
    }
    const auto doc = make_document(make_report(ring), three);
    if (as_json) {
        nlohmann::json j = doc;
        out << j.dump(2) << '\n';
    } else {
        render_text(out, doc);
    }
    if (!violations.empty()) {
        print_violations(out, violations);
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_search(const std::string& question, const CLI::App& cmd, const CorpusArgs& args,
               std::ostream& out) {
    const Question q = question == "5.7" ? Question::Q57 : Question::Q58;
    const auto corpus = make_corpus(cmd, args);
    const auto start = std::chrono::steady_clock::now();
    auto result = hunt(q, corpus, args.jobs);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    result.normalize();
    out << "question: " << question << '\n';
    out << "corpus: " << result.corpus_size << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
    out << "hits: " << result.hits.size() << '\n';
    for (const auto& h : result.hits) {
        out << "hit <";
        for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
        out << ">\n";
    }
    print_violations(out, result.violations);
    if (!result.violations.empty()) return kExitFailure;
    return result.hits.empty() ? kExitOk : kExitDiscovery;
}

int cmd_verify(const CLI::App& cmd, const CorpusArgs& args, std::ostream& out) {
    const auto corpus = make_corpus(cmd, args);
    const auto start = std::chrono::steady_clock::now();
    auto result = sweep_theorems(corpus, args.jobs);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    result.normalize();
    out << "corpus: " << result.corpus_size << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
    out << "violations: " << result.violations.size() << '\n';
    print_violations(out, result.violations);
    return result.violations.empty() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Associated graded rings of numerical semigroup rings", "nsgr"};
    app.footer(kFooter);
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Report every invariant of one semigroup");
    std::string gens;
    analyze->add_option("generators", gens, "Comma-separated generators, e.g. 4,5,11")->required();
    bool json_flag = false;
    bool text_flag = false;
    auto* jf = analyze->add_flag("--json", json_flag, "JSON output");
    analyze->add_flag("--text", text_flag, "Plain text output (default)")->excludes(jf);

    auto* search = app.add_subcommand("search", "Hunt for semigroups answering an open question negatively");
    std::string question;
    search->add_option("--question", question, "5.7 or 5.8")
        ->required()
        ->check(CLI::IsMember({"5.7", "5.8"}));
    CorpusArgs search_args;
    add_corpus_options(*search, search_args);

    auto* verify = app.add_subcommand("verify", "Check every structural invariant over a corpus");
    CorpusArgs verify_args;
    add_corpus_options(*verify, verify_args);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(gens, json_flag, out);
        if (search->parsed()) return cmd_search(question, *search, search_args, out);
        if (verify->parsed()) return cmd_verify(*verify, verify_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInputError;
}

}  // namespace nsgr
