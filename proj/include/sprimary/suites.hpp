#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sprimary/io.hpp"

namespace sprimary {

/// Deterministic generation recipe for the verification corpus.
struct CorpusSpec {
    std::vector<int> zmod_moduli;    // residue rings to include
    bool include_products = true;    // pairs of prime power residue rings
    int product_cap = 64;            // product size bound
    bool include_idealizations = true;
    int size_cap = kDefaultSizeCap;  // overall ring size filter
    unsigned seed = 0x5eed;          // sampled integer instances
    Int z_max_n = 1000;
    int z_samples = 40;

    static CorpusSpec defaults();

    json to_json() const;
    static CorpusSpec from_json(const json& j);
};

struct Counterexample {
    std::string property;
    json instance;
};

struct SuiteReport {
    std::string suite;
    long long instances = 0;       // non-vacuous instances checked
    long long not_applicable = 0;  // hypothesis-gated skips
    std::vector<Counterexample> counterexamples;
    double wall_ms = 0;

    std::string verdict() const {
        if (!counterexamples.empty()) return "fail";
        return instances == 0 ? "vacuous" : "pass";
    }
    json to_json() const;
};

/// Mutation-testing hook: overrides the S-primary verdict the suites consume,
/// so a corrupted predicate demonstrably produces counterexamples.
struct SuiteHooks {
    std::function<bool(const Ideal&, const MultiplicativeSet&)> s_primary_verdict;
};

std::vector<std::pair<RingPtr, MultiplicativeSet>> generate_corpus(const CorpusSpec& spec);

SuiteReport suite_intersection(const CorpusSpec& spec, const SuiteHooks* hooks = nullptr);
SuiteReport suite_quotient_transfer(const CorpusSpec& spec, const SuiteHooks* hooks = nullptr);
SuiteReport suite_nil_primary(const CorpusSpec& spec, const SuiteHooks* hooks = nullptr);
SuiteReport suite_spectrum(const CorpusSpec& spec, const SuiteHooks* hooks = nullptr);
SuiteReport suite_localization(const CorpusSpec& spec, const SuiteHooks* hooks = nullptr);
SuiteReport suite_main_theorem(const CorpusSpec& spec, const SuiteHooks* hooks = nullptr);

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const CorpusSpec& spec,
                      const SuiteHooks* hooks = nullptr);

/// Deserialize a counterexample payload and re-run its single instance;
/// true when the recorded failure reproduces.
bool recheck_counterexample(const Counterexample& ce, const SuiteHooks* hooks = nullptr);

}  // namespace sprimary
