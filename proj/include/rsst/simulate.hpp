#pragma once

#include <cstdint>
#include <string>

#include "rsst/lexicon.hpp"
#include "rsst/metric.hpp"
#include "rsst/rng.hpp"

namespace rsst {

/// Stochastic corruption rates for the evaluation harness. The noise model is
/// synthetic: it stands in for decoder prediction errors, it does not model
/// them.
struct PerturbationConfig {
    double p_sub = 0.0;     // per-stroke substitution
    double p_del = 0.0;     // per-stroke deletion
    double p_ins = 0.0;     // per-gap insertion
    double p_struct = 0.0;  // per-internal-node operator swap (same arity)
    std::uint64_t seed = 0;
    int alphabet = kDefaultAlphabet;

    void validate() const;
};

/// Corrupts a tree. Deterministic in (cfg.seed, trial_index); operator swaps
/// happen first, then per-leaf stroke edits. Output is always a valid tree:
/// swaps preserve arity and a deletion that would empty a leaf is re-drawn as
/// a substitution.
Tree perturb(const Tree& tree, const PerturbationConfig& cfg,
             std::uint64_t trial_index);

struct EvalReport {
    std::uint64_t trials = 0;
    double top1_combined = 0.0;
    double top1_tree_only = 0.0;
    double top1_stroke_only = 0.0;
    double exact_match_rate = 0.0;
    double mean_distance = 0.0;
    PerturbationConfig config;
    MetricParams params;

    std::string to_json() const;
    static EvalReport from_json(const std::string& text);
};

/// Per trial: sample a lexicon character uniformly, perturb it, rectify under
/// the combined metric and both ablations, and score top-1 recovery of the
/// true tree. Trials are independent streams, so any thread count produces a
/// bit-identical report.
EvalReport evaluate(const Lexicon& lex, const PerturbationConfig& cfg,
                    std::uint64_t trials, const MetricParams& params = {},
                    int threads = 1);

/// Deterministic random lexicon of valid trees. Duplicate serializations are
/// allowed and become confusables; roughly a tenth of the records reuse an
/// earlier record's stroke concatenation under a different structure, so
/// stroke-level confusables occur at useful rates.
Lexicon synth_lexicon(int count, std::uint64_t seed, int max_depth = 3,
                      int alphabet = kDefaultAlphabet);

}  // namespace rsst
