#pragma once

#include <span>
#include <vector>

#include "rsst/core.hpp"

namespace rsst {

/// Distances agreeing to within this are treated as ties and resolved by
/// lexicon order.
inline constexpr double kDistanceTolerance = 1e-9;

/// Largest combined element count brute_force_wed accepts.
inline constexpr std::size_t kBruteForceLimit = 14;

struct MetricParams {
    double alpha = 0.5;  // per-level attenuation, in (0, 1]
    double beta = 1.0;   // stroke-distance weight, >= 0

    void validate() const;
};

/// Vanilla Levenshtein distance with unit insert/delete/substitute costs.
int edit_distance(std::span<const StrokeSymbol> a, std::span<const StrokeSymbol> b);

/// Unit edit distance between two DFS elements. Structure tokens compare as
/// length-1 sequences; structure and stroke tokens live in disjoint alphabets,
/// so cross-kind comparisons mismatch at every position.
int element_edit_distance(const DfsElement& a, const DfsElement& b);

/// The level-weighted edit distance between the DFS linearizations of the two
/// trees. Deleting or inserting an element costs its weight; substituting
/// costs ED(a_i, b_j) * w'_j / Len(b_j).
double weighted_edit_distance(const Tree& m, const Tree& m_prime,
                              const MetricParams& params = {});

/// Same DP over already-linearized element sequences.
double weighted_edit_distance(std::span<const DfsElement> a,
                              std::span<const DfsElement> b);

/// Plain edit distance between the concatenated leaf stroke sequences.
int stroke_distance(const Tree& m, const Tree& m_prime);

/// weighted_edit_distance + beta * stroke_distance.
double combined_distance(const Tree& m, const Tree& m_prime,
                         const MetricParams& params = {});

/// Exhaustive recursion over all edit scripts with the same cost model as
/// weighted_edit_distance; exponential, so inputs are limited to
/// kBruteForceLimit combined elements. Serves as the independent oracle.
double brute_force_wed(const Tree& m, const Tree& m_prime,
                       const MetricParams& params = {});

namespace detail {

/// Scratch buffers so hot callers (rectification scans) avoid reallocating.
struct WedWorkspace {
    std::vector<double> prev, curr;
    std::vector<int> lev;
};

double wed_over_elements(std::span<const DfsElement> a,
                         std::span<const DfsElement> b, WedWorkspace& ws);

int levenshtein(std::span<const StrokeSymbol> a, std::span<const StrokeSymbol> b,
                std::vector<int>& scratch);

}  // namespace detail

}  // namespace rsst
