#include "rsst/metric.hpp"

#include <algorithm>
#include <limits>

namespace rsst {

void MetricParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw InvalidParameterError("alpha must be in (0, 1]");
    }
    if (!(beta >= 0.0)) {
        throw InvalidParameterError("beta must be >= 0");
    }
}

namespace detail {

int levenshtein(std::span<const StrokeSymbol> a, std::span<const StrokeSymbol> b,
                std::vector<int>& scratch) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<int>(m);
    if (m == 0) return static_cast<int>(n);
    scratch.resize(m + 1);
    for (std::size_t j = 0; j <= m; ++j) scratch[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        int diag = scratch[0];
        scratch[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            int saved = scratch[j];
            int sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            scratch[j] = std::min({scratch[j] + 1, scratch[j - 1] + 1, sub});
            diag = saved;
        }
    }
    return scratch[m];
}

namespace {

int element_ed(const DfsElement& a, const DfsElement& b, std::vector<int>& lev) {
    if (a.is_structure() && b.is_structure()) {
        return a.op() == b.op() ? 0 : 1;
    }
    if (a.is_structure() != b.is_structure()) {
        // Disjoint alphabets: every position mismatches, so the distance
        // degenerates to the longer length.
        return static_cast<int>(std::max(a.len(), b.len()));
    }
    return levenshtein(a.strokes(), b.strokes(), lev);
}

}  // namespace

double wed_over_elements(std::span<const DfsElement> a,
                         std::span<const DfsElement> b, WedWorkspace& ws) {
    const std::size_t n = a.size(), m = b.size();
    ws.prev.resize(m + 1);
    ws.curr.resize(m + 1);
    ws.prev[0] = 0.0;
    for (std::size_t j = 1; j <= m; ++j) ws.prev[j] = ws.prev[j - 1] + b[j - 1].weight;
    for (std::size_t i = 1; i <= n; ++i) {
        const DfsElement& ai = a[i - 1];
        ws.curr[0] = ws.prev[0] + ai.weight;
        for (std::size_t j = 1; j <= m; ++j) {
            const DfsElement& bj = b[j - 1];
            double sub = ws.prev[j - 1] +
                         element_ed(ai, bj, ws.lev) * bj.weight /
                             static_cast<double>(bj.len());
            double del = ws.prev[j] + ai.weight;
            double ins = ws.curr[j - 1] + bj.weight;
            ws.curr[j] = std::min({del, ins, sub});
        }
        std::swap(ws.prev, ws.curr);
    }
    return ws.prev[m];
}

}  // namespace detail

int edit_distance(std::span<const StrokeSymbol> a, std::span<const StrokeSymbol> b) {
    std::vector<int> scratch;
    return detail::levenshtein(a, b, scratch);
}

int element_edit_distance(const DfsElement& a, const DfsElement& b) {
    std::vector<int> scratch;
    return detail::element_ed(a, b, scratch);
}

double weighted_edit_distance(std::span<const DfsElement> a,
                              std::span<const DfsElement> b) {
    detail::WedWorkspace ws;
    return detail::wed_over_elements(a, b, ws);
}

double weighted_edit_distance(const Tree& m, const Tree& m_prime,
                              const MetricParams& params) {
    params.validate();
    auto a = dfs_elements(m, params.alpha);
    auto b = dfs_elements(m_prime, params.alpha);
    return weighted_edit_distance(a, b);
}

int stroke_distance(const Tree& m, const Tree& m_prime) {
    StrokeSeq a = leaf_stroke_concat(m);
    StrokeSeq b = leaf_stroke_concat(m_prime);
    return edit_distance(a, b);
}

double combined_distance(const Tree& m, const Tree& m_prime,
                         const MetricParams& params) {
    return weighted_edit_distance(m, m_prime, params) +
           params.beta * stroke_distance(m, m_prime);
}

namespace {

double brute_force_rec(std::span<const DfsElement> a, std::span<const DfsElement> b,
                       std::size_t i, std::size_t j, std::vector<int>& lev) {
    if (i == a.size() && j == b.size()) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    if (i < a.size()) {
        best = std::min(best, a[i].weight + brute_force_rec(a, b, i + 1, j, lev));
    }
    if (j < b.size()) {
        best = std::min(best, b[j].weight + brute_force_rec(a, b, i, j + 1, lev));
    }
    if (i < a.size() && j < b.size()) {
        double sub = detail::element_ed(a[i], b[j], lev) * b[j].weight /
                     static_cast<double>(b[j].len());
        best = std::min(best, sub + brute_force_rec(a, b, i + 1, j + 1, lev));
    }
    return best;
}

}  // namespace

double brute_force_wed(const Tree& m, const Tree& m_prime,
                       const MetricParams& params) {
    params.validate();
    auto a = dfs_elements(m, params.alpha);
    auto b = dfs_elements(m_prime, params.alpha);
    if (a.size() + b.size() > kBruteForceLimit) {
        throw SizeLimitError("combined element count " +
                             std::to_string(a.size() + b.size()) +
                             " exceeds the oracle bound of " +
                             std::to_string(kBruteForceLimit));
    }
    std::vector<int> lev;
    return brute_force_rec(a, b, 0, 0, lev);
}

}  // namespace rsst
