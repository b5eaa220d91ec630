#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcgraph/btable.hpp"
#include "arcgraph/digraph.hpp"

namespace arcgraph {

/// How `direct` is compared with the predicted values.
enum class Relation {
    equal,          // direct == formula
    within_bounds,  // lower_bound <= direct <= formula
};

struct VerificationReport {
    std::string instance;
    std::string check;  // "chromatic_formula" or "arc_graph_bounds"
    std::size_t k = 0;
    Relation relation = Relation::equal;
    std::optional<std::size_t> direct;
    std::optional<std::size_t> formula;
    std::optional<std::size_t> lower_bound;
    bool agreement = false;
    std::string error;  // set when the instance could not be evaluated
    double seconds = 0.0;
};

/// Recomputes `agreement` from the other fields.
[[nodiscard]] bool consistent(const VerificationReport& r);

struct VerifyOptions {
    std::size_t budget = kDefaultBudget;
    BTable* table = nullptr;
    bool use_cache = true;
};

/// Smallest n with chi_g <= b(n,k), taking b(0,k) = 1. Throws TableIncomplete
/// when a needed b-value cannot be computed within the budget.
std::size_t chi_via_formula(std::size_t chi_g, std::size_t k, const VerifyOptions& options = {});

/// Exact chi(delta^k(g)) against chi_via_formula(chi(g), k).
/// g must be symmetric (NotSymmetric) and loop-free (LoopPresent).
VerificationReport verify_theorem3(const Digraph& g, std::size_t k, const VerifyOptions& options = {},
                                   std::string instance = {});

/// chi(g) <= 2^chi(delta(g)) and chi(delta(g)) <= n whenever chi(g) <= C(n, floor(n/2)).
/// Reported as lower_bound <= direct <= formula with direct = chi(delta(g)).
VerificationReport verify_eh(const Digraph& g, std::string instance = {});

/// Largest m <= m_cap with chi(delta^k(TT_m)) <= n.
std::size_t max_tt(std::size_t n, std::size_t k, std::size_t m_cap, std::size_t budget = kDefaultBudget);

struct NamedGraph {
    std::string name;
    Digraph graph;
};

/// K_2..K_6, C_5, C_7, C_9 plus the directed TT_3, TT_4 and cyclic triangle.
std::vector<NamedGraph> default_corpus();
/// Resolves "default", "small" ({K_2, K_3, C_5}), "complete", "cycles" or "directed".
std::vector<NamedGraph> named_corpus(const std::string& name);

struct CorpusOptions {
    VerifyOptions verify;
    /// Undirected inputs with chi <= 1 have vertex-empty iterated arc graphs
    /// and are skipped by the formula check unless this is set.
    bool include_trivial = false;
    bool run_eh = true;
    std::size_t threads = 1;
};

/// verify_theorem3 for every symmetric loop-free member and every k, then
/// verify_eh for every loop-free member. Per-instance errors are
/// recorded in the reports. Output order follows corpus order.
std::vector<VerificationReport> run_corpus(const std::vector<std::size_t>& k_values,
                                           const std::vector<NamedGraph>& corpus, const CorpusOptions& options = {});

}  // namespace arcgraph
