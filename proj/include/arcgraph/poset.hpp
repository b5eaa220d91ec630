#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arcgraph/bitset.hpp"
#include "arcgraph/digraph.hpp"

namespace arcgraph {

/// Default cap on the number of elements any enumeration may produce.
inline constexpr std::size_t kDefaultBudget = 10'000'000;
/// Width computations refuse larger posets unless forced.
inline constexpr std::size_t kWidthLimit = 100'000;
/// Largest poset for which the strict order is materialised as bit rows.
inline constexpr std::size_t kDenseLimit = 16'384;

/// Subsets of a fixed universe packed into a flat word array, one record of
/// stride() words per element (at least one word, even for an empty universe).
class SubsetLabels {
  public:
    SubsetLabels() = default;
    SubsetLabels(std::size_t universe, std::vector<std::uint64_t> words);

    [[nodiscard]] std::size_t universe() const { return universe_; }
    [[nodiscard]] std::size_t stride() const { return stride_; }
    static std::size_t stride_for(std::size_t universe) { return universe == 0 ? 1 : (universe + 63) / 64; }
    [[nodiscard]] std::size_t size() const { return words_.size() / stride_; }
    [[nodiscard]] std::span<const std::uint64_t> operator[](std::size_t i) const {
        return {words_.data() + i * stride_, stride_};
    }
    [[nodiscard]] std::size_t cardinality(std::size_t i) const;
    [[nodiscard]] Bitset to_bitset(std::size_t i) const;
    [[nodiscard]] bool contains(std::size_t i, std::size_t element) const {
        return ((*this)[i][element / 64] >> (element % 64)) & 1U;
    }
    /// label(i) is a subset of label(j)
    [[nodiscard]] bool subset(std::size_t i, std::size_t j) const;

    friend bool operator==(const SubsetLabels&, const SubsetLabels&) = default;

  private:
    friend class Poset;
    std::size_t universe_ = 0;
    std::size_t stride_ = 1;
    std::vector<std::uint64_t> words_;
};

/// Finite poset. The strict order is irreflexive and transitively closed.
///
/// Posets up to kDenseLimit elements keep explicit below/above bit rows.
/// Larger posets are only produced by ideal enumeration and are backed by
/// their subset labels, with u < v iff label(u) is a proper subset of label(v).
class Poset {
  public:
    Poset() = default;
    /// The antichain on m elements.
    explicit Poset(std::size_t m);

    /// Transitive closure of an arbitrary relation; throws InvalidInput on a
    /// cycle (including a loop) or an out-of-range pair.
    static Poset from_relation(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& less);
    /// Subsets ordered by strict inclusion. Labels must be pairwise distinct.
    static Poset from_subsets(SubsetLabels labels);

    [[nodiscard]] std::size_t size() const { return m_; }
    [[nodiscard]] bool dense() const { return !below_.empty() || m_ == 0; }
    [[nodiscard]] bool less(std::size_t u, std::size_t v) const;
    [[nodiscard]] bool comparable(std::size_t u, std::size_t v) const { return less(u, v) || less(v, u); }

    /// {u : u < v}; requires dense().
    [[nodiscard]] const Bitset& below(std::size_t v) const;
    /// {u : v < u}; requires dense().
    [[nodiscard]] const Bitset& above(std::size_t v) const;

    [[nodiscard]] bool has_labels() const { return labels_.has_value(); }
    /// Throws MissingLabels if absent.
    [[nodiscard]] const SubsetLabels& labels() const;

    /// All pairs u < v, lexicographic.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> relation() const;
    /// Pairs u < v with nothing strictly between.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    /// Throws InvalidInput unless irreflexive, antisymmetric and transitive.
    void validate() const;

  private:
    void require_dense(const char* what) const;

    std::size_t m_ = 0;
    std::vector<Bitset> below_;
    std::vector<Bitset> above_;
    std::optional<SubsetLabels> labels_;
};

/// Maximum antichain with a chain partition of the same size.
struct WidthCertificate {
    std::vector<std::size_t> antichain;
    std::vector<std::vector<std::size_t>> chains;

    [[nodiscard]] std::size_t width() const { return antichain.size(); }
};

/// Checks every certificate invariant against p.
[[nodiscard]] bool is_valid_certificate(const Poset& p, const WidthCertificate& cert);

Poset antichain_poset(std::size_t n);
Poset chain_poset(std::size_t m);

/// Number of downsets of p; throws SizeBudgetExceeded past `budget`.
std::size_t count_ideals(const Poset& p, std::size_t budget = kDefaultBudget);

/// Lattice of downsets of p under inclusion, labelled by the downsets,
/// sorted by cardinality then lexicographically.
Poset ideal_lattice(const Poset& p, std::size_t budget = kDefaultBudget);

/// I^k of the n-element antichain; k = 0 gives the antichain itself.
Poset iterated_ideal_lattice(std::size_t n, std::size_t k, std::size_t budget = kDefaultBudget);

/// Dilworth pair via Hopcroft-Karp on the comparability bipartite graph.
/// Refuses posets above kWidthLimit elements unless `force`.
WidthCertificate width(const Poset& p, bool force = false);

/// Element counts at each label cardinality 0..universe.
std::vector<std::size_t> level_sizes(const Poset& lattice);

struct SpernerResult {
    bool sperner = false;
    std::optional<std::size_t> level;  // smallest level of maximum antichain size
    std::size_t width = 0;
};
SpernerResult sperner_check(const Poset& lattice);

/// |I^2(K̄_n)|, the number of antichains of the boolean lattice on n generators.
std::size_t dedekind(std::size_t n, std::size_t budget = kDefaultBudget);

/// Arc (u, v) iff u >= v fails. Never has loops.
Digraph nondomination(const Poset& p);

}  // namespace arcgraph
