#include "arcgraph/poset.hpp"

#include <algorithm>
#include <numeric>

#include "arcgraph/errors.hpp"

namespace arcgraph {

SubsetLabels::SubsetLabels(std::size_t universe, std::vector<std::uint64_t> words)
    : universe_{universe}, stride_{stride_for(universe)}, words_{std::move(words)} {
    if (words_.size() % stride_ != 0) throw InvalidInput("subset label storage is not a multiple of the stride");
}

std::size_t SubsetLabels::cardinality(std::size_t i) const {
    std::size_t c = 0;
    for (auto w : (*this)[i]) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

Bitset SubsetLabels::to_bitset(std::size_t i) const {
    Bitset b(universe_);
    auto words = (*this)[i];
    for (std::size_t w = 0; w < b.word_count(); ++w) b.data()[w] = words[w];
    return b;
}

bool SubsetLabels::subset(std::size_t i, std::size_t j) const {
    auto a = (*this)[i];
    auto b = (*this)[j];
    for (std::size_t w = 0; w < stride_; ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

Poset::Poset(std::size_t m) : m_{m}, below_(m, Bitset(m)), above_(m, Bitset(m)) {}

Poset Poset::from_relation(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& less) {
    Poset p(m);
    for (auto [u, v] : less) {
        if (u >= m || v >= m)
            throw InvalidInput("relation pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        p.below_[v].set(u);
    }
    // Warshall closure on bit rows
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (p.below_[i].test(k)) p.below_[i] |= p.below_[k];
    for (std::size_t v = 0; v < m; ++v) {
        if (p.below_[v].test(v)) throw InvalidInput("relation has a cycle through element " + std::to_string(v));
        p.below_[v].for_each([&](std::size_t u) { p.above_[u].set(v); });
    }
    return p;
}

Poset Poset::from_subsets(SubsetLabels labels) {
    Poset p;
    p.m_ = labels.size();
    if (p.m_ <= kDenseLimit) {
        const std::size_t m = p.m_;
        p.below_.assign(m, Bitset(m));
        p.above_.assign(m, Bitset(m));
        std::vector<std::size_t> card(m);
        for (std::size_t i = 0; i < m; ++i) card[i] = labels.cardinality(i);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t u = 0; u < m; ++u)
                if (card[u] < card[v] && labels.subset(u, v)) {
                    p.below_[v].set(u);
                    p.above_[u].set(v);
                }
    }
    p.labels_ = std::move(labels);
    return p;
}

bool Poset::less(std::size_t u, std::size_t v) const {
    if (!below_.empty()) return below_[v].test(u);
    return labels_->cardinality(u) < labels_->cardinality(v) && labels_->subset(u, v);
}

void Poset::require_dense(const char* what) const {
    if (!dense()) throw SizeBudgetExceeded(what, m_, kDenseLimit);
}

const Bitset& Poset::below(std::size_t v) const {
    require_dense("poset relation rows");
    return below_[v];
}

const Bitset& Poset::above(std::size_t v) const {
    require_dense("poset relation rows");
    return above_[v];
}

const SubsetLabels& Poset::labels() const {
    if (!labels_) throw MissingLabels("poset elements carry no subset labels");
    return *labels_;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relation() const {
    require_dense("poset relation");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < m_; ++u) above_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    require_dense("cover relation");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < m_; ++u) {
        Bitset direct = above_[u];
        above_[u].for_each([&](std::size_t v) { direct.subtract(above_[v]); });
        direct.for_each([&](std::size_t v) { out.emplace_back(u, v); });
    }
    return out;
}

void Poset::validate() const {
    if (!dense()) {
        // label-backed: strict inclusion is a partial order as long as labels are distinct
        for (std::size_t i = 1; i < m_; ++i)
            if (std::equal(labels_->operator[](i - 1).begin(), labels_->operator[](i - 1).end(),
                           labels_->operator[](i).begin()))
                throw InvalidInput("duplicate subset labels");
        return;
    }
    for (std::size_t v = 0; v < m_; ++v) {
        if (below_[v].test(v)) throw InvalidInput("order is not irreflexive at " + std::to_string(v));
        if (below_[v].intersects(above_[v])) throw InvalidInput("order is not antisymmetric at " + std::to_string(v));
        below_[v].for_each([&](std::size_t u) {
            if (!above_[u].test(v)) throw InvalidInput("below/above rows disagree");
            if (!below_[u].is_subset_of(below_[v])) throw InvalidInput("order is not transitive");
        });
    }
}

Poset antichain_poset(std::size_t n) { return Poset(n); }

Poset chain_poset(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i + 1 < m; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relation(m, rel);
}

namespace {

std::vector<std::size_t> linear_extension(const Poset& p) {
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> depth(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) depth[v] = p.below(v).count();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
    return order;
}

/// Include/exclude search along a linear extension: an element may join the
/// current downset only once all its predecessors have. Every downset is
/// reached by exactly one path, so no deduplication is needed.
template <typename Emit>
void for_each_ideal(const Poset& p, Emit&& emit) {
    const std::size_t m = p.size();
    const auto order = linear_extension(p);
    const std::size_t stride = SubsetLabels::stride_for(m);

    if (stride == 1) {
        std::vector<std::uint64_t> preds(m);
        for (std::size_t e = 0; e < m; ++e) preds[e] = m ? p.below(e).data()[0] : 0;
        auto dfs = [&](auto&& self, std::size_t i, std::uint64_t cur) -> void {
            if (i == m) {
                emit(&cur);
                return;
            }
            const std::size_t e = order[i];
            self(self, i + 1, cur);
            if ((preds[e] & ~cur) == 0) self(self, i + 1, cur | (std::uint64_t{1} << e));
        };
        dfs(dfs, 0, 0);
        return;
    }

    std::vector<std::uint64_t> cur(stride, 0);
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            emit(cur.data());
            return;
        }
        const std::size_t e = order[i];
        self(self, i + 1);
        const Bitset& pre = p.below(e);
        for (std::size_t w = 0; w < stride; ++w)
            if (pre.data()[w] & ~cur[w]) return;
        cur[e / 64] |= std::uint64_t{1} << (e % 64);
        self(self, i + 1);
        cur[e / 64] &= ~(std::uint64_t{1} << (e % 64));
    };
    dfs(dfs, 0);
}

bool canonical_less_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t stride) {
    std::size_t ca = 0, cb = 0;
    for (std::size_t w = 0; w < stride; ++w) {
        ca += static_cast<std::size_t>(std::popcount(a[w]));
        cb += static_cast<std::size_t>(std::popcount(b[w]));
    }
    if (ca != cb) return ca < cb;
    for (std::size_t w = 0; w < stride; ++w) {
        std::uint64_t diff = a[w] ^ b[w];
        if (diff != 0) return (a[w] & diff & (~diff + 1)) != 0;
    }
    return false;
}

}  // namespace

std::size_t count_ideals(const Poset& p, std::size_t budget) {
    if (!p.dense()) throw SizeBudgetExceeded("ideal enumeration over a label-backed poset", p.size(), kDenseLimit);
    std::size_t count = 0;
    for_each_ideal(p, [&](const std::uint64_t*) {
        if (++count > budget) throw SizeBudgetExceeded("ideal enumeration", count, budget);
    });
    return count;
}

Poset ideal_lattice(const Poset& p, std::size_t budget) {
    if (!p.dense()) throw SizeBudgetExceeded("ideal enumeration over a label-backed poset", p.size(), kDenseLimit);
    const std::size_t stride = SubsetLabels::stride_for(p.size());
    std::vector<std::uint64_t> words;
    std::size_t count = 0;
    for_each_ideal(p, [&](const std::uint64_t* ideal) {
        if (++count > budget) throw SizeBudgetExceeded("ideal enumeration", count, budget);
        words.insert(words.end(), ideal, ideal + stride);
    });

    if (stride == 1) {
        std::sort(words.begin(), words.end(), canonical_less);
    } else {
        std::vector<std::size_t> idx(count);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return canonical_less_words(&words[a * stride], &words[b * stride], stride);
        });
        std::vector<std::uint64_t> sorted;
        sorted.reserve(words.size());
        for (auto i : idx) sorted.insert(sorted.end(), words.begin() + i * stride, words.begin() + (i + 1) * stride);
        words = std::move(sorted);
    }
    return Poset::from_subsets(SubsetLabels(p.size(), std::move(words)));
}

Poset iterated_ideal_lattice(std::size_t n, std::size_t k, std::size_t budget) {
    Poset p = antichain_poset(n);
    for (std::size_t i = 0; i < k; ++i) p = ideal_lattice(p, budget);
    return p;
}

std::vector<std::size_t> level_sizes(const Poset& lattice) {
    const auto& labels = lattice.labels();
    std::vector<std::size_t> sizes(labels.universe() + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) ++sizes[labels.cardinality(i)];
    return sizes;
}

SpernerResult sperner_check(const Poset& lattice) {
    const auto sizes = level_sizes(lattice);
    SpernerResult r;
    r.width = width(lattice).width();
    for (std::size_t l = 0; l < sizes.size(); ++l) {
        if (sizes[l] == r.width) {
            r.sperner = true;
            r.level = l;
            break;
        }
    }
    return r;
}

std::size_t dedekind(std::size_t n, std::size_t budget) {
    return count_ideals(ideal_lattice(antichain_poset(n), budget), budget);
}

Digraph nondomination(const Poset& p) {
    const std::size_t m = p.size();
    Digraph g(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            if (u != v && !p.less(v, u)) g.add_arc(u, v);
    if (p.has_labels()) {
        std::vector<VertexLabel> labels;
        labels.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::string s = "{";
            for (auto e : p.labels().to_bitset(i).to_indices()) s += (s.size() > 1 ? "," : "") + std::to_string(e);
            labels.emplace_back(s + "}");
        }
        g.set_labels(std::move(labels));
    }
    return g;
}

}  // namespace arcgraph
