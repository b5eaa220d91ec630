#include <algorithm>
#include <deque>
#include <limits>

#include "arcgraph/errors.hpp"
#include "arcgraph/poset.hpp"

namespace arcgraph {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Maximum matching in the bipartite graph with an edge u -> v whenever
/// u < v. Left copy of u is matched to the element directly after u in its
/// chain; right copy of v to the element directly before it.
class ComparabilityMatching {
  public:
    explicit ComparabilityMatching(const Poset& p)
        : p_{p}, m_{p.size()}, match_left_(m_, kNone), match_right_(m_, kNone), dist_(m_, kNone), alive_(m_) {}

    void run() {
        greedy();
        while (bfs()) {
            for (std::size_t u = 0; u < m_; ++u)
                if (match_left_[u] == kNone) augment(u);
        }
    }

    [[nodiscard]] std::size_t size() const {
        return static_cast<std::size_t>(std::count_if(match_left_.begin(), match_left_.end(), [](auto v) { return v != kNone; }));
    }

    /// König construction: left vertices reachable from free left vertices
    /// along alternating paths whose right copy is unreached.
    std::vector<std::size_t> antichain() const {
        Bitset left_seen(m_), right_seen(m_);
        std::deque<std::size_t> queue;
        for (std::size_t u = 0; u < m_; ++u)
            if (match_left_[u] == kNone) {
                left_seen.set(u);
                queue.push_back(u);
            }
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            Bitset fresh = p_.above(u);
            fresh.subtract(right_seen);
            fresh.for_each([&](std::size_t v) {
                right_seen.set(v);
                const std::size_t w = match_right_[v];
                if (w != kNone && !left_seen.test(w)) {
                    left_seen.set(w);
                    queue.push_back(w);
                }
            });
        }
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < m_; ++x)
            if (left_seen.test(x) && !right_seen.test(x)) out.push_back(x);
        return out;
    }

    std::vector<std::vector<std::size_t>> chains() const {
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t start = 0; start < m_; ++start) {
            if (match_right_[start] != kNone) continue;
            std::vector<std::size_t> chain;
            for (std::size_t x = start; x != kNone; x = match_left_[x]) chain.push_back(x);
            out.push_back(std::move(chain));
        }
        return out;
    }

  private:
    void greedy() {
        for (std::size_t u = 0; u < m_; ++u) {
            Bitset free = p_.above(u);
            for (std::size_t v = free.find_first(); v < m_; v = free.find_next(v + 1)) {
                if (match_right_[v] == kNone) {
                    match_left_[u] = v;
                    match_right_[v] = u;
                    break;
                }
            }
        }
    }

    // Layers left vertices by alternating distance from the free ones and
    // marks the right vertices usable by this phase in alive_.
    bool bfs() {
        std::fill(dist_.begin(), dist_.end(), kNone);
        alive_.clear();
        std::deque<std::size_t> queue;
        for (std::size_t u = 0; u < m_; ++u)
            if (match_left_[u] == kNone) {
                dist_[u] = 0;
                queue.push_back(u);
            }
        bool found = false;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            Bitset fresh = p_.above(u);
            fresh.subtract(alive_);
            fresh.for_each([&](std::size_t v) {
                alive_.set(v);
                const std::size_t w = match_right_[v];
                if (w == kNone) {
                    found = true;
                } else if (dist_[w] == kNone) {
                    dist_[w] = dist_[u] + 1;
                    queue.push_back(w);
                }
            });
        }
        return found;
    }

    bool augment(std::size_t u) {
        const Bitset& row = p_.above(u);
        for (std::size_t wi = 0; wi < row.word_count(); ++wi) {
            std::uint64_t bits = row.data()[wi] & alive_.data()[wi];
            while (bits != 0) {
                const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (!alive_.test(v)) continue;
                const std::size_t w = match_right_[v];
                // only step to the next layer; v dies once explored from there
                if (w != kNone && dist_[w] != dist_[u] + 1) continue;
                alive_.reset(v);
                if (w == kNone || augment(w)) {
                    match_left_[u] = v;
                    match_right_[v] = u;
                    return true;
                }
            }
        }
        return false;
    }

    const Poset& p_;
    std::size_t m_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
    Bitset alive_;
};

}  // namespace

WidthCertificate width(const Poset& p, bool force) {
    if (p.size() > kWidthLimit && !force) throw SizeBudgetExceeded("width", p.size(), kWidthLimit);
    if (!p.dense()) throw SizeBudgetExceeded("width needs explicit relation rows", p.size(), kDenseLimit);

    ComparabilityMatching matching(p);
    matching.run();
    WidthCertificate cert{matching.antichain(), matching.chains()};
    if (cert.antichain.size() != cert.chains.size())
        throw Error("Dilworth certificate mismatch: antichain " + std::to_string(cert.antichain.size()) + " vs " +
                    std::to_string(cert.chains.size()) + " chains");
    return cert;
}

bool is_valid_certificate(const Poset& p, const WidthCertificate& cert) {
    const std::size_t m = p.size();
    if (cert.antichain.size() != cert.chains.size()) return false;
    for (std::size_t i = 0; i < cert.antichain.size(); ++i) {
        if (cert.antichain[i] >= m) return false;
        for (std::size_t j = i + 1; j < cert.antichain.size(); ++j)
            if (cert.antichain[i] == cert.antichain[j] || p.comparable(cert.antichain[i], cert.antichain[j])) return false;
    }
    std::vector<bool> covered(m, false);
    for (const auto& chain : cert.chains) {
        if (chain.empty()) return false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i] >= m || covered[chain[i]]) return false;
            covered[chain[i]] = true;
            if (i > 0 && !p.less(chain[i - 1], chain[i])) return false;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace arcgraph
