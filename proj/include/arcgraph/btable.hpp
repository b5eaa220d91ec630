#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "arcgraph/poset.hpp"

namespace arcgraph {

/// Persistent cache of b(n,k) = width of I^k(K̄_n).
///
/// File format: {"entries":[{"n":int,"k":int,"b":int},...]}. All access is
/// serialised through an internal mutex, so one table may be shared between
/// threads; lookups see either the value before or after a concurrent put.
class BTable {
  public:
    struct Entry {
        std::size_t n;
        std::size_t k;
        std::size_t b;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    BTable() = default;
    BTable(const BTable&) = delete;
    BTable& operator=(const BTable&) = delete;

    /// Missing file gives an empty table; malformed content throws InvalidInput.
    static std::unique_ptr<BTable> load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    [[nodiscard]] std::optional<std::size_t> get(std::size_t n, std::size_t k) const;
    /// Records b(n,k); throws CacheMismatch if a different value is present.
    void put(std::size_t n, std::size_t k, std::size_t b);
    [[nodiscard]] std::vector<Entry> entries() const;

  private:
    mutable std::mutex mutex_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> values_;
};

struct BValueOptions {
    std::size_t budget = kDefaultBudget;
    BTable* table = nullptr;
    /// Recompute even when cached; the result is still checked against the cache.
    bool use_cache = true;
};

/// Width of I^k(K̄_n), consulting and updating the table when one is given.
std::size_t b_value(std::size_t n, std::size_t k, const BValueOptions& options = {});

}  // namespace arcgraph
