#include "arcgraph/btable.hpp"

#include <fstream>
#include <memory>

#include <nlohmann/json.hpp>

#include "arcgraph/errors.hpp"

namespace arcgraph {

std::unique_ptr<BTable> BTable::load(const std::filesystem::path& path) {
    auto table = std::make_unique<BTable>();
    std::ifstream in(path);
    if (!in) return table;
    try {
        const auto doc = nlohmann::json::parse(in);
        for (const auto& e : doc.at("entries"))
            table->put(e.at("n").get<std::size_t>(), e.at("k").get<std::size_t>(), e.at("b").get<std::size_t>());
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput("malformed b-table " + path.string() + ": " + ex.what());
    } catch (const CacheMismatch& ex) {
        throw InvalidInput("b-table " + path.string() + " has conflicting entries: " + ex.what());
    }
    return table;
}

void BTable::save(const std::filesystem::path& path) const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : this->entries()) entries.push_back({{"n", e.n}, {"k", e.k}, {"b", e.b}});
    const nlohmann::json doc{{"entries", entries}};
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InvalidInput("cannot write b-table " + tmp);
        out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<std::size_t> BTable::get(std::size_t n, std::size_t k) const {
    std::lock_guard lock(mutex_);
    auto it = values_.find({n, k});
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void BTable::put(std::size_t n, std::size_t k, std::size_t b) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = values_.emplace(std::pair{n, k}, b);
    if (!inserted && it->second != b)
        throw CacheMismatch("b(" + std::to_string(n) + "," + std::to_string(k) + "): cached " +
                            std::to_string(it->second) + ", computed " + std::to_string(b));
}

std::vector<BTable::Entry> BTable::entries() const {
    std::lock_guard lock(mutex_);
    std::vector<Entry> out;
    out.reserve(values_.size());
    for (const auto& [key, b] : values_) out.push_back({key.first, key.second, b});
    return out;
}

std::size_t b_value(std::size_t n, std::size_t k, const BValueOptions& options) {
    if (k == 0) throw InvalidInput("b(n,k) needs k >= 1");
    if (options.table && options.use_cache)
        if (auto cached = options.table->get(n, k)) return *cached;
    const std::size_t b = width(iterated_ideal_lattice(n, k, options.budget)).width();
    if (options.table) options.table->put(n, k, b);
    return b;
}

}  // namespace arcgraph
