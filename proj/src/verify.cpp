#include "arcgraph/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "arcgraph/coloring.hpp"
#include "arcgraph/errors.hpp"

namespace arcgraph {

namespace {

std::size_t central_binomial(std::size_t n) {
    std::size_t r = 1;
    const std::size_t k = n / 2;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

bool consistent(const VerificationReport& r) {
    if (!r.direct || !r.formula) return false;
    if (r.relation == Relation::equal) return *r.direct == *r.formula;
    return r.lower_bound && *r.lower_bound <= *r.direct && *r.direct <= *r.formula;
}

std::size_t chi_via_formula(std::size_t chi_g, std::size_t k, const VerifyOptions& options) {
    if (k == 0) throw InvalidInput("chi_via_formula needs k >= 1");
    if (chi_g <= 1) return chi_g;  // b(0,k) = 1
    for (std::size_t n = 1;; ++n) {
        std::size_t b = 0;
        try {
            b = b_value(n, k, {options.budget, options.table, options.use_cache});
        } catch (const SizeBudgetExceeded& e) {
            throw TableIncomplete("b(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") is needed but exceeds the budget: " + e.what());
        }
        if (chi_g <= b) return n;
    }
}

VerificationReport verify_theorem3(const Digraph& g, std::size_t k, const VerifyOptions& options,
                                   std::string instance) {
    if (!g.is_symmetric()) throw NotSymmetric("the chromatic formula applies to undirected (symmetric) inputs only");
    if (k == 0) throw InvalidInput("verify_theorem3 needs k >= 1");
    Stopwatch clock;
    VerificationReport r;
    r.instance = std::move(instance);
    r.check = "chromatic_formula";
    r.k = k;
    r.relation = Relation::equal;

    const std::size_t chi_g = chromatic_number(g);
    const Digraph iterated = iterated_arc_graph(g, k);
    if (iterated.vertex_count() > options.budget)
        throw SizeBudgetExceeded("iterated arc graph", iterated.vertex_count(), options.budget);
    r.direct = chromatic_number(iterated);
    r.formula = chi_via_formula(chi_g, k, options);
    r.agreement = consistent(r);
    r.seconds = clock.seconds();
    return r;
}

VerificationReport verify_eh(const Digraph& g, std::string instance) {
    Stopwatch clock;
    VerificationReport r;
    r.instance = std::move(instance);
    r.check = "arc_graph_bounds";
    r.k = 1;
    r.relation = Relation::within_bounds;

    const std::size_t chi_g = chromatic_number(g);
    r.direct = chromatic_number(arc_graph(g));
    std::size_t lower = 0;
    while ((std::size_t{1} << lower) < chi_g) ++lower;
    std::size_t upper = 0;
    while (central_binomial(upper) < chi_g) ++upper;
    r.lower_bound = lower;
    r.formula = upper;
    r.agreement = consistent(r);
    r.seconds = clock.seconds();
    return r;
}

std::size_t max_tt(std::size_t n, std::size_t k, std::size_t m_cap, std::size_t budget) {
    std::size_t best = 0;
    for (std::size_t m = 1; m <= m_cap; ++m) {
        const Digraph d = iterated_arc_graph(generate(GraphKind::transitive_tournament, m), k);
        if (d.vertex_count() > budget) throw SizeBudgetExceeded("max_tt iterated arc graph", d.vertex_count(), budget);
        if (!k_colorable(d, n)) break;  // TT_m embeds in TT_{m+1}, so failures persist
        best = m;
    }
    return best;
}

std::vector<NamedGraph> default_corpus() {
    std::vector<NamedGraph> corpus;
    for (std::size_t n = 2; n <= 6; ++n) corpus.push_back({"K" + std::to_string(n), generate(GraphKind::complete, n)});
    for (std::size_t n : {5, 7, 9}) corpus.push_back({"C" + std::to_string(n), generate(GraphKind::undirected_cycle, n)});
    corpus.push_back({"TT3", generate(GraphKind::transitive_tournament, 3)});
    corpus.push_back({"TT4", generate(GraphKind::transitive_tournament, 4)});
    corpus.push_back({"cyclic_triangle", generate(GraphKind::cyclic_triangle, 3)});
    return corpus;
}

std::vector<NamedGraph> named_corpus(const std::string& name) {
    auto pick = [](std::initializer_list<const char*> names) {
        std::vector<NamedGraph> out;
        for (auto& g : default_corpus())
            for (const char* n : names)
                if (g.name == n) out.push_back(g);
        return out;
    };
    if (name == "default") return default_corpus();
    if (name == "small") return pick({"K2", "K3", "C5"});
    if (name == "complete") return pick({"K2", "K3", "K4", "K5", "K6"});
    if (name == "cycles") return pick({"C5", "C7", "C9"});
    if (name == "directed") return pick({"TT3", "TT4", "cyclic_triangle"});
    throw InvalidInput("unknown corpus '" + name + "'");
}

std::vector<VerificationReport> run_corpus(const std::vector<std::size_t>& k_values,
                                           const std::vector<NamedGraph>& corpus, const CorpusOptions& options) {
    struct Job {
        const NamedGraph* member;
        std::size_t k;  // 0 marks the arc-graph bounds check
    };
    std::vector<Job> jobs;
    for (const auto& member : corpus) {
        const Digraph& g = member.graph;
        if (g.has_loops()) continue;
        if (g.is_symmetric() && (options.include_trivial || chromatic_number(g) > 1))
            for (auto k : k_values) jobs.push_back({&member, k});
        if (options.run_eh) jobs.push_back({&member, 0});
    }

    std::vector<VerificationReport> reports(jobs.size());
    auto evaluate = [&](std::size_t i) {
        const Job& job = jobs[i];
        try {
            reports[i] = job.k == 0 ? verify_eh(job.member->graph, job.member->name)
                                    : verify_theorem3(job.member->graph, job.k, options.verify, job.member->name);
        } catch (const std::exception& e) {
            auto& r = reports[i];
            r.instance = job.member->name;
            r.check = job.k == 0 ? "arc_graph_bounds" : "chromatic_formula";
            r.k = job.k == 0 ? 1 : job.k;
            r.relation = job.k == 0 ? Relation::within_bounds : Relation::equal;
            r.agreement = false;
            r.error = e.what();
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, jobs.size()));
    if (threads == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) evaluate(i);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) evaluate(i);
        });
    pool.clear();
    return reports;
}

}  // namespace arcgraph
