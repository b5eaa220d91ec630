#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "arcgraph/adjoint.hpp"
#include "arcgraph/btable.hpp"
#include "arcgraph/coloring.hpp"
#include "arcgraph/errors.hpp"
#include "arcgraph/io.hpp"
#include "arcgraph/verify.hpp"

namespace arcgraph::cli {

namespace {

using io::json;

struct Flags {
    std::size_t n = 0;
    std::size_t k = 1;
    std::vector<std::size_t> k_list;
    std::string kind;
    std::string out;
    std::string table = "btable.json";
    std::size_t budget = kDefaultBudget;
    bool no_cache = false;
    bool extended = false;
    bool symmetric = false;
    bool force = false;
    std::size_t cap = 0;
    std::size_t threads = 1;
    std::string corpus = "default";
    std::string poset;
    std::vector<std::string> inputs;
};

class Emitter {
  public:
    Emitter(const std::string& path, std::ostream& fallback) : path_{path}, fallback_{fallback} {}
    void emit(const std::string& text) {
        if (path_.empty()) {
            fallback_ << text;
            if (!text.empty() && text.back() != '\n') fallback_ << '\n';
        } else {
            io::write_text(path_, text.empty() || text.back() == '\n' ? text : text + '\n');
        }
    }
    [[nodiscard]] bool to_file() const { return !path_.empty(); }

  private:
    std::string path_;
    std::ostream& fallback_;
};

Digraph input_graph(const Flags& f, std::size_t index = 0) {
    if (f.inputs.size() <= index) throw InvalidInput("missing input digraph file");
    return io::read_digraph(f.inputs[index]);
}

/// Poset from --poset, or I^k(K̄_n) from --n/--k.
Poset input_poset(const Flags& f, bool lattice_from_flags) {
    if (!f.poset.empty()) return io::read_poset(f.poset);
    if (!f.inputs.empty()) return io::read_poset(f.inputs.front());
    if (lattice_from_flags) return iterated_ideal_lattice(f.n, f.k, f.budget);
    throw InvalidInput("missing input poset");
}

std::size_t default_cap(std::size_t k) {
    // keep δ^k(TT_m), which has C(m, k+1) vertices, under 2000 vertices
    std::size_t m = k + 1;
    auto walks = [&](std::size_t mm) {
        long double c = 1;
        for (std::size_t i = 1; i <= k + 1; ++i) c = c * static_cast<long double>(mm - k - 1 + i) / i;
        return c;
    };
    while (walks(m + 1) < 2000) ++m;
    return m;
}

std::string report_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "instance" << std::setw(18) << "check" << std::setw(4) << "k" << std::setw(8)
       << "direct" << std::setw(10) << "formula" << std::setw(6) << "ok" << "seconds\n";
    for (const auto& r : reports) {
        std::string formula = r.formula ? std::to_string(*r.formula) : "-";
        if (r.lower_bound) formula = std::to_string(*r.lower_bound) + ".." + formula;
        os << std::setw(18) << r.instance << std::setw(18) << r.check << std::setw(4) << r.k << std::setw(8)
           << (r.direct ? std::to_string(*r.direct) : "-") << std::setw(10) << formula << std::setw(6)
           << (r.agreement ? "yes" : "NO") << std::fixed << std::setprecision(3) << r.seconds;
        if (!r.error.empty()) os << "  error: " << r.error;
        os << '\n';
    }
    return os.str();
}

int run(const std::string& command, const Flags& f, std::ostream& out, std::ostream& err) {
    Emitter emitter(f.out, out);
    auto emit_json = [&](const json& j) { emitter.emit(io::canonical(j)); };

    if (command == "gen") {
        emit_json(io::to_json(generate(parse_graph_kind(f.kind), f.n)));
    } else if (command == "delta") {
        emit_json(io::to_json(iterated_arc_graph(input_graph(f), f.k)));
    } else if (command == "chi") {
        emit_json(io::to_json(optimal_coloring(input_graph(f))));
    } else if (command == "hom") {
        const auto g = input_graph(f, 0);
        const auto h = input_graph(f, 1);
        const auto phi = find_homomorphism(g, h);
        json j{{"exists", phi.has_value()}};
        if (phi) j["assignment"] = phi->assignment;
        emit_json(j);
    } else if (command == "width") {
        const Poset p = input_poset(f, true);
        emit_json(io::to_json(width(p, f.force)));
    } else if (command == "ideals") {
        const Poset lattice = f.poset.empty() && f.inputs.empty() ? iterated_ideal_lattice(f.n, f.k, f.budget)
                                                                  : ideal_lattice(input_poset(f, false), f.budget);
        json j = io::to_json(lattice);
        j["levels"] = level_sizes(lattice);
        emit_json(j);
    } else if (command == "bnk") {
        auto table = BTable::load(f.table);
        const auto b = b_value(f.n, f.k, {f.budget, table.get(), !f.no_cache});
        table->save(f.table);
        emitter.emit(std::to_string(b));
    } else if (command == "dedekind") {
        emitter.emit(std::to_string(dedekind(f.n, f.budget)));
    } else if (command == "deltar") {
        emit_json(io::to_json(iterated_delta_right(input_graph(f), f.k, f.budget)));
    } else if (command == "core") {
        if (!f.poset.empty()) {
            const bool holds = core_equals_nondomination(io::read_poset(f.poset), f.budget);
            emitter.emit(holds ? "true" : "false");
            return holds ? kOk : kDisagreement;
        }
        const auto tc = tight_core(input_graph(f), f.budget);
        emit_json({{"core", io::to_json(tc.core)},
                   {"core_vertices", tc.core_vertices},
                   {"retraction", tc.retraction.assignment}});
    } else if (command == "verify") {
        std::vector<NamedGraph> corpus;
        if (std::ifstream probe(f.corpus); probe) {
            const json doc = json::parse(probe);
            for (const auto& entry : doc.at("graphs"))
                corpus.push_back({entry.at("name").get<std::string>(), io::digraph_from_json(entry.at("graph"))});
        } else {
            corpus = named_corpus(f.corpus);
        }
        std::vector<std::size_t> ks = f.k_list.empty() ? std::vector<std::size_t>{1, 2} : f.k_list;
        auto table = BTable::load(f.table);
        CorpusOptions options;
        options.verify = {f.budget, table.get(), !f.no_cache};
        options.threads = f.threads;
        auto reports = run_corpus(ks, corpus, options);
        if (f.extended) {
            // k = 3 is only cheap for graphs with few vertices or small chromatic number
            std::vector<NamedGraph> small;
            for (const auto& g : corpus)
                if (g.graph.is_symmetric() && !g.graph.has_loops() &&
                    (g.graph.vertex_count() <= 3 || chromatic_number(g.graph) <= 3))
                    small.push_back(g);
            options.run_eh = false;
            auto more = run_corpus({3}, small, options);
            reports.insert(reports.end(), more.begin(), more.end());
        }
        table->save(f.table);

        std::string lines;
        for (const auto& r : reports) lines += io::canonical(io::to_json(r)) + '\n';
        emitter.emit(lines);
        (emitter.to_file() ? out : err) << report_table(reports);
        const bool all_agree = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.agreement; });
        return all_agree ? kOk : kDisagreement;
    } else if (command == "max-tt") {
        std::size_t cap = f.cap ? f.cap : default_cap(f.k);
        if (f.extended && !f.cap) cap = std::max<std::size_t>(cap, 21);
        emitter.emit(std::to_string(max_tt(f.n, f.k, cap, f.budget)));
    } else if (command == "export-dot") {
        if (!f.inputs.empty() && f.poset.empty()) {
            emitter.emit(io::to_dot(input_graph(f), f.symmetric));
        } else {
            emitter.emit(io::hasse_dot(input_poset(f, true)));
        }
    } else {
        err << "arcgraph: unknown subcommand '" << command << "'\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arc graphs, their right adjoint, ideal lattices and exact chromatic/width solvers"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", f.out, "Write the result to this file instead of standard output");
        sub->add_option("--budget", f.budget, "Size budget for enumerations")->capture_default_str();
    };
    auto add_nk = [&](CLI::App* sub) {
        sub->add_option("--n", f.n, "Number of generators / vertices");
        sub->add_option("--k", f.k, "Iteration count")->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "Generate a standard digraph");
    gen->add_option("--kind", f.kind, "complete, complete_with_loops, tt, cyclic_triangle, directed_cycle, cycle, path, empty")
        ->required();
    gen->add_option("--n", f.n, "Vertex count")->required();
    add_common(gen);

    auto* delta = app.add_subcommand("delta", "Iterated arc graph of a digraph");
    delta->add_option("--k", f.k, "Iteration count")->capture_default_str();
    delta->add_option("graph", f.inputs, "Digraph file (JSON or edge list)")->required();
    add_common(delta);

    auto* chi = app.add_subcommand("chi", "Exact chromatic number with an optimal colouring");
    chi->add_option("graph", f.inputs, "Digraph file")->required();
    add_common(chi);

    auto* hom = app.add_subcommand("hom", "Search for a homomorphism G -> H");
    hom->add_option("graphs", f.inputs, "G and H files")->required()->expected(2);
    add_common(hom);

    auto* wid = app.add_subcommand("width", "Width certificate of a poset file or of I^k(K_n-bar)");
    add_nk(wid);
    wid->add_option("--poset", f.poset, "Poset JSON file");
    wid->add_flag("--force", f.force, "Allow posets above the width size limit");
    add_common(wid);

    auto* ideals = app.add_subcommand("ideals", "Ideal lattice of a poset file, or I^k(K_n-bar)");
    add_nk(ideals);
    ideals->add_option("--poset", f.poset, "Poset JSON file");
    add_common(ideals);

    auto* bnk = app.add_subcommand("bnk", "b(n,k): width of I^k(K_n-bar), cached in the b-table");
    add_nk(bnk);
    bnk->add_option("--table", f.table, "b-table cache file")->capture_default_str();
    bnk->add_flag("--no-cache", f.no_cache, "Recompute and cross-check cached entries");
    add_common(bnk);

    auto* ded = app.add_subcommand("dedekind", "Number of antichains of the boolean lattice on n generators");
    ded->add_option("--n", f.n, "Generators")->required();
    add_common(ded);

    auto* deltar = app.add_subcommand("deltar", "Right adjoint of the arc-graph construction");
    deltar->add_option("--k", f.k, "Iteration count")->capture_default_str();
    deltar->add_option("graph", f.inputs, "Digraph file")->required();
    add_common(deltar);

    auto* core = app.add_subcommand("core", "Tight core of delta_R(K), or check it against N(I(P)) with --poset");
    core->add_option("graph", f.inputs, "Digraph file");
    core->add_option("--poset", f.poset, "Poset JSON file");
    add_common(core);

    auto* verify = app.add_subcommand("verify", "Check the chromatic formula and arc-graph bounds over a corpus");
    verify->add_option("--k", f.k_list, "Iteration counts (default 1,2)")->delimiter(',');
    verify->add_option("--corpus", f.corpus, "default|small|complete|cycles|directed or a corpus JSON file")
        ->capture_default_str();
    verify->add_option("--table", f.table, "b-table cache file")->capture_default_str();
    verify->add_flag("--no-cache", f.no_cache, "Recompute and cross-check cached entries");
    verify->add_flag("--extended", f.extended, "Also run k = 3 on graphs with <= 3 vertices or chromatic number <= 3");
    verify->add_option("--threads", f.threads, "Worker threads")->capture_default_str();
    add_common(verify);

    auto* maxtt = app.add_subcommand("max-tt", "Largest transitive tournament whose k-th arc graph is n-colourable");
    add_nk(maxtt);
    maxtt->add_option("--cap", f.cap, "Largest tournament tried");
    maxtt->add_flag("--extended", f.extended, "Raise the default cap to 21");
    add_common(maxtt);

    auto* dot = app.add_subcommand("export-dot", "DOT for a digraph file, or the Hasse diagram of a poset / I^k(K_n-bar)");
    add_nk(dot);
    dot->add_option("graph", f.inputs, "Digraph file");
    dot->add_option("--poset", f.poset, "Poset JSON file");
    dot->add_flag("--symmetric", f.symmetric, "Draw opposite arc pairs as one undirected edge");
    add_common(dot);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, f, out, err);
    } catch (const SizeBudgetExceeded& e) {
        err << "arcgraph " << command << ": " << e.what() << '\n';
        return kBudget;
    } catch (const TableIncomplete& e) {
        err << "arcgraph " << command << ": " << e.what() << '\n';
        return kBudget;
    } catch (const CacheMismatch& e) {
        err << "arcgraph " << command << ": " << e.what() << '\n';
        return kDisagreement;
    } catch (const RetractionInvalid& e) {
        err << "arcgraph " << command << ": " << e.what() << '\n';
        return kDisagreement;
    } catch (const std::exception& e) {
        err << "arcgraph " << command << ": " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace arcgraph::cli
