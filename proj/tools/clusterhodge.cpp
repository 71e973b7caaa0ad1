#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterhodge/counts.hpp"
#include "clusterhodge/error.hpp"
#include "clusterhodge/filtration.hpp"
#include "clusterhodge/gysin.hpp"
#include "clusterhodge/io.hpp"
#include "clusterhodge/topology.hpp"

using namespace clusterhodge;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
    std::string input;
    std::string graph;
    std::string format = "text";
    std::optional<int> s;
    std::optional<std::uint64_t> q;
    int max_page = -1;
    int jobs = 0;  // 0: take CLUSTERHODGE_JOBS, else 1
    std::uint64_t seed = 1;
};

int resolve_jobs(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("CLUSTERHODGE_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
        throw Error(ErrorKind::InvalidArgument, "CLUSTERHODGE_JOBS must be a positive integer");
    }
    return 1;
}

ExtendedExchangeMatrix load_matrix(const RunConfig& cfg) {
    if (cfg.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required");
    return io::read_matrix_file(cfg.input);
}

// Principal companion of the top block; the input itself when already principal.
ExtendedExchangeMatrix principal_input(const RunConfig& cfg) {
    const ExtendedExchangeMatrix b = load_matrix(cfg);
    if (b.is_principal()) return b;
    std::cerr << "note: using principal coefficients on the mutable block\n";
    return ExtendedExchangeMatrix::principal(b.top_block());
}

void check_s(const RunConfig& cfg, const ExtendedExchangeMatrix& b) {
    if (cfg.s && (*cfg.s < 0 || *cfg.s > b.row_count()))
        throw Error(ErrorKind::InvalidArgument, "--s must lie in 0.." + std::to_string(b.row_count()));
}

int cmd_hodge(const RunConfig& cfg) {
    const ExtendedExchangeMatrix b = load_matrix(cfg);
    const HodgeTable t = hodge_table(b, HodgeOptions{resolve_jobs(cfg.jobs)});
    if (cfg.format == "json") std::cout << io::hodge_to_json(t);
    else if (cfg.format == "tsv") std::cout << io::hodge_to_tsv(t);
    else std::cout << io::hodge_to_text(t);
    return 0;
}

int cmd_pointcount(const RunConfig& cfg) {
    const ExtendedExchangeMatrix b = load_matrix(cfg);
    const PointCount pc = point_count_poly(b);
    std::optional<Integer> counted;
    if (cfg.q) {
        const Integer two_n = 2 * pc.modulus;
        if (Integer(static_cast<unsigned long>(*cfg.q - 1)) % two_n != 0)
            std::cerr << "note: q is not 1 mod " << two_n.get_str() << ", the polynomial need not apply\n";
        counted = brute_force_count(b, *cfg.q, resolve_jobs(cfg.jobs));
    }
    if (cfg.format == "json") {
        auto j = nlohmann::json::parse(io::pointcount_to_json(pc));
        if (counted) {
            j["q"] = *cfg.q;
            j["brute_force"] = counted->get_str();
            j["predicted"] = pc.polynomial(Integer(static_cast<unsigned long>(*cfg.q))).get_str();
        }
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "tsv") {
        std::cout << "degree\tcoefficient\n";
        for (std::size_t i = 0; i < pc.polynomial.coefficients().size(); ++i)
            std::cout << i << '\t' << pc.polynomial.coefficients()[i].get_str() << '\n';
        if (counted) std::cout << "# q=" << *cfg.q << " brute_force=" << counted->get_str() << '\n';
    } else {
        std::cout << pc.polynomial.to_string() << '\n';
        if (counted)
            std::cout << "q = " << *cfg.q << ": brute force " << counted->get_str() << ", polynomial "
                      << pc.polynomial(Integer(static_cast<unsigned long>(*cfg.q))).get_str() << '\n';
    }
    return 0;
}

void print_pages(const RunConfig& cfg, const std::vector<SpectralSequencePage>& pages) {
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pages) arr.push_back(nlohmann::json::parse(io::page_to_json(p)));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    std::cout << "r\te\tf\ts\tdim\n";
    for (const auto& p : pages) {
        const std::string tsv = io::page_to_tsv(p);
        std::cout << tsv.substr(tsv.find('\n') + 1);
    }
}

int cmd_e1(const RunConfig& cfg) {
    const ExtendedExchangeMatrix b = principal_input(cfg);
    check_s(cfg, b);
    std::vector<SpectralSequencePage> pages;
    const int lo = cfg.s ? *cfg.s : 0;
    const int hi = cfg.s ? *cfg.s : b.row_count();
    for (int s = lo; s <= hi; ++s) pages.push_back(e1_page(b, s));
    print_pages(cfg, pages);
    return 0;
}

int cmd_ss(const RunConfig& cfg) {
    const ExtendedExchangeMatrix b = principal_input(cfg);
    check_s(cfg, b);
    const int lo = cfg.s ? *cfg.s : 0;
    const int hi = cfg.s ? *cfg.s : b.row_count();
    nlohmann::json all = nlohmann::json::array();
    if (cfg.format != "json") std::cout << "r\te\tf\ts\tdim\n";
    for (int s = lo; s <= hi; ++s) {
        const SpectralSequence ss = spectral_sequence(build_filtered(b, s), s, cfg.max_page);
        if (cfg.format == "json") {
            auto j = nlohmann::json::parse(io::pages_to_json(ss));
            j["s"] = s;
            all.push_back(j);
        } else {
            const std::string tsv = io::pages_to_tsv(ss);
            std::cout << tsv.substr(tsv.find('\n') + 1);
            if (cfg.format == "text")
                std::cout << "# s=" << s << " stabilization_page=" << ss.stabilization_page
                          << " observed_collapse=" << ss.observed_collapse << '\n';
        }
    }
    if (cfg.format == "json") std::cout << all.dump(2) << "\n";
    return 0;
}

int cmd_indcomplex(const RunConfig& cfg) {
    if (cfg.graph.empty()) throw Error(ErrorKind::InvalidArgument, "--graph is required");
    const Graph g = io::read_graph_file(cfg.graph);
    const SimplicialComplex k = independence_complex(g);
    const ReducedCohomology h = reduced_cohomology(k);
    std::optional<HomotopyType> type;
    if (g.is_forest()) type = forest_homotopy(g);
    if (cfg.format == "json") {
        nlohmann::json dims = nlohmann::json::object();
        for (const auto& [r, d] : h.dims) dims[std::to_string(r)] = d;
        nlohmann::json j{{"vertices", g.vertex_count()}, {"faces", k.faces.size()}, {"reduced_cohomology", dims}};
        if (type) j["homotopy_type"] = type->to_string();
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "tsv") {
        std::cout << "degree\tdim\n";
        for (const auto& [r, d] : h.dims) std::cout << r << '\t' << d << '\n';
    } else {
        std::cout << "H~: " << h.to_string() << '\n';
        if (type) std::cout << "homotopy type: " << type->to_string() << '\n';
    }
    return 0;
}

// Seeded random acyclic matrix: orientation from a random vertex order, n, m in 1..4.
ExtendedExchangeMatrix random_matrix(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = std::uniform_int_distribution<int>(n, 4)(rng);
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n + m), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    std::uniform_int_distribution<int> coin(0, 1), mag(1, 2), entry(-1, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) {
                const std::int64_t v = mag(rng);
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
            }
    for (int r = n; r < n + m; ++r)
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = (r - n == j) ? 1 : entry(rng);
    return ExtendedExchangeMatrix::validate(rows, n, m);
}

int cmd_check(const RunConfig& cfg) {
    ExtendedExchangeMatrix b;
    if (cfg.input.empty()) {
        b = random_matrix(cfg.seed);
        std::cerr << "seed " << cfg.seed << ", matrix:\n" << b.to_string();
    } else {
        b = load_matrix(cfg);
    }
    SuiteOptions opt;
    opt.jobs = resolve_jobs(cfg.jobs);
    const ConsistencyReport rep = consistency_suite(b, opt);
    if (cfg.format == "json") std::cout << io::report_to_json(rep);
    else std::cout << io::report_to_text(rep);
    return rep.passed() ? 0 : kExitCheckFailed;
}

void diagnose(const std::string& kind, const std::string& detail) {
    std::cerr << nlohmann::json{{"error", kind}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed Hodge tables, point counts and spectral sequences of acyclic cluster varieties"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_option("--jobs", cfg.jobs, "Worker threads (fallback: CLUSTERHODGE_JOBS)")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Seed for randomized runs");
    };
    auto add_matrix = [&](CLI::App* sub) { sub->add_option("--input", cfg.input, "Matrix file (text or JSON)"); };

    CLI::App* hodge = app.add_subcommand("hodge", "Hodge table dims(k, s)");
    add_matrix(hodge);
    add_common(hodge);
    CLI::App* pointcount = app.add_subcommand("pointcount", "Point-count polynomial, optionally checked at --q");
    add_matrix(pointcount);
    add_common(pointcount);
    pointcount->add_option("--q", cfg.q, "Prime for a brute-force count");
    CLI::App* e1 = app.add_subcommand("e1", "E1 page from independence complexes");
    add_matrix(e1);
    add_common(e1);
    e1->add_option("--s", cfg.s, "Weight");
    CLI::App* ss = app.add_subcommand("ss", "Pages of the filtration spectral sequence");
    add_matrix(ss);
    add_common(ss);
    ss->add_option("--s", cfg.s, "Weight");
    ss->add_option("--max-page", cfg.max_page, "Last page to compute")->check(CLI::PositiveNumber);
    CLI::App* ind = app.add_subcommand("indcomplex", "Reduced cohomology of an independence complex");
    ind->add_option("--graph", cfg.graph, "Graph file");
    add_common(ind);
    CLI::App* check = app.add_subcommand("check", "Consistency suite; random seeded input without --input");
    add_matrix(check);
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (cfg.q && !is_prime(*cfg.q)) throw Error(ErrorKind::InvalidArgument, "--q must be prime");
        if (*hodge) return cmd_hodge(cfg);
        if (*pointcount) return cmd_pointcount(cfg);
        if (*e1) return cmd_e1(cfg);
        if (*ss) return cmd_ss(cfg);
        if (*ind) return cmd_indcomplex(cfg);
        if (*check) return cmd_check(cfg);
    } catch (const Error& e) {
        diagnose(to_string(e.kind()), e.detail());
        return kExitInvalid;
    } catch (const std::exception& e) {
        diagnose("InternalError", e.what());
        return kExitInvalid;
    }
    return kExitInvalid;
}
