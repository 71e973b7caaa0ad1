#include "clusterhodge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clusterhodge/error.hpp"

namespace clusterhodge::io {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Non-empty, non-comment lines.
std::vector<std::string> content_lines(const std::string& content) {
    std::vector<std::string> out;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<long long> integers(const std::string& line, int lineno) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long v;
    while (in >> v) out.push_back(v);
    in.clear();
    std::string rest;
    if (in >> rest) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": not an integer: " + rest);
    return out;
}

ExtendedExchangeMatrix parse_matrix_json(const std::string& content) {
    json j;
    try {
        j = json::parse(content);
        const int n = j.at("n").get<int>();
        const int m = j.at("m").get<int>();
        auto rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
        return ExtendedExchangeMatrix::validate(rows, n, m);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

json hodge_json(const HodgeTable& t) {
    json j;
    j["n"] = t.n();
    j["m"] = t.m();
    j["d"] = t.d();
    json rows = json::array();
    for (const auto& [key, dim] : t.entries()) rows.push_back({{"k", key.first}, {"s", key.second}, {"dim", dim}});
    j["hodge"] = rows;
    // Bivariate view as a dense (k, s) coefficient grid, and the first two diagonals.
    json grid = json::array();
    for (int k = 0; k <= t.d(); ++k) {
        json row = json::array();
        for (int s = 0; s <= t.d(); ++s) row.push_back(t.at(k, s));
        grid.push_back(row);
    }
    j["polynomial"] = grid;
    j["diagonal"] = json::parse(coefficients_json(t.diagonal(0)));
    j["subdiagonal"] = json::parse(coefficients_json(t.diagonal(1)));
    return j;
}

json page_json(const SpectralSequencePage& page) {
    json entries = json::array();
    for (const auto& [key, dim] : page.entries) {
        const auto [e, f, s] = key;
        entries.push_back({{"e", e}, {"f", f}, {"s", s}, {"dim", dim}});
    }
    json diffs = json::array();
    for (const auto& [key, m] : page.differentials) {
        const auto [e, f, s] = key;
        json triplets = json::array();
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& en : m.column(c)) triplets.push_back({en.index, c, en.value.get_str()});
        diffs.push_back({{"e", e}, {"f", f}, {"s", s}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", triplets}});
    }
    return {{"r", page.r}, {"entries", entries}, {"differentials", diffs}};
}

}  // namespace

ExtendedExchangeMatrix parse_matrix(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') return parse_matrix_json(content);
    const auto lines = content_lines(content);
    if (lines.empty()) throw Error(ErrorKind::ParseError, "empty matrix file");
    const auto header = integers(lines[0], 1);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw Error(ErrorKind::ParseError, "header must be \"n m\" with nonnegative integers");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto v = integers(lines[i], static_cast<int>(i + 1));
        rows.emplace_back(v.begin(), v.end());
    }
    return ExtendedExchangeMatrix::validate(rows, static_cast<int>(header[0]), static_cast<int>(header[1]));
}

ExtendedExchangeMatrix read_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

std::string matrix_to_json(const ExtendedExchangeMatrix& b) {
    return json{{"n", b.n()}, {"m", b.m()}, {"rows", b.rows()}}.dump();
}

Graph parse_graph(const std::string& content) {
    const auto lines = content_lines(content);
    if (lines.empty()) throw Error(ErrorKind::ParseError, "empty graph file");
    const auto header = integers(lines[0], 1);
    if (header.size() != 1 || header[0] < 0 || header[0] > 64)
        throw Error(ErrorKind::ParseError, "first line must be a vertex count in 0..64");
    Graph g(static_cast<int>(header[0]));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto e = integers(lines[i], static_cast<int>(i + 1));
        if (e.size() != 2) throw Error(ErrorKind::ParseError, "line " + std::to_string(i + 1) + ": expected \"u w\"");
        if (e[0] < 1 || e[1] < 1 || e[0] > header[0] || e[1] > header[0])
            throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(i + 1) + ": vertex out of range");
        if (e[0] == e[1]) throw Error(ErrorKind::ParseError, "line " + std::to_string(i + 1) + ": loop");
        g.add_edge(static_cast<int>(e[0] - 1), static_cast<int>(e[1] - 1));
    }
    return g;
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << '\n';
    for (const auto& [u, w] : g.edges()) os << u + 1 << ' ' << w + 1 << '\n';
    return os.str();
}

std::string coefficients_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) {
        if (c.fits_slong_p()) a.push_back(c.get_si());
        else a.push_back(c.get_str());
    }
    return a.dump();
}

std::string hodge_to_json(const HodgeTable& t) { return hodge_json(t).dump(2) + "\n"; }

HodgeTable hodge_from_json(const std::string& content) {
    try {
        const json j = json::parse(content);
        HodgeTable t(j.at("n").get<int>(), j.at("m").get<int>());
        if (j.at("d").get<int>() != t.d()) throw Error(ErrorKind::ParseError, "d != n + m");
        for (const auto& row : j.at("hodge")) t.add(row.at("k").get<int>(), row.at("s").get<int>(), row.at("dim").get<long>());
        return t;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string hodge_to_tsv(const HodgeTable& t) {
    std::ostringstream os;
    os << "k\ts\tdim\n";
    for (const auto& [key, dim] : t.entries()) os << key.first << '\t' << key.second << '\t' << dim << '\n';
    return os.str();
}

std::string hodge_to_text(const HodgeTable& t) {
    std::ostringstream os;
    os << "n = " << t.n() << ", m = " << t.m() << ", d = " << t.d() << "\n";
    os << "dims(k, s), rows k, columns s\n";
    os << "k\\s";
    for (int s = 0; s <= t.d(); ++s) os << '\t' << s;
    os << '\n';
    for (int k = 0; k <= t.d(); ++k) {
        os << k;
        for (int s = 0; s <= t.d(); ++s) os << '\t' << t.at(k, s);
        os << '\n';
    }
    os << "P(x, y) = " << t.polynomial().to_string() << '\n';
    os << "sum_s dims(s, s) x^s = " << t.diagonal(0).to_string("x") << '\n';
    os << "sum_s dims(s+1, s) x^s = " << t.diagonal(1).to_string("x") << '\n';
    return os.str();
}

std::string pointcount_to_json(const PointCount& pc) {
    json j;
    j["polynomial"] = pc.polynomial.to_string();
    j["coefficients"] = json::parse(coefficients_json(pc.polynomial));
    j["modulus"] = pc.modulus.get_str();
    j["weighted"] = pc.weighted;
    return j.dump(2) + "\n";
}

std::string page_to_tsv(const SpectralSequencePage& page) {
    std::ostringstream os;
    os << "r\te\tf\ts\tdim\n";
    for (const auto& [key, dim] : page.entries) {
        const auto [e, f, s] = key;
        os << page.r << '\t' << e << '\t' << f << '\t' << s << '\t' << dim << '\n';
    }
    return os.str();
}

std::string page_to_json(const SpectralSequencePage& page) { return page_json(page).dump(2) + "\n"; }

std::string pages_to_tsv(const SpectralSequence& ss) {
    std::ostringstream os;
    os << "r\te\tf\ts\tdim\n";
    for (const auto& page : ss.pages)
        for (const auto& [key, dim] : page.entries) {
            const auto [e, f, s] = key;
            os << page.r << '\t' << e << '\t' << f << '\t' << s << '\t' << dim << '\n';
        }
    return os.str();
}

std::string differentials_to_tsv(const SpectralSequence& ss) {
    std::ostringstream os;
    os << "r\te\tf\ts\trow\tcol\tvalue\n";
    for (const auto& page : ss.pages)
        for (const auto& [key, m] : page.differentials) {
            const auto [e, f, s] = key;
            for (int c = 0; c < m.cols(); ++c)
                for (const auto& en : m.column(c))
                    os << page.r << '\t' << e << '\t' << f << '\t' << s << '\t' << en.index << '\t' << c << '\t'
                       << en.value.get_str() << '\n';
        }
    return os.str();
}

std::string pages_to_json(const SpectralSequence& ss) {
    json pages = json::array();
    for (const auto& page : ss.pages) pages.push_back(page_json(page));
    return json{{"stabilization_page", ss.stabilization_page}, {"observed_collapse", ss.observed_collapse}, {"pages", pages}}
               .dump(2) +
           "\n";
}

std::string report_to_json(const ConsistencyReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    return json{{"passed", rep.passed()}, {"checks", checks}}.dump(2) + "\n";
}

std::string report_to_text(const ConsistencyReport& rep) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
        os << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        if (c.passed) ++passed;
    }
    os << passed << " passed, " << rep.checks.size() - passed << " not passed\n";
    return os.str();
}

}  // namespace clusterhodge::io
