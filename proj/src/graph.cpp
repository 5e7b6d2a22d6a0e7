#include "recolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace recolor {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.shrink_to_fit();
        degree_sum += list.size();
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(list.size()));
    }
    g.m_ = degree_sum / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    if (g.n() == 0) {
        throw std::domain_error("degree statistics of an empty graph");
    }
    DegreeStats s;
    s.mean = 2.0 * static_cast<double>(g.m()) / g.n();
    if (s.mean == 0.0) {
        throw std::domain_error("degree CV undefined: graph has no edges");
    }
    double sq = 0.0;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double d = g.degree(v) - s.mean;
        sq += d * d;
    }
    s.stddev = std::sqrt(sq / g.n());
    s.cv = 100.0 * s.stddev / s.mean;
    return s;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

long long parse_integer(std::string_view token, std::size_t line_no) {
    long long value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    std::size_t line_no = 0;
    bool have_problem = false;
    long long n = 0;
    long long declared_m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] == "c") {
            continue;
        }
        if (tokens[0] == "p") {
            if (have_problem) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
                throw ParseError(line_no, "malformed problem line");
            }
            n = parse_integer(tokens[2], line_no);
            declared_m = parse_integer(tokens[3], line_no);
            if (n < 0 || declared_m < 0 || n > (1LL << 30)) {
                throw ParseError(line_no, "invalid problem size");
            }
            have_problem = true;
            edges.reserve(static_cast<std::size_t>(std::min<long long>(declared_m, 1LL << 26)));
        } else if (tokens[0] == "e") {
            if (!have_problem) {
                throw ParseError(line_no, "edge before problem line");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "malformed edge line");
            }
            const long long u = parse_integer(tokens[1], line_no);
            const long long v = parse_integer(tokens[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(line_no, "endpoint out of range");
            }
            if (u == v) {
                throw ParseError(line_no, "self-loop");
            }
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(line_no, "malformed token '" + std::string(tokens[0]) + "'");
        }
    }
    if (!have_problem) {
        throw ParseError(line_no + 1, "missing problem line");
    }
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (warnings != nullptr && static_cast<long long>(g.m()) != declared_m) {
        warnings->push_back("declared " + std::to_string(declared_m) + " edges, found " +
                            std::to_string(g.m()) + " distinct edges");
    }
    return g;
}

Graph parse_dimacs_string(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    return parse_dimacs(in, warnings);
}

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    return parse_dimacs(in, warnings);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

std::string to_dimacs_string(const Graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

Graph erdos_renyi(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph erdos_renyi_m(int n, std::size_t m, Rng& rng) {
    const std::size_t pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (m > pairs) {
        throw std::invalid_argument("more edges requested than vertex pairs");
    }
    std::unordered_set<std::uint64_t> chosen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n));
        if (u == v) {
            continue;
        }
        if (u > v) {
            std::swap(u, v);
        }
        const auto key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (chosen.insert(key).second) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace recolor
