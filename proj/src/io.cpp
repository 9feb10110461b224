#include "acm/io.hpp"

#include <charconv>
#include <sstream>

namespace acm {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected integer, got '" + tok + "'", line_no);
    return value;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    long long declared_edges = -1;
    std::vector<Edge> edges;
    std::vector<int> weights;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", line_no);
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError("expected 'p edge <n> <m>'", line_no);
            n = parse_int(toks[2], line_no);
            declared_edges = parse_int(toks[3], line_no);
            if (n < 0 || declared_edges < 0) throw ParseError("negative counts", line_no);
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError("edge before problem line", line_no);
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError("expected 'e <u> <v> [<w>]'", line_no);
            int u = parse_int(toks[1], line_no);
            int v = parse_int(toks[2], line_no);
            int w = toks.size() == 4 ? parse_int(toks[3], line_no) : 1;
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex id out of range 1.." + std::to_string(n), line_no);
            if (u == v) throw ParseError("self-loop", line_no);
            edges.push_back(make_edge(u - 1, v - 1));
            weights.push_back(w);
            continue;
        }
        throw ParseError("unknown line type '" + toks[0] + "'", line_no);
    }
    if (n < 0) throw ParseError("missing problem line", line_no);
    if (static_cast<long long>(edges.size()) != declared_edges)
        throw ParseError("declared " + std::to_string(declared_edges) + " edges, found " +
                             std::to_string(edges.size()),
                         line_no);
    try {
        return Graph(n, edges, weights);
    } catch (const GraphError& e) {
        throw ParseError(e.what(), line_no);
    }
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << " " << g.size() << "\n";
    for (int i = 0; i < g.size(); ++i) {
        auto [u, v] = g.edges()[i];
        out << "e " << u + 1 << " " << v + 1;
        if (g.weight_at(i) != 1) out << " " << g.weight_at(i);
        out << "\n";
    }
    return out.str();
}

CnfFormula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int num_vars = -1;
    long long declared_clauses = -1;
    std::vector<Clause> clauses;
    std::vector<int> pending;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (num_vars >= 0) throw ParseError("duplicate problem line", line_no);
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError("expected 'p cnf <vars> <clauses>'", line_no);
            num_vars = parse_int(toks[2], line_no);
            declared_clauses = parse_int(toks[3], line_no);
            if (num_vars < 0 || declared_clauses < 0) throw ParseError("negative counts", line_no);
            continue;
        }
        if (num_vars < 0) throw ParseError("clause before problem line", line_no);
        for (auto& tok : toks) {
            int lit = parse_int(tok, line_no);
            if (lit == 0) {
                std::sort(pending.begin(), pending.end(), [](int a, int b) {
                    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
                });
                pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
                clauses.push_back(Clause{pending});
                pending.clear();
            } else {
                if (std::abs(lit) > num_vars)
                    throw ParseError("literal " + tok + " out of range", line_no);
                pending.push_back(lit);
            }
        }
    }
    if (num_vars < 0) throw ParseError("missing problem line", line_no);
    if (!pending.empty()) throw ParseError("unterminated clause", line_no);
    if (static_cast<long long>(clauses.size()) != declared_clauses)
        throw ParseError("declared " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(clauses.size()),
                         line_no);
    return CnfFormula{num_vars, std::move(clauses)};
}

std::string emit_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& c : f.clauses) {
        for (int lit : c.lits) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

std::string emit_labels(const ReductionInstance& inst) {
    std::ostringstream out;
    for (const auto& [role, id] : inst.labels) out << role << " -> " << id + 1 << "\n";
    out << "A:";
    for (int v : inst.side_a) out << " " << v + 1;
    out << "\n";
    out << "B:";
    for (int v : inst.side_b) out << " " << v + 1;
    out << "\n";
    return out.str();
}

}  // namespace acm
