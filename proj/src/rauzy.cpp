#include "sturmia/rauzy.hpp"

#include <algorithm>
#include <sstream>

namespace sturmia {

std::size_t RauzyGraph::vertex(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) throw DomainError("\"" + w + "\" is not a vertex of the graph");
    return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> RauzyGraph::edge(std::size_t from, std::size_t to) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].from == from && edges[e].to == to) return e;
    return std::nullopt;
}

namespace {

std::vector<std::size_t> out_edges(const RauzyGraph& g, std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e].from == v) out.push_back(e);
    return out;
}

std::vector<std::size_t> walk_to(const RauzyGraph& g, std::size_t first_edge, std::size_t stop) {
    std::vector<std::size_t> path{first_edge};
    std::size_t v = g.edges[first_edge].to;
    while (v != stop) {
        auto outs = out_edges(g, v);
        if (outs.size() != 1) throw std::logic_error("branching vertex inside a cycle");
        path.push_back(outs[0]);
        v = g.edges[outs[0]].to;
        if (path.size() > g.edges.size()) throw std::logic_error("walk does not return");
    }
    return path;
}

}  // namespace

RauzyGraph build_graph(const Slope& slope, std::size_t m) {
    if (m < 1) throw DomainError("Rauzy graphs need m >= 1");
    RauzyGraph g;
    g.m = m;
    g.pos = interval_locate(BigInt(m), slope);

    std::set<Word> verts, edge_words;
    for (std::size_t len = 2 * m + 4;; len *= 2) {
        if (len > kMaxWordLength) throw DepthError("no prefix shows all factors of length " + std::to_string(m + 1));
        Word c = characteristic_prefix(slope, len);
        verts = factor_set(c, m);
        edge_words = factor_set(c, m + 1);
        if (verts.size() == m + 1 && edge_words.size() == m + 2) break;
        if (verts.size() > m + 1 || edge_words.size() > m + 2) throw std::logic_error("complexity exceeds n + 1");
    }
    g.vertices.assign(verts.begin(), verts.end());
    std::vector<int> in(g.vertices.size(), 0), out(g.vertices.size(), 0);
    for (const Word& w : edge_words) {
        RauzyEdge e{g.vertex(w.substr(0, m)), g.vertex(w.substr(1)), w};
        ++out[e.from];
        ++in[e.to];
        g.edges.push_back(std::move(e));
    }
    int ls = 0, rs = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (in[v] == 2) g.left_special = v, ++ls;
        if (out[v] == 2) g.right_special = v, ++rs;
    }
    if (ls != 1 || rs != 1) throw std::logic_error("graph does not have exactly one special vertex per side");

    auto outs = out_edges(g, g.right_special);
    auto c1 = walk_to(g, outs[0], g.right_special);
    auto c2 = walk_to(g, outs[1], g.right_special);
    ContinuantTable t(slope, g.pos.n + 1);
    const BigInt qn = t.q(static_cast<long>(g.pos.n));
    g.a_next = t.a(static_cast<long>(g.pos.n + 1));
    if (BigInt(c1.size()) == qn) {
        g.referent_cycle = std::move(c1);
        g.other_cycle = std::move(c2);
    } else if (BigInt(c2.size()) == qn) {
        g.referent_cycle = std::move(c2);
        g.other_cycle = std::move(c1);
    } else {
        throw std::logic_error("no cycle of length q_n");
    }
    if (g.left_special != g.right_special) {
        auto louts = out_edges(g, g.left_special);
        g.common_path = walk_to(g, louts.at(0), g.right_special);
    }
    return g;
}

SpecialArrows special_arrows(const RauzyGraph& g) {
    SpecialArrows s;
    s.referent = g.referent_cycle.front();
    s.other = g.other_cycle.front();
    // t_{n-1} starts with 1 exactly when n - 1 is even.
    s.predicted_letter = (g.pos.n >= 1 && (g.pos.n - 1) % 2 == 0) ? '1' : '0';
    s.prediction_holds = g.edges[s.referent].label.back() == s.predicted_letter;
    return s;
}

std::vector<Word> trace(const Word& prefix, std::size_t m) {
    if (prefix.size() < m + 1) throw DomainError("prefix shorter than m + 1");
    std::vector<Word> out;
    for (std::size_t i = 0; i + m <= prefix.size(); ++i) out.push_back(prefix.substr(i, m));
    return out;
}

std::size_t count_turns(const RauzyGraph& g, const Word& prefix, Cycle which) {
    const auto& cyc = which == Cycle::referent ? g.referent_cycle : g.other_cycle;
    std::set<Word> on_cycle;
    for (std::size_t e : cyc) on_cycle.insert(g.edges[e].label);
    const std::size_t k = cyc.size(), m = g.m;
    if (prefix.size() < m + 1) throw DomainError("prefix shorter than m + 1");
    const std::size_t steps = prefix.size() - m;
    std::size_t turns = 0;
    for (;;) {
        std::size_t start = turns * k;
        for (std::size_t i = start; i < start + k; ++i) {
            if (i >= steps) throw UndecidedError("prefix ends inside a lap");
            if (!on_cycle.count(prefix.substr(i, m + 1))) return turns;
        }
        ++turns;
    }
}

namespace {

std::size_t turn_prefix_length(const RauzyGraph& g) {
    std::size_t longest = std::max(g.referent_cycle.size(), g.other_cycle.size());
    return g.m + 1 + longest * (g.a_next + 2);
}

}  // namespace

std::size_t count_turns(const AlphaNumber& rho, std::size_t m, Cycle which) {
    RauzyGraph g = build_graph(rho.table().slope(), m);
    return count_turns(g, sturmian_prefix(rho, turn_prefix_length(g)), which);
}

std::size_t count_turns_shift(const Slope& slope, std::size_t k, std::size_t m, Cycle which) {
    RauzyGraph g = build_graph(slope, m);
    Word c = characteristic_prefix(slope, k + turn_prefix_length(g));
    return count_turns(g, c.substr(k), which);
}

std::string to_dot(const RauzyGraph& g) {
    std::ostringstream os;
    std::set<std::size_t> ref(g.referent_cycle.begin(), g.referent_cycle.end());
    os << "digraph rauzy_" << g.m << " {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << g.vertices[v] << "\"";
        if (v == g.left_special && v == g.right_special) os << ", shape=doublecircle";
        else if (v == g.left_special) os << ", shape=box";
        else if (v == g.right_special) os << ", shape=diamond";
        os << "];\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        os << "  v" << g.edges[e].from << " -> v" << g.edges[e].to << " [label=\"" << g.edges[e].label.back() << "\"";
        if (ref.count(e)) os << ", color=red, penwidth=2";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace sturmia
