#pragma once

#include "sturmia/intercept.hpp"

namespace sturmia {

struct RauzyEdge {
    std::size_t from = 0, to = 0;
    Word label;  // the length-(m+1) factor
};

struct RauzyGraph {
    std::size_t m = 0;
    IntervalPosition pos;
    std::uint64_t a_next = 1;  // a_{n+1}
    std::vector<Word> vertices;  // sorted
    std::vector<RauzyEdge> edges;
    std::size_t left_special = 0;   // in-degree 2
    std::size_t right_special = 0;  // out-degree 2
    // Edge indices in path order; both cycles start with an out-edge of the right special vertex.
    std::vector<std::size_t> referent_cycle;
    std::vector<std::size_t> other_cycle;
    // Edges from the left special to the right special vertex.
    std::vector<std::size_t> common_path;

    std::size_t vertex(const Word& w) const;
    std::optional<std::size_t> edge(std::size_t from, std::size_t to) const;
};

// Factor graph of degree m of c_alpha, from a prefix long enough to show m + 2 factors.
RauzyGraph build_graph(const Slope& slope, std::size_t m);

struct SpecialArrows {
    std::size_t referent = 0;  // edge index
    std::size_t other = 0;
    // Letter the referent arrow appends: first letter of t_{n-1}, t_k = 10 for even k and 01 for odd k.
    char predicted_letter = '0';
    bool prediction_holds = false;
};

SpecialArrows special_arrows(const RauzyGraph& g);

// P_m(x), P_m(Tx), ..., one vertex per window.
std::vector<Word> trace(const Word& prefix, std::size_t m);

enum class Cycle { referent, other };

// Consecutive full laps around the cycle made by the path from its first vertex.
std::size_t count_turns(const RauzyGraph& g, const Word& prefix, Cycle which);
std::size_t count_turns(const AlphaNumber& rho, std::size_t m, Cycle which = Cycle::referent);
std::size_t count_turns_shift(const Slope& slope, std::size_t k, std::size_t m, Cycle which = Cycle::referent);

std::string to_dot(const RauzyGraph& g);

}  // namespace sturmia
