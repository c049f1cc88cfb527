#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subshift/lang.hpp"

namespace subshift {

// Multigraph with stable edge ids. Out/in lists keep insertion order, which
// for Rauzy graphs is lexicographic order of the edge words.
struct Digraph {
    std::size_t vertex_count = 0;
    std::vector<std::size_t> source, target;
    std::vector<std::vector<std::size_t>> out, in;

    explicit Digraph(std::size_t n = 0) : vertex_count(n), out(n), in(n) {}
    std::size_t edge_count() const noexcept { return source.size(); }
    std::size_t add_edge(std::size_t u, std::size_t v);
    bool essential() const;
};

using Path = std::vector<std::size_t>;  // edge ids, head to tail

struct RauzyGraph {
    std::size_t level = 0;
    Alphabet alphabet;
    std::vector<Word> vertices;  // (level-1)-words, sorted
    std::vector<Word> edges;     // level-words, sorted
    Digraph graph;

    std::size_t vertex_index(const Word& w) const;  // npos-like SIZE_MAX if absent
    TruncatedLanguage edge_language() const;
    // Letters read along a path: the first letter of every edge word.
    Word path_letters(const Path& p) const;
    // Full label of a path: source vertex word followed by last letters.
    Word path_label(const Path& p) const;
};

// Errors: DepthTooSmall when depth < 2.
RauzyGraph build_rauzy(const TruncatedLanguage& L);

// Level-2 Rauzy graph of the vertex shift of an essential simple digraph;
// vertex i becomes letter i.
RauzyGraph rauzy_from_digraph(const Digraph& g);

struct Condensation {
    std::vector<std::vector<std::size_t>> components;  // ordered by least vertex
    std::vector<std::size_t> component_of;
    std::vector<std::pair<std::size_t, std::size_t>> dag_edges;
    std::vector<bool> trivial;
    std::vector<std::size_t> sources, sinks;
    // Pairs of nontrivial components joined through trivial ones only.
    std::vector<std::pair<std::size_t, std::size_t>> transit;
};

Condensation condensation(const Digraph& g);
inline Condensation condensation(const RauzyGraph& G) { return condensation(G.graph); }

// Depth-m language of the SFT of G (m >= level); GeneratorBudgetExceeded
// when more than word_budget words would be produced.
TruncatedLanguage sft_language(const RauzyGraph& G, std::size_t m,
                               std::size_t word_budget = 20'000'000);

// Johnson's enumeration restricted to `allowed` vertices (all when empty).
// The visitor returns false to stop early. Throws CycleCapExceeded past cap.
std::size_t for_each_simple_cycle(const Digraph& g, const std::vector<bool>& allowed,
                                  const std::function<bool(const Path&)>& visit,
                                  std::size_t cap = 1'000'000);

// Rotation of a cycle starting at its least edge id.
Path canonical_cycle(const Path& cycle);
// Rotation of a cycle starting at the given vertex.
Path rotate_to_vertex(const Digraph& g, const Path& cycle, std::size_t vertex);
std::vector<std::size_t> cycle_vertices(const Digraph& g, const Path& cycle);

struct Barbell {
    Path initial;     // starts at the transition's first vertex
    Path transition;
    Path terminal;    // starts at the transition's last vertex
    friend bool operator==(const Barbell&, const Barbell&) = default;
};

struct DoubleBarbell {
    Path initial;     // B, starting where I leaves it
    Path into;        // I, last edge is f
    Path middle;      // K, starting at the source of g
    Path inside;      // P, from the target of f to the source of g along K
    Path out_of;      // J, first edge is g
    Path terminal;    // E, starting where J enters it
};

struct MiddleWitness {
    Path cycle;
    std::size_t incoming;
    std::size_t outgoing;
};

enum class Verdict { nmc, omc, neither };
std::string to_string(Verdict v);

struct CycleReport {
    Verdict verdict = Verdict::neither;
    std::size_t middle_count = 0;  // saturates at 2
    std::vector<Path> isolated_cycles;
    std::vector<Barbell> barbells;
    std::vector<DoubleBarbell> double_barbells;
    std::optional<MiddleWitness> middle_witness;

    // Union of every edge named by the decomposition.
    std::vector<std::size_t> covered_edges() const;
};

// classify_nmc answers NMC or not (verdict neither), always with a witness in
// the latter case; classify_omc counts middle cycles exactly up to two.
CycleReport classify_nmc(const Digraph& g);
CycleReport classify_omc(const Digraph& g);
inline CycleReport classify_nmc(const RauzyGraph& G) { return classify_nmc(G.graph); }
inline CycleReport classify_omc(const RauzyGraph& G) { return classify_omc(G.graph); }

struct PrimitivityReport {
    bool irreducible = false;
    std::size_t period = 0;
    bool primitive = false;
};

PrimitivityReport is_primitive(const Digraph& g);
inline PrimitivityReport is_primitive(const RauzyGraph& G) { return is_primitive(G.graph); }

bool cylinder_member(const RauzyGraph& G, const TruncatedLanguage& L);

std::string to_dot(const RauzyGraph& G);

// Shortest path from `from` to any vertex with target_mask set, moving only
// through vertices with pass_mask set (the endpoints excluded). Among all
// shortest paths the one with lexicographically least edge-id sequence wins.
std::optional<Path> shortest_path(const Digraph& g, std::size_t from,
                                  const std::vector<bool>& target_mask,
                                  const std::vector<bool>& pass_mask);

}  // namespace subshift
