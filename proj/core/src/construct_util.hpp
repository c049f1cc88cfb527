#pragma once
// Graph helpers shared by the construction sources.

#include <vector>

#include "subshift/lang.hpp"
#include "subshift/rauzy.hpp"

namespace subshift::detail {

std::vector<bool> vertex_mask(std::size_t n, const std::vector<std::size_t>& vs);
std::vector<bool> all_vertices(const Digraph& g);

// Same vertices, every edge reversed; edge ids are kept.
Digraph reversed(const Digraph& g);

// Shortest closed walk through edge e inside `within`; ties broken by the
// lexicographically least edge sequence. Starts with e.
std::optional<Path> shortest_cycle_through_edge(const Digraph& g, std::size_t e, const std::vector<bool>& within);
// Shortest cycle starting and ending at v inside `within`.
std::optional<Path> shortest_cycle_through_vertex(const Digraph& g, std::size_t v, const std::vector<bool>& within);

// Depth-1 languages are read as the cylinder of the full shift on their
// letters; everything else is returned unchanged.
TruncatedLanguage at_least_two(const TruncatedLanguage& L);

// Largest essential sublanguage of a set of equal-length words (the words
// left after repeatedly removing those with no left or right extension).
std::vector<Word> essential_core(std::vector<Word> words);

// Rotation of the word with the least rotation; the second value is the
// rotation amount j with result = w[j..] w[..j].
std::pair<Word, std::size_t> least_rotation(const Word& w);

}  // namespace subshift::detail
