#include "construct_util.hpp"

#include <algorithm>
#include <set>

#include "subshift/error.hpp"

namespace subshift::detail {

std::vector<bool> vertex_mask(std::size_t n, const std::vector<std::size_t>& vs) {
    std::vector<bool> m(n, false);
    for (std::size_t v : vs) m[v] = true;
    return m;
}

std::vector<bool> all_vertices(const Digraph& g) { return std::vector<bool>(g.vertex_count, true); }

Digraph reversed(const Digraph& g) {
    Digraph r(g.vertex_count);
    for (std::size_t e = 0; e < g.edge_count(); ++e) r.add_edge(g.target[e], g.source[e]);
    return r;
}

std::optional<Path> shortest_cycle_through_edge(const Digraph& g, std::size_t e, const std::vector<bool>& within) {
    const std::size_t u = g.source[e], v = g.target[e];
    if (u == v) return Path{e};
    std::vector<bool> target(g.vertex_count, false);
    target[u] = true;
    auto rest = shortest_path(g, v, target, within);
    if (!rest) return std::nullopt;
    for (std::size_t x : *rest)
        if (!within[g.target[x]]) return std::nullopt;
    Path p{e};
    p.insert(p.end(), rest->begin(), rest->end());
    return p;
}

std::optional<Path> shortest_cycle_through_vertex(const Digraph& g, std::size_t v, const std::vector<bool>& within) {
    std::optional<Path> best;
    for (std::size_t e : g.out[v]) {
        if (!within[g.target[e]]) continue;
        auto c = shortest_cycle_through_edge(g, e, within);
        if (c && (!best || c->size() < best->size() || (c->size() == best->size() && *c < *best))) best = c;
    }
    return best;
}

TruncatedLanguage at_least_two(const TruncatedLanguage& L) {
    if (L.depth() >= 2) return L;
    std::vector<Word> pairs;
    for (const Word& a : L.words())
        for (const Word& b : L.words()) pairs.push_back(concat(a, b));
    return validate_language(std::move(pairs), L.alphabet());
}

std::vector<Word> essential_core(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty()) return words;
    const std::size_t n = words.front().size();
    for (bool changed = true; changed;) {
        changed = false;
        std::set<Word> prefixes, suffixes;
        for (const Word& w : words) {
            prefixes.insert(subword(w, 0, n - 1));
            suffixes.insert(subword(w, 1, n - 1));
        }
        std::vector<Word> kept;
        for (const Word& w : words)
            if (prefixes.count(subword(w, 1, n - 1)) && suffixes.count(subword(w, 0, n - 1))) kept.push_back(w);
        changed = kept.size() != words.size();
        words = std::move(kept);
    }
    return words;
}

std::pair<Word, std::size_t> least_rotation(const Word& w) {
    Word best = w;
    std::size_t at = 0;
    for (std::size_t j = 1; j < w.size(); ++j) {
        Word r = concat(subword(w, j, w.size() - j), subword(w, 0, j));
        if (r < best) {
            best = std::move(r);
            at = j;
        }
    }
    return {best, at};
}

}  // namespace subshift::detail
