#include <algorithm>
#include <numeric>

#include "construct_util.hpp"
#include "subshift/construct.hpp"
#include "subshift/error.hpp"

namespace subshift {
namespace {

// Vertex sequence of a closed walk: vs[i] is the source of edge i, vs[|K|] = vs[0].
std::vector<std::size_t> walk_vertices(const Digraph& g, const Path& k) {
    std::vector<std::size_t> vs;
    for (std::size_t e : k) vs.push_back(g.source[e]);
    vs.push_back(k.empty() ? 0 : g.target[k.back()]);
    return vs;
}

bool covers_all(const Digraph& g, const Path& k) {
    std::vector<bool> seen(g.vertex_count, false);
    for (std::size_t e : k) seen[g.source[e]] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Path rotate(const Path& k, std::size_t at) {
    Path r(k.begin() + static_cast<std::ptrdiff_t>(at), k.end());
    r.insert(r.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(at));
    return r;
}

// Closed walk from vertex 0 visiting the vertices in order, then shortened
// by cutting out closed subwalks as long as every vertex stays visited.
Path vertex_covering_walk(const Digraph& g) {
    const auto all = detail::all_vertices(g);
    Path k;
    std::size_t at = 0;
    std::vector<bool> seen(g.vertex_count, false);
    seen[0] = true;
    auto go = [&](std::size_t to) {
        std::vector<bool> t(g.vertex_count, false);
        t[to] = true;
        auto p = shortest_path(g, at, t, all);
        if (!p) fail("NotIrreducible", "vertex " + std::to_string(to) + " unreachable");
        for (std::size_t e : *p) seen[g.target[e]] = true;
        k.insert(k.end(), p->begin(), p->end());
        at = to;
    };
    for (std::size_t v = 1; v < g.vertex_count; ++v)
        if (!seen[v]) go(v);
    go(0);

    for (bool changed = true; changed;) {
        changed = false;
        const auto vs = walk_vertices(g, k);
        // longest removable piece first so the result is short
        for (std::size_t len = k.size() - 1; len >= 1 && !changed; --len)
            for (std::size_t i = 0; i + len <= k.size() && !changed; ++i) {
                if (vs[i] != vs[i + len]) continue;
                Path cut(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i));
                cut.insert(cut.end(), k.begin() + static_cast<std::ptrdiff_t>(i + len), k.end());
                if (!cut.empty() && covers_all(g, cut)) {
                    k = std::move(cut);
                    changed = true;
                }
            }
    }
    return k;
}

// Splits word at the given offset into prefix, whole images and suffix.
std::optional<TauDecomposition> split_at(const Word& word, const Tau& tau, std::size_t offset) {
    const std::size_t ell = tau.ell();
    auto is_suffix_of_image = [&](const Word& p) {
        for (Symbol s : {Symbol{0}, Symbol{1}})
            if (std::equal(p.rbegin(), p.rend(), tau.image(s).rbegin())) return true;
        return false;
    };
    auto is_prefix_of_image = [&](const Word& p) {
        for (Symbol s : {Symbol{0}, Symbol{1}})
            if (std::equal(p.begin(), p.end(), tau.image(s).begin())) return true;
        return false;
    };
    if (offset >= ell || offset > word.size()) return std::nullopt;
    TauDecomposition d;
    d.prefix = subword(word, 0, offset);
    if (!is_suffix_of_image(d.prefix)) return std::nullopt;
    std::size_t pos = offset;
    for (; pos + ell <= word.size(); pos += ell) {
        const Word block = subword(word, pos, ell);
        if (block == tau.image0) d.inner.push_back(0);
        else if (block == tau.image1) d.inner.push_back(1);
        else return std::nullopt;
    }
    d.suffix = subword(word, pos, word.size() - pos);
    if (!is_prefix_of_image(d.suffix)) return std::nullopt;
    return d;
}

}  // namespace

Tau letword_tau(const TruncatedLanguage& input) {
    const TruncatedLanguage L = detail::at_least_two(input);
    const RauzyGraph Gn = build_rauzy(L);
    if (!is_primitive(Gn).irreducible) fail("NotIrreducible", "Rauzy graph is not strongly connected");
    const std::size_t n = L.depth();
    const RauzyGraph G = build_rauzy(sft_language(Gn, n + 1));
    const Digraph& g = G.graph;
    if (g.edge_count() == g.vertex_count) fail("IsSingleCycle", "the shift is a single periodic orbit");

    Path K = vertex_covering_walk(g);
    Path Kp;
    std::size_t marker_vertex = 0;
    if (K.size() > g.vertex_count) {
        const auto vs0 = walk_vertices(g, K);
        std::vector<std::size_t> visits(g.vertex_count, 0);
        for (std::size_t i = 0; i < K.size(); ++i) ++visits[vs0[i]];
        const auto once = std::find(visits.begin(), visits.end(), 1);
        if (once == visits.end()) fail("InvariantViolated", "covering walk visits every vertex twice");
        marker_vertex = static_cast<std::size_t>(once - visits.begin());
        K = rotate_to_vertex(g, K, marker_vertex);
        // shortest closed subwalk; it avoids position 0, the only visit to v
        const auto vs = walk_vertices(g, K);
        std::size_t bi = 0, bj = 0;
        for (std::size_t len = 1; len < K.size() && !bj; ++len)
            for (std::size_t i = 1; i + len < K.size() && !bj; ++i)
                if (vs[i] == vs[i + len]) bi = i, bj = i + len;
        if (!bj) fail("InvariantViolated", "no proper closed subwalk");
        Kp.assign(K.begin() + static_cast<std::ptrdiff_t>(bi), K.begin() + static_cast<std::ptrdiff_t>(bj));
        K = rotate(K, bi);
    } else {
        std::vector<bool> on_k(g.edge_count(), false);
        for (std::size_t e : K) on_k[e] = true;
        const std::size_t e = static_cast<std::size_t>(std::find(on_k.begin(), on_k.end(), false) - on_k.begin());
        K = rotate_to_vertex(g, K, g.source[e]);
        const auto vs = walk_vertices(g, K);
        std::size_t k_at = 0;
        while (vs[k_at] != g.target[e]) ++k_at;
        if (k_at == 0) k_at = K.size();  // e is a loop
        // K' = e followed by K from the target of e; it skips K's vertices 1..k_at-1
        Kp.push_back(e);
        Kp.insert(Kp.end(), K.begin() + static_cast<std::ptrdiff_t>(k_at), K.end());
        marker_vertex = vs[1];
    }

    const auto vs = walk_vertices(g, K);
    const std::size_t offset = static_cast<std::size_t>(std::find(vs.begin(), vs.end() - 1, marker_vertex) - vs.begin());
    auto walk = [&](std::initializer_list<const Path*> parts) {
        Path p;
        for (const Path* x : parts) p.insert(p.end(), x->begin(), x->end());
        return G.path_letters(p);
    };

    Tau t;
    t.alphabet = L.alphabet();
    t.base_level = n;
    t.image0 = walk({&K, &K, &Kp, &Kp, &Kp});
    t.image1 = walk({&K, &Kp, &K, &Kp, &Kp});
    t.marker = G.vertices[marker_vertex];
    t.marker_offset = offset;
    t.gap0 = K.size();
    t.gap1 = K.size() + Kp.size();
    t.base = L;
    if (t.ell() < n) fail("InvariantViolated", "images shorter than the level");
    return t;
}

TauDecomposition tau_decompose(const Word& word, const Tau& tau) {
    if (word.size() < tau.decipher_bound())
        fail("TooShort", "need at least " + std::to_string(tau.decipher_bound()) + " letters");
    for (Symbol s : word)
        if (s >= tau.alphabet.size()) fail("NotInImage", "letter outside the alphabet");
    std::vector<std::size_t> at;
    const std::size_t m = tau.marker.size();
    for (std::size_t i = 0; i + m <= word.size(); ++i)
        if (std::equal(tau.marker.begin(), tau.marker.end(), word.begin() + static_cast<std::ptrdiff_t>(i))) at.push_back(i);
    const std::size_t ell = tau.ell();
    for (std::size_t i = 0; i + 1 < at.size(); ++i) {
        const std::size_t gap = at[i + 1] - at[i];
        if (gap != tau.gap0 && gap != tau.gap1) continue;
        const std::size_t offset = ((at[i] + ell - tau.marker_offset % ell) % ell);
        if (auto d = split_at(word, tau, offset)) return *d;
        fail("NotInImage", "marker alignment does not parse");
    }
    fail("NotInImage", "no marker pair at an inner distance");
}

std::vector<TauDecomposition> all_tau_decompositions(const Word& word, const Tau& tau) {
    std::vector<TauDecomposition> out;
    for (std::size_t o = 0; o < tau.ell(); ++o)
        if (auto d = split_at(word, tau, o)) out.push_back(std::move(*d));
    return out;
}

GeneratorSpec tau_apply(const Tau& tau, const GeneratorSpec& inner) { return tau_image_spec(tau, inner); }

DecipherReport certify_decipherability(const Tau& tau) {
    DecipherReport r;
    r.length = tau.decipher_bound();
    const TruncatedLanguage words = generate(tau_image_spec(tau, full_shift_spec(2)), r.length);
    r.words = words.size();
    r.unique = true;
    for (const Word& w : words.words()) {
        const auto all = all_tau_decompositions(w, tau);
        bool ok = all.size() == 1;
        if (ok) {
            try {
                ok = tau_decompose(w, tau) == all.front();
            } catch (const Error&) {
                ok = false;
            }
        }
        if (!ok) {
            r.unique = false;
            r.counterexample = w;
            break;
        }
    }
    return r;
}

std::vector<ComplexityBound> tau_complexity_bounds(const Tau& tau, const GeneratorSpec& inner, std::size_t n_lo,
                                                   std::size_t n_hi) {
    if (n_lo < 1 || n_hi < n_lo) fail("BadParameter", "need 1 <= n_lo <= n_hi");
    const std::size_t ell = tau.ell();
    const GeneratorSpec image = tau_image_spec(tau, inner);
    const std::size_t top = (n_hi + ell - 1) / ell + 2;
    const TruncatedLanguage Y = generate(inner, top);
    const TruncatedLanguage T = generate(image, n_hi);
    auto cY = [&](std::size_t k) { return k == 0 ? std::size_t{1} : project(Y, k).size(); };
    std::vector<ComplexityBound> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        ComplexityBound b;
        b.n = n;
        // the lower bound needs at least one whole inner letter
        b.lower = n / ell >= 3 ? ell * cY(n / ell - 2) : 0;
        b.value = project(T, n).size();
        b.upper = ell * cY((n + ell - 1) / ell + 2);
        out.push_back(b);
    }
    return out;
}

}  // namespace subshift
