#include <algorithm>
#include <numeric>

#include "construct_util.hpp"
#include "subshift/construct.hpp"
#include "subshift/error.hpp"

namespace subshift {
namespace {

struct Returns {
    Word w, u, v;
};

// The unique right-special n-word w and its two return words, read off by
// following the only extension of every other n-word.
Returns return_words(const TruncatedLanguage& next, std::size_t n, std::size_t steps) {
    const auto rs = right_special_words(next);
    if (rs.size() != 1 || rs.front().degree != 2)
        fail("AmbiguousRightSpecial", "level " + std::to_string(n) + " has " + std::to_string(rs.size()) +
                                          " right-special words");
    Returns r;
    r.w = rs.front().word;
    std::vector<Symbol> followers;
    for (const Word& x : next.words())
        if (std::equal(r.w.begin(), r.w.end(), x.begin())) followers.push_back(x.back());
    std::sort(followers.begin(), followers.end());

    auto extend = [&](Symbol first) {
        Word cur = concat(r.w, Word{first});
        Word ret{first};
        for (std::size_t i = 0; i <= steps; ++i) {
            const Word tail = subword(cur, cur.size() - n, n);
            if (tail == r.w) return ret;
            std::optional<Symbol> next_letter;
            for (const Word& x : next.words())
                if (std::equal(tail.begin(), tail.end(), x.begin())) next_letter = x.back();
            if (!next_letter) fail("InvariantViolated", "dead end while following a return");
            cur.push_back(*next_letter);
            ret.push_back(*next_letter);
        }
        fail("InvariantViolated", "return to the right-special word not found");
    };
    r.u = extend(followers[0]);
    r.v = extend(followers[1]);
    if (r.u.size() > r.v.size()) std::swap(r.u, r.v);
    return r;
}

// Writes word as a concatenation of a (letter 0) and b (letter 1).
Word parse_blocks(const Word& word, const Word& a, const Word& b) {
    Word out;
    for (std::size_t pos = 0; pos < word.size();) {
        auto fits = [&](const Word& x) {
            return pos + x.size() <= word.size() &&
                   std::equal(x.begin(), x.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
        };
        if (fits(a)) {
            out.push_back(0);
            pos += a.size();
        } else if (fits(b)) {
            out.push_back(1);
            pos += b.size();
        } else {
            fail("InvariantViolated", "return word does not split into the previous level's returns");
        }
    }
    return out;
}

Word substitute(const Word& w, const Word& r0, const Word& r1) {
    Word out;
    for (Symbol s : w) {
        const Word& img = s == 0 ? r0 : r1;
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

// Closed walk from base through every edge: walk to each unused edge in id
// order, take it, and finally walk home.
Path edge_covering_walk(const Digraph& g, std::size_t base) {
    const auto all = detail::all_vertices(g);
    std::vector<bool> used(g.edge_count(), false);
    Path k;
    std::size_t at = base;
    auto go = [&](std::size_t to) {
        if (at == to) return;
        std::vector<bool> t(g.vertex_count, false);
        t[to] = true;
        auto p = shortest_path(g, at, t, all);
        if (!p) fail("NotPrimitive", "graph is not strongly connected");
        for (std::size_t e : *p) used[e] = true;
        k.insert(k.end(), p->begin(), p->end());
        at = to;
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (used[e]) continue;
        go(g.source[e]);
        k.push_back(e);
        used[e] = true;
        at = g.target[e];
    }
    go(base);
    return k;
}

// Shortest closed walk at base whose length is coprime to m.
Path coprime_loop(const Digraph& g, std::size_t base, std::size_t m) {
    const std::size_t cap = m + g.vertex_count * g.vertex_count + 1;
    // reach[l][v]: some walk of length l from base ends at v
    std::vector<std::vector<bool>> reach{std::vector<bool>(g.vertex_count, false)};
    reach[0][base] = true;
    for (std::size_t len = 1; len <= cap; ++len) {
        std::vector<bool> next(g.vertex_count, false);
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (reach.back()[g.source[e]]) next[g.target[e]] = true;
        reach.push_back(std::move(next));
        if (!reach[len][base] || std::gcd(len, m) != 1) continue;
        Path p(len);
        std::size_t at = base;
        for (std::size_t l = len; l-- > 0;) {
            for (std::size_t e : g.in[at])
                if (reach[l][g.source[e]]) {
                    p[l] = e;
                    at = g.source[e];
                    break;
                }
        }
        return p;
    }
    fail("NotPrimitive", "no closed walk of coprime length");
}

MixingCover cover_with_letters(const Digraph& g, const Alphabet& alphabet, const std::vector<Symbol>& letter) {
    const PrimitivityReport pr = is_primitive(g);
    if (!pr.primitive) fail("NotPrimitive", pr.irreducible ? "period " + std::to_string(pr.period) : "not irreducible");
    MixingCover c;
    c.base = 0;
    c.first = edge_covering_walk(g, c.base);
    c.second = c.first;
    const Path loop = coprime_loop(g, c.base, c.first.size());
    c.second.insert(c.second.end(), loop.begin(), loop.end());

    // flower: state 0 is the base, each petal runs through fresh states
    std::vector<SoficSource::Arc> arcs;
    std::size_t states = 1;
    for (const Path* petal : {&c.first, &c.second}) {
        std::size_t from = 0;
        for (std::size_t i = 0; i < petal->size(); ++i) {
            const std::size_t to = i + 1 == petal->size() ? 0 : states++;
            arcs.push_back({from, to, letter[(*petal)[i]]});
            from = to;
        }
    }
    c.generator = sofic_spec(alphabet, states, std::move(arcs));
    return c;
}

}  // namespace

SubstitutionChain rs_substitution_chain(const GeneratorSpec& gen, std::size_t levels, std::size_t budget) {
    if (levels == 0) fail("BadParameter", "need at least one level");
    if (auto v = validity_depth(gen)) budget = std::min(budget, *v > 0 ? *v - 1 : 0);
    if (budget < 1) fail("NoOneRsLevel", "validity depth too small");
    const TruncatedLanguage top = generate(gen, budget + 1);
    std::vector<std::size_t> c(budget + 2, 1);
    for (std::size_t n = 1; n <= budget + 1; ++n) c[n] = project(top, n).size();

    SubstitutionChain chain;
    std::size_t longest_prev = 0;  // |v| of the previous level
    for (std::size_t n = 1; n <= budget && chain.levels.size() < levels; ++n) {
        if (c[n + 1] != c[n] + 1) continue;
        if (!chain.levels.empty() && n <= longest_prev) continue;
        Returns r = return_words(project(top, n + 1), n, c[n] + 1);
        if (!chain.levels.empty() && r.u.size() <= longest_prev) continue;
        ChainLevel lv;
        lv.n = n;
        lv.w = r.w;
        lv.u = r.u;
        lv.v = r.v;
        if (chain.levels.empty()) {
            lv.rho0 = r.u;
            lv.rho1 = r.v;
        } else {
            const ChainLevel& prev = chain.levels.back();
            lv.rho0 = parse_blocks(r.u, prev.u, prev.v);
            lv.rho1 = parse_blocks(r.v, prev.u, prev.v);
        }
        longest_prev = r.v.size();
        chain.levels.push_back(std::move(lv));
    }
    if (chain.levels.size() < levels)
        fail("NoOneRsLevel", "found " + std::to_string(chain.levels.size()) + " of " + std::to_string(levels) +
                                 " levels within depth " + std::to_string(budget));

    chain.right_proper = std::all_of(chain.levels.begin(), chain.levels.end(), [](const ChainLevel& l) {
        return !l.rho0.empty() && !l.rho1.empty() && l.rho0.back() == l.rho1.back();
    });
    for (std::size_t k = 0; k < chain.levels.size(); ++k) {
        Word w{0};
        for (std::size_t j = k + 1; j-- > 0;) w = substitute(w, chain.levels[j].rho0, chain.levels[j].rho1);
        chain.composed.push_back(std::move(w));
    }
    return chain;
}

MixingCover mixing_cover(const RauzyGraph& G) {
    std::vector<Symbol> letter;
    for (const Word& e : G.edges) letter.push_back(e.front());
    return cover_with_letters(G.graph, G.alphabet, letter);
}

MixingCover mixing_cover(const Digraph& g) {
    if (g.edge_count() > 256) fail("GeneratorBudgetExceeded", "more than 256 edges");
    std::vector<Symbol> letter(g.edge_count());
    std::iota(letter.begin(), letter.end(), Symbol{0});
    return cover_with_letters(g, Alphabet::range(g.edge_count()), letter);
}

}  // namespace subshift
