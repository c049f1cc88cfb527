#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "subshift/error.hpp"
#include "subshift/rauzy.hpp"

namespace subshift {
namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

Digraph reversed(const Digraph& g) {
    Digraph r(g.vertex_count);
    for (std::size_t e = 0; e < g.edge_count(); ++e) r.add_edge(g.target[e], g.source[e]);
    return r;
}

struct ComponentInfo {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> internal, ext_in, ext_out;  // edge ids, ascending
    bool nontrivial = false;
    bool bare = false;  // a single simple cycle
};

struct Analysis {
    const Digraph& g;
    Condensation c;
    std::vector<ComponentInfo> info;

    explicit Analysis(const Digraph& graph) : g(graph), c(condensation(graph)) {
        info.resize(c.components.size());
        for (std::size_t i = 0; i < info.size(); ++i) {
            info[i].vertices = c.components[i];
            info[i].nontrivial = !c.trivial[i];
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            std::size_t a = c.component_of[g.source[e]], b = c.component_of[g.target[e]];
            if (a == b) {
                info[a].internal.push_back(e);
            } else {
                info[a].ext_out.push_back(e);
                info[b].ext_in.push_back(e);
            }
        }
        for (auto& ci : info) ci.bare = ci.nontrivial && ci.internal.size() == ci.vertices.size();
    }

    bool middle_capable(const ComponentInfo& ci) const { return !ci.ext_in.empty() && !ci.ext_out.empty(); }

    std::vector<bool> mask(std::size_t comp) const {
        std::vector<bool> m(g.vertex_count, false);
        for (std::size_t v : c.components[comp]) m[v] = true;
        return m;
    }

    // The unique cycle of a bare component, or the first simple cycle of
    // any other nontrivial component, starting at its least vertex.
    Path component_cycle(std::size_t comp) const {
        const auto& ci = info[comp];
        if (ci.bare) {
            Path p;
            std::size_t start = ci.vertices.front(), cur = start;
            do {
                std::size_t next = none;
                for (std::size_t e : g.out[cur])
                    if (c.component_of[g.target[e]] == comp) { next = e; break; }
                p.push_back(next);
                cur = g.target[next];
            } while (cur != start);
            return p;
        }
        Path first;
        for_each_simple_cycle(g, mask(comp), [&](const Path& p) { first = p; return false; });
        return rotate_to_vertex(g, first, ci.vertices.front());
    }

    // Middle simple cycles of one component, at most `want` of them.
    std::vector<Path> middle_cycles(std::size_t comp, std::size_t want) const {
        const auto& ci = info[comp];
        std::vector<Path> out;
        if (!ci.nontrivial || want == 0) return out;
        if (ci.bare) {
            if (middle_capable(ci)) out.push_back(canonical_cycle(component_cycle(comp)));
            return out;
        }
        // a cycle missing some vertex of a strongly connected component is
        // always entered and left from inside that component
        std::set<Path> seen;
        for (std::size_t v : ci.vertices) {
            if (seen.size() >= want) break;
            auto m = mask(comp);
            m[v] = false;
            for_each_simple_cycle(g, m, [&](const Path& p) {
                seen.insert(canonical_cycle(p));
                return seen.size() < want;
            });
        }
        out.assign(seen.begin(), seen.end());
        // a cycle through every vertex is middle only via external edges
        if (out.size() < want && middle_capable(ci)) {
            const std::size_t len = ci.vertices.size();
            for_each_simple_cycle(g, mask(comp), [&](const Path& p) {
                if (p.size() == len) out.push_back(canonical_cycle(p));
                return out.size() < want;
            });
        }
        if (out.size() > want) out.resize(want);
        return out;
    }

    // Simple non-Hamiltonian cycle of a non-bare component chosen without
    // enumeration: a loop, or the rerouted shortest return through a branch.
    std::optional<Path> quick_cycle(std::size_t comp) const {
        const auto& ci = info[comp];
        if (ci.vertices.size() < 2) return std::nullopt;
        for (std::size_t v : ci.vertices)
            for (std::size_t e : g.out[v])
                if (g.target[e] == v) return Path{e};
        auto inside = mask(comp);
        for (std::size_t v : ci.vertices) {
            std::vector<std::size_t> branch;
            for (std::size_t e : g.out[v])
                if (inside[g.target[e]]) branch.push_back(e);
            if (branch.size() < 2) continue;
            std::vector<bool> target(g.vertex_count, false);
            target[v] = true;
            auto through = [&](std::size_t e) {
                Path p{e};
                if (g.target[e] != v) {
                    auto rest = shortest_path(g, g.target[e], target, inside);
                    if (!rest) fail("InvariantViolated", "component is not strongly connected");
                    p.insert(p.end(), rest->begin(), rest->end());
                }
                return p;
            };
            if (g.target[branch[0]] == g.target[branch[1]]) return std::nullopt;  // parallel edges
            Path k1 = through(branch[0]);
            auto vs = cycle_vertices(g, k1);
            if (std::find(vs.begin(), vs.end(), g.target[branch[1]]) == vs.end()) return k1;
            return through(branch[1]);
        }
        return std::nullopt;
    }

    MiddleWitness witness_for(const Path& cycle) const {
        std::vector<bool> on(g.vertex_count, false);
        for (std::size_t v : cycle_vertices(g, cycle)) on[v] = true;
        MiddleWitness w{cycle, none, none};
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!on[g.source[e]] && on[g.target[e]] && w.incoming == none) w.incoming = e;
            if (on[g.source[e]] && !on[g.target[e]] && w.outgoing == none) w.outgoing = e;
        }
        return w;
    }

    // Transition path through edge e: back to and forward to nontrivial
    // components along trivial vertices, shortest-then-least.
    Path transition_through(std::size_t e, const Digraph& rev) const {
        std::vector<bool> nontriv(g.vertex_count), triv(g.vertex_count);
        for (std::size_t v = 0; v < g.vertex_count; ++v) {
            nontriv[v] = !c.trivial[c.component_of[v]];
            triv[v] = !nontriv[v];
        }
        Path back, fwd;
        if (triv[g.source[e]]) {
            auto p = shortest_path(rev, g.source[e], nontriv, triv);
            if (!p) fail("InvariantViolated", "graph is not essential");
            back.assign(p->rbegin(), p->rend());
        }
        if (triv[g.target[e]]) {
            auto p = shortest_path(g, g.target[e], nontriv, triv);
            if (!p) fail("InvariantViolated", "graph is not essential");
            fwd = *p;
        }
        Path t = back;
        t.push_back(e);
        t.insert(t.end(), fwd.begin(), fwd.end());
        return t;
    }
};

void fill_decomposition(const Analysis& A, CycleReport& r, std::optional<std::size_t> middle_comp) {
    const Digraph& g = A.g;
    Digraph rev = reversed(g);
    std::vector<Path> cycles(A.info.size());
    for (std::size_t i = 0; i < A.info.size(); ++i)
        if (A.info[i].nontrivial) cycles[i] = A.component_cycle(i);

    for (std::size_t i = 0; i < A.info.size(); ++i) {
        const auto& ci = A.info[i];
        if (!ci.nontrivial || !ci.ext_in.empty() || !ci.ext_out.empty()) continue;
        if (ci.bare) {
            r.isolated_cycles.push_back(cycles[i]);
        } else {
            for_each_simple_cycle(g, A.mask(i), [&](const Path& p) {
                r.isolated_cycles.push_back(p);
                return true;
            });
        }
    }

    std::set<Path> transitions;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = A.c.component_of[g.source[e]], b = A.c.component_of[g.target[e]];
        if (a == b && A.info[a].nontrivial) continue;
        transitions.insert(A.transition_through(e, rev));
    }
    auto comp_of_start = [&](const Path& t) { return A.c.component_of[g.source[t.front()]]; };
    auto comp_of_end = [&](const Path& t) { return A.c.component_of[g.target[t.back()]]; };

    std::vector<Path> into, out_of;
    for (const Path& t : transitions) {
        std::size_t a = comp_of_start(t), b = comp_of_end(t);
        if (middle_comp && b == *middle_comp) {
            into.push_back(t);
        } else if (middle_comp && a == *middle_comp) {
            out_of.push_back(t);
        } else {
            r.barbells.push_back({rotate_to_vertex(g, cycles[a], g.source[t.front()]), t,
                                  rotate_to_vertex(g, cycles[b], g.target[t.back()])});
        }
    }
    if (!middle_comp || into.empty() || out_of.empty()) return;

    std::sort(into.begin(), into.end(), [](const Path& x, const Path& y) {
        return std::tie(x.back(), x) < std::tie(y.back(), y);
    });
    std::sort(out_of.begin(), out_of.end(), [](const Path& x, const Path& y) {
        return std::tie(x.front(), x) < std::tie(y.front(), y);
    });
    const Path& K = cycles[*middle_comp];
    const std::size_t count = std::max(into.size(), out_of.size());
    for (std::size_t i = 0; i < count; ++i) {
        const Path& I = into[std::min(i, into.size() - 1)];
        const Path& J = out_of[std::min(i, out_of.size() - 1)];
        DoubleBarbell d;
        d.initial = rotate_to_vertex(g, cycles[comp_of_start(I)], g.source[I.front()]);
        d.into = I;
        d.middle = rotate_to_vertex(g, K, g.source[J.front()]);
        Path from_entry = rotate_to_vertex(g, K, g.target[I.back()]);
        for (std::size_t e : from_entry) {
            if (g.source[e] == g.source[J.front()]) break;
            d.inside.push_back(e);
        }
        d.out_of = J;
        d.terminal = rotate_to_vertex(g, cycles[comp_of_end(J)], g.target[J.back()]);
        r.double_barbells.push_back(std::move(d));
    }
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::nmc: return "nmc";
        case Verdict::omc: return "omc";
        case Verdict::neither: return "neither";
    }
    return "neither";
}

std::vector<std::size_t> CycleReport::covered_edges() const {
    std::set<std::size_t> s;
    auto add = [&](const Path& p) { s.insert(p.begin(), p.end()); };
    for (const auto& c : isolated_cycles) add(c);
    for (const auto& b : barbells) {
        add(b.initial);
        add(b.transition);
        add(b.terminal);
    }
    for (const auto& d : double_barbells) {
        add(d.initial);
        add(d.into);
        add(d.middle);
        add(d.out_of);
        add(d.terminal);
    }
    return {s.begin(), s.end()};
}

std::size_t RauzyGraph::vertex_index(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return none;
    return static_cast<std::size_t>(it - vertices.begin());
}

TruncatedLanguage RauzyGraph::edge_language() const { return validate_language(edges, alphabet); }

Word RauzyGraph::path_letters(const Path& p) const {
    Word w;
    w.reserve(p.size());
    for (std::size_t e : p) w.push_back(edges[e].front());
    return w;
}

Word RauzyGraph::path_label(const Path& p) const {
    if (p.empty()) return {};
    Word w = vertices[graph.source[p.front()]];
    for (std::size_t e : p) w.push_back(edges[e].back());
    return w;
}

RauzyGraph build_rauzy(const TruncatedLanguage& L) {
    if (L.depth() < 2) fail("DepthTooSmall", std::to_string(L.depth()));
    RauzyGraph G;
    G.level = L.depth();
    G.alphabet = L.alphabet();
    G.vertices = project(L, L.depth() - 1).words();
    G.edges = L.words();
    G.graph = Digraph(G.vertices.size());
    const std::size_t k = L.depth() - 1;
    for (const Word& e : G.edges) {
        std::size_t u = G.vertex_index(subword(e, 0, k));
        std::size_t v = G.vertex_index(subword(e, 1, k));
        G.graph.add_edge(u, v);
    }
    return G;
}

RauzyGraph rauzy_from_digraph(const Digraph& g) {
    if (g.vertex_count > 256) fail("BadGraph", "more than 256 vertices");
    std::vector<Word> words;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        words.push_back({static_cast<Symbol>(g.source[e]), static_cast<Symbol>(g.target[e])});
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("BadGraph", "parallel edges have no Rauzy graph");
    return build_rauzy(validate_language(std::move(words), Alphabet::range(g.vertex_count)));
}

TruncatedLanguage sft_language(const RauzyGraph& G, std::size_t m, std::size_t word_budget) {
    if (m < G.level) fail("BadDepth", "sft_language needs m >= level");
    std::vector<std::pair<Word, std::size_t>> cur;
    cur.reserve(G.edges.size());
    for (std::size_t e = 0; e < G.edges.size(); ++e) cur.push_back({G.edges[e], G.graph.target[e]});
    for (std::size_t len = G.level; len < m; ++len) {
        std::vector<std::pair<Word, std::size_t>> next;
        for (const auto& [w, v] : cur) {
            for (std::size_t e : G.graph.out[v]) {
                if (next.size() >= word_budget) fail("GeneratorBudgetExceeded", "sft_language at depth " + std::to_string(m));
                Word x = w;
                x.push_back(G.edges[e].back());
                next.push_back({std::move(x), G.graph.target[e]});
            }
        }
        cur = std::move(next);
    }
    std::vector<Word> words;
    words.reserve(cur.size());
    for (auto& [w, v] : cur) words.push_back(std::move(w));
    return validate_language(std::move(words), G.alphabet);
}

CycleReport classify_nmc(const Digraph& g) {
    Analysis A(g);
    CycleReport r;
    for (std::size_t i = 0; i < A.info.size(); ++i) {
        const auto& ci = A.info[i];
        if (!ci.nontrivial) continue;
        std::optional<Path> k;
        if (ci.bare) {
            if (A.middle_capable(ci)) k = A.component_cycle(i);
        } else if (auto q = A.quick_cycle(i)) {
            k = q;
        } else {
            auto found = A.middle_cycles(i, 1);
            if (!found.empty()) k = found.front();
        }
        if (k) {
            r.verdict = Verdict::neither;
            r.middle_count = 1;
            r.middle_witness = A.witness_for(*k);
            return r;
        }
    }
    r.verdict = Verdict::nmc;
    fill_decomposition(A, r, std::nullopt);
    return r;
}

CycleReport classify_omc(const Digraph& g) {
    Analysis A(g);
    CycleReport r;
    std::vector<Path> found;
    std::optional<std::size_t> middle_comp;
    for (std::size_t i = 0; i < A.info.size() && found.size() < 2; ++i) {
        auto here = A.middle_cycles(i, 2 - found.size());
        if (!here.empty() && !middle_comp) middle_comp = i;
        found.insert(found.end(), here.begin(), here.end());
    }
    r.middle_count = found.size();
    if (found.empty()) {
        r.verdict = Verdict::nmc;
        fill_decomposition(A, r, std::nullopt);
        return r;
    }
    r.middle_witness = A.witness_for(found.front());
    if (found.size() >= 2) {
        r.verdict = Verdict::neither;
        return r;
    }
    r.verdict = Verdict::omc;
    // double barbells exist only when every component is a bare cycle
    bool all_bare = std::all_of(A.info.begin(), A.info.end(),
                                [](const ComponentInfo& ci) { return !ci.nontrivial || ci.bare; });
    if (all_bare) fill_decomposition(A, r, middle_comp);
    return r;
}

bool cylinder_member(const RauzyGraph& G, const TruncatedLanguage& L) {
    if (L.depth() < G.level) fail("BadDepth", "language shallower than the graph level");
    return same_language(project(L, G.level), G.edge_language());
}

std::string to_dot(const RauzyGraph& G) {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    for (const Word& v : G.vertices) os << "  \"" << format_word(v, G.alphabet) << "\";\n";
    for (std::size_t e = 0; e < G.edges.size(); ++e)
        os << "  \"" << format_word(G.vertices[G.graph.source[e]], G.alphabet) << "\" -> \""
           << format_word(G.vertices[G.graph.target[e]], G.alphabet) << "\" [label=\""
           << format_word(G.edges[e], G.alphabet) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace subshift
