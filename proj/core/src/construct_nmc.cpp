#include <algorithm>
#include <map>
#include <set>

#include "construct_util.hpp"
#include "subshift/construct.hpp"
#include "subshift/error.hpp"

namespace subshift {
namespace {

using detail::least_rotation;

Path reverse_path(const Path& p) { return Path(p.rbegin(), p.rend()); }

// Extends edge e (outside every nontrivial component) back to a source
// component and forward to a sink component.
Barbell barbell_through(const Digraph& g, const Digraph& rev, const Condensation& C, std::size_t e) {
    std::vector<bool> in_source(g.vertex_count, false), in_sink(g.vertex_count, false);
    for (std::size_t c : C.sources)
        for (std::size_t v : C.components[c]) in_source[v] = true;
    for (std::size_t c : C.sinks)
        for (std::size_t v : C.components[c]) in_sink[v] = true;
    const auto all = detail::all_vertices(g);

    Path back;
    std::size_t a = g.source[e];
    if (!in_source[a]) {
        auto p = shortest_path(rev, a, in_source, all);
        if (!p) fail("InvariantViolated", "edge not reachable from a source component");
        back = reverse_path(*p);
        a = g.source[back.front()];
    }
    Path fwd;
    std::size_t b = g.target[e];
    if (!in_sink[b]) {
        auto p = shortest_path(g, b, in_sink, all);
        if (!p) fail("InvariantViolated", "edge cannot reach a sink component");
        fwd = *p;
        b = g.target[fwd.back()];
    }
    Barbell bb;
    bb.transition = back;
    bb.transition.push_back(e);
    bb.transition.insert(bb.transition.end(), fwd.begin(), fwd.end());
    const auto comp_a = detail::vertex_mask(g.vertex_count, C.components[C.component_of[a]]);
    const auto comp_b = detail::vertex_mask(g.vertex_count, C.components[C.component_of[b]]);
    bb.initial = *detail::shortest_cycle_through_vertex(g, a, comp_a);
    bb.terminal = *detail::shortest_cycle_through_vertex(g, b, comp_b);
    return bb;
}

// Keeps one rotation per periodic orbit and returns its index.
struct OrbitTable {
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    std::size_t add(const Word& canonical) {
        auto [it, fresh] = index.emplace(canonical, words.size());
        if (fresh) words.push_back(canonical);
        return it->second;
    }
};

}  // namespace

DenseNmc dense_nmc(const TruncatedLanguage& input) {
    const TruncatedLanguage L = detail::at_least_two(input);
    const RauzyGraph G = build_rauzy(L);
    const Digraph& g = G.graph;
    const Digraph rev = detail::reversed(g);
    const Condensation C = condensation(g);

    DenseNmc out;
    std::set<Path> seen_cycles;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const std::size_t cu = C.component_of[g.source[e]], cv = C.component_of[g.target[e]];
        if (cu == cv && !C.trivial[cu]) {
            const auto within = detail::vertex_mask(g.vertex_count, C.components[cu]);
            Path k = canonical_cycle(*detail::shortest_cycle_through_edge(g, e, within));
            if (seen_cycles.insert(k).second) out.cycles.push_back(k);
        } else {
            Barbell b = barbell_through(g, rev, C, e);
            if (std::find(out.barbells.begin(), out.barbells.end(), b) == out.barbells.end()) out.barbells.push_back(b);
        }
    }

    NmcNormalForm& x = out.form;
    x.alphabet = L.alphabet();
    OrbitTable P, S;
    for (const Barbell& b : out.barbells) {
        auto [p, jp] = least_rotation(G.path_letters(b.initial));
        auto [s, js] = least_rotation(G.path_letters(b.terminal));
        const Word p_raw = G.path_letters(b.initial), s_raw = G.path_letters(b.terminal);
        // p_raw = x y with p = y x gives p_raw^inf m = p^inf y m; likewise on the right
        Word middle = concat(subword(p_raw, jp, p_raw.size() - jp), G.path_letters(b.transition));
        middle = concat(middle, subword(s_raw, 0, js));
        NmcNormalForm::Link link{P.add(p), middle, S.add(s)};
        if (std::find(x.links.begin(), x.links.end(), link) == x.links.end()) x.links.push_back(link);
    }
    for (const Path& k : out.cycles) {
        Word w = least_rotation(G.path_letters(k)).first;
        if (!P.index.count(w)) S.add(w);
    }
    x.initial = P.words;
    x.terminal = S.words;
    check_normal_form(x);
    x.level = nmc_witness_level(x, L.depth());
    out.generator = nmc_spec(x);
    return out;
}

std::size_t nmc_witness_level(const NmcNormalForm& x, std::size_t from, std::size_t limit) {
    const GeneratorSpec gen = nmc_spec(x);
    for (std::size_t level = std::max<std::size_t>(from, 2); level <= limit; ++level)
        if (classify_nmc(build_rauzy(generate(gen, level))).verdict == Verdict::nmc) return level;
    fail("InvariantViolated", "no level up to " + std::to_string(limit) + " without middle cycles");
}

Isolation isolation_radius(const NmcNormalForm& x) {
    Isolation iso;
    iso.level = x.level ? x.level : nmc_witness_level(x, 2);
    const CycleReport r = classify_nmc(build_rauzy(generate(nmc_spec(x), iso.level)));
    if (r.verdict != Verdict::nmc) fail("NotNmc", "graph at level " + std::to_string(iso.level) + " has a middle cycle");
    std::size_t longest = 0;
    for (const Barbell& b : r.barbells) longest = std::max(longest, b.transition.size());
    iso.radius = longest + 1;
    return iso;
}

PumpWitness pump_witness(const TruncatedLanguage& input) {
    const TruncatedLanguage L = detail::at_least_two(input);
    const RauzyGraph G = build_rauzy(L);
    const Digraph& g = G.graph;
    const CycleReport r = classify_nmc(G);
    if (r.verdict == Verdict::nmc || !r.middle_witness) fail("IsNmc", "no cycle has both an incoming and an outgoing edge");
    const MiddleWitness& mw = *r.middle_witness;

    PumpWitness w;
    w.level = L.depth();
    w.f = mw.incoming;
    w.g = mw.outgoing;
    w.cycle = rotate_to_vertex(g, mw.cycle, g.source[w.g]);
    const Path from_f = rotate_to_vertex(g, mw.cycle, g.target[w.f]);
    for (std::size_t i = 0; i < from_f.size() && g.source[from_f[i]] != g.source[w.g]; ++i) w.inside.push_back(from_f[i]);

    Path fpg{w.f};
    fpg.insert(fpg.end(), w.inside.begin(), w.inside.end());
    fpg.push_back(w.g);
    w.forbidden = G.path_label(fpg);

    const std::size_t M = w.forbidden.size();
    w.full = sft_spec(G);
    std::vector<Word> words = sft_language(G, M).words();
    words.erase(std::remove(words.begin(), words.end(), w.forbidden), words.end());
    const TruncatedLanguage pruned = validate_language(detail::essential_core(std::move(words)), L.alphabet());
    w.pruned = sft_spec(build_rauzy(pruned));

    if (!same_language(generate(w.pruned, L.depth()), L))
        fail("InvariantViolated", "pruned subshift left the cylinder");
    for (std::size_t d = L.depth() + 1; d <= M && !w.differ_depth; ++d)
        if (!same_language(generate(w.full, d), generate(w.pruned, d))) w.differ_depth = d;
    if (!w.differ_depth) fail("InvariantViolated", "forbidding fPg changed nothing");

    if (is_primitive(g).irreducible) w.transitivity = transitivity_certificate(w.pruned, L.depth(), 4 * M);
    return w;
}

}  // namespace subshift
