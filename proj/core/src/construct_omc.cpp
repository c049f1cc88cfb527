#include <algorithm>
#include <set>

#include "construct_util.hpp"
#include "subshift/construct.hpp"
#include "subshift/error.hpp"

namespace subshift {
namespace {

using detail::least_rotation;

struct Candidate {
    Path cycle;      // rotated to the attachment vertex
    Path link;       // I (ending with f) or J (starting with g)
    Word orbit;
};

bool better(const Candidate& a, const Candidate& b) {
    auto key = [](const Candidate& c) { return std::make_tuple(c.link.size(), c.cycle.size(), c.orbit); };
    return key(a) < key(b);
}

// Cycles other than K's orbit that can feed into f (incoming = true) or be
// reached from g, each with its shortest connecting path.
std::vector<Candidate> attachable(const RauzyGraph& G, const std::vector<Path>& cycles, const Word& k_orbit,
                                  std::size_t f, std::size_t g_edge, bool incoming) {
    const Digraph& g = G.graph;
    const Digraph rev = detail::reversed(g);
    const auto all = detail::all_vertices(g);
    std::vector<Candidate> out;
    for (const Path& c : cycles) {
        Word orbit = least_rotation(G.path_letters(c)).first;
        if (orbit == k_orbit) continue;
        std::optional<Candidate> best;
        for (std::size_t v : cycle_vertices(g, c)) {
            Candidate cand;
            cand.orbit = orbit;
            if (incoming) {
                const std::size_t s = g.source[f];
                if (v != s) {
                    std::vector<bool> t(g.vertex_count, false);
                    t[v] = true;
                    auto p = shortest_path(rev, s, t, all);
                    if (!p) continue;
                    cand.link.assign(p->rbegin(), p->rend());
                }
                cand.link.push_back(f);
            } else {
                const std::size_t t0 = g.target[g_edge];
                cand.link.push_back(g_edge);
                if (v != t0) {
                    std::vector<bool> t(g.vertex_count, false);
                    t[v] = true;
                    auto p = shortest_path(g, t0, t, all);
                    if (!p) continue;
                    cand.link.insert(cand.link.end(), p->begin(), p->end());
                }
            }
            cand.cycle = rotate_to_vertex(g, c, v);
            if (!best || better(cand, *best)) best = cand;
        }
        if (best) out.push_back(*best);
    }
    std::sort(out.begin(), out.end(), better);
    return out;
}

std::set<Word> link_orbits(const NmcNormalForm& x, bool initial_side) {
    std::set<Word> s;
    for (const auto& l : x.links)
        s.insert(primitive_root_canonical(initial_side ? x.initial[l.from] : x.terminal[l.to]));
    return s;
}

PumpFamily family_of(const RauzyGraph& G, const DoubleBarbell& d, const IndexSet& R) {
    PumpFamily fam;
    fam.left = G.path_letters(d.initial);
    fam.pre = concat(G.path_letters(d.into), G.path_letters(d.inside));
    fam.pump = G.path_letters(d.middle);
    fam.post = G.path_letters(d.out_of);
    fam.right = G.path_letters(d.terminal);
    fam.R = R;
    return fam;
}

bool contains_in_order(const Word& w, const Word& a, const Word& b) {
    for (std::size_t i = 0; i + a.size() <= w.size(); ++i) {
        if (!std::equal(a.begin(), a.end(), w.begin() + i)) continue;
        for (std::size_t j = i + 1; j + b.size() <= w.size(); ++j)
            if (std::equal(b.begin(), b.end(), w.begin() + j)) return true;
        return false;  // later occurrences of a only shrink the window for b
    }
    return false;
}

}  // namespace

OmcCylinder omc_subcylinder(const TruncatedLanguage& input) {
    const TruncatedLanguage L = detail::at_least_two(input);
    const RauzyGraph G = build_rauzy(L);
    const Digraph& g = G.graph;
    const CycleReport r = classify_nmc(G);
    if (r.verdict == Verdict::nmc || !r.middle_witness) fail("IsNmc", "no cycle has both an incoming and an outgoing edge");
    const MiddleWitness& mw = *r.middle_witness;
    const DenseNmc Y = dense_nmc(L);

    std::vector<Path> cycles;
    try {
        for_each_simple_cycle(g, {}, [&](const Path& c) {
            cycles.push_back(c);
            return true;
        }, 20000);
    } catch (const Error& e) {
        if (e.name() != "CycleCapExceeded") throw;
    }

    DoubleBarbell d;
    d.middle = rotate_to_vertex(g, mw.cycle, g.source[mw.outgoing]);
    const Path from_f = rotate_to_vertex(g, mw.cycle, g.target[mw.incoming]);
    for (std::size_t i = 0; i < from_f.size() && g.source[from_f[i]] != g.source[mw.outgoing]; ++i)
        d.inside.push_back(from_f[i]);
    const Word k_orbit = least_rotation(G.path_letters(mw.cycle)).first;

    // B must not already receive a heteroclinic point, E must not emit one,
    // otherwise they would become middle cycles as well.
    const auto receivers = link_orbits(Y.form, false), emitters = link_orbits(Y.form, true);
    const auto ins = attachable(G, cycles, k_orbit, mw.incoming, mw.outgoing, true);
    const auto outs = attachable(G, cycles, k_orbit, mw.incoming, mw.outgoing, false);
    bool chosen = false;
    for (const auto& b : ins) {
        if (receivers.count(b.orbit)) continue;
        for (const auto& e : outs) {
            if (e.orbit == b.orbit || emitters.count(e.orbit)) continue;
            d.initial = b.cycle;
            d.into = b.link;
            d.out_of = e.link;
            d.terminal = e.cycle;
            chosen = true;
            break;
        }
        if (chosen) break;
    }
    if (!chosen) fail("InvariantViolated", "no pair of end cycles for a double barbell");

    IndexSet all_r;
    all_r.kind = IndexSet::Kind::naturals0;
    GeneratorSpec gen = points_spec(L.alphabet(), normal_form_points(Y.form), {family_of(G, d, all_r)});
    for (std::size_t N = L.depth() + 1; N <= 512; ++N) {
        TruncatedLanguage LN = generate(gen, N);
        if (classify_omc(build_rauzy(LN)).verdict != Verdict::omc) continue;
        if (!same_language(project(LN, L.depth()), L)) fail("InvariantViolated", "subcylinder left the cylinder");
        return OmcCylinder{N, std::move(LN), std::move(gen), d};
    }
    fail("InvariantViolated", "no OMC level up to 512");
}

SparseOmc sparse_omc(const TruncatedLanguage& input, const IndexSet& R) {
    TruncatedLanguage L = detail::at_least_two(input);
    CycleReport rep = classify_omc(build_rauzy(L));
    if (rep.verdict == Verdict::nmc) fail("IsNmc", "no cycle has both an incoming and an outgoing edge");
    if (rep.verdict != Verdict::omc || rep.double_barbells.empty()) {
        L = omc_subcylinder(L).language;
        rep = classify_omc(build_rauzy(L));
        if (rep.verdict != Verdict::omc || rep.double_barbells.empty())
            fail("InvariantViolated", "OMC refinement without a double barbell");
    }
    const RauzyGraph G = build_rauzy(L);

    std::vector<BiPoint> pts;
    for (const Path& c : rep.isolated_cycles) {
        Word w = G.path_letters(c);
        pts.push_back({w, {}, w});
    }
    for (const Barbell& b : rep.barbells)
        pts.push_back({G.path_letters(b.initial), G.path_letters(b.transition), G.path_letters(b.terminal)});
    std::vector<PumpFamily> fams;
    for (const DoubleBarbell& d : rep.double_barbells) fams.push_back(family_of(G, d, R));

    const DoubleBarbell& d = rep.double_barbells.front();
    SparseOmc s;
    s.generator = points_spec(L.alphabet(), std::move(pts), std::move(fams));
    s.level = L.depth();
    s.cycle_length = d.middle.size();
    s.inside_length = d.inside.size();
    s.R = R;
    s.f_word = G.edges[d.into.back()];
    s.g_word = G.edges[d.out_of.front()];
    return s;
}

std::size_t sparse_omc_paths(const SparseOmc& s, std::size_t m) {
    std::size_t total = 0;
    for (std::size_t r : s.R.enumerate(0, m)) {
        const std::size_t used = s.inside_length + r * s.cycle_length + 1;
        if (m > used) total += m - used;
    }
    return total;
}

std::size_t sparse_omc_measured(const SparseOmc& s, std::size_t m) {
    const TruncatedLanguage L = generate(s.generator, m + s.level - 1);
    std::size_t count = 0;
    for (const Word& w : L.words())
        if (contains_in_order(w, s.f_word, s.g_word)) ++count;
    return count;
}

std::size_t sparse_omc_estimate(const SparseOmc& s, std::size_t m) {
    std::size_t total = 0;
    for (std::size_t r : s.R.enumerate(1, m))
        if (r * s.cycle_length <= m) total += m + 1 - r * s.cycle_length;
    return total;
}

std::size_t sparse_omc_bound(const SparseOmc& s, std::size_t m) { return m * s.R.enumerate(1, m).size(); }

Quadratic omc_quadratic(const GeneratorSpec& gen) {
    const auto* src = std::get_if<PointsSource>(&gen.source);
    if (!src) fail("BadParameter", "quadratic bound needs a points generator");
    auto sz = [](const Word& w) { return static_cast<std::int64_t>(w.size()); };
    Quadratic q;
    // a point l^inf m r^inf has at most |l| + |r| words inside its periodic
    // ends and at most n + |m| - 1 windows meeting m or the junction
    auto add_point = [&](const BiPoint& x) {
        if (x.middle.empty() && primitive_root_canonical(x.left) == primitive_root_canonical(x.right)) {
            q.E += sz(x.left);
            return;
        }
        q.D += 1;
        q.E += sz(x.left) + sz(x.right) + sz(x.middle);
    };
    for (const BiPoint& x : src->points) add_point(x);
    for (const PumpFamily& f : src->families) {
        if (!f.R.infinite()) {
            for (std::size_t r : f.R.members)
                add_point({f.left, concat(concat(f.pre, power(f.pump, r)), f.post), f.right});
            continue;
        }
        // windows meeting both the end of pre and the start of post: at most
        // n for each r with r|pump| <= n, so n^2/|pump| + n in total
        q.C += Rational(1, sz(f.pump));
        q.D += 1;
        add_point({f.left, f.pre, f.pump});
        add_point({f.pump, f.post, f.right});
        q.E += sz(f.left) + sz(f.right) + sz(f.pump);
    }
    return q;
}

}  // namespace subshift
