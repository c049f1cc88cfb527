#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "subshift/construct.hpp"
#include "subshift/error.hpp"
#include "subshift/io.hpp"

using namespace subshift;

namespace {

std::string error_name(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

TruncatedLanguage golden(std::size_t n) { return generate(golden_mean_spec(), n); }
TruncatedLanguage periodic(const char* w, std::size_t n) {
    return generate(periodic_spec(digits(w), Alphabet::range(2)), n);
}

}  // namespace

TEST_CASE("dense NMC subshifts") {
    const DenseNmc d = dense_nmc(golden(4));
    CHECK(generate(d.generator, 4) == golden(4));
    CHECK(d.form.level >= 4);
    CHECK(classify_nmc(build_rauzy(generate(d.generator, d.form.level))).verdict == Verdict::nmc);
    // the per-edge witnesses are closed walks of the level-4 graph
    const Digraph& g = build_rauzy(golden(4)).graph;
    for (const Path& c : d.cycles) {
        REQUIRE_FALSE(c.empty());
        CHECK(g.target[c.back()] == g.source[c.front()]);
        for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(g.target[c[i]] == g.source[c[i + 1]]);
    }

    // a single cycle gives back its own periodic orbit
    const DenseNmc p = dense_nmc(periodic("011", 3));
    CHECK(p.form.links.empty());
    CHECK(p.form.initial.size() + p.form.terminal.size() == 1);
    CHECK(count_orbits_nmc(p.form) == 1);

    // nondecreasing words: barbells from 0^inf through 1 to 2^inf
    const DenseNmc n = dense_nmc(corpus::nondecreasing3(2));
    CHECK(generate(n.generator, 2) == corpus::nondecreasing3(2));
    CHECK_FALSE(n.barbells.empty());
}

TEST_CASE("NMC subshifts are isolated") {
    NmcNormalForm x = corpus::hand_forms()[0].form;  // 0^inf 1 2^inf
    x.level = nmc_witness_level(x, 2);
    const Isolation iso = isolation_radius(x);
    CHECK(iso.radius <= 4);
    const std::size_t n = iso.level + iso.radius;
    const GeneratorSpec S = sft_spec(generate(nmc_spec(x), n));
    for (std::size_t d = 1; d <= 3 * n; ++d) CHECK(generate(S, d) == generate(nmc_spec(x), d));

    NmcNormalForm per = corpus::hand_forms()[1].form;
    per.level = nmc_witness_level(per, 2);
    CHECK(isolation_radius(per).radius == 1);

    NmcNormalForm bad = x;
    bad.level = 2;
    const bool middle = classify_nmc(build_rauzy(generate(nmc_spec(bad), 2))).verdict != Verdict::nmc;
    if (middle) CHECK(error_name([&] { isolation_radius(bad); }) == "NotNmc");
}

TEST_CASE("pumping") {
    const PumpWitness w = pump_witness(golden(4));
    CHECK(generate(w.full, 4) == generate(w.pruned, 4));
    CHECK(w.differ_depth > 4);
    CHECK(w.differ_depth <= 4 + w.forbidden.size());
    // the forbidden path label is absent from Y but present in S(C)
    CHECK(generate(w.full, w.forbidden.size()).contains(w.forbidden));
    CHECK_FALSE(generate(w.pruned, w.forbidden.size()).contains(w.forbidden));
    const DistanceResult d = hausdorff_distance(generate(w.full, w.differ_depth), generate(w.pruned, w.differ_depth));
    CHECK(d.exact());
    CHECK(d.value == w.differ_depth);
    REQUIRE(w.transitivity);
    CHECK(w.transitivity->found);
    CHECK_NOTHROW(pump_witness(generate(full_shift_spec(2), 2)));
    CHECK(error_name([] { pump_witness(periodic("011", 3)); }) == "IsNmc");
}

TEST_CASE("OMC subcylinders") {
    const OmcCylinder c = omc_subcylinder(golden(4));
    CHECK(c.depth > 4);
    CHECK(classify_omc(build_rauzy(c.language)).verdict == Verdict::omc);
    CHECK(project(c.language, 4) == golden(4));
    const OmcCylinder nd = omc_subcylinder(corpus::nondecreasing3(2));
    CHECK(classify_omc(build_rauzy(nd.language)).verdict == Verdict::omc);
    CHECK(error_name([] { omc_subcylinder(periodic("011", 3)); }) == "IsNmc");
}

TEST_CASE("nondecreasing words form an OMC graph around the loop at 1") {
    const RauzyGraph G = build_rauzy(corpus::nondecreasing3(2));
    const CycleReport r = classify_omc(G);
    REQUIRE(r.verdict == Verdict::omc);
    REQUIRE(r.middle_witness);
    REQUIRE(r.middle_witness->cycle.size() == 1);
    CHECK(oracle::str(G.edges[r.middle_witness->cycle.front()]) == "11");
}

TEST_CASE("sparse OMC counts") {
    const IndexSet squares = IndexSet::parse("squares");
    const SparseOmc s = sparse_omc(corpus::nondecreasing3(2), squares);
    for (std::size_t m = 1; m <= 60; ++m) {
        CAPTURE(m);
        CHECK(sparse_omc_measured(s, m) <= sparse_omc_bound(s, m));
        CHECK(sparse_omc_paths(s, m) <= sparse_omc_estimate(s, m));
    }
    for (std::size_t m = 1; m <= 30; ++m) CHECK(sparse_omc_measured(s, m) == sparse_omc_paths(s, m));

    // R = every lap count: the closed form of the path count
    const SparseOmc n = sparse_omc(corpus::nondecreasing3(2), IndexSet::parse("naturals"));
    for (std::size_t m = 1; m <= 60; ++m) {
        std::size_t expect = 0;
        for (std::size_t r = 1; r * n.cycle_length + n.inside_length + 1 < m; ++r)
            expect += m - n.inside_length - r * n.cycle_length - 1;
        CHECK(sparse_omc_paths(n, m) == expect);
    }
    CHECK(error_name([&] { sparse_omc(periodic("011", 3), squares); }) == "IsNmc");
}

TEST_CASE("quadratic from points") {
    // one pump family contributes n^2 / |pump|
    const PumpFamily fam{digits("0"), digits("1"), digits("2"), digits("1"), digits("0"), IndexSet::parse("naturals")};
    const GeneratorSpec g = points_spec(Alphabet::range(3), {}, {fam});
    const Quadratic q = omc_quadratic(g);
    CHECK(q.C == Rational(1));
    const ComplexityTable t = complexity_table(g, 60);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(q(static_cast<std::int64_t>(n)) >= Rational(static_cast<std::int64_t>(t.c(n))));
}

TEST_CASE("letter-to-word substitutions") {
    const Tau tau = letword_tau(golden(2));
    CHECK(tau.image0.size() == tau.image1.size());
    CHECK(tau.image0 != tau.image1);
    // both images are closed walks of the golden mean graph
    CHECK(cylinder_member(build_rauzy(golden(2)), generate(tau_apply(tau, fibonacci_spec(20)), 2)));
    for (const ComplexityBound& b : tau_complexity_bounds(tau, full_shift_spec(2), 3 * tau.ell(), 3 * tau.ell() + 20))
        CHECK(b.holds());
    CHECK(error_name([] { letword_tau(periodic("011", 3)); }) == "IsSingleCycle");
    CHECK(error_name([] { letword_tau(corpus::nondecreasing3(2)); }) == "NotIrreducible");

    // the image of 0^inf is the periodic orbit of image0
    const GeneratorSpec zero = periodic_spec(digits("0"), Alphabet::range(2));
    const TruncatedLanguage img = generate(tau_apply(tau, zero), 2 * tau.ell());
    CHECK(img == oracle::language_of_word(power(tau.image0, 5), 2 * tau.ell(), Alphabet::range(2)));
}

TEST_CASE("decomposing words of a substitution image") {
    const Tau tau = letword_tau(golden(3));
    const std::size_t l = tau.ell();
    const Word full = tau.apply(digits("0110"));
    const Word cut(full.begin() + 1, full.end() - 2);
    const TauDecomposition d = tau_decompose(cut, tau);
    CHECK(d.prefix.size() == l - 1);
    CHECK(oracle::str(d.inner) == "11");
    CHECK(d.suffix.size() == l - 2);
    CHECK(concat(concat(d.prefix, tau.apply(d.inner)), d.suffix) == cut);
    const auto all = all_tau_decompositions(cut, tau);
    REQUIRE(all.size() == 1);
    CHECK(all.front() == d);
    const Word shorter(full.begin(), full.begin() + static_cast<long>(3 * l - 2));
    CHECK(error_name([&] { tau_decompose(shorter, tau); }) == "TooShort");
    Word alien = cut;
    alien[3] = 7;
    CHECK(error_name([&] { tau_decompose(alien, tau); }) == "NotInImage");
    const DecipherReport r = certify_decipherability(tau);
    CHECK(r.unique);
    CHECK(r.length == 3 * l - 1);
}

TEST_CASE("substitution files round-trip") {
    const Tau tau = letword_tau(golden(3));
    const Tau back = parse_tau(format_tau(tau));
    CHECK(back.image0 == tau.image0);
    CHECK(back.image1 == tau.image1);
    CHECK(back.marker == tau.marker);
    CHECK(back.marker_offset == tau.marker_offset);
    CHECK(back.gap0 == tau.gap0);
    CHECK(back.gap1 == tau.gap1);
    CHECK(back.base == tau.base);
    const DenseNmc d = dense_nmc(golden(3));
    const NmcFile f = parse_nmc(format_nmc(d.form, golden(3)));
    CHECK(f.language == golden(3));
    CHECK(f.form.initial == d.form.initial);
    CHECK(f.form.terminal == d.form.terminal);
    CHECK(f.form.links == d.form.links);
    CHECK(f.form.level == d.form.level);
}

TEST_CASE("return-word chain") {
    const GeneratorSpec fib = fibonacci_spec(20);
    const SubstitutionChain ch = rs_substitution_chain(fib, 3);
    REQUIRE(ch.levels.size() >= 3);
    CHECK(ch.right_proper);
    for (std::size_t k = 0; k < ch.levels.size(); ++k) {
        const ChainLevel& lv = ch.levels[k];
        CHECK(lv.u.size() <= lv.v.size());
        // w u ends with w and w occurs nowhere else inside
        const Word wu = concat(lv.w, lv.u);
        CHECK(count_occurrences(wu, lv.w) == 2);
        CHECK(subword(wu, wu.size() - lv.w.size(), lv.w.size()) == lv.w);
        CHECK(generate(fib, wu.size()).contains(wu));
        if (k) CHECK(ch.composed[k].size() > ch.composed[k - 1].size());
    }
    CHECK(error_name([] { rs_substitution_chain(golden_mean_spec(), 3, 12); }) == "NoOneRsLevel");
    CHECK(error_name([] { rs_substitution_chain(periodic_spec(digits("011"), Alphabet::range(2)), 3, 12); }) ==
          "NoOneRsLevel");
}

TEST_CASE("mixing covers") {
    const RauzyGraph G = build_rauzy(golden(2));
    const MixingCover c = mixing_cover(G);
    CHECK(std::gcd(c.first.size(), c.second.size()) == 1);
    CHECK(mixing_certificate(c.generator, 1, 12).found);
    const std::size_t depth = c.first.size() + c.second.size() + 2;
    const TruncatedLanguage Z = generate(c.generator, depth);
    for (const Word& w : Z.words())
        for (const Word& e : G.edges) CHECK(has_factor(w, e));

    Digraph rose(1);
    rose.add_edge(0, 0);
    rose.add_edge(0, 0);
    const MixingCover r = mixing_cover(rose);
    std::vector<std::size_t> lens = {r.first.size(), r.second.size()};
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<std::size_t>{2, 3});

    Digraph cycle(3);
    cycle.add_edge(0, 1);
    cycle.add_edge(1, 2);
    cycle.add_edge(2, 0);
    CHECK(error_name([&] { mixing_cover(cycle); }) == "NotPrimitive");
}
