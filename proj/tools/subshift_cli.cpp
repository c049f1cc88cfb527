// subshift: batch front end for the library. Reports are `key: value`
// lines; --pretty switches to aligned tables where that helps.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "subshift/certify.hpp"
#include "subshift/construct.hpp"
#include "subshift/error.hpp"
#include "subshift/generators.hpp"
#include "subshift/io.hpp"
#include "subshift/lang.hpp"
#include "subshift/rauzy.hpp"

using namespace subshift;

namespace {

struct Input {
    std::string lang_path;
    std::string spec;
    std::size_t depth = 0;

    void attach(CLI::App* app, bool need_depth = true) {
        auto* l = app->add_option("--lang", lang_path, "language file");
        auto* s = app->add_option("--spec", spec, "generator spec string");
        l->excludes(s);
        if (need_depth) app->add_option("--depth", depth, "depth for --spec (default --budget-n)");
    }
    bool has_spec() const { return !spec.empty(); }
    bool empty() const { return lang_path.empty() && spec.empty(); }

    TruncatedLanguage language(std::size_t default_depth) const {
        if (!lang_path.empty()) return parse_language(read_text_file(lang_path));
        if (spec.empty()) throw CLI::RequiredError("--lang or --spec");
        return generate(parse_spec(spec), depth ? depth : default_depth);
    }
    GeneratorSpec generator() const {
        if (!spec.empty()) return parse_spec(spec);
        if (lang_path.empty()) throw CLI::RequiredError("--spec or --lang");
        return sft_spec(parse_language(read_text_file(lang_path)));
    }
};

struct Globals {
    std::size_t budget_n = 14;
    std::size_t budget_k = 8;
    bool pretty = false;
    std::string out;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string edges_text(const RauzyGraph& G, const Path& p) {
    std::string s;
    for (std::size_t e : p) {
        if (!s.empty()) s += ' ';
        s += format_word(G.edges[e], G.alphabet);
    }
    return s;
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(g.out, text);
        std::cout << "written: " << g.out << "\n";
    }
}

Word word_arg(const std::string& text, const Alphabet& a) { return parse_word(text, a); }

// ---- verbs -----------------------------------------------------------------

void run_gen(const Globals& g, const Input& in) {
    if (!in.has_spec()) throw CLI::RequiredError("--spec");
    emit(g, format_language(in.language(g.budget_n)));
}

void run_classify(const Globals& g, const Input& in, const std::string& checks) {
    const TruncatedLanguage L = in.language(g.budget_n);
    const RauzyGraph G = build_rauzy(L);
    std::stringstream ss(checks);
    std::string check;
    while (std::getline(ss, check, ',')) {
        if (check == "essential") {
            std::cout << "essential: " << yes_no(G.graph.essential()) << "\n";
        } else if (check == "nmc") {
            const CycleReport r = classify_nmc(G);
            std::cout << "nmc: " << yes_no(r.verdict == Verdict::nmc);
            if (r.middle_witness)
                std::cout << " (witness cycle=" << edges_text(G, r.middle_witness->cycle)
                          << ", incoming=" << format_word(G.edges[r.middle_witness->incoming], G.alphabet)
                          << ", outgoing=" << format_word(G.edges[r.middle_witness->outgoing], G.alphabet) << ")";
            else
                std::cout << " (isolated=" << r.isolated_cycles.size() << ", barbells=" << r.barbells.size() << ")";
            std::cout << "\n";
        } else if (check == "omc") {
            const CycleReport r = classify_omc(G);
            std::cout << "omc: " << yes_no(r.verdict == Verdict::omc) << " (middle cycles: "
                      << (r.middle_count >= 2 ? std::string("at least 2") : std::to_string(r.middle_count)) << ")\n";
        } else if (check == "primitive") {
            const PrimitivityReport p = is_primitive(G);
            std::cout << "primitive: " << yes_no(p.primitive) << " (irreducible=" << yes_no(p.irreducible)
                      << ", period=" << p.period << ")\n";
        } else {
            throw CLI::ValidationError("--checks", "unknown check '" + check + "'");
        }
    }
}

void run_rauzy(const Globals& g, const Input& in, const std::string& dot) {
    const TruncatedLanguage L = in.language(g.budget_n);
    const RauzyGraph G = build_rauzy(L);
    const Condensation C = condensation(G);
    std::cout << "level: " << G.level << "\n"
              << "vertices: " << G.vertices.size() << "\n"
              << "edges: " << G.edges.size() << "\n"
              << "components: " << C.components.size() << "\n";
    if (g.pretty) {
        for (std::size_t v = 0; v < G.vertices.size(); ++v)
            std::cout << "  v" << std::left << std::setw(4) << v << format_word(G.vertices[v], G.alphabet) << "\n";
        for (const Word& e : G.edges) std::cout << "  " << format_word(e, G.alphabet) << "\n";
    }
    if (!dot.empty()) {
        write_text_file(dot, to_dot(G));
        std::cout << "dot: " << dot << "\n";
    }
}

void run_complexity(const Globals& g, const Input& in, std::size_t max_n) {
    const std::size_t N = max_n ? max_n : g.budget_n;
    ComplexityTable t = in.has_spec() ? complexity_table(in.generator(), N)
                                      : complexity_table(in.language(g.budget_n), N);
    if (g.pretty) {
        std::cout << std::right << std::setw(5) << "n" << std::setw(12) << "c(n)" << std::setw(10) << "diff"
                  << std::setw(8) << "rs" << "\n";
        for (std::size_t n = 1; n <= t.values.size(); ++n)
            std::cout << std::setw(5) << n << std::setw(12) << t.c(n) << std::setw(10)
                      << (n <= t.diffs.size() ? std::to_string(t.diff(n)) : "") << std::setw(8)
                      << (n <= t.special.size() ? t.special[n - 1].size() : 0) << "\n";
    } else {
        for (std::size_t n = 1; n <= t.values.size(); ++n) std::cout << "c(" << n << "): " << t.c(n) << "\n";
    }
    std::cout << "right-special identity: " << (right_special_identity_holds(t) ? "holds" : "fails") << "\n";
    const MorseHedlund mh = morse_hedlund_check(t);
    std::cout << "morse-hedlund: "
              << (mh.eventually_periodic ? "eventually-periodic(" + std::to_string(mh.n0) + ")" : "aperiodic-consistent")
              << "\n";
}

struct CertArgs {
    std::string kind;
    std::optional<std::size_t> k, n, p, fixed_n;
    std::string eps = "1/4", word, mu, cert, markers, denominator = "valid";
    std::size_t depth = 0;
    bool recheck_found = false;
};

void print_cert(const Certificate& c, const GeneratorSpec& gen, bool recheck_it) {
    std::cout << "certificate: " << c.to_string() << "\n";
    if (recheck_it && c.found) std::cout << "recheck: " << (recheck(c, gen) ? "ok" : "failed") << "\n";
}

void run_certify(const Globals& g, const Input& in, const CertArgs& a) {
    const GeneratorSpec gen = in.generator();
    const std::size_t budget = g.budget_n;
    if (!a.cert.empty()) {
        const Certificate c = Certificate::parse(a.cert);
        std::cout << "recheck: " << (recheck(c, gen) ? "ok" : "failed") << "\n";
        return;
    }
    // without an explicit parameter, sweep 1..budget-k and stop at the first miss
    auto sweep = [&](const std::optional<std::size_t>& given, auto&& search) {
        const std::size_t lo = given ? *given : 1, hi = given ? *given : g.budget_k;
        for (std::size_t x = lo; x <= hi; ++x) {
            const Certificate c = search(x);
            print_cert(c, gen, a.recheck_found);
            if (!c.found) break;
        }
    };
    const Rational eps = parse_rational(a.eps);
    if (a.kind == "transitivity") {
        sweep(a.k, [&](std::size_t k) { return transitivity_certificate(gen, k, budget); });
    } else if (a.kind == "minimality") {
        sweep(a.k, [&](std::size_t k) { return minimality_certificate(gen, k, budget); });
    } else if (a.kind == "mixing") {
        sweep(a.n, [&](std::size_t n) { return mixing_certificate(gen, n, budget); });
    } else if (a.kind == "toeplitz") {
        print_cert(toeplitz_certificate(gen, eps, budget, a.fixed_n), gen, a.recheck_found);
    } else if (a.kind == "partition") {
        std::optional<std::vector<Word>> set;
        if (!a.markers.empty()) {
            const Alphabet alpha = generate(gen, 1).alphabet();
            set.emplace();
            std::stringstream ss(a.markers);
            std::string w;
            while (std::getline(ss, w, '|')) set->push_back(word_arg(w, alpha));
        }
        print_cert(partition_certificate(gen, a.p.value_or(2), budget, set), gen, a.recheck_found);
    } else if (a.kind == "rigidity") {
        const auto den = a.denominator == "length" ? RigidityDenominator::word_length : RigidityDenominator::valid_positions;
        print_cert(rigidity_certificate(gen, a.n.value_or(1), eps, budget, den), gen, a.recheck_found);
    } else if (a.kind == "nonbalance") {
        print_cert(nonbalance_certificate(gen, a.n.value_or(2), budget), gen, a.recheck_found);
    } else if (a.kind == "frequency") {
        const TruncatedLanguage L1 = generate(gen, 1);
        const auto f = frequency_estimate(gen, word_arg(a.word, L1.alphabet()), a.depth ? a.depth : budget);
        std::cout << "word: " << a.word << "\ndepth: " << f.depth << "\nlower: " << format_rational(f.lo)
                  << "\nupper: " << format_rational(f.hi) << "\n";
    } else if (a.kind == "balance") {
        const TruncatedLanguage L1 = generate(gen, 1);
        const Word w = word_arg(a.word, L1.alphabet());
        const std::size_t depth = a.depth ? a.depth : budget;
        const Rational mu = a.mu.empty() ? frequency_estimate(gen, w, depth).lo : parse_rational(a.mu);
        const BalanceReport r = balance_report(gen, w, depth, mu);
        std::cout << "word: " << a.word << "\nmu: " << format_rational(r.mu) << "\nbound: " << format_rational(r.bound)
                  << "\ntrend: " << (r.trend == BalanceReport::Trend::growing ? "growing" : "bounded-so-far") << "\n";
        if (g.pretty)
            for (std::size_t l = 1; l <= r.max_abs.size(); ++l)
                std::cout << std::setw(6) << l << "  " << format_rational(r.max_abs[l - 1]) << "\n";
    } else if (a.kind == "one-rs") {
        std::cout << "levels:";
        for (std::size_t n : one_rs_levels(gen, budget)) std::cout << ' ' << n;
        std::cout << "\n";
    } else {
        throw CLI::ValidationError("kind", "unknown certificate kind '" + a.kind + "'");
    }
}

struct ConstructArgs {
    std::string what;
    std::string inner, R = "squares", nmc_path;
    std::size_t levels = 3, m_max = 0;
    bool verify = false;
};

void print_form(const NmcNormalForm& x) {
    const Alphabet& a = x.alphabet;
    for (const Word& p : x.initial) std::cout << "initial: " << format_word(p, a) << "\n";
    for (const Word& s : x.terminal) std::cout << "terminal: " << format_word(s, a) << "\n";
    for (const auto& l : x.links)
        std::cout << "link: " << format_word(x.initial[l.from], a) << " | " << format_word(l.middle, a) << " | "
                  << format_word(x.terminal[l.to], a) << "\n";
    std::cout << "witness level: " << x.level << "\n";
}

void run_construct(const Globals& g, const Input& in, const ConstructArgs& a) {
    const std::string& w = a.what;
    if (w == "chain") {
        const SubstitutionChain ch = rs_substitution_chain(in.generator(), a.levels);
        const Alphabet src = generate(in.generator(), 1).alphabet();
        const Alphabet bin = Alphabet::range(2);
        for (std::size_t i = 0; i < ch.levels.size(); ++i) {
            const ChainLevel& l = ch.levels[i];
            const Alphabet& ra = i == 0 ? src : bin;
            std::cout << "level " << i + 1 << ": n=" << l.n << " w=" << format_word(l.w, src)
                      << " u=" << format_word(l.u, src) << " v=" << format_word(l.v, src)
                      << " rho(0)=" << format_word(l.rho0, ra) << " rho(1)=" << format_word(l.rho1, ra) << "\n";
        }
        std::cout << "right-proper: " << yes_no(ch.right_proper) << "\n";
        return;
    }
    if (w == "isolation" && !a.nmc_path.empty()) {
        const NmcFile f = parse_nmc(read_text_file(a.nmc_path));
        const Isolation iso = isolation_radius(f.form);
        std::cout << "level: " << iso.level << "\nradius: " << iso.radius << "\n";
        return;
    }
    const TruncatedLanguage L = in.language(g.budget_n);
    if (w == "dense-nmc") {
        const DenseNmc d = dense_nmc(L);
        print_form(d.form);
        std::cout << "cylinder member: " << yes_no(cylinder_member(build_rauzy(L), generate(d.generator, L.depth())))
                  << "\n";
        if (!g.out.empty()) emit(g, format_nmc(d.form, generate(d.generator, d.form.level)));
    } else if (w == "isolation") {
        const DenseNmc d = dense_nmc(L);
        const Isolation iso = isolation_radius(d.form);
        std::cout << "level: " << iso.level << "\nradius: " << iso.radius << "\n";
        if (a.verify) {
            const RauzyGraph top = build_rauzy(generate(d.generator, iso.level + iso.radius));
            bool ok = true;
            for (std::size_t m = iso.level + iso.radius; m <= 3 * (iso.level + iso.radius) && ok; ++m)
                ok = same_language(sft_language(top, m), generate(d.generator, m));
            std::cout << "isolation: " << (ok ? "verified" : "FAILED") << " to depth "
                      << 3 * (iso.level + iso.radius) << "\n";
        }
    } else if (w == "pump") {
        const PumpWitness p = pump_witness(L);
        const RauzyGraph G = build_rauzy(L);
        std::cout << "f: " << format_word(G.edges[p.f], G.alphabet) << "\ng: " << format_word(G.edges[p.g], G.alphabet)
                  << "\ncycle: " << edges_text(G, p.cycle) << "\nforbidden: " << format_word(p.forbidden, G.alphabet)
                  << "\ndiffer depth: " << p.differ_depth << "\n";
        if (p.transitivity) std::cout << "transitivity: " << p.transitivity->to_string() << "\n";
    } else if (w == "omc") {
        const OmcCylinder c = omc_subcylinder(L);
        std::cout << "depth: " << c.depth << "\ngenerator: " << to_spec_string(c.generator) << "\n";
        if (!g.out.empty()) emit(g, format_language(c.language));
    } else if (w == "sparse-omc") {
        const SparseOmc s = sparse_omc(L, IndexSet::parse(a.R));
        std::cout << "level: " << s.level << "\ncycle length: " << s.cycle_length << "\ninside length: "
                  << s.inside_length << "\nR: " << s.R.to_string() << "\ngenerator: " << to_spec_string(s.generator)
                  << "\n";
        for (std::size_t m = 1; m <= a.m_max; ++m)
            std::cout << "p(" << m << "): " << sparse_omc_paths(s, m) << " measured=" << sparse_omc_measured(s, m)
                      << " bound=" << sparse_omc_bound(s, m) << "\n";
    } else if (w == "tau") {
        const Tau t = letword_tau(L);
        std::cout << "ell: " << t.ell() << "\nimage0: " << format_word(t.image0, t.alphabet)
                  << "\nimage1: " << format_word(t.image1, t.alphabet) << "\nmarker: " << format_word(t.marker, t.alphabet)
                  << "\ngaps: " << t.gap0 << "," << t.gap1 << "\n";
        if (a.verify) {
            const DecipherReport r = certify_decipherability(t);
            if (r.unique)
                std::cout << "decipherability: verified at 3l-1 = " << r.length << " (" << r.words << " words)\n";
            else
                std::cout << "decipherability: FAILED on " << format_word(*r.counterexample, t.alphabet) << "\n";
        }
        if (!a.inner.empty()) {
            const GeneratorSpec img = tau_apply(t, parse_spec(a.inner));
            std::cout << "inner cylinder member: "
                      << yes_no(cylinder_member(build_rauzy(L), generate(img, L.depth()))) << "\n";
        }
        if (!g.out.empty()) emit(g, format_tau(t));
    } else if (w == "cover") {
        const MixingCover c = mixing_cover(build_rauzy(L));
        std::cout << "base: " << c.base << "\nfirst length: " << c.first.size() << "\nsecond length: "
                  << c.second.size() << "\ngenerator: " << to_spec_string(c.generator) << "\n";
    } else {
        throw CLI::ValidationError("what", "unknown construction '" + w + "'");
    }
}

void run_distance(const std::string& a, const std::string& b) {
    const DistanceResult d = hausdorff_distance(parse_language(read_text_file(a)), parse_language(read_text_file(b)));
    if (d.exact())
        std::cout << "distance: 2^-" << d.value << "\n";
    else
        std::cout << "distance: indistinguishable-to " << d.value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subshift languages, Rauzy graphs, certificates and constructions"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the verb
    Globals g;
    app.add_option("--budget-n", g.budget_n, "depth budget")->capture_default_str();
    app.add_option("--budget-k", g.budget_k, "parameter budget")->capture_default_str();
    app.add_flag("--pretty", g.pretty, "tables instead of key: value lines");
    app.add_option("-o,--out", g.out, "output file");

    Input in;
    auto* gen = app.add_subcommand("gen", "write the depth-n language of a generator");
    in.attach(gen);

    std::string checks = "essential,nmc,omc,primitive";
    auto* classify = app.add_subcommand("classify", "structural checks on a Rauzy graph");
    in.attach(classify);
    classify->add_option("--checks", checks, "comma-separated: essential,nmc,omc,primitive");

    std::string dot;
    auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph summary and DOT export");
    in.attach(rauzy);
    rauzy->add_option("--dot", dot, "DOT output file");

    std::size_t max_n = 0;
    auto* complexity = app.add_subcommand("complexity", "complexity table");
    in.attach(complexity);
    complexity->add_option("--max", max_n, "largest n (default --budget-n)");

    CertArgs ca;
    auto* certify = app.add_subcommand("certify", "search or recheck a finite certificate");
    in.attach(certify, false);
    certify->add_option("kind", ca.kind,
                        "transitivity|minimality|mixing|toeplitz|partition|rigidity|nonbalance|frequency|balance|one-rs")
        ->required();
    certify->add_option("--k", ca.k);
    certify->add_option("--n", ca.n);
    certify->add_option("--p", ca.p);
    certify->add_option("--fixed-n", ca.fixed_n, "toeplitz: only this n");
    certify->add_option("--eps", ca.eps, "rational epsilon")->capture_default_str();
    certify->add_option("--markers", ca.markers, "partition: words separated by |");
    certify->add_option("--denominator", ca.denominator, "rigidity: valid|length")
        ->check(CLI::IsMember({"valid", "length"}));
    certify->add_option("--word", ca.word);
    certify->add_option("--mu", ca.mu, "balance: rational frequency");
    certify->add_option("--depth", ca.depth);
    certify->add_option("--cert", ca.cert, "certificate text to recheck");
    certify->add_flag("--recheck", ca.recheck_found, "recheck found certificates independently");

    ConstructArgs co;
    auto* construct = app.add_subcommand("construct", "run a construction on a cylinder");
    in.attach(construct);
    construct->add_option("what", co.what, "dense-nmc|isolation|pump|omc|sparse-omc|tau|chain|cover")
        ->required()
        ->check(CLI::IsMember({"dense-nmc", "isolation", "pump", "omc", "sparse-omc", "tau", "chain", "cover"}));
    construct->add_option("--inner", co.inner, "tau: inner generator spec");
    construct->add_option("--R", co.R, "sparse-omc: naturals|naturals0|squares|list:1:4:9")->capture_default_str();
    construct->add_option("--m-max", co.m_max, "sparse-omc: print path counts up to m");
    construct->add_option("--levels", co.levels, "chain: number of levels")->capture_default_str();
    construct->add_option("--nmc", co.nmc_path, "isolation: normal form file");
    construct->add_flag("--verify", co.verify, "run the exhaustive checks");

    std::string da, db;
    auto* distance = app.add_subcommand("distance", "Hausdorff distance of two cylinders");
    distance->add_option("first", da)->required()->check(CLI::ExistingFile);
    distance->add_option("second", db)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
        if (*gen) run_gen(g, in);
        else if (*classify) run_classify(g, in, checks);
        else if (*rauzy) run_rauzy(g, in, dot);
        else if (*complexity) run_complexity(g, in, max_n);
        else if (*certify) run_certify(g, in, ca);
        else if (*construct) run_construct(g, in, co);
        else if (*distance) run_distance(da, db);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
