#include "subshift/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {
namespace {

// Searches never ask the generator past the depth at which it is exact.
std::size_t cap_budget(const GeneratorSpec& gen, std::size_t budget) {
    if (auto v = validity_depth(gen)) return std::min(budget, *v);
    return budget;
}

Certificate make(Certificate::Kind kind, std::size_t budget) {
    Certificate c;
    c.kind = kind;
    c.budget = budget;
    return c;
}

void require(bool ok, const std::string& what) {
    if (!ok) fail("BadParameter", what);
}

std::size_t index_in(const std::vector<Word>& sorted, const Word& w) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), w) - sorted.begin());
}

bool transitive_at(const TruncatedLanguage& Ln, std::size_t k) {
    const auto U = project(Ln, k).words();
    const std::size_t u = U.size();
    std::vector<char> ok(u * u, 0);
    std::size_t missing = u * u;
    std::vector<std::size_t> first(u), last(u);
    for (const Word& w : Ln.words()) {
        std::fill(first.begin(), first.end(), SIZE_MAX);
        std::fill(last.begin(), last.end(), SIZE_MAX);
        std::vector<std::size_t> seen;
        for (std::size_t i = 0; i + k <= w.size(); ++i) {
            std::size_t id = index_in(U, subword(w, i, k));
            if (first[id] == SIZE_MAX) {
                first[id] = i;
                seen.push_back(id);
            }
            last[id] = i;
        }
        for (std::size_t a : seen)
            for (std::size_t b : seen)
                if (!ok[a * u + b] && first[a] <= last[b]) {
                    ok[a * u + b] = 1;
                    --missing;
                }
        if (missing == 0) return true;
    }
    return false;
}

bool minimal_at(const TruncatedLanguage& Ln, std::size_t k) {
    const auto U = project(Ln, k).words();
    for (const Word& w : Ln.words()) {
        std::set<Word> inside;
        for (std::size_t i = 0; i + k <= w.size(); ++i) inside.insert(subword(w, i, k));
        if (inside.size() != U.size()) return false;
    }
    return true;
}

// Residues s mod n with u constant on s, s+n, ... inside u.
std::size_t constant_residues(const Word& u, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        bool constant = true;
        for (std::size_t i = s + n; i < u.size() && constant; i += n) constant = u[i] == u[s];
        if (constant) ++count;
    }
    return count;
}

// Consistent phase map on the Rauzy graph of L: phase(target) = phase(source) + 1.
std::optional<std::vector<std::size_t>> phase_map(const RauzyGraph& G, std::size_t p) {
    const Digraph& g = G.graph;
    const std::size_t V = g.vertex_count;
    std::vector<std::size_t> phase(V, SIZE_MAX);
    for (std::size_t root = 0; root < V; ++root) {
        if (phase[root] != SIZE_MAX) continue;
        phase[root] = 0;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : g.out[v]) {
                std::size_t t = g.target[e], want = (phase[v] + 1) % p;
                if (phase[t] == SIZE_MAX) {
                    phase[t] = want;
                    stack.push_back(t);
                } else if (phase[t] != want) {
                    return std::nullopt;
                }
            }
            for (std::size_t e : g.in[v]) {
                std::size_t s = g.source[e], want = (phase[v] + p - 1) % p;
                if (phase[s] == SIZE_MAX) {
                    phase[s] = want;
                    stack.push_back(s);
                } else if (phase[s] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return phase;
}

bool every_word_has_phase(const TruncatedLanguage& LN, const std::set<Word>& S, std::size_t m, std::size_t p) {
    for (const Word& w : LN.words()) {
        bool any = false;
        for (std::size_t i = 0; i < p && !any; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j + m <= w.size() && ok; ++j)
                ok = (S.count(subword(w, j, m)) > 0) == (j % p == i);
            any = ok;
        }
        if (!any) return false;
    }
    return true;
}

bool rigid_at(const TruncatedLanguage& LN, std::size_t n, std::size_t M, const Rational& eps,
              RigidityDenominator d) {
    const std::size_t N = LN.depth();
    const std::size_t positions = N - n - M + 1;
    const std::int64_t den = static_cast<std::int64_t>(d == RigidityDenominator::valid_positions ? positions : N);
    const Rational need = (Rational(1) - eps) * den;
    for (const Word& v : LN.words()) {
        std::int64_t agree = 0;
        for (std::size_t i = 0; i < positions; ++i)
            if (std::equal(v.begin() + i, v.begin() + i + n, v.begin() + i + M)) ++agree;
        if (!(Rational(agree) > need)) return false;
    }
    return true;
}

Rational abs_r(const Rational& r) { return r < 0 ? -r : r; }

std::int64_t ceil_r(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (q * r.denominator() < r.numerator()) ++q;
    return q;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("ParseError", "bad integer '" + s + "'");
    return v;
}

}  // namespace

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    std::int64_t p = 0, q = 1;
    auto [a, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || a != num.data() + num.size()) fail("ParseError", "bad rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        auto den = text.substr(slash + 1);
        auto [b, ec2] = std::from_chars(den.data(), den.data() + den.size(), q);
        if (ec2 != std::errc() || b != den.data() + den.size() || q == 0)
            fail("ParseError", "bad rational '" + std::string(text) + "'");
    }
    return Rational(p, q);
}

std::string kind_name(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::transitivity: return "transitivity";
        case Certificate::Kind::minimality: return "minimality";
        case Certificate::Kind::mixing: return "mixing";
        case Certificate::Kind::toeplitz: return "toeplitz";
        case Certificate::Kind::partition: return "partition";
        case Certificate::Kind::rigidity: return "rigidity";
        case Certificate::Kind::nonbalance: return "nonbalance";
    }
    return "?";
}

std::string Certificate::to_string() const {
    using K = Kind;
    std::ostringstream o;
    o << kind_name(kind);
    auto put = [&](const char* key, std::size_t v) { o << ' ' << key << '=' << v; };
    switch (kind) {
        case K::transitivity:
        case K::minimality:
            put("k", k);
            if (found) put("n", n);
            break;
        case K::mixing:
            put("n", n);
            if (found) put("k", k);
            break;
        case K::toeplitz:
            o << " eps=" << format_rational(epsilon);
            if (found) {
                put("n", n);
                put("N", N);
                put("k", k);
            }
            break;
        case K::partition:
            put("p", p);
            if (found) {
                put("m", m);
                put("N", N);
                o << " S=";
                for (std::size_t i = 0; i < marker_set.size(); ++i) o << (i ? "|" : "") << marker_set[i];
            }
            break;
        case K::rigidity:
            put("n", n);
            o << " eps=" << format_rational(epsilon);
            if (found) {
                put("M", M);
                put("N", N);
            }
            o << " denominator=" << (denominator == RigidityDenominator::valid_positions ? "valid" : "length");
            break;
        case K::nonbalance:
            put("n", n);
            if (found) put("k", k);
            break;
    }
    if (found)
        o << "; found";
    else
        o << "; not-found-within(" << budget << ")";
    return o.str();
}

Certificate Certificate::parse(std::string_view text) {
    auto semi = text.rfind(';');
    if (semi == std::string_view::npos) fail("ParseError", "certificate needs '; status'");
    auto fields = split_ws(text.substr(0, semi));
    auto status = split_ws(text.substr(semi + 1));
    if (fields.empty() || status.size() != 1) fail("ParseError", "malformed certificate");
    Certificate c;
    bool known = false;
    for (int i = 0; i <= static_cast<int>(Kind::nonbalance); ++i)
        if (kind_name(static_cast<Kind>(i)) == fields[0]) {
            c.kind = static_cast<Kind>(i);
            known = true;
        }
    if (!known) fail("ParseError", "unknown certificate kind '" + fields[0] + "'");
    const std::string& st = status[0];
    const std::string nf = "not-found-within(";
    if (st == "found") {
        c.found = true;
    } else if (st.rfind(nf, 0) == 0 && st.back() == ')') {
        c.budget = parse_size(st.substr(nf.size(), st.size() - nf.size() - 1));
    } else {
        fail("ParseError", "bad status '" + st + "'");
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
        auto eq = fields[i].find('=');
        if (eq == std::string::npos) fail("ParseError", "expected key=value, got '" + fields[i] + "'");
        std::string key = fields[i].substr(0, eq), val = fields[i].substr(eq + 1);
        if (key == "k") c.k = parse_size(val);
        else if (key == "n") c.n = parse_size(val);
        else if (key == "N") c.N = parse_size(val);
        else if (key == "M") c.M = parse_size(val);
        else if (key == "m") c.m = parse_size(val);
        else if (key == "p") c.p = parse_size(val);
        else if (key == "eps") c.epsilon = parse_rational(val);
        else if (key == "denominator") {
            if (val == "valid") c.denominator = RigidityDenominator::valid_positions;
            else if (val == "length") c.denominator = RigidityDenominator::word_length;
            else fail("ParseError", "denominator is valid or length");
        } else if (key == "S") {
            std::size_t pos = 0;
            while (pos <= val.size()) {
                auto bar = val.find('|', pos);
                if (bar == std::string::npos) bar = val.size();
                if (bar > pos) c.marker_set.push_back(val.substr(pos, bar - pos));
                pos = bar + 1;
            }
        } else {
            fail("ParseError", "unknown key '" + key + "'");
        }
    }
    return c;
}

Certificate transitivity_certificate(const GeneratorSpec& gen, std::size_t k, std::size_t budget) {
    require(k >= 1, "k >= 1");
    Certificate c = make(Certificate::Kind::transitivity, cap_budget(gen, budget));
    c.k = k;
    for (std::size_t n = k; n <= c.budget; ++n)
        if (transitive_at(generate(gen, n), k)) {
            c.found = true;
            c.n = n;
            return c;
        }
    return c;
}

Certificate minimality_certificate(const GeneratorSpec& gen, std::size_t k, std::size_t budget) {
    require(k >= 1, "k >= 1");
    Certificate c = make(Certificate::Kind::minimality, cap_budget(gen, budget));
    c.k = k;
    for (std::size_t n = k; n <= c.budget; ++n)
        if (minimal_at(generate(gen, n), k)) {
            c.found = true;
            c.n = n;
            return c;
        }
    return c;
}

Certificate mixing_certificate(const GeneratorSpec& gen, std::size_t n, std::size_t budget) {
    require(n >= 1, "n >= 1");
    Certificate c = make(Certificate::Kind::mixing, budget);
    c.n = n;
    const std::size_t depth_cap = cap_budget(gen, 2 * n + budget);
    if (depth_cap < 2 * n + budget) c.budget = depth_cap > 2 * n ? depth_cap - 2 * n : 0;
    const auto Ln = generate(gen, n).words();
    for (std::size_t k = 1; k <= c.budget; ++k) {
        const auto L = generate(gen, 2 * n + k);
        std::set<std::pair<Word, Word>> ends;
        for (const Word& w : L.words()) ends.emplace(subword(w, 0, n), subword(w, n + k, n));
        if (ends.size() == Ln.size() * Ln.size()) {
            c.found = true;
            c.k = k;
            return c;
        }
    }
    return c;
}

std::optional<std::size_t> toeplitz_common_count(const TruncatedLanguage& LN, std::size_t n) {
    const std::size_t N = LN.depth();
    require(n >= 1, "n >= 1");
    std::optional<std::size_t> common;
    for (const Word& w : LN.words()) {
        const Word parts[3] = {w, subword(w, 0, N - 1), subword(w, 1, N - 1)};
        for (const Word& u : parts) {
            std::size_t k = constant_residues(u, n);
            if (!common) common = k;
            else if (*common != k) return std::nullopt;
        }
    }
    return common;
}

Certificate toeplitz_certificate(const GeneratorSpec& gen, const Rational& eps, std::size_t budget,
                                 std::optional<std::size_t> fixed_n) {
    require(eps > 0 && eps < 1, "0 < eps < 1");
    Certificate c = make(Certificate::Kind::toeplitz, cap_budget(gen, budget));
    c.epsilon = eps;
    const Rational floor = Rational(1) - eps;
    for (std::size_t N = 2; N <= c.budget; ++N) {
        const auto LN = generate(gen, N);
        std::size_t lo = 1, hi = N / 2;
        if (fixed_n) lo = hi = *fixed_n;
        if (lo < 1 || 2 * lo > N) continue;
        for (std::size_t n = lo; n <= hi; ++n) {
            auto k = toeplitz_common_count(LN, n);
            if (k && Rational(static_cast<std::int64_t>(*k), static_cast<std::int64_t>(n)) > floor) {
                c.found = true;
                c.n = n;
                c.N = N;
                c.k = *k;
                return c;
            }
        }
    }
    return c;
}

Certificate partition_certificate(const GeneratorSpec& gen, std::size_t p, std::size_t budget,
                                  std::optional<std::vector<Word>> marker_set) {
    require(p >= 2, "p >= 2");
    Certificate c = make(Certificate::Kind::partition, cap_budget(gen, budget));
    c.p = p;
    if (marker_set) {
        require(!marker_set->empty(), "marker set is empty");
        const std::size_t m = marker_set->front().size();
        for (const Word& w : *marker_set) require(w.size() == m && m >= 1, "marker words share one positive length");
        std::set<Word> S(marker_set->begin(), marker_set->end());
        for (std::size_t N = m + p - 1; N <= c.budget; ++N) {
            const auto LN = generate(gen, N);
            if (every_word_has_phase(LN, S, m, p)) {
                c.found = true;
                c.m = m;
                c.N = N;
                for (const Word& w : S) c.marker_set.push_back(format_word(w, LN.alphabet()));
                return c;
            }
        }
        return c;
    }
    for (std::size_t m = 1; m + 2 * p <= c.budget; ++m) {
        const auto L = generate(gen, m + 1);
        const RauzyGraph G = build_rauzy(L);
        auto phase = phase_map(G, p);
        if (!phase) continue;
        c.found = true;
        c.m = m;
        c.N = m + 2 * p;
        for (std::size_t v = 0; v < G.vertices.size(); ++v)
            if ((*phase)[v] == 0) c.marker_set.push_back(format_word(G.vertices[v], L.alphabet()));
        return c;
    }
    return c;
}

Certificate rigidity_certificate(const GeneratorSpec& gen, std::size_t n, const Rational& eps, std::size_t budget,
                                 RigidityDenominator denominator) {
    require(n >= 1, "n >= 1");
    require(eps > 0 && eps < 1, "0 < eps < 1");
    Certificate c = make(Certificate::Kind::rigidity, cap_budget(gen, budget));
    c.n = n;
    c.epsilon = eps;
    c.denominator = denominator;
    for (std::size_t N = n + 1; N <= c.budget; ++N) {
        const auto LN = generate(gen, N);
        for (std::size_t M = 1; M + n <= N; ++M)
            if (rigid_at(LN, n, M, eps, denominator)) {
                c.found = true;
                c.M = M;
                c.N = N;
                return c;
            }
    }
    return c;
}

Certificate nonbalance_certificate(const GeneratorSpec& gen, std::size_t n, std::size_t budget) {
    require(n >= 1, "n >= 1");
    Certificate c = make(Certificate::Kind::nonbalance, cap_budget(gen, budget));
    c.n = n;
    for (std::size_t k = 1; k <= c.budget; ++k) {
        const auto Lk = generate(gen, k);
        const std::size_t letters = Lk.alphabet().size();
        std::vector<char> done(letters, 0);
        for (std::size_t len = 1; len <= k; ++len) {
            const auto L = project(Lk, len);
            for (std::size_t a = 0; a < letters; ++a) {
                std::size_t lo = SIZE_MAX, hi = 0;
                for (const Word& w : L.words()) {
                    std::size_t cnt = static_cast<std::size_t>(std::count(w.begin(), w.end(), static_cast<Symbol>(a)));
                    lo = std::min(lo, cnt);
                    hi = std::max(hi, cnt);
                }
                if (hi - lo >= n) done[a] = 1;
            }
        }
        if (std::all_of(done.begin(), done.end(), [](char d) { return d != 0; })) {
            c.found = true;
            c.k = k;
            return c;
        }
    }
    return c;
}

FrequencyEstimate frequency_estimate(const GeneratorSpec& gen, const Word& w, std::size_t depth) {
    require(!w.empty() && w.size() <= depth, "1 <= |w| <= depth");
    const auto L = generate(gen, depth);
    FrequencyEstimate f;
    f.word = w;
    f.depth = depth;
    const auto den = static_cast<std::int64_t>(depth - w.size() + 1);
    bool first = true;
    for (const Word& v : L.words()) {
        Rational r(static_cast<std::int64_t>(count_occurrences(v, w)), den);
        if (first || r < f.lo) f.lo = r;
        if (first || r > f.hi) f.hi = r;
        first = false;
    }
    return f;
}

BalanceReport balance_report(const GeneratorSpec& gen, const Word& w, std::size_t depth, const Rational& mu) {
    require(!w.empty() && depth >= 1, "nonempty word, depth >= 1");
    const auto top = generate(gen, depth);
    BalanceReport r;
    r.word = w;
    r.mu = mu;
    for (std::size_t len = 1; len <= depth; ++len) {
        const auto L = project(top, len);
        Rational worst(0);
        for (const Word& v : L.words()) {
            Rational d = Rational(static_cast<std::int64_t>(count_occurrences(v, w))) -
                         mu * static_cast<std::int64_t>(len);
            worst = std::max(worst, abs_r(d));
        }
        r.max_abs.push_back(worst);
        r.bound = std::max(r.bound, worst);
    }
    const std::size_t third = std::max<std::size_t>(1, depth / 3);
    Rational first(0), last(0);
    for (std::size_t i = 0; i < third; ++i) first = std::max(first, r.max_abs[i]);
    for (std::size_t i = depth - third; i < depth; ++i) last = std::max(last, r.max_abs[i]);
    r.trend = last > Rational(ceil_r(first)) ? BalanceReport::Trend::growing : BalanceReport::Trend::bounded_so_far;
    return r;
}

ComplexityWindow complexity_window(const GeneratorSpec& gen, const IntSeq& f, const IntSeq& g, std::size_t budget) {
    ComplexityWindow w;
    const auto L = generate(gen, budget);
    for (std::size_t n = 1; n <= budget; ++n) w.values.push_back(project(L, n).size());
    for (std::size_t n = 1; n <= budget; ++n) {
        const auto c = static_cast<std::int64_t>(w.values[n - 1]);
        const auto x = static_cast<std::int64_t>(n);
        if (f(x) <= c && c <= g(x)) w.hits.push_back(n);
    }
    return w;
}

std::optional<std::size_t> entropy_lower_failure(const GeneratorSpec& gen, double eps, std::size_t budget) {
    const auto L = generate(gen, budget);
    for (std::size_t n = 1; n <= budget; ++n) {
        const double need = std::ceil(std::exp(static_cast<double>(n) * eps));
        if (static_cast<double>(project(L, n).size()) < need) return n;
    }
    return std::nullopt;
}

std::vector<std::size_t> one_rs_levels(const GeneratorSpec& gen, std::size_t budget) {
    const auto L = generate(gen, budget);
    std::vector<std::size_t> out;
    std::size_t prev = project(L, 1).size();
    for (std::size_t n = 1; n < budget; ++n) {
        std::size_t next = project(L, n + 1).size();
        if (next == prev + 1) out.push_back(n);
        prev = next;
    }
    return out;
}

std::vector<PrecEntry> prec_window_check(const IntSeq& f, const IntSeq& g, std::size_t s_max, std::size_t t_max,
                                         std::size_t budget) {
    std::vector<PrecEntry> out;
    for (std::size_t s = 1; s <= s_max; ++s)
        for (std::size_t t = 1; t <= t_max; ++t) {
            PrecEntry e{s, t, std::nullopt};
            const auto S = static_cast<std::int64_t>(s), T = static_cast<std::int64_t>(t);
            for (std::size_t n = budget; n > s; --n) {
                const auto x = static_cast<std::int64_t>(n);
                if (T * f(x + S) < g(T * x) && f(T * x) < T * g(x - S))
                    e.from = n;
                else
                    break;
            }
            out.push_back(e);
        }
    return out;
}

}  // namespace subshift
