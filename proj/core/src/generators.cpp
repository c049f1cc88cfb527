#include "subshift/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "subshift/error.hpp"
#include "subshift/io.hpp"

namespace subshift {
namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

constexpr std::size_t max_word_length = 50'000'000;

void add_factors(const Word& w, std::size_t n, std::set<Word>& out, std::size_t budget) {
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        out.insert(subword(w, i, n));
        if (out.size() > budget) fail("GeneratorBudgetExceeded", "word budget " + std::to_string(budget));
    }
}

std::vector<Word> as_vector(const std::set<Word>& s) { return {s.begin(), s.end()}; }

Word apply_rules(const std::vector<Word>& images, const Word& w) {
    Word out;
    for (Symbol s : w) out.insert(out.end(), images[s].begin(), images[s].end());
    if (out.size() > max_word_length) fail("GeneratorBudgetExceeded", "substitution image too long");
    return out;
}

TruncatedLanguage generate_substitution(const SubstitutionSource& s, std::size_t n, std::size_t budget) {
    const std::size_t k = s.alphabet.size();
    if (s.images.size() != k) fail("InvalidSubstitution", "one image per letter required");
    for (const Word& img : s.images)
        if (img.empty()) fail("InvalidSubstitution", "erasing image");
    // a power of the substitution whose images all have length >= 2
    std::vector<Word> pw = s.images;
    for (std::size_t round = 0;; ++round) {
        auto shortest = std::min_element(pw.begin(), pw.end(), [](const Word& a, const Word& b) {
            return a.size() < b.size();
        });
        if (shortest->size() >= 2) break;
        if (round > k + 1) fail("InvalidSubstitution", "images do not grow");
        std::vector<Word> next(k);
        for (std::size_t a = 0; a < k; ++a) next[a] = apply_rules(s.images, pw[a]);
        pw = std::move(next);
    }
    Word seed{s.seed};
    while (seed.size() < n) {
        Word next = apply_rules(s.images, seed);
        if (next.size() <= seed.size()) fail("InvalidSubstitution", "seed does not grow");
        seed = std::move(next);
    }
    std::set<Word> T;
    add_factors(seed, n, T, budget);
    // every n-window of an image lies inside the image of some n-factor
    for (;;) {
        std::set<Word> next = T;
        for (const Word& u : T) add_factors(apply_rules(pw, u), n, next, budget);
        if (next.size() == T.size()) break;
        T = std::move(next);
    }
    return validate_language(as_vector(T), s.alphabet);
}

void check_cf(const std::vector<std::size_t>& cf) {
    if (cf.size() < 2 || cf[0] != 0) fail("InvalidContinuedFraction", "expected 0,d1,d2,... with at least one digit");
    for (std::size_t i = 1; i < cf.size(); ++i)
        if (cf[i] == 0) fail("InvalidContinuedFraction", "digits after the leading 0 must be >= 1");
}

TruncatedLanguage generate_sturmian(const SturmianSource& s, std::size_t n) {
    std::vector<std::size_t> cf = s.cf;
    for (std::size_t attempt = 0; attempt < 64; ++attempt) {
        while (standard_word(cf, cf.size() - 1).size() < 4 * (n + 2)) cf.push_back(1);
        Word w = standard_word(cf, cf.size() - 1);
        std::set<Word> f;
        add_factors(w, n, f, max_word_length);
        if (f.size() == n + 1) return validate_language(as_vector(f), Alphabet::range(2));
        cf.push_back(1);
    }
    fail("InvariantViolated", "sturmian factor count never reached n+1");
}

TruncatedLanguage factors_of(const std::vector<BiPoint>& pts, std::size_t n, const Alphabet& a, std::size_t budget) {
    std::set<Word> f;
    for (const BiPoint& x : pts) {
        for (Word& w : point_factors(x, n)) f.insert(std::move(w));
        if (f.size() > budget) fail("GeneratorBudgetExceeded", "word budget " + std::to_string(budget));
    }
    return validate_language(as_vector(f), a);
}

std::vector<BiPoint> family_points(const PumpFamily& fam, std::size_t n) {
    if (fam.pump.empty()) fail("InvariantViolated", "empty pump word");
    std::vector<BiPoint> pts;
    const std::size_t rmax = n / fam.pump.size() + 2;
    for (std::size_t r : fam.R.enumerate(0, rmax))
        pts.push_back({fam.left, concat(concat(fam.pre, power(fam.pump, r)), fam.post), fam.right});
    if (fam.R.infinite()) {
        pts.push_back({fam.left, fam.pre, fam.pump});
        pts.push_back({fam.pump, fam.post, fam.right});
    }
    pts.push_back({fam.left, {}, fam.left});
    pts.push_back({fam.right, {}, fam.right});
    if (fam.R.infinite()) pts.push_back({fam.pump, {}, fam.pump});
    return pts;
}

TruncatedLanguage generate_sofic(const SoficSource& s, std::size_t n, std::size_t budget) {
    std::vector<std::vector<std::pair<Symbol, std::size_t>>> out(s.states);
    for (const auto& a : s.arcs) {
        if (a.from >= s.states || a.to >= s.states || a.label >= s.alphabet.size())
            fail("InvalidSofic", "arc out of range");
        out[a.from].push_back({a.label, a.to});
    }
    std::vector<Word> words;
    Word cur;
    // depth-first over label words, carrying the set of reachable states
    std::vector<bool> all(s.states, true);
    std::function<void(const std::vector<bool>&)> dfs = [&](const std::vector<bool>& states) {
        if (cur.size() == n) {
            words.push_back(cur);
            if (words.size() > budget) fail("GeneratorBudgetExceeded", "word budget " + std::to_string(budget));
            return;
        }
        for (Symbol a = 0; a < s.alphabet.size(); ++a) {
            std::vector<bool> next(s.states, false);
            bool any = false;
            for (std::size_t q = 0; q < s.states; ++q) {
                if (!states[q]) continue;
                for (auto [l, t] : out[q])
                    if (l == a) next[t] = any = true;
            }
            if (!any) continue;
            cur.push_back(a);
            dfs(next);
            cur.pop_back();
        }
    };
    dfs(all);
    return validate_language(std::move(words), s.alphabet);
}

SoficSource eigen_sofic(std::size_t p) {
    if (p < 2) fail("BadParameter", "eigen block needs p >= 2");
    // base state 0; petal lengths p and 2p, labels 0...01
    SoficSource s;
    s.alphabet = Alphabet::range(2);
    s.states = 1;
    for (std::size_t len : {p, 2 * p}) {
        std::size_t prev = 0;
        for (std::size_t i = 0; i < len; ++i) {
            std::size_t next = i + 1 == len ? 0 : s.states++;
            s.arcs.push_back({prev, next, static_cast<Symbol>(i + 1 == len ? 1 : 0)});
            prev = next;
        }
    }
    return s;
}

TruncatedLanguage generate_tau(const TauImageSource& t, std::size_t n, std::size_t budget) {
    const std::size_t ell = t.tau.ell();
    if (ell == 0) fail("InvariantViolated", "tau has empty images");
    const std::size_t q = (n + ell - 1) / ell + 2;
    TruncatedLanguage inner = generate(*t.inner, q);
    std::set<Word> f;
    for (const Word& v : inner.words()) {
        Word letters(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            int label = inner.alphabet().label(v[i]);
            if (label != 0 && label != 1) fail("LetterOutsideAlphabet", "tau inner generator must be over {0,1}");
            letters[i] = static_cast<Symbol>(label);
        }
        add_factors(t.tau.apply(letters), n, f, budget);
    }
    return validate_language(as_vector(f), t.tau.alphabet);
}

TruncatedLanguage generate_product(const ProductSource& p, std::size_t n, std::size_t budget) {
    TruncatedLanguage X = generate(*p.inner, n);
    std::set<Word> pf;
    add_factors(power(p.period, n / p.period.size() + 2), n, pf, budget);
    const auto& la = X.alphabet().labels();
    const auto& lb = p.period_alphabet.labels();
    const int width = lb.back() + 1;
    std::vector<int> labels;
    for (int a : la)
        for (int b : lb) labels.push_back(a * width + b);
    if (labels.size() > 256) fail("GeneratorBudgetExceeded", "product alphabet too large");
    Alphabet prod(labels);
    std::vector<Word> words;
    if (X.size() * pf.size() > budget) fail("GeneratorBudgetExceeded", "word budget " + std::to_string(budget));
    for (const Word& u : X.words())
        for (const Word& v : pf) {
            Word w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = *prod.index_of(la[u[i]] * width + lb[v[i]]);
            words.push_back(std::move(w));
        }
    return validate_language(std::move(words), prod);
}

std::string join_labels(const Alphabet& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.labels()[i]);
    }
    return s;
}

std::string compact(const Word& w, const Alphabet& a) {
    if (!a.single_digit_labels()) fail("InvariantViolated", "inline spec strings need single-digit labels; use file=");
    return w.empty() ? "-" : format_word(w, a);
}

std::string size_list(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// ---- spec-string parsing ----

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t end = s.find(sep, pos);
        if (end == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, end - pos));
        pos = end + 1;
    }
}

std::size_t to_size(std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        fail("ParseError", "expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::size_t> to_sizes(std::string_view s) {
    std::vector<std::size_t> out;
    for (auto piece : split(s, ',')) out.push_back(to_size(piece));
    return out;
}

Alphabet alphabet_from(std::string_view s) {
    std::vector<int> labels;
    for (std::size_t v : to_sizes(s)) labels.push_back(static_cast<int>(v));
    return Alphabet(std::move(labels));
}

// digit-string words; '-' is the empty word
Word raw_digits(std::string_view s) {
    if (s == "-") return {};
    for (char c : s)
        if (c < '0' || c > '9') fail("ParseError", "bad word '" + std::string(s) + "'");
    return digits(s);
}

Alphabet infer_alphabet(const std::vector<Word>& raw) {
    std::set<int> labels;
    for (const Word& w : raw)
        for (Symbol s : w) labels.insert(s);
    if (labels.empty()) fail("ParseError", "cannot infer an alphabet");
    return Alphabet(std::vector<int>(labels.begin(), labels.end()));
}

Word reindex(const Word& raw, const Alphabet& a) {
    Word w(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto idx = a.index_of(raw[i]);
        if (!idx) fail("LetterOutsideAlphabet", std::to_string(int(raw[i])));
        w[i] = *idx;
    }
    return w;
}

struct Options {
    std::string kind;
    std::map<std::string, std::string, std::less<>> kv;
    std::vector<std::string> flags;
    std::string inner;
    bool has_inner = false;

    const std::string* find(std::string_view k) const {
        auto it = kv.find(k);
        return it == kv.end() ? nullptr : &it->second;
    }
    const std::string& get(std::string_view k) const {
        if (auto* v = find(k)) return *v;
        fail("ParseError", kind + " spec needs " + std::string(k) + "=");
    }
};

Options tokenize(std::string_view text) {
    Options o;
    std::size_t inner_at = text.find(" inner=");
    std::string_view head = text;
    if (inner_at != std::string_view::npos) {
        o.has_inner = true;
        o.inner = std::string(text.substr(inner_at + 7));
        head = text.substr(0, inner_at);
    }
    std::istringstream is{std::string(head)};
    std::string tok;
    if (!(is >> o.kind)) fail("ParseError", "empty generator spec");
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            o.flags.push_back(tok);
        } else {
            o.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    return o;
}

GeneratorSpec parse_without_budgets(const Options& o) {
    const std::string& k = o.kind;
    if (k == "sft") {
        if (std::find(o.flags.begin(), o.flags.end(), "golden") != o.flags.end()) return golden_mean_spec();
        if (std::find(o.flags.begin(), o.flags.end(), "full") != o.flags.end())
            return full_shift_spec(o.find("k") ? to_size(o.get("k")) : 2);
        if (auto* f = o.find("file")) return sft_spec(parse_language(read_text_file(*f)));
        std::vector<Word> raw;
        for (auto piece : split(o.get("words"), ',')) raw.push_back(raw_digits(piece));
        Alphabet a = o.find("alphabet") ? alphabet_from(o.get("alphabet")) : infer_alphabet(raw);
        std::vector<Word> words;
        for (const Word& w : raw) words.push_back(reindex(w, a));
        return sft_spec(validate_language(std::move(words), a));
    }
    if (k == "subst") {
        std::map<int, Word> rules;
        for (const auto& [key, value] : o.kv) {
            if (key == "seed") continue;
            rules[static_cast<int>(to_size(key))] = raw_digits(value);
        }
        std::vector<int> labels;
        for (const auto& [l, w] : rules) labels.push_back(l);
        Alphabet a(labels);
        std::vector<Word> images;
        for (const auto& [l, w] : rules) images.push_back(reindex(w, a));
        int seed = o.find("seed") ? static_cast<int>(to_size(o.get("seed"))) : labels.front();
        auto idx = a.index_of(seed);
        if (!idx) fail("LetterOutsideAlphabet", "seed");
        return substitution_spec(a, std::move(images), *idx);
    }
    if (k == "pd") return period_doubling_spec();
    if (k == "chacon") return chacon_spec();
    if (k == "sturmian") return sturmian_spec(to_sizes(o.get("cf")));
    if (k == "op") return ormes_pavlov_spec(to_sizes(o.get("n")));
    if (k == "eigen") return eigen_block_spec(to_size(o.get("p")));
    if (k == "periodic") {
        Word raw = raw_digits(o.get("word"));
        Alphabet a = o.find("alphabet") ? alphabet_from(o.get("alphabet")) : infer_alphabet({raw});
        return periodic_spec(reindex(raw, a), a);
    }
    if (k == "nmc") {
        if (auto* f = o.find("file")) return nmc_spec(parse_nmc(read_text_file(*f)).form);
        NmcNormalForm x;
        std::vector<Word> raw_i, raw_t;
        for (auto piece : split(o.get("initial"), ',')) if (!piece.empty()) raw_i.push_back(raw_digits(piece));
        for (auto piece : split(o.get("terminal"), ',')) if (!piece.empty()) raw_t.push_back(raw_digits(piece));
        std::vector<Word> all = raw_i;
        all.insert(all.end(), raw_t.begin(), raw_t.end());
        x.alphabet = o.find("alphabet") ? alphabet_from(o.get("alphabet")) : infer_alphabet(all);
        for (const Word& w : raw_i) x.initial.push_back(reindex(w, x.alphabet));
        for (const Word& w : raw_t) x.terminal.push_back(reindex(w, x.alphabet));
        if (auto* links = o.find("links"); links && !links->empty()) {
            for (auto piece : split(*links, ',')) {
                auto parts = split(piece, '.');
                if (parts.size() != 3) fail("ParseError", "link needs from.middle.to");
                x.links.push_back({to_size(parts[0]), reindex(raw_digits(parts[1]), x.alphabet), to_size(parts[2])});
            }
        }
        if (auto* lv = o.find("level")) x.level = to_size(*lv);
        check_normal_form(x);
        return nmc_spec(std::move(x));
    }
    if (k == "orbits") {
        std::vector<std::array<Word, 3>> raw_pts;
        std::vector<std::pair<std::array<Word, 5>, IndexSet>> raw_fams;
        std::vector<Word> all;
        if (auto* pts = o.find("pts"); pts && !pts->empty()) {
            for (auto piece : split(*pts, ',')) {
                auto parts = split(piece, '.');
                if (parts.size() != 3) fail("ParseError", "point needs left.middle.right");
                std::array<Word, 3> p{raw_digits(parts[0]), raw_digits(parts[1]), raw_digits(parts[2])};
                all.insert(all.end(), p.begin(), p.end());
                raw_pts.push_back(std::move(p));
            }
        }
        if (auto* fams = o.find("fam"); fams && !fams->empty()) {
            for (auto piece : split(*fams, ',')) {
                auto slash = piece.find('/');
                if (slash == std::string_view::npos) fail("ParseError", "family needs words/R");
                auto parts = split(piece.substr(0, slash), '.');
                if (parts.size() != 5) fail("ParseError", "family needs left.pre.pump.post.right");
                std::array<Word, 5> f;
                for (std::size_t i = 0; i < 5; ++i) f[i] = raw_digits(parts[i]);
                all.insert(all.end(), f.begin(), f.end());
                raw_fams.push_back({f, IndexSet::parse(piece.substr(slash + 1))});
            }
        }
        Alphabet a = o.find("alphabet") ? alphabet_from(o.get("alphabet")) : infer_alphabet(all);
        std::vector<BiPoint> pts;
        for (const auto& p : raw_pts) pts.push_back({reindex(p[0], a), reindex(p[1], a), reindex(p[2], a)});
        std::vector<PumpFamily> fams;
        for (const auto& [f, R] : raw_fams)
            fams.push_back({reindex(f[0], a), reindex(f[1], a), reindex(f[2], a), reindex(f[3], a), reindex(f[4], a), R});
        return points_spec(a, std::move(pts), std::move(fams));
    }
    if (k == "sofic") {
        Alphabet a = alphabet_from(o.get("alphabet"));
        std::vector<SoficSource::Arc> arcs;
        for (auto piece : split(o.get("arcs"), ',')) {
            auto gt = piece.find('>'), colon = piece.find(':');
            if (gt == std::string_view::npos || colon == std::string_view::npos || colon < gt)
                fail("ParseError", "arc needs from>to:label");
            auto label = a.index_of(static_cast<int>(to_size(piece.substr(colon + 1))));
            if (!label) fail("LetterOutsideAlphabet", "arc label");
            arcs.push_back({to_size(piece.substr(0, gt)), to_size(piece.substr(gt + 1, colon - gt - 1)), *label});
        }
        return sofic_spec(a, to_size(o.get("states")), std::move(arcs));
    }
    if (k == "tau") {
        if (!o.has_inner) fail("ParseError", "tau spec needs inner=");
        GeneratorSpec inner = parse_spec(o.inner);
        if (auto* f = o.find("file")) {
            GeneratorSpec g = tau_image_spec(parse_tau(read_text_file(*f)), std::move(inner));
            std::get<TauImageSource>(g.source).file = *f;
            return g;
        }
        Tau t;
        Word r0 = raw_digits(o.get("image0")), r1 = raw_digits(o.get("image1"));
        t.alphabet = o.find("alphabet") ? alphabet_from(o.get("alphabet")) : infer_alphabet({r0, r1});
        t.image0 = reindex(r0, t.alphabet);
        t.image1 = reindex(r1, t.alphabet);
        if (t.image0.size() != t.image1.size()) fail("ParseError", "tau images differ in length");
        return tau_image_spec(std::move(t), std::move(inner));
    }
    if (k == "product") {
        if (!o.has_inner) fail("ParseError", "product spec needs inner=");
        Word raw = raw_digits(o.get("period"));
        Alphabet a = o.find("alphabet") ? alphabet_from(o.get("alphabet")) : infer_alphabet({raw});
        return product_spec(parse_spec(o.inner), reindex(raw, a), a);
    }
    fail("ParseError", "unknown generator kind '" + k + "'");
}

}  // namespace

Word standard_word(const std::vector<std::size_t>& cf, std::size_t k) {
    check_cf(cf);
    if (k >= cf.size()) fail("InvalidContinuedFraction", "not enough digits");
    Word prev{1}, cur{0};  // s_{-1}, s_0
    for (std::size_t i = 1; i <= k; ++i) {
        Word next = concat(power(cur, cf[i]), prev);
        if (next.size() > max_word_length) fail("GeneratorBudgetExceeded", "standard word too long");
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Word chacon_block(std::size_t k) {
    Word b{0};
    for (std::size_t i = 0; i < k; ++i) {
        Word next = b;
        next.insert(next.end(), b.begin(), b.end());
        next.push_back(1);
        next.insert(next.end(), b.begin(), b.end());
        if (next.size() > max_word_length) fail("GeneratorBudgetExceeded", "chacon block too long");
        b = std::move(next);
    }
    return b;
}

OrmesPavlovTable ormes_pavlov_table(std::vector<std::size_t> n_seq) {
    if (n_seq.empty()) fail("InvariantViolated", "empty n sequence");
    OrmesPavlovTable t;
    t.n_seq = std::move(n_seq);
    for (std::size_t k = 0; k < t.n_seq.size(); ++k) {
        std::size_t m = (std::size_t{1} << k) + 2 * t.n_seq[k];
        for (std::size_t j = 0; j < k; ++j) m += (std::size_t{1} << (k - j - 1)) * t.n_seq[j];
        if (k > 0 && t.n_seq[k] < t.m_seq[k - 1])
            fail("InvariantViolated", "n_" + std::to_string(k) + " < m_" + std::to_string(k - 1));
        t.m_seq.push_back(m);
        t.intervals.push_back({t.n_seq[k], m});
    }
    return t;
}

std::vector<std::size_t> ormes_pavlov_predict(const OrmesPavlovTable& t, std::size_t N) {
    std::vector<std::size_t> c;
    for (std::size_t n = 1; n <= N; ++n) {
        std::size_t in_r = 0;
        for (auto [lo, hi] : t.intervals)
            for (std::size_t r = lo + 1; r <= hi && r < n; ++r) ++in_r;
        c.push_back(n + 1 + in_r);
    }
    return c;
}

Word ormes_pavlov_word(const std::vector<std::size_t>& n_seq) {
    Word v{1};
    for (std::size_t nk : n_seq) {
        if (2 * v.size() + nk > max_word_length) fail("GeneratorBudgetExceeded", "Ormes-Pavlov word too long");
        Word next = v;
        next.insert(next.end(), nk, Symbol{0});
        next.insert(next.end(), v.begin(), v.end());
        v = std::move(next);
    }
    return v;
}

std::optional<std::size_t> validity_depth(const GeneratorSpec& spec) {
    return std::visit(overloaded{
        [](const SturmianSource& s) -> std::optional<std::size_t> {
            return standard_word(s.cf, s.cf.size() - 1).size() - 1;
        },
        [](const OrmesPavlovSource& s) -> std::optional<std::size_t> {
            return ormes_pavlov_table(s.n_seq).m_seq.back();
        },
        [](const TauImageSource& t) -> std::optional<std::size_t> {
            auto inner = validity_depth(*t.inner);
            if (!inner) return std::nullopt;
            const std::size_t ell = t.tau.ell();
            return *inner < 3 ? 0 : (*inner - 2) * ell;
        },
        [](const ProductSource& p) { return validity_depth(*p.inner); },
        [](const auto&) -> std::optional<std::size_t> { return std::nullopt; },
    }, spec.source);
}

TruncatedLanguage generate(const GeneratorSpec& spec, std::size_t n) {
    if (n < 1) fail("BadDepth", "depth must be positive");
    if (n > spec.depth_budget)
        fail("GeneratorBudgetExceeded", "depth " + std::to_string(n) + " over budget " + std::to_string(spec.depth_budget));
    if (auto v = validity_depth(spec); v && n > *v)
        fail("ValidityDepthExceeded", kind_name(spec) + " " + std::to_string(*v));
    const std::size_t budget = spec.word_budget;
    return std::visit(overloaded{
        [&](const SftSource& s) {
            if (n >= s.graph.level) return sft_language(s.graph, n, budget);
            return project(s.graph.edge_language(), n);
        },
        [&](const SubstitutionSource& s) { return generate_substitution(s, n, budget); },
        [&](const SturmianSource& s) { return generate_sturmian(s, n); },
        [&](const OrmesPavlovSource& s) {
            Word v = ormes_pavlov_word(s.n_seq);
            Word w(n, Symbol{0});
            w.insert(w.end(), v.begin(), v.end());
            w.insert(w.end(), n, Symbol{0});
            std::set<Word> f;
            add_factors(w, n, f, budget);
            return validate_language(as_vector(f), Alphabet::range(2));
        },
        [&](const NmcSource& s) { return factors_of(normal_form_points(s.form), n, s.form.alphabet, budget); },
        [&](const PointsSource& s) {
            std::vector<BiPoint> pts = s.points;
            for (const auto& fam : s.families) {
                auto more = family_points(fam, n);
                pts.insert(pts.end(), more.begin(), more.end());
            }
            return factors_of(pts, n, s.alphabet, budget);
        },
        [&](const ChaconSource&) {
            std::size_t k = 0;
            while (chacon_block(k).size() < n) ++k;
            std::set<Word> f;
            add_factors(chacon_block(k + 1), n, f, budget);
            return validate_language(as_vector(f), Alphabet::range(2));
        },
        [&](const PeriodDoublingSource&) {
            return generate_substitution({Alphabet::range(2), {digits("01"), digits("00")}, 0}, n, budget);
        },
        [&](const EigenBlockSource& e) { return generate_sofic(eigen_sofic(e.p), n, budget); },
        [&](const TauImageSource& t) { return generate_tau(t, n, budget); },
        [&](const ProductSource& p) { return generate_product(p, n, budget); },
        [&](const PeriodicSource& p) {
            if (p.word.empty()) fail("InvariantViolated", "empty periodic word");
            std::set<Word> f;
            add_factors(power(p.word, n / p.word.size() + 2), n, f, budget);
            return validate_language(as_vector(f), p.alphabet);
        },
        [&](const SoficSource& s) { return generate_sofic(s, n, budget); },
    }, spec.source);
}

std::string kind_name(const GeneratorSpec& spec) {
    return std::visit(overloaded{
        [](const SftSource&) { return std::string("sft"); },
        [](const SubstitutionSource&) { return std::string("subst"); },
        [](const SturmianSource&) { return std::string("sturmian"); },
        [](const OrmesPavlovSource&) { return std::string("op"); },
        [](const NmcSource&) { return std::string("nmc"); },
        [](const PointsSource&) { return std::string("orbits"); },
        [](const ChaconSource&) { return std::string("chacon"); },
        [](const PeriodDoublingSource&) { return std::string("pd"); },
        [](const EigenBlockSource&) { return std::string("eigen"); },
        [](const TauImageSource&) { return std::string("tau"); },
        [](const ProductSource&) { return std::string("product"); },
        [](const PeriodicSource&) { return std::string("periodic"); },
        [](const SoficSource&) { return std::string("sofic"); },
    }, spec.source);
}

std::string to_spec_string(const GeneratorSpec& spec) {
    GeneratorSpec defaults;
    std::string budgets;
    if (spec.depth_budget != defaults.depth_budget) budgets += " depth_budget=" + std::to_string(spec.depth_budget);
    if (spec.word_budget != defaults.word_budget) budgets += " word_budget=" + std::to_string(spec.word_budget);
    std::string body = std::visit(overloaded{
        [](const SftSource& s) {
            std::string words;
            for (std::size_t i = 0; i < s.graph.edges.size(); ++i) {
                if (i) words += ',';
                words += compact(s.graph.edges[i], s.graph.alphabet);
            }
            return "sft alphabet=" + join_labels(s.graph.alphabet) + " words=" + words;
        },
        [](const SubstitutionSource& s) {
            std::string out = "subst";
            for (std::size_t a = 0; a < s.images.size(); ++a)
                out += " " + std::to_string(s.alphabet.labels()[a]) + "=" + compact(s.images[a], s.alphabet);
            return out + " seed=" + std::to_string(s.alphabet.label(s.seed));
        },
        [](const SturmianSource& s) { return "sturmian cf=" + size_list(s.cf); },
        [](const OrmesPavlovSource& s) { return "op n=" + size_list(s.n_seq); },
        [](const NmcSource& s) {
            const auto& x = s.form;
            std::string out = "nmc alphabet=" + join_labels(x.alphabet) + " initial=";
            for (std::size_t i = 0; i < x.initial.size(); ++i) out += (i ? "," : "") + compact(x.initial[i], x.alphabet);
            out += " terminal=";
            for (std::size_t i = 0; i < x.terminal.size(); ++i) out += (i ? "," : "") + compact(x.terminal[i], x.alphabet);
            out += " links=";
            for (std::size_t i = 0; i < x.links.size(); ++i)
                out += (i ? "," : "") + std::to_string(x.links[i].from) + "." + compact(x.links[i].middle, x.alphabet) +
                       "." + std::to_string(x.links[i].to);
            return out + " level=" + std::to_string(x.level);
        },
        [](const PointsSource& s) {
            std::string out = "orbits alphabet=" + join_labels(s.alphabet) + " pts=";
            for (std::size_t i = 0; i < s.points.size(); ++i)
                out += (i ? "," : "") + compact(s.points[i].left, s.alphabet) + "." + compact(s.points[i].middle, s.alphabet) +
                       "." + compact(s.points[i].right, s.alphabet);
            out += " fam=";
            for (std::size_t i = 0; i < s.families.size(); ++i) {
                const auto& f = s.families[i];
                out += (i ? "," : "") + compact(f.left, s.alphabet) + "." + compact(f.pre, s.alphabet) + "." +
                       compact(f.pump, s.alphabet) + "." + compact(f.post, s.alphabet) + "." + compact(f.right, s.alphabet) +
                       "/" + f.R.to_string();
            }
            return out;
        },
        [](const ChaconSource&) { return std::string("chacon"); },
        [](const PeriodDoublingSource&) { return std::string("pd"); },
        [](const EigenBlockSource& e) { return "eigen p=" + std::to_string(e.p); },
        [](const TauImageSource& t) {
            std::string head = t.file.empty()
                ? "tau alphabet=" + join_labels(t.tau.alphabet) + " image0=" + compact(t.tau.image0, t.tau.alphabet) +
                      " image1=" + compact(t.tau.image1, t.tau.alphabet)
                : "tau file=" + t.file;
            return head + " inner=" + to_spec_string(*t.inner);
        },
        [](const ProductSource& p) {
            return "product alphabet=" + join_labels(p.period_alphabet) + " period=" + compact(p.period, p.period_alphabet) +
                   " inner=" + to_spec_string(*p.inner);
        },
        [](const PeriodicSource& p) {
            return "periodic alphabet=" + join_labels(p.alphabet) + " word=" + compact(p.word, p.alphabet);
        },
        [](const SoficSource& s) {
            std::string arcs;
            for (std::size_t i = 0; i < s.arcs.size(); ++i)
                arcs += (i ? "," : "") + std::to_string(s.arcs[i].from) + ">" + std::to_string(s.arcs[i].to) + ":" +
                        std::to_string(s.alphabet.label(s.arcs[i].label));
            return "sofic alphabet=" + join_labels(s.alphabet) + " states=" + std::to_string(s.states) + " arcs=" + arcs;
        },
    }, spec.source);
    // budgets must precede a trailing inner= spec
    auto inner_at = body.find(" inner=");
    if (inner_at == std::string::npos) return body + budgets;
    return body.substr(0, inner_at) + budgets + body.substr(inner_at);
}

GeneratorSpec parse_spec(std::string_view text) {
    Options o = tokenize(text);
    GeneratorSpec g = parse_without_budgets(o);
    if (auto* d = o.find("depth_budget")) g.depth_budget = to_size(*d);
    if (auto* w = o.find("word_budget")) g.word_budget = to_size(*w);
    return g;
}

GeneratorSpec sft_spec(const RauzyGraph& G) { return {SftSource{G}}; }
GeneratorSpec sft_spec(const TruncatedLanguage& L) {
    if (L.depth() < 2) {
        // depth-1 cylinders: the full shift on the letters present
        std::vector<Word> pairs;
        for (const Word& a : L.words())
            for (const Word& b : L.words()) pairs.push_back(concat(a, b));
        return {SftSource{build_rauzy(validate_language(std::move(pairs), L.alphabet()))}};
    }
    return {SftSource{build_rauzy(L)}};
}

GeneratorSpec golden_mean_spec() {
    return sft_spec(validate_language({digits("00"), digits("01"), digits("10")}, Alphabet::range(2)));
}

GeneratorSpec full_shift_spec(std::size_t k) {
    if (k < 1 || k > 16) fail("BadParameter", "full shift needs 1 <= k <= 16");
    std::vector<Word> w;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) w.push_back({static_cast<Symbol>(a), static_cast<Symbol>(b)});
    return sft_spec(validate_language(std::move(w), Alphabet::range(k)));
}

GeneratorSpec substitution_spec(Alphabet a, std::vector<Word> images, Symbol seed) {
    return {SubstitutionSource{std::move(a), std::move(images), seed}};
}
GeneratorSpec period_doubling_spec() { return {PeriodDoublingSource{}}; }
GeneratorSpec sturmian_spec(std::vector<std::size_t> cf) {
    check_cf(cf);
    return {SturmianSource{std::move(cf)}};
}
GeneratorSpec fibonacci_spec(std::size_t digits_count) {
    std::vector<std::size_t> cf(digits_count + 1, 1);
    cf[0] = 0;
    return sturmian_spec(std::move(cf));
}
GeneratorSpec ormes_pavlov_spec(std::vector<std::size_t> n_seq) {
    ormes_pavlov_table(n_seq);
    return {OrmesPavlovSource{std::move(n_seq)}};
}
GeneratorSpec nmc_spec(NmcNormalForm form) {
    check_normal_form(form);
    return {NmcSource{std::move(form)}};
}
GeneratorSpec points_spec(Alphabet a, std::vector<BiPoint> points, std::vector<PumpFamily> families) {
    return {PointsSource{std::move(a), std::move(points), std::move(families)}};
}
GeneratorSpec chacon_spec() { return {ChaconSource{}}; }
GeneratorSpec eigen_block_spec(std::size_t p) {
    eigen_sofic(p);
    return {EigenBlockSource{p}};
}
GeneratorSpec tau_image_spec(Tau tau, GeneratorSpec inner) {
    return {TauImageSource{std::move(tau), std::make_shared<const GeneratorSpec>(std::move(inner)), {}}};
}
GeneratorSpec product_spec(GeneratorSpec inner, Word period, Alphabet period_alphabet) {
    if (period.empty()) fail("InvariantViolated", "empty period word");
    return {ProductSource{std::make_shared<const GeneratorSpec>(std::move(inner)), std::move(period), std::move(period_alphabet)}};
}
GeneratorSpec periodic_spec(Word word, Alphabet a) {
    if (word.empty()) fail("InvariantViolated", "empty periodic word");
    return {PeriodicSource{std::move(a), std::move(word)}};
}
GeneratorSpec sofic_spec(Alphabet a, std::size_t states, std::vector<SoficSource::Arc> arcs) {
    return {SoficSource{std::move(a), states, std::move(arcs)}};
}

ComplexityTable complexity_table(const GeneratorSpec& spec, std::size_t N) {
    return complexity_table(generate(spec, N + 1), N);
}

std::vector<RightSpecial> right_special_words(const GeneratorSpec& spec, std::size_t n) {
    return right_special_words(generate(spec, n + 1));
}

}  // namespace subshift
