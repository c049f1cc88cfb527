#include "subshift/lang.hpp"

#include <algorithm>
#include <charconv>

#include "subshift/error.hpp"

namespace subshift {

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : w) {
        h ^= s;
        h *= 1099511628211ull;
    }
    return h ^ w.size();
}

Alphabet::Alphabet(std::vector<int> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (labels_.empty()) fail("BadAlphabet", "empty alphabet");
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        fail("BadAlphabet", "duplicate symbol");
    if (labels_.front() < 0) fail("BadAlphabet", "negative symbol");
    if (labels_.size() > 256) fail("BadAlphabet", "more than 256 symbols");
}

Alphabet Alphabet::range(std::size_t k) {
    std::vector<int> l(k);
    for (std::size_t i = 0; i < k; ++i) l[i] = static_cast<int>(i);
    return Alphabet(std::move(l));
}

std::optional<Symbol> Alphabet::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<Symbol>(it - labels_.begin());
}

bool Alphabet::single_digit_labels() const noexcept {
    return labels_.empty() || labels_.back() < 10;
}

Alphabet Alphabet::unite(const Alphabet& other) const {
    std::vector<int> u;
    std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(u));
    return Alphabet(std::move(u));
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
                w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(const Word& w, std::size_t times) {
    Word r;
    r.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

bool has_factor(const Word& haystack, const Word& needle) {
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
           haystack.end();
}

std::size_t count_occurrences(const Word& haystack, const Word& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i)
        if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i)))
            ++n;
    return n;
}

std::string format_word(const Word& w, const Alphabet& a) {
    std::string out;
    const bool compact = a.single_digit_labels();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ',';
        out += std::to_string(a.label(w[i]));
    }
    return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
    Word w;
    auto push = [&](int label) {
        auto idx = a.index_of(label);
        if (!idx) fail("LetterOutsideAlphabet", std::to_string(label));
        w.push_back(*idx);
    };
    if (text.find(',') == std::string_view::npos && a.single_digit_labels()) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') fail("ParseError", "bad letter in word '" + std::string(text) + "'");
            push(ch - '0');
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto piece = text.substr(pos, comma - pos);
        int label = 0;
        auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), label);
        if (ec != std::errc() || p != piece.data() + piece.size())
            fail("ParseError", "bad letter in word '" + std::string(text) + "'");
        push(label);
        pos = comma + 1;
    }
    return w;
}

Word digits(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char ch : text) w.push_back(static_cast<Symbol>(ch - '0'));
    return w;
}

bool TruncatedLanguage::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

TruncatedLanguage validate_language(std::vector<Word> words, Alphabet alphabet) {
    if (alphabet.empty()) fail("BadAlphabet", "empty alphabet");
    if (words.empty()) fail("EmptyLanguage");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    const std::size_t n = words.front().size();
    for (const Word& w : words) {
        if (w.size() != n) fail("MixedLengths");
        for (Symbol s : w)
            if (s >= alphabet.size()) fail("LetterOutsideAlphabet", std::to_string(int(s)));
    }
    if (n == 0) fail("MixedLengths", "words must have positive length");

    std::vector<Word> prefixes, suffixes;
    prefixes.reserve(words.size());
    suffixes.reserve(words.size());
    for (const Word& w : words) {
        prefixes.push_back(subword(w, 0, n - 1));
        suffixes.push_back(subword(w, 1, n - 1));
    }
    std::sort(prefixes.begin(), prefixes.end());
    std::sort(suffixes.begin(), suffixes.end());
    for (const Word& w : words) {
        if (!std::binary_search(prefixes.begin(), prefixes.end(), subword(w, 1, n - 1)))
            fail("NotEssential", format_word(w, alphabet) + " right");
        if (!std::binary_search(suffixes.begin(), suffixes.end(), subword(w, 0, n - 1)))
            fail("NotEssential", format_word(w, alphabet) + " left");
    }
    return TruncatedLanguage(std::move(alphabet), n, std::move(words));
}

TruncatedLanguage project(const TruncatedLanguage& L, std::size_t m) {
    if (m < 1 || m > L.depth()) fail("BadDepth", std::to_string(m));
    if (m == L.depth()) return L;
    std::vector<Word> out;
    out.reserve(L.size() * 2);
    for (const Word& w : L.words())
        for (std::size_t i = 0; i + m <= w.size(); ++i) out.push_back(subword(w, i, m));
    return validate_language(std::move(out), L.alphabet());
}

TruncatedLanguage embed(const TruncatedLanguage& L, const Alphabet& wider) {
    std::vector<Symbol> map(L.alphabet().size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        auto idx = wider.index_of(L.alphabet().label(static_cast<Symbol>(i)));
        if (!idx) fail("BadAlphabet", "alphabet does not embed");
        map[i] = *idx;
    }
    std::vector<Word> out;
    out.reserve(L.size());
    for (const Word& w : L.words()) {
        Word r(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r[i] = map[w[i]];
        out.push_back(std::move(r));
    }
    return validate_language(std::move(out), wider);
}

bool same_language(const TruncatedLanguage& a, const TruncatedLanguage& b) {
    if (a.depth() != b.depth()) return false;
    if (a.alphabet() == b.alphabet()) return a.words() == b.words();
    Alphabet u = a.alphabet().unite(b.alphabet());
    return embed(a, u).words() == embed(b, u).words();
}

DistanceResult hausdorff_distance(const TruncatedLanguage& a, const TruncatedLanguage& b) {
    Alphabet u = a.alphabet().unite(b.alphabet());
    const std::size_t depth = std::min(a.depth(), b.depth());
    TruncatedLanguage A = embed(project(a, depth), u);
    TruncatedLanguage B = embed(project(b, depth), u);
    for (std::size_t d = 1; d <= depth; ++d)
        if (project(A, d).words() != project(B, d).words())
            return {DistanceResult::Kind::exact, d};
    return {DistanceResult::Kind::indistinguishable_to, depth};
}

std::vector<RightSpecial> right_special_words(const TruncatedLanguage& next_level) {
    std::vector<RightSpecial> out;
    const std::size_t n = next_level.depth();
    if (n < 2) {
        // the empty word is right-special iff there are at least two letters
        if (next_level.size() >= 2) out.push_back({Word{}, next_level.size()});
        return out;
    }
    const auto& words = next_level.words();
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t j = i + 1;
        while (j < words.size() && std::equal(words[i].begin(), words[i].end() - 1, words[j].begin()))
            ++j;
        if (j - i >= 2) out.push_back({subword(words[i], 0, n - 1), j - i});
        i = j;
    }
    return out;
}

ComplexityTable complexity_table(const TruncatedLanguage& top, std::size_t N) {
    if (N < 1 || top.depth() < N + 1) fail("BadDepth", "complexity table needs depth N+1");
    ComplexityTable t;
    t.max_depth = N;
    TruncatedLanguage cur = project(top, N + 1);
    std::vector<std::size_t> counts(N + 2);
    std::vector<std::vector<RightSpecial>> special(N + 1);
    for (std::size_t n = N + 1; n >= 1; --n) {
        counts[n] = cur.size();
        if (n >= 2) special[n - 1] = right_special_words(cur);
        if (n > 1) cur = project(cur, n - 1);
    }
    for (std::size_t n = 1; n <= N; ++n) {
        t.values.push_back(counts[n]);
        t.diffs.push_back(static_cast<long long>(counts[n + 1]) - static_cast<long long>(counts[n]));
        t.special.push_back(std::move(special[n]));
    }
    return t;
}

bool right_special_identity_holds(const ComplexityTable& t) {
    for (std::size_t i = 0; i < t.max_depth; ++i) {
        long long sum = 0;
        for (const auto& rs : t.special[i]) sum += static_cast<long long>(rs.degree) - 1;
        if (sum != t.diffs[i]) return false;
    }
    return true;
}

MorseHedlund morse_hedlund_check(const ComplexityTable& t) {
    for (std::size_t n = 1; n <= t.values.size(); ++n)
        if (t.values[n - 1] <= n) return {true, n};
    return {false, 0};
}

}  // namespace subshift
