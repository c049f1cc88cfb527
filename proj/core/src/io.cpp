#include "subshift/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        if (!line.empty()) lines.push_back(line);
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_spaces(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && s[pos] == ' ') ++pos;
        std::size_t end = s.find(' ', pos);
        if (end == std::string_view::npos) end = s.size();
        if (end > pos) out.push_back(s.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::size_t parse_size(std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail("ParseError", "expected an integer, got '" + std::string(s) + "'");
    return v;
}

// "key: value" -> (key, value)
std::pair<std::string_view, std::string_view> key_value(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("ParseError", "expected 'key: value' in '" + std::string(line) + "'");
    return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

std::string word_or_dash(const Word& w, const Alphabet& a) {
    return w.empty() ? "-" : format_word(w, a);
}

Word parse_word_or_dash(std::string_view s, const Alphabet& a) {
    return s == "-" ? Word{} : parse_word(s, a);
}

std::string word_list(const std::vector<Word>& ws, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ' ';
        out += word_or_dash(ws[i], a);
    }
    return out;
}

std::vector<Word> parse_word_list(std::string_view s, const Alphabet& a) {
    std::vector<Word> out;
    for (auto piece : split_spaces(s)) out.push_back(parse_word_or_dash(piece, a));
    return out;
}

}  // namespace

std::string format_language(const TruncatedLanguage& L) {
    std::ostringstream os;
    os << "alphabet:";
    for (int l : L.alphabet().labels()) os << ' ' << l;
    os << "\ndepth: " << L.depth() << '\n';
    for (const Word& w : L.words()) os << format_word(w, L.alphabet()) << '\n';
    return os.str();
}

TruncatedLanguage parse_language(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.size() < 2) fail("ParseError", "language needs alphabet and depth lines");
    auto [k1, v1] = key_value(lines[0]);
    if (k1 != "alphabet") fail("ParseError", "first line must be 'alphabet: ...'");
    std::vector<int> labels;
    for (auto piece : split_spaces(v1)) labels.push_back(static_cast<int>(parse_size(piece)));
    Alphabet a(std::move(labels));
    auto [k2, v2] = key_value(lines[1]);
    if (k2 != "depth") fail("ParseError", "second line must be 'depth: n'");
    const std::size_t depth = parse_size(v2);
    std::vector<Word> words;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        Word w = parse_word(lines[i], a);
        if (w.size() != depth) fail("MixedLengths", "word '" + std::string(lines[i]) + "' has wrong length");
        words.push_back(std::move(w));
    }
    return validate_language(std::move(words), std::move(a));
}

const std::string* MetaBlock::find(std::string_view key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

const std::string& MetaBlock::get(std::string_view key) const {
    if (auto* v = find(key)) return *v;
    fail("ParseError", "meta block lacks '" + std::string(key) + "'");
}

std::pair<MetaBlock, std::string_view> split_meta(std::string_view text) {
    MetaBlock m;
    std::size_t pos = 0;
    auto next_line = [&]() -> std::optional<std::string_view> {
        while (pos < text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            auto line = trim(text.substr(pos, nl - pos));
            pos = nl + 1;
            if (!line.empty()) return line;
        }
        return std::nullopt;
    };
    std::size_t save = pos;
    auto first = next_line();
    if (!first || first->substr(0, 5) != "meta:") {
        pos = save;
        return {m, text};
    }
    m.kind = std::string(key_value(*first).second);
    for (;;) {
        auto line = next_line();
        if (!line) fail("ParseError", "meta block is not closed by 'end'");
        if (*line == "end") break;
        auto [k, v] = key_value(*line);
        m.entries.emplace_back(std::string(k), std::string(v));
    }
    return {m, text.substr(std::min(pos, text.size()))};
}

std::string format_nmc(const NmcNormalForm& x, const TruncatedLanguage& L) {
    std::ostringstream os;
    const Alphabet& a = x.alphabet;
    os << "meta: nmc\n";
    os << "level: " << x.level << '\n';
    os << "initial: " << word_list(x.initial, a) << '\n';
    os << "terminal: " << word_list(x.terminal, a) << '\n';
    for (const auto& l : x.links) os << "link: " << l.from << ' ' << word_or_dash(l.middle, a) << ' ' << l.to << '\n';
    os << "end\n";
    os << format_language(L);
    return os.str();
}

NmcFile parse_nmc(std::string_view text) {
    auto [meta, rest] = split_meta(text);
    if (meta.kind != "nmc") fail("ParseError", "expected 'meta: nmc'");
    TruncatedLanguage L = parse_language(rest);
    NmcNormalForm x;
    x.alphabet = L.alphabet();
    x.level = meta.find("level") ? parse_size(meta.get("level")) : 0;
    x.initial = parse_word_list(meta.find("initial") ? *meta.find("initial") : "", x.alphabet);
    x.terminal = parse_word_list(meta.find("terminal") ? *meta.find("terminal") : "", x.alphabet);
    for (const auto& [k, v] : meta.entries) {
        if (k != "link") continue;
        auto parts = split_spaces(v);
        if (parts.size() != 3) fail("ParseError", "link needs 'from middle to'");
        x.links.push_back({parse_size(parts[0]), parse_word_or_dash(parts[1], x.alphabet), parse_size(parts[2])});
    }
    check_normal_form(x);
    return {std::move(x), std::move(L)};
}

std::string format_tau(const Tau& t) {
    if (!t.base) fail("InvariantViolated", "tau has no base language");
    const Alphabet& a = t.alphabet;
    std::ostringstream os;
    os << "meta: tau\n";
    os << "ell: " << t.ell() << '\n';
    os << "image0: " << format_word(t.image0, a) << '\n';
    os << "image1: " << format_word(t.image1, a) << '\n';
    os << "marker: " << format_word(t.marker, a) << '\n';
    os << "marker_offset: " << t.marker_offset << '\n';
    os << "gaps: " << t.gap0 << ' ' << t.gap1 << '\n';
    os << "base_level: " << t.base_level << '\n';
    os << "end\n";
    os << format_language(*t.base);
    return os.str();
}

Tau parse_tau(std::string_view text) {
    auto [meta, rest] = split_meta(text);
    if (meta.kind != "tau") fail("ParseError", "expected 'meta: tau'");
    Tau t;
    t.base = parse_language(rest);
    t.alphabet = t.base->alphabet();
    t.image0 = parse_word(meta.get("image0"), t.alphabet);
    t.image1 = parse_word(meta.get("image1"), t.alphabet);
    t.marker = parse_word(meta.get("marker"), t.alphabet);
    t.marker_offset = parse_size(meta.get("marker_offset"));
    auto gaps = split_spaces(meta.get("gaps"));
    if (gaps.size() != 2) fail("ParseError", "gaps needs two integers");
    t.gap0 = parse_size(gaps[0]);
    t.gap1 = parse_size(gaps[1]);
    t.base_level = parse_size(meta.get("base_level"));
    if (parse_size(meta.get("ell")) != t.image0.size() || t.image0.size() != t.image1.size())
        fail("ParseError", "image lengths disagree with ell");
    return t;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("FileError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("FileError", "cannot write " + path);
    out << content;
    if (!out) fail("FileError", "write failed for " + path);
}

}  // namespace subshift
