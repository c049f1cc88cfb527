#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>

#include "subshift/error.hpp"
#include "subshift/generators.hpp"

namespace subshift {
namespace {

std::size_t least_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return p;
    }
    return n;
}

// Shift-invariant description of left^inf middle right^inf with
// primitive periods: the left period just before the first break from
// left-periodicity, the right period from the start of right-periodicity,
// and what lies between (or how far the two overlap).
struct HeteroKey {
    Word left, right;
    long long gap;
    Word middle;
    auto tie() const { return std::tie(left, right, gap, middle); }
    bool operator<(const HeteroKey& o) const { return tie() < o.tie(); }
};

HeteroKey hetero_key(const Word& p, const Word& m, const Word& s) {
    Word lp = subword(p, 0, least_period(p));
    Word rp = subword(s, 0, least_period(s));
    const std::size_t reps = m.size() + lp.size() + rp.size() + 2;
    Word W = concat(concat(power(lp, reps), m), power(rp, reps));
    std::size_t t = 0;
    while (t < W.size() && W[t] == lp[t % lp.size()]) ++t;
    // right-periodic tail measured from the end, aligned with rp
    const std::size_t tail_start = W.size() - reps * rp.size();
    std::size_t u = tail_start;
    while (u > 0) {
        std::size_t i = u - 1;
        std::size_t phase = (rp.size() - (tail_start - i) % rp.size()) % rp.size();
        if (W[i] != rp[phase]) break;
        u = i;
    }
    if (t == W.size()) fail("InvariantViolated", "point is periodic");
    HeteroKey k;
    k.left = subword(W, t - lp.size(), lp.size());
    k.right = subword(W, u, rp.size());
    k.gap = static_cast<long long>(u) - static_cast<long long>(t);
    if (k.gap > 0) k.middle = subword(W, t, static_cast<std::size_t>(k.gap));
    return k;
}

}  // namespace

Word primitive_root_canonical(const Word& w) {
    if (w.empty()) fail("InvariantViolated", "empty period word");
    Word root = subword(w, 0, least_period(w));
    Word best = root;
    for (std::size_t i = 1; i < root.size(); ++i) {
        Word r = concat(subword(root, i, root.size() - i), subword(root, 0, i));
        best = std::min(best, r);
    }
    return best;
}

bool IndexSet::contains(std::size_t r) const {
    switch (kind) {
        case Kind::naturals: return r >= 1;
        case Kind::naturals0: return true;
        case Kind::squares: {
            if (r == 0) return false;
            std::size_t q = 1;
            while (q * q < r) ++q;
            return q * q == r;
        }
        case Kind::list: return std::binary_search(members.begin(), members.end(), r);
    }
    return false;
}

std::vector<std::size_t> IndexSet::enumerate(std::size_t lo, std::size_t hi) const {
    std::vector<std::size_t> out;
    if (kind == Kind::list) {
        for (std::size_t r : members)
            if (r >= lo && r <= hi) out.push_back(r);
        return out;
    }
    if (kind == Kind::squares) {
        for (std::size_t q = 1; q * q <= hi; ++q)
            if (q * q >= lo) out.push_back(q * q);
        return out;
    }
    for (std::size_t r = lo; r <= hi; ++r)
        if (contains(r)) out.push_back(r);
    return out;
}

std::string IndexSet::to_string() const {
    switch (kind) {
        case Kind::naturals: return "naturals";
        case Kind::naturals0: return "naturals0";
        case Kind::squares: return "squares";
        case Kind::list: {
            std::string s = "list";
            for (std::size_t r : members) s += ":" + std::to_string(r);
            return s;
        }
    }
    return "naturals";
}

IndexSet IndexSet::parse(std::string_view text) {
    IndexSet r;
    if (text == "naturals") return r;
    if (text == "naturals0") { r.kind = Kind::naturals0; return r; }
    if (text == "squares") { r.kind = Kind::squares; return r; }
    if (text.substr(0, 4) != "list") fail("ParseError", "unknown index set '" + std::string(text) + "'");
    r.kind = Kind::list;
    std::size_t pos = 4;
    while (pos < text.size()) {
        if (text[pos] != ':') fail("ParseError", "list members are ':'-separated");
        std::size_t end = text.find(':', pos + 1);
        if (end == std::string_view::npos) end = text.size();
        std::size_t v = 0;
        auto piece = text.substr(pos + 1, end - pos - 1);
        auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || p != piece.data() + piece.size()) fail("ParseError", "bad list member");
        r.members.push_back(v);
        pos = end;
    }
    std::sort(r.members.begin(), r.members.end());
    r.members.erase(std::unique(r.members.begin(), r.members.end()), r.members.end());
    return r;
}

std::vector<Word> point_factors(const BiPoint& x, std::size_t n) {
    if (x.left.empty() || x.right.empty()) fail("InvariantViolated", "point needs nonempty periods");
    Word W = concat(concat(power(x.left, n / x.left.size() + 1), x.middle), power(x.right, n / x.right.size() + 1));
    std::vector<Word> out;
    for (std::size_t i = 0; i + n <= W.size(); ++i) out.push_back(subword(W, i, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> NmcNormalForm::transitions() const {
    std::vector<Word> m;
    for (const auto& l : links) m.push_back(l.middle);
    return m;
}

void check_normal_form(const NmcNormalForm& x) {
    std::set<Word> initial_roots;
    for (const Word& p : x.initial) {
        if (p.empty()) fail("InvariantViolated", "empty initial word");
        initial_roots.insert(primitive_root_canonical(p));
    }
    for (const Word& s : x.terminal) {
        if (s.empty()) fail("InvariantViolated", "empty terminal word");
        if (initial_roots.count(primitive_root_canonical(s)))
            fail("InvariantViolated", "an initial and a terminal word give the same orbit");
    }
    for (const auto& l : x.links)
        if (l.from >= x.initial.size() || l.to >= x.terminal.size())
            fail("InvariantViolated", "link index out of range");
    for (const auto& ws : {x.initial, x.terminal})
        for (const Word& w : ws)
            for (Symbol s : w)
                if (s >= x.alphabet.size()) fail("LetterOutsideAlphabet");
}

std::vector<BiPoint> normal_form_points(const NmcNormalForm& x) {
    std::vector<BiPoint> pts;
    for (const Word& p : x.initial) pts.push_back({p, {}, p});
    for (const Word& s : x.terminal) pts.push_back({s, {}, s});
    for (const auto& l : x.links) pts.push_back({x.initial[l.from], l.middle, x.terminal[l.to]});
    return pts;
}

std::size_t count_orbits_nmc(const NmcNormalForm& x) {
    check_normal_form(x);
    std::set<Word> periodic;
    for (const Word& p : x.initial) periodic.insert(primitive_root_canonical(p));
    for (const Word& s : x.terminal) periodic.insert(primitive_root_canonical(s));
    std::set<HeteroKey> hetero;
    for (const auto& l : x.links) hetero.insert(hetero_key(x.initial[l.from], l.middle, x.terminal[l.to]));
    return periodic.size() + hetero.size();
}

Word Tau::apply(const Word& inner) const {
    Word out;
    out.reserve(inner.size() * ell());
    for (Symbol s : inner) {
        if (s > 1) fail("LetterOutsideAlphabet", "tau acts on {0,1}");
        const Word& img = image(s);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

}  // namespace subshift
