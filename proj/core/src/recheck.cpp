// Exhaustive re-verification of found certificates. Everything here works on
// plain byte strings and direct loops on purpose: it must not reuse the
// searchers' helpers, so a bug there cannot vouch for itself.
#include <set>
#include <string>
#include <vector>

#include "subshift/certify.hpp"
#include "subshift/error.hpp"

namespace subshift {
namespace {

using Strings = std::vector<std::string>;

Strings as_strings(const TruncatedLanguage& L) {
    Strings out;
    for (const Word& w : L.words()) out.emplace_back(w.begin(), w.end());
    return out;
}

std::set<std::string> factors(const Strings& words, std::size_t k) {
    std::set<std::string> out;
    for (const auto& w : words)
        for (std::size_t i = 0; i + k <= w.size(); ++i) out.insert(w.substr(i, k));
    return out;
}

bool check_transitivity(const Strings& L, std::size_t k) {
    const auto U = factors(L, k);
    for (const auto& u : U)
        for (const auto& v : U) {
            bool witnessed = false;
            for (const auto& w : L) {
                for (std::size_t i = 0; i + k <= w.size() && !witnessed; ++i)
                    for (std::size_t j = i; j + k <= w.size() && !witnessed; ++j)
                        witnessed = w.compare(i, k, u) == 0 && w.compare(j, k, v) == 0;
                if (witnessed) break;
            }
            if (!witnessed) return false;
        }
    return true;
}

bool check_minimality(const Strings& L, std::size_t k) {
    const auto U = factors(L, k);
    for (const auto& w : L)
        for (const auto& u : U)
            if (w.find(u) == std::string::npos) return false;
    return true;
}

bool check_mixing(const Strings& Ln, const Strings& Lk, const Strings& Lbig) {
    const std::set<std::string> big(Lbig.begin(), Lbig.end());
    for (const auto& v : Ln)
        for (const auto& w : Ln) {
            bool bridged = false;
            for (const auto& u : Lk)
                if (big.count(v + u + w)) {
                    bridged = true;
                    break;
                }
            if (!bridged) return false;
        }
    return true;
}

std::size_t progressions(const std::string& u, std::size_t n) {
    std::size_t k = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::set<char> seen;
        for (std::size_t i = s; i < u.size(); i += n) seen.insert(u[i]);
        if (seen.size() <= 1) ++k;
    }
    return k;
}

bool check_toeplitz(const Strings& L, const Certificate& c) {
    if (c.n == 0 || c.N < 2 || 2 * c.n > c.N) return false;
    if (!(Rational(static_cast<std::int64_t>(c.k), static_cast<std::int64_t>(c.n)) > Rational(1) - c.epsilon))
        return false;
    for (const auto& w : L)
        for (const auto& u : {w, w.substr(0, w.size() - 1), w.substr(1)})
            if (progressions(u, c.n) != c.k) return false;
    return true;
}

bool check_partition(const Strings& L, const std::set<std::string>& S, std::size_t m, std::size_t p) {
    for (const auto& w : L) {
        if (w.size() + 1 < m + p) return false;  // every residue must be visible
        bool phased = false;
        for (std::size_t i = 0; i < p && !phased; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j + m <= w.size(); ++j) {
                bool in_s = S.count(w.substr(j, m)) != 0;
                if (in_s != (j % p == i)) {
                    ok = false;
                    break;
                }
            }
            phased = ok;
        }
        if (!phased) return false;
    }
    return true;
}

bool check_rigidity(const Strings& L, const Certificate& c) {
    const std::size_t n = c.n, M = c.M, N = c.N;
    if (n == 0 || M == 0 || n + M > N) return false;
    const std::size_t valid = N - n - M + 1;
    const std::size_t den = c.denominator == RigidityDenominator::valid_positions ? valid : N;
    // agree / den > 1 - p/q  <=>  agree * q > (q - p) * den
    const auto p = c.epsilon.numerator(), q = c.epsilon.denominator();
    for (const auto& v : L) {
        std::int64_t agree = 0;
        for (std::size_t i = 0; i < valid; ++i)
            if (v.substr(i, n) == v.substr(i + M, n)) ++agree;
        if (!(agree * q > (q - p) * static_cast<std::int64_t>(den))) return false;
    }
    return true;
}

bool check_nonbalance(const Strings& Lk, std::size_t n, std::size_t letters) {
    for (std::size_t a = 0; a < letters; ++a) {
        const char ch = static_cast<char>(a);
        bool spread = false;
        for (std::size_t len = 1; len <= Lk.front().size() && !spread; ++len) {
            std::size_t lo = len, hi = 0;
            for (const auto& w : Lk)
                for (std::size_t i = 0; i + len <= w.size(); ++i) {
                    std::size_t cnt = 0;
                    for (std::size_t j = i; j < i + len; ++j) cnt += w[j] == ch;
                    if (cnt < lo) lo = cnt;
                    if (cnt > hi) hi = cnt;
                }
            spread = hi >= lo + n;
        }
        if (!spread) return false;
    }
    return true;
}

}  // namespace

bool recheck(const Certificate& c, const GeneratorSpec& gen) {
    using K = Certificate::Kind;
    if (!c.found) fail("BadParameter", "only found certificates can be rechecked");
    switch (c.kind) {
        case K::transitivity:
            return c.k >= 1 && c.n >= c.k && check_transitivity(as_strings(generate(gen, c.n)), c.k);
        case K::minimality:
            return c.k >= 1 && c.n >= c.k && check_minimality(as_strings(generate(gen, c.n)), c.k);
        case K::mixing:
            if (c.n == 0 || c.k == 0) return false;
            return check_mixing(as_strings(generate(gen, c.n)), as_strings(generate(gen, c.k)),
                                as_strings(generate(gen, 2 * c.n + c.k)));
        case K::toeplitz:
            return check_toeplitz(as_strings(generate(gen, c.N)), c);
        case K::partition: {
            if (c.p < 2 || c.m == 0 || c.N < c.m) return false;
            const auto L = generate(gen, c.N);
            std::set<std::string> S;
            for (const auto& text : c.marker_set) {
                Word w = parse_word(text, L.alphabet());
                if (w.size() != c.m) return false;
                S.emplace(w.begin(), w.end());
            }
            return check_partition(as_strings(L), S, c.m, c.p);
        }
        case K::rigidity:
            return check_rigidity(as_strings(generate(gen, c.N)), c);
        case K::nonbalance: {
            if (c.n == 0 || c.k == 0) return false;
            const auto L = generate(gen, c.k);
            return check_nonbalance(as_strings(L), c.n, L.alphabet().size());
        }
    }
    return false;
}

}  // namespace subshift
