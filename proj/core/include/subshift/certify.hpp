#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/generators.hpp"
#include "subshift/lang.hpp"
#include "subshift/rational.hpp"

namespace subshift {

enum class RigidityDenominator { valid_positions, word_length };

// Finite witness for one of the searchable properties. Only the fields of
// the certificate's kind are meaningful; `found == false` means nothing was
// found up to `budget`, never that the property fails.
struct Certificate {
    enum class Kind { transitivity, minimality, mixing, toeplitz, partition, rigidity, nonbalance };
    Kind kind = Kind::transitivity;
    bool found = false;
    std::size_t budget = 0;

    std::size_t k = 0, n = 0, N = 0, M = 0, m = 0, p = 0;
    Rational epsilon{0};
    std::vector<std::string> marker_set;  // partition: formatted m-words
    RigidityDenominator denominator = RigidityDenominator::valid_positions;

    // `kind key=value ...; found` or `...; not-found-within(B)`
    std::string to_string() const;
    static Certificate parse(std::string_view text);
};

std::string kind_name(Certificate::Kind k);

// Least n in [k, budget] such that for all k-words u, v of L_n some w in L_n
// has an occurrence of u starting no later than an occurrence of v.
Certificate transitivity_certificate(const GeneratorSpec& gen, std::size_t k, std::size_t budget);
// Least n in [k, budget] with every k-word inside every word of L_n.
Certificate minimality_certificate(const GeneratorSpec& gen, std::size_t k, std::size_t budget);
// Least k in [1, budget] with v u w in L_{2n+k} for all v, w in L_n and some u.
Certificate mixing_certificate(const GeneratorSpec& gen, std::size_t n, std::size_t budget);

// Number of residues mod n on which every word of L_N (and its two
// (N-1)-subwords) is constant, when that number is the same for all of them.
std::optional<std::size_t> toeplitz_common_count(const TruncatedLanguage& LN, std::size_t n);
// Searches N ascending up to budget, then n in [1, N/2] (or only fixed_n),
// accepting k/n > 1 - eps.
Certificate toeplitz_certificate(const GeneratorSpec& gen, const Rational& eps, std::size_t budget,
                                 std::optional<std::size_t> fixed_n = std::nullopt);

// With no marker set: least m <= budget whose (m+1)-Rauzy graph carries a
// phase map to Z/p increasing by one along every edge; S is phase 0.
// With a marker set of m-words: least N in [m, budget] where every word of
// L_N has a phase.
Certificate partition_certificate(const GeneratorSpec& gen, std::size_t p, std::size_t budget,
                                  std::optional<std::vector<Word>> marker_set = std::nullopt);

// Least N in [n+1, budget], then least M in [1, N-n], where every word of L_N
// repeats its n-word at distance M on a proportion > 1 - eps of positions.
Certificate rigidity_certificate(const GeneratorSpec& gen, std::size_t n, const Rational& eps, std::size_t budget,
                                 RigidityDenominator denominator = RigidityDenominator::valid_positions);

// Least k in [1, budget] such that for every letter two equal-length
// subwords of L_k-words differ in that letter's count by at least n.
Certificate nonbalance_certificate(const GeneratorSpec& gen, std::size_t n, std::size_t budget);

// Independent exhaustive check of a found certificate.
bool recheck(const Certificate& c, const GeneratorSpec& gen);

struct FrequencyEstimate {
    Word word;
    Rational lo{0}, hi{0};
    std::size_t depth = 0;
};

// [min, max] of |v|_w / (|v| - |w| + 1) over v in L_depth.
FrequencyEstimate frequency_estimate(const GeneratorSpec& gen, const Word& w, std::size_t depth);

struct BalanceReport {
    enum class Trend { bounded_so_far, growing };
    Word word;
    Rational mu{0};
    std::vector<Rational> max_abs;  // max_abs[l-1] = max |D(w, v)| over v in L_l
    Trend trend = Trend::bounded_so_far;
    Rational bound{0};              // overall maximum, the C_w seen so far
};

// D(w, v) = |v|_w - |v| mu for all v of length 1..depth. Growing when the
// maximum over the last third exceeds the ceiling of the first third's.
BalanceReport balance_report(const GeneratorSpec& gen, const Word& w, std::size_t depth, const Rational& mu);

using IntSeq = std::function<std::int64_t(std::int64_t)>;

struct ComplexityWindow {
    std::vector<std::size_t> values;  // c(1..budget)
    std::vector<std::size_t> hits;    // n with f(n) <= c(n) <= g(n)
};

ComplexityWindow complexity_window(const GeneratorSpec& gen, const IntSeq& f, const IntSeq& g, std::size_t budget);
// First n <= budget with c(n) < ceil(e^{n eps}), or nullopt when none.
std::optional<std::size_t> entropy_lower_failure(const GeneratorSpec& gen, double eps, std::size_t budget);
// {n <= budget - 1 : c(n+1) = c(n) + 1}
std::vector<std::size_t> one_rs_levels(const GeneratorSpec& gen, std::size_t budget);

struct PrecEntry {
    std::size_t s = 0, t = 0;
    std::optional<std::size_t> from;  // least N with the inequalities for all N <= n <= budget
};

// t f(n+s) < g(t n) and f(t n) < t g(n-s), for n in (s, budget].
std::vector<PrecEntry> prec_window_check(const IntSeq& f, const IntSeq& g, std::size_t s_max, std::size_t t_max,
                                         std::size_t budget);

}  // namespace subshift
