#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "subshift/certify.hpp"
#include "subshift/construct.hpp"

using namespace subshift;

namespace {

GeneratorSpec periodic(const char* w, std::size_t k = 2) { return periodic_spec(digits(w), Alphabet::range(k)); }

// Independent search for the least transitivity window, straight from the words.
std::optional<std::size_t> brute_transitivity(const GeneratorSpec& g, std::size_t k, std::size_t budget) {
    for (std::size_t n = k; n <= budget; ++n) {
        const TruncatedLanguage L = generate(g, n);
        std::set<std::string> sub;
        for (const Word& w : L.words())
            for (const auto& f : oracle::factors(oracle::str(w), k)) sub.insert(f);
        bool ok = true;
        for (const auto& u : sub)
            for (const auto& v : sub) {
                bool seen = false;
                for (const Word& w : L.words()) {
                    const std::string s = oracle::str(w);
                    const auto i = s.find(u);
                    if (i != std::string::npos && s.find(v, i) != std::string::npos) seen = true;
                }
                ok = ok && seen;
            }
        if (ok) return n;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("transitivity") {
    const Certificate g = transitivity_certificate(golden_mean_spec(), 2, 12);
    CHECK(g.found);
    CHECK(g.n <= 8);
    CHECK(brute_transitivity(golden_mean_spec(), 2, 12) == g.n);
    CHECK_FALSE(transitivity_certificate(corpus::xm_limit(), 2, 14).found);
    // a constant orbit is transitive already at n = k
    const Certificate c = transitivity_certificate(periodic("0", 1), 1, 5);
    CHECK(c.found);
    CHECK(c.n == 1);
    // 011 needs both letters in one word
    CHECK(transitivity_certificate(periodic("011"), 1, 5).n == 2);
    for (const auto& f : corpus::families()) {
        if (f.name == "full 3-shift") continue;
        CAPTURE(f.name);
        const Certificate t = transitivity_certificate(f.spec, 2, 9);
        const auto ref = brute_transitivity(f.spec, 2, 9);
        CHECK(t.found == ref.has_value());
        if (ref) CHECK(t.n == *ref);
    }
}

TEST_CASE("minimality") {
    CHECK(minimality_certificate(fibonacci_spec(20), 2, 14).found);
    CHECK_FALSE(minimality_certificate(golden_mean_spec(), 1, 12).found);
    const Certificate p = minimality_certificate(periodic("011"), 1, 12);
    CHECK(p.found);
    CHECK(p.n == 3);
}

TEST_CASE("mixing") {
    const Certificate g = mixing_certificate(golden_mean_spec(), 1, 12);
    CHECK(g.found);
    CHECK(g.k <= 2);
    CHECK_FALSE(mixing_certificate(periodic("01"), 1, 12).found);
    const Certificate f = mixing_certificate(full_shift_spec(2), 2, 12);
    CHECK(f.found);
    CHECK(f.k == 1);
    // primitive Rauzy graphs give mixing SFTs
    for (const auto& c : corpus::primitive_cylinders()) {
        CAPTURE(c.name);
        CHECK(mixing_certificate(sft_spec(c.language), 1, 12).found);
    }
}

TEST_CASE("Toeplitz") {
    const GeneratorSpec pd = period_doubling_spec();
    const Certificate a = toeplitz_certificate(pd, Rational(1, 3), 33, 4);
    REQUIRE(a.found);
    CHECK(a.k == 3);
    // the count propagates to longer windows
    for (std::size_t N = a.N; N < a.N + 5; ++N) CHECK(toeplitz_common_count(generate(pd, N), 4) == std::optional<std::size_t>(3));
    CHECK_FALSE(toeplitz_certificate(fibonacci_spec(20), Rational(1, 10), 33).found);
    const Certificate z = toeplitz_certificate(periodic("0", 1), Rational(1, 10), 8);
    CHECK(z.found);
    CHECK(z.n == 1);
    CHECK(z.k == 1);
}

TEST_CASE("clopen partitions") {
    CHECK(partition_certificate(eigen_block_spec(3), 3, 14).found);
    CHECK_FALSE(partition_certificate(golden_mean_spec(), 2, 12).found);
    const Certificate p = partition_certificate(periodic("011"), 3, 12, std::vector<Word>{digits("011")});
    CHECK(p.found);
    CHECK(recheck(p, periodic("011")));
}

TEST_CASE("rigidity") {
    const Certificate f = rigidity_certificate(fibonacci_spec(20), 1, Rational(1, 4), 40);
    REQUIRE(f.found);
    const std::vector<std::size_t> fib = {1, 2, 3, 5, 8, 13, 21, 34};
    CHECK(std::find(fib.begin(), fib.end(), f.M) != fib.end());
    CHECK_FALSE(rigidity_certificate(full_shift_spec(2), 1, Rational(1, 4), 12).found);
    CHECK(rigidity_certificate(periodic("0", 1), 1, Rational(1, 4), 12).M == 1);
}

TEST_CASE("certificates survive a text round-trip and recheck") {
    const std::vector<std::pair<Certificate, GeneratorSpec>> found = {
        {transitivity_certificate(golden_mean_spec(), 2, 12), golden_mean_spec()},
        {minimality_certificate(fibonacci_spec(20), 2, 14), fibonacci_spec(20)},
        {mixing_certificate(golden_mean_spec(), 1, 12), golden_mean_spec()},
        {toeplitz_certificate(period_doubling_spec(), Rational(1, 3), 33, 4), period_doubling_spec()},
        {partition_certificate(eigen_block_spec(3), 3, 14), eigen_block_spec(3)},
        {rigidity_certificate(fibonacci_spec(20), 1, Rational(1, 4), 40), fibonacci_spec(20)},
        {nonbalance_certificate(chacon_spec(), 2, 40), chacon_spec()},
    };
    for (const auto& [c, g] : found) {
        CAPTURE(c.to_string());
        REQUIRE(c.found);
        const Certificate back = Certificate::parse(c.to_string());
        CHECK(back.to_string() == c.to_string());
        CHECK(recheck(back, g));
    }
    // a certificate for the wrong subshift does not recheck
    CHECK_FALSE(recheck(mixing_certificate(golden_mean_spec(), 1, 12), periodic("01")));
    const Certificate miss = Certificate::parse("mixing n=1; not-found-within(12)");
    CHECK_FALSE(miss.found);
    CHECK(miss.budget == 12);
}

TEST_CASE("frequencies") {
    const FrequencyEstimate f = frequency_estimate(fibonacci_spec(20), digits("1"), 100);
    const double slope = 2 - (1 + std::sqrt(5.0)) / 2;
    CHECK(boost::rational_cast<double>(f.lo) <= slope);
    CHECK(slope <= boost::rational_cast<double>(f.hi));
    const FrequencyEstimate g = frequency_estimate(fibonacci_spec(20), digits("1"), 200);
    CHECK(g.hi - g.lo <= f.hi - f.lo);
    const FrequencyEstimate p = frequency_estimate(periodic("01"), digits("0"), 9);
    CHECK(p.lo <= Rational(1, 2));
    CHECK(Rational(1, 2) <= p.hi);
}

TEST_CASE("balance") {
    const BalanceReport fib = balance_report(fibonacci_spec(20), digits("1"), 200, Rational(987, 2584));
    CHECK(fib.bound <= 1);
    const BalanceReport per = balance_report(periodic("011"), digits("0"), 60, Rational(1, 3));
    CHECK(per.bound < 3);
    CHECK(per.trend == BalanceReport::Trend::bounded_so_far);
    // the Chacon letter discrepancy, recomputed from a long block
    const BalanceReport ch = balance_report(chacon_spec(), digits("1"), 120, Rational(1, 3));
    const std::string b = oracle::str(chacon_block(7));
    Rational worst(0);
    for (std::size_t len = 1; len <= 120; ++len)
        for (std::size_t i = 0; i + len <= b.size(); ++i) {
            const auto ones = static_cast<std::int64_t>(std::count(b.begin() + static_cast<long>(i),
                                                                   b.begin() + static_cast<long>(i + len), '1'));
            Rational d = Rational(ones) - Rational(static_cast<std::int64_t>(len), 3);
            if (d < 0) d = -d;
            worst = std::max(worst, d);
        }
    CHECK(ch.bound == worst);
    CHECK(balance_report(chacon_spec(), digits("1"), 200, Rational(1, 3)).trend == BalanceReport::Trend::growing);
}

TEST_CASE("nonbalance") {
    CHECK(nonbalance_certificate(chacon_spec(), 2, 40).found);
    CHECK_FALSE(nonbalance_certificate(fibonacci_spec(20), 2, 40).found);
}

TEST_CASE("occurrence counts add up over a language") {
    for (const auto& f : corpus::families()) {
        CAPTURE(f.name);
        const TruncatedLanguage L3 = generate(f.spec, 3), L9 = generate(f.spec, 9);
        for (const Word& v : L9.words()) {
            std::size_t total = 0;
            for (const Word& w : L3.words()) total += count_occurrences(v, w);
            CHECK(total == v.size() - 3 + 1);
        }
    }
}

TEST_CASE("complexity windows and one-rs levels") {
    const ComplexityWindow w = complexity_window(
        fibonacci_spec(20), [](std::int64_t n) { return n; }, [](std::int64_t n) { return n + 2; }, 20);
    CHECK(w.hits.size() == 20);
    CHECK_FALSE(entropy_lower_failure(golden_mean_spec(), std::log((1 + std::sqrt(5.0)) / 2) / 2, 12).has_value());
    CHECK(entropy_lower_failure(fibonacci_spec(20), 0.2, 40).has_value());
    const auto one = one_rs_levels(fibonacci_spec(20), 12);
    CHECK(one.size() == 11);
    CHECK(one.front() == 1);
    CHECK(one.back() == 11);
    CHECK(one_rs_levels(full_shift_spec(2), 10).empty());
}

TEST_CASE("finite window growth comparison") {
    const IntSeq id = [](std::int64_t n) { return n; };
    const IntSeq plus_log = [](std::int64_t n) {
        return n + static_cast<std::int64_t>(std::ceil(std::log2(static_cast<double>(std::max<std::int64_t>(n, 1)))));
    };
    for (const PrecEntry& e : prec_window_check(id, plus_log, 3, 3, 400)) {
        CAPTURE(e.s);
        CAPTURE(e.t);
        CHECK(e.from.has_value());
    }
    const IntSeq plus_one = [](std::int64_t n) { return n + 1; };
    for (const PrecEntry& e : prec_window_check(id, plus_one, 2, 1, 100))
        if (e.s == 2 && e.t == 1) CHECK_FALSE(e.from.has_value());
    for (const PrecEntry& e : prec_window_check(id, id, 1, 1, 50)) CHECK_FALSE(e.from.has_value());
}
