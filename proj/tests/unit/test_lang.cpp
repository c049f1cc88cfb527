#include <doctest.h>

#include <functional>
#include <utility>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "subshift/error.hpp"
#include "subshift/io.hpp"
#include "subshift/lang.hpp"

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

}  // namespace

TEST_CASE("alphabet sorts labels and rejects bad ones") {
    Alphabet a({5, 2, 9});
    CHECK(a.labels() == std::vector<int>{2, 5, 9});
    CHECK(a.index_of(9) == Symbol{2});
    CHECK_FALSE(a.index_of(3).has_value());
    CHECK(error_name([] { Alphabet({1, 1}); }) == "BadAlphabet");
    CHECK(error_name([] { Alphabet({-1}); }) == "BadAlphabet");
}

TEST_CASE("validate_language rejects malformed word sets") {
    const Alphabet a = Alphabet::range(2);
    CHECK(error_name([&] { validate_language({}, a); }) == "EmptyLanguage");
    CHECK(error_name([&] { validate_language({digits("0"), digits("01")}, a); }) == "MixedLengths");
    CHECK(error_name([&] { validate_language({digits("02")}, a); }) == "LetterOutsideAlphabet");
    // 01 has no right extension among {00, 01}: 1 never starts a word
    CHECK(error_name([&] { validate_language({digits("00"), digits("01")}, a); }) == "NotEssential");
    CHECK_NOTHROW(validate_language({digits("01"), digits("10")}, a));
}

TEST_CASE("language files round-trip exactly") {
    for (const auto& c : corpus::cylinders()) {
        const std::string text = format_language(c.language);
        const TruncatedLanguage back = parse_language(text);
        CHECK(back == c.language);
        CHECK(format_language(back) == text);
    }
    // labels of two digits switch to comma separated words
    const TruncatedLanguage wide = validate_language({{0, 1}, {1, 0}}, Alphabet({3, 12}));
    CHECK(parse_language(format_language(wide)) == wide);
}

TEST_CASE("projection equals direct factor extraction") {
    std::string a = "0", b = "01";
    for (int i = 0; i < 16; ++i) a = std::exchange(b, b + a);
    const TruncatedLanguage L = generate(fibonacci_spec(20), 12);
    for (std::size_t m = 1; m <= 12; ++m) CHECK(oracle::words_of(project(L, m)) == oracle::factors(b, m));
}

TEST_CASE("hausdorff distance is the first depth where languages differ") {
    const TruncatedLanguage g = generate(golden_mean_spec(), 6);
    const TruncatedLanguage f = generate(full_shift_spec(2), 6);
    const DistanceResult d = hausdorff_distance(g, f);
    CHECK(d.exact());
    CHECK(d.value == 2);  // 11 is the shortest difference
    CHECK(hausdorff_distance(f, g) == d);
    const DistanceResult same = hausdorff_distance(g, generate(golden_mean_spec(), 4));
    CHECK_FALSE(same.exact());
    CHECK(same.value == 4);
}

TEST_CASE("complexity table of a Sturmian word is n + 1") {
    const ComplexityTable t = complexity_table(fibonacci_spec(20), 40);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(t.c(n) == n + 1);
    CHECK(right_special_identity_holds(t));
    CHECK_FALSE(morse_hedlund_check(t).eventually_periodic);
}

TEST_CASE("Morse-Hedlund flags periodic words") {
    const ComplexityTable t = complexity_table(periodic_spec(digits("011"), Alphabet::range(2)), 10);
    const MorseHedlund mh = morse_hedlund_check(t);
    CHECK(mh.eventually_periodic);
    CHECK(mh.n0 <= 3);
    for (std::size_t n = 3; n <= 10; ++n) CHECK(t.c(n) == 3);
}

TEST_CASE("right-special words of the golden mean") {
    // at every length the only right-special word ends in 0 and is followed by 0 or 1
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto rs = right_special_words(generate(golden_mean_spec(), n));
        for (const auto& r : rs) {
            CHECK(r.degree == 2);
            CHECK(r.word.back() == 0);
        }
    }
}
