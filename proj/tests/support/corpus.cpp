#include "corpus.hpp"

#include "subshift/construct.hpp"

namespace corpus {

using namespace subshift;

TruncatedLanguage nondecreasing3(std::size_t depth) {
    return generate(sft_spec(validate_language({digits("00"), digits("01"), digits("02"), digits("11"), digits("12"),
                                                digits("22")},
                                               Alphabet::range(3))),
                    depth);
}

GeneratorSpec even_shift() {
    // state 0 after an even block of 0s, state 1 inside one
    return sofic_spec(Alphabet::range(2), 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

GeneratorSpec xm_limit() {
    return points_spec(Alphabet::range(2),
                       {{digits("0"), {}, digits("0")},
                        {digits("1"), {}, digits("1")},
                        {digits("0"), {}, digits("1")},
                        {digits("1"), {}, digits("0")}});
}

std::vector<NamedGenerator> families() {
    std::vector<NamedGenerator> out;
    out.push_back({"golden mean", golden_mean_spec()});
    out.push_back({"full 2-shift", full_shift_spec(2)});
    out.push_back({"full 3-shift", full_shift_spec(3)});
    out.push_back({"even shift", even_shift()});
    out.push_back({"fibonacci", fibonacci_spec(20)});
    out.push_back({"sturmian 0,2,1,3,...", sturmian_spec({0, 2, 1, 3, 1, 2, 1, 2, 1, 1, 2})});
    out.push_back({"period doubling", period_doubling_spec()});
    out.push_back({"chacon", chacon_spec()});
    out.push_back({"thue-morse", substitution_spec(Alphabet::range(2), {digits("01"), digits("10")}, 0)});
    out.push_back({"ormes-pavlov 1,3,9", ormes_pavlov_spec({1, 3, 9})});
    out.push_back({"eigen block 3", eigen_block_spec(3)});
    out.push_back({"periodic 011", periodic_spec(digits("011"), Alphabet::range(2))});
    out.push_back({"x_m limit", xm_limit()});
    out.push_back({"nmc 0 1 2", nmc_spec(hand_forms().front().form)});
    out.push_back({"tau image of fibonacci", tau_image_spec(letword_tau(generate(golden_mean_spec(), 2)), fibonacci_spec(20))});
    out.push_back({"pd x period 01", product_spec(period_doubling_spec(), digits("01"), Alphabet::range(2))});
    return out;
}

std::vector<NamedLanguage> cylinders() {
    std::vector<NamedLanguage> out;
    auto add = [&](const std::string& name, const GeneratorSpec& g, std::size_t lo, std::size_t hi) {
        for (std::size_t n = lo; n <= hi; ++n) out.push_back({name + " L" + std::to_string(n), generate(g, n)});
    };
    add("golden mean", golden_mean_spec(), 2, 5);
    add("full 2-shift", full_shift_spec(2), 2, 4);
    add("full 3-shift", full_shift_spec(3), 2, 2);
    for (std::size_t n = 2; n <= 4; ++n) out.push_back({"nondecreasing L" + std::to_string(n), nondecreasing3(n)});
    add("even shift", even_shift(), 2, 4);
    add("fibonacci", fibonacci_spec(20), 2, 5);
    add("period doubling", period_doubling_spec(), 2, 5);
    add("chacon", chacon_spec(), 2, 5);
    add("x_m limit", xm_limit(), 2, 4);
    return out;
}

std::vector<NamedLanguage> primitive_cylinders() {
    std::vector<NamedLanguage> out;
    out.push_back({"golden mean L2", generate(golden_mean_spec(), 2)});
    out.push_back({"golden mean L3", generate(golden_mean_spec(), 3)});
    out.push_back({"full 2-shift L2", generate(full_shift_spec(2), 2)});
    out.push_back({"even shift L3", generate(even_shift(), 3)});
    out.push_back({"fibonacci L3", generate(fibonacci_spec(20), 3)});
    out.push_back({"period doubling L3", generate(period_doubling_spec(), 3)});
    return out;
}

std::vector<NamedForm> hand_forms() {
    std::vector<NamedForm> out;
    {
        NmcNormalForm x;
        x.alphabet = Alphabet::range(3);
        x.initial = {digits("0")};
        x.terminal = {digits("2")};
        x.links = {{0, digits("1"), 0}};
        out.push_back({"0^inf 1 2^inf", x});
    }
    {
        NmcNormalForm x;
        x.alphabet = Alphabet::range(2);
        x.terminal = {digits("01")};
        out.push_back({"periodic 01", x});
    }
    {
        NmcNormalForm x;
        x.alphabet = Alphabet::range(3);
        x.initial = {digits("0"), digits("01")};
        x.terminal = {digits("2")};
        x.links = {{0, digits("1"), 0}, {1, digits("1"), 0}, {0, digits("11"), 0}};
        out.push_back({"three links", x});
    }
    {
        // the second link is the first one shifted: one orbit, not two
        NmcNormalForm x;
        x.alphabet = Alphabet::range(2);
        x.initial = {digits("0")};
        x.terminal = {digits("1")};
        x.links = {{0, {}, 0}, {0, digits("0"), 0}, {0, digits("01"), 0}};
        out.push_back({"shifted duplicates", x});
    }
    {
        // rotations of one periodic orbit listed twice
        NmcNormalForm x;
        x.alphabet = Alphabet::range(3);
        x.initial = {digits("01"), digits("10")};
        x.terminal = {digits("2"), digits("22")};
        x.links = {{0, digits("2"), 0}, {1, {}, 1}};
        out.push_back({"repeated orbits", x});
    }
    return out;
}

namespace {

Digraph figure_base(std::size_t extra_vertices) {
    // a b c d = 0..3, e f g = 4..6, h i j = 7..9, k l = 10 11, m = 12
    Digraph g(13 + extra_vertices);
    const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4},
                                         {7, 8}, {8, 9}, {9, 7}, {10, 11}, {11, 10}, {12, 12},
                                         {1, 8}, {1, 10}, {1, 12}, {6, 8}, {6, 10}};
    for (auto [u, v] : edges) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    return g;
}

}  // namespace

Digraph figure1() {
    Digraph g = figure_base(0);
    g.add_edge(6, 12);
    return g;
}

Digraph figure2() {
    Digraph g = figure1();
    g.add_edge(2, 4);
    return g;
}

Digraph figure3() {
    // n = 13, o = 14 form a 2-cycle between g and m
    Digraph g = figure_base(2);
    g.add_edge(6, 13);
    g.add_edge(13, 14);
    g.add_edge(14, 13);
    g.add_edge(14, 12);
    return g;
}

}  // namespace corpus
