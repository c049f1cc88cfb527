#pragma once
// Shared fixtures: named generators, cylinders, normal forms and graphs.

#include <string>
#include <vector>

#include "subshift/forms.hpp"
#include "subshift/generators.hpp"
#include "subshift/lang.hpp"
#include "subshift/rauzy.hpp"

namespace corpus {

struct NamedGenerator {
    std::string name;
    subshift::GeneratorSpec spec;
};

// One generator per family, each valid to depth at least 13.
std::vector<NamedGenerator> families();

struct NamedLanguage {
    std::string name;
    subshift::TruncatedLanguage language;
};

// SFT-style cylinders at depths 2 to 5.
std::vector<NamedLanguage> cylinders();
// Cylinders whose Rauzy graph is primitive.
std::vector<NamedLanguage> primitive_cylinders();

subshift::TruncatedLanguage nondecreasing3(std::size_t depth);  // words over 0 <= 1 <= 2
subshift::GeneratorSpec even_shift();
subshift::GeneratorSpec xm_limit();  // orbits of 0^inf, 1^inf, 0^inf 1^inf, 1^inf 0^inf

struct NamedForm {
    std::string name;
    subshift::NmcNormalForm form;
};

std::vector<NamedForm> hand_forms();

// Graphs drawn in the NMC and OMC discussion, vertices a, b, ... in order.
subshift::Digraph figure1();
subshift::Digraph figure2();
subshift::Digraph figure3();

}  // namespace corpus
