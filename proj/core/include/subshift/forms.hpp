#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subshift/lang.hpp"

namespace subshift {

// Finitely many orbits: periodic points p^inf (p in initial), s^inf (s in
// terminal) and heteroclinic points p^inf m s^inf given as links.
struct NmcNormalForm {
    struct Link {
        std::size_t from;  // index into initial
        Word middle;
        std::size_t to;    // index into terminal
        friend bool operator==(const Link&, const Link&) = default;
    };

    Alphabet alphabet;
    std::vector<Word> initial;
    std::vector<Word> terminal;
    std::vector<Link> links;
    std::size_t level = 0;  // Rauzy level at which the graph has no middle cycle; 0 = unknown

    std::vector<Word> transitions() const;
};

// Throws InvariantViolated when some initial and terminal word generate the
// same periodic orbit, a word is empty, or a link index is out of range.
void check_normal_form(const NmcNormalForm& x);

// Letter-to-word substitution 0 -> image0, 1 -> image1 whose images are long
// enough to be decoded from a marker word.
struct Tau {
    Alphabet alphabet;
    std::size_t base_level = 0;
    Word image0, image1;
    Word marker;                    // v: occurs twice in each image
    std::size_t marker_offset = 0;  // first occurrence of v in either image
    std::size_t gap0 = 0;           // |K|: distance between the two v's in image0
    std::size_t gap1 = 0;           // |K| + |K'|: same in image1
    std::optional<TruncatedLanguage> base;

    std::size_t ell() const noexcept { return image0.size(); }
    std::size_t decipher_bound() const noexcept { return 3 * ell() - 1; }
    const Word& image(Symbol s) const { return s == 0 ? image0 : image1; }
    Word apply(const Word& inner) const;
};

}  // namespace subshift
