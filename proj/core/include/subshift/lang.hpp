#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subshift {

// Letters are stored as canonical indices 0..k-1 into an Alphabet; the
// alphabet keeps the original integer labels for printing.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

class Alphabet {
public:
    Alphabet() = default;
    // Labels are sorted into canonical ascending order; duplicates, negative
    // labels and more than 256 letters are rejected (BadAlphabet).
    explicit Alphabet(std::vector<int> labels);
    static Alphabet range(std::size_t k);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    int label(Symbol s) const { return labels_.at(s); }
    std::optional<Symbol> index_of(int label) const;
    const std::vector<int>& labels() const noexcept { return labels_; }
    bool single_digit_labels() const noexcept;
    Alphabet unite(const Alphabet& other) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<int> labels_;
};

Word subword(const Word& w, std::size_t pos, std::size_t len);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::size_t times);
bool has_factor(const Word& haystack, const Word& needle);
std::size_t count_occurrences(const Word& haystack, const Word& needle);

// Text form of a word: digit string when every label is < 10, otherwise
// comma-separated labels.
std::string format_word(const Word& w, const Alphabet& a);
Word parse_word(std::string_view text, const Alphabet& a);
// Shorthand for tests and fixtures: "0110" over labels 0..9 taken as indices.
Word digits(std::string_view text);

enum class Side { left, right };

// A nonempty, left- and right-extendable set of words of one length n; it
// stands for the cylinder of all subshifts whose n-language it is.
class TruncatedLanguage {
public:
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t depth() const noexcept { return depth_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool contains(const Word& w) const;

    friend bool operator==(const TruncatedLanguage&, const TruncatedLanguage&) = default;

private:
    friend TruncatedLanguage validate_language(std::vector<Word>, Alphabet);
    TruncatedLanguage(Alphabet a, std::size_t depth, std::vector<Word> sorted)
        : alphabet_(std::move(a)), depth_(depth), words_(std::move(sorted)) {}

    Alphabet alphabet_;
    std::size_t depth_ = 0;
    std::vector<Word> words_;
};

// Errors: EmptyLanguage, MixedLengths, LetterOutsideAlphabet,
// NotEssential(word, side).
TruncatedLanguage validate_language(std::vector<Word> words, Alphabet alphabet);

// All m-subwords, 1 <= m <= depth (BadDepth otherwise).
TruncatedLanguage project(const TruncatedLanguage& L, std::size_t m);

// Re-index L over a larger alphabet containing all of L's labels.
TruncatedLanguage embed(const TruncatedLanguage& L, const Alphabet& wider);

// Word sets compared label-wise, ignoring unused alphabet letters.
bool same_language(const TruncatedLanguage& a, const TruncatedLanguage& b);

struct DistanceResult {
    enum class Kind { exact, indistinguishable_to };
    Kind kind;
    std::size_t value;  // d for exact (distance 2^-d), the depth otherwise

    bool exact() const noexcept { return kind == Kind::exact; }
    friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

DistanceResult hausdorff_distance(const TruncatedLanguage& a, const TruncatedLanguage& b);

struct RightSpecial {
    Word word;
    std::size_t degree;
    friend bool operator==(const RightSpecial&, const RightSpecial&) = default;
};

// Right-special (n-1)-words of a depth-n language with their out-degree.
std::vector<RightSpecial> right_special_words(const TruncatedLanguage& next_level);

struct ComplexityTable {
    std::size_t max_depth = 0;
    std::vector<std::size_t> values;                  // values[i] = c(i+1), i < N
    std::vector<long long> diffs;                     // diffs[i] = c(i+2) - c(i+1), i < N
    std::vector<std::vector<RightSpecial>> special;   // special[i]: right-special (i+1)-words

    std::size_t c(std::size_t n) const { return values.at(n - 1); }
    long long diff(std::size_t n) const { return diffs.at(n - 1); }
};

// Table for n = 1..N from a language of depth at least N+1.
ComplexityTable complexity_table(const TruncatedLanguage& top, std::size_t N);

// c(n+1) - c(n) equals the sum of (degree - 1) over right-special n-words.
bool right_special_identity_holds(const ComplexityTable& t);

struct MorseHedlund {
    bool eventually_periodic;
    std::size_t n0;  // least n with c(n) <= n when eventually periodic
};

MorseHedlund morse_hedlund_check(const ComplexityTable& t);

}  // namespace subshift
