#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subshift/forms.hpp"
#include "subshift/lang.hpp"
#include "subshift/rauzy.hpp"

namespace subshift {

// left^inf . middle . right^inf; left and right are nonempty.
struct BiPoint {
    Word left, middle, right;
    friend bool operator==(const BiPoint&, const BiPoint&) = default;
};

// Set of exponents given as a membership predicate with an enumeration.
struct IndexSet {
    enum class Kind { naturals, naturals0, squares, list };
    Kind kind = Kind::naturals;
    std::vector<std::size_t> members;  // for list, ascending

    bool contains(std::size_t r) const;
    bool infinite() const noexcept { return kind != Kind::list; }
    // Members in [lo, hi], ascending.
    std::vector<std::size_t> enumerate(std::size_t lo, std::size_t hi) const;
    std::string to_string() const;
    static IndexSet parse(std::string_view text);
};

// Points left^inf pre pump^r post right^inf for r in R; when R is infinite the
// limits left^inf pre pump^inf and pump^inf post right^inf belong too.
struct PumpFamily {
    Word left, pre, pump, post, right;
    IndexSet R;
};

struct GeneratorSpec;
using SpecPtr = std::shared_ptr<const GeneratorSpec>;

struct SftSource { RauzyGraph graph; };
struct SubstitutionSource {
    Alphabet alphabet;
    std::vector<Word> images;  // images[a] for letter index a
    Symbol seed = 0;
};
struct SturmianSource { std::vector<std::size_t> cf; };  // cf[0] = 0, then digits >= 1
struct OrmesPavlovSource { std::vector<std::size_t> n_seq; };
struct NmcSource { NmcNormalForm form; };
struct PointsSource {
    Alphabet alphabet;
    std::vector<BiPoint> points;
    std::vector<PumpFamily> families;
};
struct ChaconSource {};
struct PeriodDoublingSource {};
struct EigenBlockSource { std::size_t p = 2; };
struct TauImageSource { Tau tau; SpecPtr inner; std::string file; };
struct ProductSource { SpecPtr inner; Word period; Alphabet period_alphabet; };
struct PeriodicSource { Alphabet alphabet; Word word; };
struct SoficSource {
    struct Arc { std::size_t from, to; Symbol label; };
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<Arc> arcs;
};

struct GeneratorSpec {
    using Source = std::variant<SftSource, SubstitutionSource, SturmianSource, OrmesPavlovSource, NmcSource,
                                PointsSource, ChaconSource, PeriodDoublingSource, EigenBlockSource,
                                TauImageSource, ProductSource, PeriodicSource, SoficSource>;
    Source source;
    std::size_t depth_budget = 4096;
    std::size_t word_budget = 4'000'000;
};

// Errors: GeneratorBudgetExceeded, ValidityDepthExceeded.
TruncatedLanguage generate(const GeneratorSpec& spec, std::size_t n);

// Largest depth at which generate is exact; nullopt when unbounded.
std::optional<std::size_t> validity_depth(const GeneratorSpec& spec);

std::string kind_name(const GeneratorSpec& spec);
std::string to_spec_string(const GeneratorSpec& spec);
// One-line spec strings; `file=` options are read from disk.
GeneratorSpec parse_spec(std::string_view text);

GeneratorSpec sft_spec(const RauzyGraph& G);
GeneratorSpec sft_spec(const TruncatedLanguage& L);
GeneratorSpec golden_mean_spec();
GeneratorSpec full_shift_spec(std::size_t k);
GeneratorSpec substitution_spec(Alphabet a, std::vector<Word> images, Symbol seed);
GeneratorSpec period_doubling_spec();
GeneratorSpec sturmian_spec(std::vector<std::size_t> cf);
GeneratorSpec fibonacci_spec(std::size_t digits);  // cf = 0,1,1,...
GeneratorSpec ormes_pavlov_spec(std::vector<std::size_t> n_seq);
GeneratorSpec nmc_spec(NmcNormalForm form);
GeneratorSpec points_spec(Alphabet a, std::vector<BiPoint> points, std::vector<PumpFamily> families = {});
GeneratorSpec chacon_spec();
GeneratorSpec eigen_block_spec(std::size_t p);
GeneratorSpec tau_image_spec(Tau tau, GeneratorSpec inner);
GeneratorSpec product_spec(GeneratorSpec inner, Word period, Alphabet period_alphabet);
GeneratorSpec periodic_spec(Word word, Alphabet a);
GeneratorSpec sofic_spec(Alphabet a, std::size_t states, std::vector<SoficSource::Arc> arcs);

// Standard words s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2}.
Word standard_word(const std::vector<std::size_t>& cf, std::size_t k);
// B_0 = 0, B_{k+1} = B_k B_k 1 B_k.
Word chacon_block(std::size_t k);

struct OrmesPavlovTable {
    std::vector<std::size_t> n_seq;
    std::vector<std::size_t> m_seq;  // m_k = 2^k + 2 n_k + sum_{j<k} 2^{k-j-1} n_j
    // R as the disjoint union of half-open intervals (n_k, m_k].
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
};

// Errors: InvariantViolated when n_k < m_{k-1}.
OrmesPavlovTable ormes_pavlov_table(std::vector<std::size_t> n_seq);
// c(n) = n + 1 + |R ∩ [1, n)| for n = 1..N.
std::vector<std::size_t> ormes_pavlov_predict(const OrmesPavlovTable& t, std::size_t N);
// v(0) = 1, v(k+1) = v(k) 0^{n_k} v(k), up to k = |n_seq|.
Word ormes_pavlov_word(const std::vector<std::size_t>& n_seq);

ComplexityTable complexity_table(const GeneratorSpec& spec, std::size_t N);
std::vector<RightSpecial> right_special_words(const GeneratorSpec& spec, std::size_t n);

// Distinct length-n factors of the given bi-infinite points.
std::vector<Word> point_factors(const BiPoint& x, std::size_t n);

// Orbits: distinct periodic orbits of initial and terminal words plus distinct
// orbits of p^inf m s^inf.
std::size_t count_orbits_nmc(const NmcNormalForm& x);
std::vector<BiPoint> normal_form_points(const NmcNormalForm& x);

// Least period of w as a cyclic word, rotated to its least rotation.
Word primitive_root_canonical(const Word& w);

}  // namespace subshift
