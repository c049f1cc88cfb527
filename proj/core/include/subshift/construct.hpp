#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subshift/certify.hpp"
#include "subshift/forms.hpp"
#include "subshift/generators.hpp"
#include "subshift/lang.hpp"
#include "subshift/rational.hpp"
#include "subshift/rauzy.hpp"

namespace subshift {

// ---- dense NMC subshifts and isolation ------------------------------------

struct DenseNmc {
    NmcNormalForm form;      // form.level is the level where the new graph has no middle cycle
    GeneratorSpec generator;
    // Per edge of the input graph: a cycle through it, or a barbell from a
    // source component to a sink component whose transition contains it.
    std::vector<Path> cycles;
    std::vector<Barbell> barbells;
};

// Every cylinder contains an NMC subshift; this builds one.
DenseNmc dense_nmc(const TruncatedLanguage& L);

// Least level >= from at which the normal form's Rauzy graph has no middle
// cycle (InvariantViolated past `limit`).
std::size_t nmc_witness_level(const NmcNormalForm& x, std::size_t from, std::size_t limit = 512);

struct Isolation {
    std::size_t level = 0;  // n
    std::size_t radius = 0; // N: every Y in the depth-(n+N) cylinder equals X
};

// Errors: NotNmc when the graph at x.level has a middle cycle.
Isolation isolation_radius(const NmcNormalForm& x);

// ---- pumping and OMC cylinders --------------------------------------------

struct PumpWitness {
    std::size_t level = 0;
    std::size_t f = 0, g = 0;  // edges of the level-n Rauzy graph
    Path inside;               // P, along K from the target of f to the source of g
    Path cycle;                // K, starting at the source of g
    Word forbidden;            // label of fPg
    GeneratorSpec full;        // S(C)
    GeneratorSpec pruned;      // Y: paths avoiding fPg
    std::size_t differ_depth = 0;  // least depth where the two languages differ
    std::optional<Certificate> transitivity;  // for irreducible inputs
};

// Errors: IsNmc.
PumpWitness pump_witness(const TruncatedLanguage& L);

struct OmcCylinder {
    std::size_t depth = 0;       // N
    TruncatedLanguage language;  // depth-N language with an OMC Rauzy graph
    GeneratorSpec generator;     // the subshift it came from
    DoubleBarbell barbell;       // in the level-n graph: B, I, K, P, J, E
};

// Errors: IsNmc.
OmcCylinder omc_subcylinder(const TruncatedLanguage& L);

struct SparseOmc {
    GeneratorSpec generator;  // Y(R)
    std::size_t level = 0;    // Rauzy level of the decomposition used
    std::size_t cycle_length = 0;   // |K|
    std::size_t inside_length = 0;  // |P|
    IndexSet R;
    Word f_word, g_word;      // labels of f and g at that level
};

// Y(R): the OMC decomposition with fPK^r g allowed only for r in R. Uses L's
// own graph when it has OMC with a double barbell, otherwise the graph of
// omc_subcylinder(L). Errors: IsNmc.
SparseOmc sparse_omc(const TruncatedLanguage& L, const IndexSet& R);

// Paths with m edges that run through f, P, K^r and g for some r in R:
// sum over r of max(0, m - |P| - r|K| - 1).
std::size_t sparse_omc_paths(const SparseOmc& s, std::size_t m);
// Words of length m + level - 1 of Y(R) containing f's label followed later
// by g's label, counted on the generated language.
std::size_t sparse_omc_measured(const SparseOmc& s, std::size_t m);
// Upper estimate sum_{r in R, r|K| <= m} (m + 1 - r|K|) and the cruder m |R ∩ [1, m]|.
std::size_t sparse_omc_estimate(const SparseOmc& s, std::size_t m);
std::size_t sparse_omc_bound(const SparseOmc& s, std::size_t m);

struct Quadratic {
    Rational C{0}, D{0}, E{0};
    Rational operator()(std::int64_t n) const { return C * n * n + D * n + E; }
};

// Coefficients read off the pieces of a points generator: pump families give
// the n^2 / |pump| term, every other point at most n plus its period words.
Quadratic omc_quadratic(const GeneratorSpec& points_generator);

// ---- letter-to-word substitutions -----------------------------------------

// Errors: NotIrreducible; IsSingleCycle.
Tau letword_tau(const TruncatedLanguage& L);

struct TauDecomposition {
    Word prefix;  // proper suffix of an image
    Word inner;   // over {0,1}
    Word suffix;  // proper prefix of an image
    friend bool operator==(const TauDecomposition&, const TauDecomposition&) = default;
};

// Reads the alignment off the marker pair. Errors: TooShort; NotInImage.
TauDecomposition tau_decompose(const Word& word, const Tau& tau);
// Every split p tau(v) s of the word, found by trying all offsets.
std::vector<TauDecomposition> all_tau_decompositions(const Word& word, const Tau& tau);

GeneratorSpec tau_apply(const Tau& tau, const GeneratorSpec& inner);

struct DecipherReport {
    std::size_t length = 0;   // 3 ell - 1
    std::size_t words = 0;    // words of that length in the image of the full shift
    bool unique = false;      // each has exactly one split
    std::optional<Word> counterexample;
};

DecipherReport certify_decipherability(const Tau& tau);

struct ComplexityBound {
    std::size_t n = 0;
    std::size_t lower = 0, value = 0, upper = 0;
    bool holds() const noexcept { return lower <= value && value <= upper; }
};

// ell c_Y(floor(n/ell) - 2) <= c_{tau*(Y)}(n) <= ell c_Y(ceil(n/ell) + 2).
std::vector<ComplexityBound> tau_complexity_bounds(const Tau& tau, const GeneratorSpec& inner, std::size_t n_lo,
                                                   std::size_t n_hi);

// ---- return-word substitutions --------------------------------------------

struct ChainLevel {
    std::size_t n = 0;
    Word w, u, v;     // right-special word and its two return words, |u| <= |v|
    Word rho0, rho1;  // this level's substitution over {0,1} (over the source letters at level 1)
};

struct SubstitutionChain {
    std::vector<ChainLevel> levels;
    bool right_proper = false;
    // composed[k] = (rho_1 o ... o rho_{k+1})(0), equal to levels[k].u
    std::vector<Word> composed;
};

// Errors: NoOneRsLevel; AmbiguousRightSpecial.
SubstitutionChain rs_substitution_chain(const GeneratorSpec& gen, std::size_t levels, std::size_t budget = 200);

// ---- mixing covers ---------------------------------------------------------

struct MixingCover {
    std::size_t base = 0;
    Path first, second;       // K and K', closed walks at base through every edge
    GeneratorSpec generator;  // labels of free concatenations of K and K'
};

// Errors: NotPrimitive.
MixingCover mixing_cover(const RauzyGraph& G);
// Edge ids become letters for bare multigraphs.
MixingCover mixing_cover(const Digraph& g);

}  // namespace subshift
