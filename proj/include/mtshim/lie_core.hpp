#pragma once

#include "mtshim/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace mtshim {

// ---------------------------------------------------------------------------
// Classical Lie types and their minuscule representations, with exact
// dimension formulas, explicit weight enumeration, two-level cocharacter
// classes, and duality (orthogonal / symplectic / non-self-dual) data.
// ---------------------------------------------------------------------------

enum class LieFamily { A, B, C, D };

char family_char(LieFamily f);
LieFamily family_from_char(char c);

// A classical type label. The (family, rank) pair is kept as given so that
// low-rank aliases (B_1, C_1, B_2, D_3) can still be displayed; comparisons
// and catalog identity always go through canonical().
struct LieType {
    LieFamily family = LieFamily::A;
    int rank = 1;

    LieType() = default;
    LieType(LieFamily f, int r);  // validates

    LieType canonical() const;
    bool is_canonical() const;
    std::string label() const;  // e.g. "A_3", "D_5"
};

bool operator==(const LieType& a, const LieType& b);   // canonical comparison
bool operator<(const LieType& a, const LieType& b);    // canonical ordering

// Minuscule highest weight, Bourbaki index. Admissibility depends on the type:
// A_n: 1..n; B_n: n (spin); C_n: 1 (standard); D_n: 1, n-1, n.
struct MinusculeWeight {
    int index = 1;
};

std::vector<MinusculeWeight> minuscule_weights(const LieType& lie);

struct RepDescriptor {
    LieType lie;
    MinusculeWeight weight;

    RepDescriptor() = default;
    RepDescriptor(LieType t, int weight_index);  // validates admissibility

    RepDescriptor canonical() const;  // alias-normalized type and weight
    std::string label() const;        // e.g. "A_4 w2"
    // Name of the same representation in B/C/D spin-alias coordinates when one
    // exists (e.g. canonical A_1 w1 -> "C_1 std / B_1 spin"), empty otherwise.
    std::string alias_label() const;
};

bool operator==(const RepDescriptor& a, const RepDescriptor& b);
bool operator<(const RepDescriptor& a, const RepDescriptor& b);

BigInt rep_dimension(const RepDescriptor& rep);

// Weight vector in the standard epsilon-basis; exact rational coordinates
// (half-integers for spin weights). Length = rank for B/C/D, rank+1 for A.
using WeightVector = std::vector<Rational>;

// Full weight multiset of the representation, sorted lexicographically.
// Every minuscule weight has multiplicity one, so this is just a set.
std::vector<WeightVector> enumerate_weights(const RepDescriptor& rep, const Caps& caps = {});

struct MultiplicityPair {
    BigInt m_id = 0;
    BigInt m_triv = 0;
};

bool operator==(const MultiplicityPair& a, const MultiplicityPair& b);

// A conjugacy class of cocharacters acting on the representation with exactly
// two weight levels. For A_r these are the coweights with marked-set size
// `marker` (all markers for the standard/dual weights, the two extreme markers
// otherwise); B/C/D minuscule representations carry a single class (marker 0).
struct CocharacterClass {
    RepDescriptor rep;
    int marker = 0;
    MultiplicityPair pair;
};

std::vector<CocharacterClass> admissible_cocharacter_classes(const RepDescriptor& rep);

// Exact pair for one class; throws if the class does not belong to the rep.
MultiplicityPair multiplicity_pair(const RepDescriptor& rep, const CocharacterClass& cls);

// The coweight vector (epsilon-basis) that realizes a class; pairing weights
// against it recovers the two levels. Used by the recount oracle in tests.
WeightVector cocharacter_vector(const CocharacterClass& cls);

enum class DualityType { NonSelfDual, Orthogonal, Symplectic };

std::string duality_name(DualityType d);

// Closed-form duality classification.
DualityType duality(const RepDescriptor& rep);

// Independent oracle: builds the representation matrices explicitly (exterior
// powers of the standard representation for A/C/D standard weights, fermionic
// Clifford operators for spin weights), solves for an invariant bilinear form
// over exact rationals, and classifies by its symmetry.
// Caps: dimension <= 64 and canonical rank <= 6.
DualityType duality_oracle(const RepDescriptor& rep);

// Minuscule + (for A) dimension rank+1, i.e. the weights that embed via a
// standard representation.
bool is_sd_standard(const RepDescriptor& rep);

// Reduced two-level ratios m_id:m_triv over all admissible classes, as
// fractions in (0, 1].
std::vector<Rational> ratio_menu(const RepDescriptor& rep);

// All canonical descriptors of exact dimension d (d >= 2), duplicates under
// alias normalization removed, sorted canonically.
std::vector<RepDescriptor> catalog_of_dim(long long d);

// All canonical descriptors with 2 <= dim <= max_dim, sorted canonically.
std::vector<RepDescriptor> factor_catalog(long long max_dim);

}  // namespace mtshim
