#pragma once

#include "mtshim/lie_core.hpp"

#include <string>
#include <vector>

namespace mtshim {

// ---------------------------------------------------------------------------
// Simple adjoint Shimura-pair descriptors: a classical type, one Dynkin
// diagram copy per real embedding, a finite permutation action on the
// disjoint-union diagram, and the marked special vertices. Everything the
// classifiers need is carried by this finite shadow.
// ---------------------------------------------------------------------------

struct DiagramVertex {
    int copy = 0;  // 0-based diagram component
    int node = 1;  // 1-based Bourbaki node within the component
};

bool operator==(const DiagramVertex& a, const DiagramVertex& b);
bool operator<(const DiagramVertex& a, const DiagramVertex& b);

// Permutation of the flattened vertex set; index = copy * rank + (node - 1).
using Permutation = std::vector<int>;

struct GaloisActionData {
    int degree = 1;
    std::vector<Permutation> generators;  // may be empty (trivial action)
};

struct RealFactor {
    enum class Kind { Compact, NonCompact, Signature } kind = Kind::NonCompact;
    long long a = 0, b = 0;  // Signature only (A-type), a + b = rank + 1
};

struct SimpleAdjointDescriptor {
    LieType lie;                        // canonicalized on validation
    int degree = 1;                     // number of diagram copies
    std::vector<RealFactor> real_data;  // one entry per copy
    std::vector<DiagramVertex> nu_x;    // marked vertices, one per noncompact copy
    GaloisActionData galois;
};

// Full structural validation: vertex ranges, per-copy diagram automorphisms,
// signature consistency, marked-vertex placement, and transitivity of the
// closure on copies. Throws ValidationError.
void validate_descriptor(const SimpleAdjointDescriptor& desc, const Caps& caps = {});

enum class ShimuraTypeKind { A, B, C, DH, DR, Dmixed, E6, E7 };

struct TypeLabel {
    ShimuraTypeKind kind = ShimuraTypeKind::A;
    int rank = 1;

    std::string label() const;  // "A_5", "D_6^H", "D_4^mixed", ...
};

bool operator==(const TypeLabel& a, const TypeLabel& b);

struct ClassificationReport {
    TypeLabel type_label;
    bool with_involution = false;
    bool inner = false;
    long long reflex_degree = 1;
    int compact_copies = 0;
};

// Deterministic group closure of the generators (sorted element list).
std::vector<Permutation> galois_closure(const SimpleAdjointDescriptor& desc, const Caps& caps = {});

TypeLabel classify_simple_type(const SimpleAdjointDescriptor& desc, const Caps& caps = {});

// Opposition involution (-w0) on a node of the given canonical family/rank:
// A: i -> n+1-i; B, C, even D: identity; odd D: swaps n-1 and n.
int opposition_node(const LieType& lie, int node);

bool involution_status(const SimpleAdjointDescriptor& desc, const TypeLabel& label);
// Closed-form table used as the cross-check in tests.
bool involution_closed_form(const SimpleAdjointDescriptor& desc, const TypeLabel& label);

// Inner form detection. For D-types: the closure has exactly three orbits on
// the extremal vertices. A_1/B/C: always inner; A_n (n>1): never.
bool is_inner(const SimpleAdjointDescriptor& desc, const Caps& caps = {});

// Index of the setwise stabilizer of nu_X in the closure group, i.e. the size
// of the orbit of nu_X as a set.
long long reflex_degree(const SimpleAdjointDescriptor& desc, const Caps& caps = {});

ClassificationReport classify(const SimpleAdjointDescriptor& desc, const Caps& caps = {});

struct PelFactorReason {
    bool admissible = false;
    std::string reason;
};

struct PelReport {
    bool pel_adjoint = false;
    std::vector<PelFactorReason> factors;
};

// A-type factors qualify unconditionally; C / D^H / inner D_4^R qualify iff
// the descriptor has no compact copy; everything else does not.
PelReport is_pel_adjoint(const std::vector<std::pair<SimpleAdjointDescriptor, TypeLabel>>& factors,
                         const Caps& caps = {});

// Alias canonicalization for raw labels; rejects D-ranks below 3.
LieType normalize_lie_label(LieFamily family, int rank);

}  // namespace mtshim
