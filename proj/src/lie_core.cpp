#include "mtshim/lie_core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace mtshim {

char family_char(LieFamily f) {
    switch (f) {
        case LieFamily::A: return 'A';
        case LieFamily::B: return 'B';
        case LieFamily::C: return 'C';
        case LieFamily::D: return 'D';
    }
    return '?';
}

LieFamily family_from_char(char c) {
    switch (c) {
        case 'A': return LieFamily::A;
        case 'B': return LieFamily::B;
        case 'C': return LieFamily::C;
        case 'D': return LieFamily::D;
    }
    throw ValidationError(std::string("unknown Lie family '") + c + "'");
}

LieType::LieType(LieFamily f, int r) : family(f), rank(r) {
    if (rank < 1) throw ValidationError("Lie type rank must be positive");
    if (family == LieFamily::D && rank < 3)
        throw ValidationError("D_" + std::to_string(rank) + " is not a simple type label here (rank >= 3 required)");
}

LieType LieType::canonical() const {
    // B_1, C_1 -> A_1; B_2 -> C_2; D_3 -> A_3.
    if (family == LieFamily::B && rank == 1) return LieType(LieFamily::A, 1);
    if (family == LieFamily::C && rank == 1) return LieType(LieFamily::A, 1);
    if (family == LieFamily::B && rank == 2) return LieType(LieFamily::C, 2);
    if (family == LieFamily::D && rank == 3) return LieType(LieFamily::A, 3);
    return *this;
}

bool LieType::is_canonical() const {
    LieType c = canonical();
    return c.family == family && c.rank == rank;
}

std::string LieType::label() const {
    return std::string(1, family_char(family)) + "_" + std::to_string(rank);
}

bool operator==(const LieType& a, const LieType& b) {
    LieType ca = a.canonical(), cb = b.canonical();
    return ca.family == cb.family && ca.rank == cb.rank;
}

bool operator<(const LieType& a, const LieType& b) {
    LieType ca = a.canonical(), cb = b.canonical();
    return std::tie(ca.family, ca.rank) < std::tie(cb.family, cb.rank);
}

std::vector<MinusculeWeight> minuscule_weights(const LieType& lie) {
    std::vector<MinusculeWeight> out;
    switch (lie.family) {
        case LieFamily::A:
            for (int i = 1; i <= lie.rank; ++i) out.push_back({i});
            break;
        case LieFamily::B:
            out.push_back({lie.rank});
            break;
        case LieFamily::C:
            out.push_back({1});
            break;
        case LieFamily::D:
            out.push_back({1});
            if (lie.rank - 1 != 1) out.push_back({lie.rank - 1});
            out.push_back({lie.rank});
            break;
    }
    return out;
}

namespace {

bool weight_admissible(const LieType& lie, int w) {
    switch (lie.family) {
        case LieFamily::A: return w >= 1 && w <= lie.rank;
        case LieFamily::B: return w == lie.rank;
        case LieFamily::C: return w == 1;
        case LieFamily::D: return w == 1 || w == lie.rank - 1 || w == lie.rank;
    }
    return false;
}

}  // namespace

RepDescriptor::RepDescriptor(LieType t, int weight_index) : lie(t), weight{weight_index} {
    if (!weight_admissible(lie, weight_index))
        throw ValidationError("weight w" + std::to_string(weight_index) + " is not minuscule for " + lie.label() +
                              " (only minuscule highest weights are supported)");
}

RepDescriptor RepDescriptor::canonical() const {
    LieType ct = lie.canonical();
    if (ct.family == lie.family && ct.rank == lie.rank) return *this;
    // Map the weight along the listed isomorphisms.
    if (lie.family == LieFamily::B && lie.rank == 1) return RepDescriptor(ct, 1);   // B_1 spin = A_1 std
    if (lie.family == LieFamily::C && lie.rank == 1) return RepDescriptor(ct, 1);   // C_1 std = A_1 std
    if (lie.family == LieFamily::B && lie.rank == 2) return RepDescriptor(ct, 1);   // B_2 spin = C_2 std
    if (lie.family == LieFamily::D && lie.rank == 3) {
        // D_3 = A_3: standard (w1) <-> exterior square (w2); half-spins <-> the
        // two 4-dimensional weights. Fixed convention: w3 -> w1, w2 -> w3.
        if (weight.index == 1) return RepDescriptor(ct, 2);
        if (weight.index == 3) return RepDescriptor(ct, 1);
        return RepDescriptor(ct, 3);
    }
    throw ValidationError("unhandled alias for " + lie.label());
}

std::string RepDescriptor::label() const {
    return lie.label() + " w" + std::to_string(weight.index);
}

std::string RepDescriptor::alias_label() const {
    RepDescriptor c = canonical();
    if (c.lie.family == LieFamily::A && c.lie.rank == 1) return "C_1 std / B_1 spin";
    if (c.lie.family == LieFamily::C && c.lie.rank == 2) return "B_2 spin";
    if (c.lie.family == LieFamily::A && c.lie.rank == 3) {
        if (c.weight.index == 2) return "D_3 std";
        return "D_3 half-spin";
    }
    return "";
}

bool operator==(const RepDescriptor& a, const RepDescriptor& b) {
    RepDescriptor ca = a.canonical(), cb = b.canonical();
    return ca.lie == cb.lie && ca.weight.index == cb.weight.index;
}

bool operator<(const RepDescriptor& a, const RepDescriptor& b) {
    RepDescriptor ca = a.canonical(), cb = b.canonical();
    if (!(ca.lie == cb.lie)) return ca.lie < cb.lie;
    return ca.weight.index < cb.weight.index;
}

BigInt rep_dimension(const RepDescriptor& rep) {
    RepDescriptor c = rep.canonical();
    int n = c.lie.rank;
    switch (c.lie.family) {
        case LieFamily::A: return binomial(n + 1, c.weight.index);
        case LieFamily::B: return pow2(n);
        case LieFamily::C: return 2 * BigInt(n);
        case LieFamily::D:
            if (c.weight.index == 1) return 2 * BigInt(n);
            return pow2(n - 1);
    }
    throw ValidationError("bad descriptor");
}

// ---------------------------------------------------------------------------
// Weight enumeration
// ---------------------------------------------------------------------------

std::vector<WeightVector> enumerate_weights(const RepDescriptor& rep, const Caps& caps) {
    RepDescriptor c = rep.canonical();
    BigInt dim = rep_dimension(c);
    if (dim > caps.weight_enum_cap)
        throw ResourceError("weight enumeration for " + rep.label() + " exceeds cap (dim " + dim.str() + ")");
    int n = c.lie.rank;
    std::vector<WeightVector> out;
    const Rational half(1, 2);

    auto push_sign_vectors = [&](int len, int parity /* -1: all, 0: even, 1: odd */) {
        for (long long mask = 0; mask < (1LL << len); ++mask) {
            int minus = __builtin_popcountll(static_cast<unsigned long long>(mask));
            if (parity >= 0 && (minus & 1) != parity) continue;
            WeightVector w(len);
            for (int i = 0; i < len; ++i) w[i] = (mask >> i) & 1 ? -half : half;
            out.push_back(std::move(w));
        }
    };

    switch (c.lie.family) {
        case LieFamily::A: {
            int s = c.weight.index;
            // indicator vectors of s-element subsets of {0..n}
            std::vector<int> idx(s);
            for (int i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                WeightVector w(n + 1, Rational(0));
                for (int i : idx) w[i] = 1;
                out.push_back(std::move(w));
                int k = s - 1;
                while (k >= 0 && idx[k] == n - (s - 1 - k)) --k;
                if (k < 0) break;
                ++idx[k];
                for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
            break;
        }
        case LieFamily::B:
            push_sign_vectors(n, -1);
            break;
        case LieFamily::C:
        case LieFamily::D:
            if (c.weight.index == 1 && c.lie.family == LieFamily::C) {
                for (int i = 0; i < n; ++i) {
                    WeightVector w(n, Rational(0));
                    w[i] = 1;
                    out.push_back(w);
                    w[i] = -1;
                    out.push_back(std::move(w));
                }
            } else if (c.weight.index == 1) {
                for (int i = 0; i < n; ++i) {
                    WeightVector w(n, Rational(0));
                    w[i] = 1;
                    out.push_back(w);
                    w[i] = -1;
                    out.push_back(std::move(w));
                }
            } else {
                // half-spin: w_n even number of minus signs, w_{n-1} odd
                push_sign_vectors(n, c.weight.index == n ? 0 : 1);
            }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Cocharacter classes and multiplicity pairs
// ---------------------------------------------------------------------------

namespace {

// Two-level condition and pair for an A_r weight w_s under the marked-set-size-a coweight.
bool a_type_two_level(int r, int s, int a) {
    int top = std::min(a, s);
    int low = std::max(0, a + s - (r + 1));
    return top - low == 1;
}

MultiplicityPair a_type_pair(int r, int s, int a) {
    int top = std::min(a, s);
    MultiplicityPair p;
    p.m_id = binomial(a, top) * binomial(r + 1 - a, s - top);
    p.m_triv = binomial(a, top - 1) * binomial(r + 1 - a, s - top + 1);
    return p;
}

}  // namespace

std::vector<CocharacterClass> admissible_cocharacter_classes(const RepDescriptor& rep) {
    RepDescriptor c = rep.canonical();
    int n = c.lie.rank;
    std::vector<CocharacterClass> out;
    if (c.lie.family == LieFamily::A) {
        int s = c.weight.index;
        for (int a = 1; a <= n; ++a) {
            if (!a_type_two_level(n, s, a)) continue;
            out.push_back({c, a, a_type_pair(n, s, a)});
        }
        return out;
    }
    BigInt half_dim = rep_dimension(c) / 2;
    out.push_back({c, 0, {half_dim, half_dim}});
    return out;
}

MultiplicityPair multiplicity_pair(const RepDescriptor& rep, const CocharacterClass& cls) {
    if (!(cls.rep == rep)) throw ValidationError("cocharacter class does not belong to " + rep.label());
    for (const auto& k : admissible_cocharacter_classes(rep))
        if (k.marker == cls.marker) return k.pair;
    throw ValidationError("marker " + std::to_string(cls.marker) + " is not an admissible class for " + rep.label());
}

WeightVector cocharacter_vector(const CocharacterClass& cls) {
    RepDescriptor c = cls.rep.canonical();
    int n = c.lie.rank;
    const Rational half(1, 2);
    if (c.lie.family == LieFamily::A) {
        WeightVector v(n + 1, Rational(0));
        for (int i = 0; i < cls.marker; ++i) v[i] = 1;
        return v;
    }
    if (c.lie.family == LieFamily::B) {
        WeightVector v(n, Rational(0));
        v[0] = 1;
        return v;
    }
    if (c.weight.index == 1) return WeightVector(n, half);  // C_n and D_n standard
    WeightVector v(n, Rational(0));                         // D_n half-spin
    v[0] = 1;
    return v;
}

bool operator==(const MultiplicityPair& a, const MultiplicityPair& b) {
    return a.m_id == b.m_id && a.m_triv == b.m_triv;
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

std::string duality_name(DualityType d) {
    switch (d) {
        case DualityType::NonSelfDual: return "non-self-dual";
        case DualityType::Orthogonal: return "orthogonal";
        case DualityType::Symplectic: return "symplectic";
    }
    return "?";
}

DualityType duality(const RepDescriptor& rep) {
    RepDescriptor c = rep.canonical();
    int n = c.lie.rank;
    int s = c.weight.index;
    switch (c.lie.family) {
        case LieFamily::A:
            if (n != 2 * s - 1) return DualityType::NonSelfDual;
            return s % 2 == 0 ? DualityType::Orthogonal : DualityType::Symplectic;
        case LieFamily::B:
            return (n % 4 == 0 || n % 4 == 3) ? DualityType::Orthogonal : DualityType::Symplectic;
        case LieFamily::C:
            return DualityType::Symplectic;
        case LieFamily::D:
            if (s == 1) return DualityType::Orthogonal;
            if (n % 2 == 1) return DualityType::NonSelfDual;
            return n % 4 == 0 ? DualityType::Orthogonal : DualityType::Symplectic;
    }
    throw ValidationError("bad descriptor");
}

// ----- explicit-matrix oracle ----------------------------------------------

namespace {

struct SparseEntry {
    int row, col;
    Rational val;
};
using SparseOp = std::vector<SparseEntry>;

// Representation as a list of Lie-algebra operators plus the diagonal Cartan
// weights of each basis vector.
struct ExplicitRep {
    int dim = 0;
    std::vector<SparseOp> ops;                 // spanning set, Cartan included
    std::vector<std::vector<Rational>> wt;     // wt[basis] = diagonal weight vector
    // A-type weights are gl coordinates and the traceless Cartan only fixes
    // them up to a constant shift; B/C/D weights pair against exact negation.
    bool pair_mod_constant = false;
};

// Lambda^s of the standard sl_{r+1} representation.
ExplicitRep build_exterior_power(int r, int s) {
    int n = r + 1;
    std::vector<std::vector<int>> basis;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        basis.push_back(idx);
        int k = s - 1;
        while (k >= 0 && idx[k] == n - 1 - (s - 1 - k)) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::map<std::vector<int>, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);

    ExplicitRep rep;
    rep.dim = static_cast<int>(basis.size());
    rep.pair_mod_constant = true;
    for (int b = 0; b < rep.dim; ++b) {
        std::vector<Rational> w(n, Rational(0));
        for (int e : basis[b]) w[e] = 1;
        rep.wt.push_back(std::move(w));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            SparseOp op;
            for (int b = 0; b < rep.dim; ++b) {
                const auto& S = basis[b];
                if (!std::binary_search(S.begin(), S.end(), j)) continue;
                if (std::binary_search(S.begin(), S.end(), i)) continue;
                std::vector<int> T;
                int between = 0;
                for (int e : S) {
                    if (e == j) continue;
                    if (e > std::min(i, j) && e < std::max(i, j)) ++between;
                    T.push_back(e);
                }
                T.push_back(i);
                std::sort(T.begin(), T.end());
                op.push_back({pos[T], b, (between % 2 == 0) ? Rational(1) : Rational(-1)});
            }
            if (!op.empty()) rep.ops.push_back(std::move(op));
        }
    }
    // Cartan h_k = E_kk - E_{k+1,k+1}
    for (int k = 0; k + 1 < n; ++k) {
        SparseOp op;
        for (int b = 0; b < rep.dim; ++b) {
            Rational d = rep.wt[b][k] - rep.wt[b][k + 1];
            if (d != 0) op.push_back({b, b, d});
        }
        rep.ops.push_back(std::move(op));
    }
    return rep;
}

// Standard representation of split so(2n) (form x^T S y, S = [[0,I],[I,0]])
// or sp(2n) (J = [[0,I],[-I,0]]). Basis e_1..e_n, f_1..f_n.
ExplicitRep build_standard_bcd(int n, bool symplectic) {
    ExplicitRep rep;
    rep.dim = 2 * n;
    for (int b = 0; b < 2 * n; ++b) {
        std::vector<Rational> w(n, Rational(0));
        w[b % n] = b < n ? 1 : -1;
        rep.wt.push_back(std::move(w));
    }
    auto add = [&](std::initializer_list<SparseEntry> entries) {
        SparseOp op(entries);
        rep.ops.push_back(std::move(op));
    };
    // block A: arbitrary n x n -> [[A,0],[0,-A^T]]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                add({{i, i, Rational(1)}, {n + i, n + i, Rational(-1)}});
            } else {
                add({{i, j, Rational(1)}, {n + j, n + i, Rational(-1)}});
            }
        }
    // block B (top right), block C (bottom left)
    for (int i = 0; i < n; ++i)
        for (int j = symplectic ? i : i + 1; j < n; ++j) {
            if (symplectic && i == j) {
                add({{i, n + i, Rational(1)}});
                add({{n + i, i, Rational(1)}});
            } else {
                Rational sgn = symplectic ? 1 : -1;
                add({{i, n + j, Rational(1)}, {j, n + i, sgn}});
                add({{n + i, j, Rational(1)}, {n + j, i, sgn}});
            }
        }
    return rep;
}

// Spin representations via fermionic operators on subsets of {0..n-1}.
// so(2n+1) acts on all 2^n subsets, so(2n) half-spins on a parity class.
ExplicitRep build_spin(int n, bool odd_orthogonal, int parity /* -1 all, 0 even, 1 odd */) {
    std::vector<int> masks;
    for (int m = 0; m < (1 << n); ++m) {
        if (parity >= 0 && (__builtin_popcount(static_cast<unsigned>(m)) & 1) != parity) continue;
        masks.push_back(m);
    }
    std::vector<int> pos(1 << n, -1);
    for (size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = static_cast<int>(i);

    ExplicitRep rep;
    rep.dim = static_cast<int>(masks.size());
    const Rational half(1, 2);
    for (int m : masks) {
        std::vector<Rational> w(n);
        for (int i = 0; i < n; ++i) w[i] = (m >> i) & 1 ? half : -half;
        rep.wt.push_back(std::move(w));
    }

    auto sign_below = [](int mask, int i) { return __builtin_popcount(static_cast<unsigned>(mask & ((1 << i) - 1))) % 2 == 0 ? 1 : -1; };
    // compose a_i^dag a_j, a_i^dag a_j^dag, a_i a_j, the Cartan a_i^dag a_i - 1/2,
    // and for so(2n+1) the parity-twisted linear terms.
    auto apply_pair = [&](bool create_i, int i, bool create_j, int j) {
        SparseOp op;
        for (int m : masks) {
            int cur = m;
            int sgn = 1;
            // act with the j-operator first
            if (create_j) {
                if (cur & (1 << j)) continue;
                sgn *= sign_below(cur, j);
                cur |= 1 << j;
            } else {
                if (!(cur & (1 << j))) continue;
                sgn *= sign_below(cur, j);
                cur &= ~(1 << j);
            }
            if (create_i) {
                if (cur & (1 << i)) continue;
                sgn *= sign_below(cur, i);
                cur |= 1 << i;
            } else {
                if (!(cur & (1 << i))) continue;
                sgn *= sign_below(cur, i);
                cur &= ~(1 << i);
            }
            if (pos[cur] < 0) continue;
            op.push_back({pos[cur], pos[m], Rational(sgn)});
        }
        return op;
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                auto op = apply_pair(true, i, false, j);  // a_i^dag a_j
                if (!op.empty()) rep.ops.push_back(std::move(op));
            }
            if (i < j) {
                auto up = apply_pair(true, i, true, j);
                if (!up.empty()) rep.ops.push_back(std::move(up));
                auto dn = apply_pair(false, i, false, j);
                if (!dn.empty()) rep.ops.push_back(std::move(dn));
            }
        }
    for (int i = 0; i < n; ++i) {  // Cartan
        SparseOp op;
        for (size_t b = 0; b < masks.size(); ++b) op.push_back({static_cast<int>(b), static_cast<int>(b), rep.wt[b][i]});
        rep.ops.push_back(std::move(op));
    }
    if (odd_orthogonal) {
        // gamma_0 * a_i^dag and gamma_0 * a_i with gamma_0 = parity involution
        for (int i = 0; i < n; ++i)
            for (bool create : {true, false}) {
                SparseOp op;
                for (int m : masks) {
                    int cur = m;
                    if (create) {
                        if (cur & (1 << i)) continue;
                        cur |= 1 << i;
                    } else {
                        if (!(cur & (1 << i))) continue;
                        cur &= ~(1 << i);
                    }
                    if (pos[cur] < 0) continue;
                    int sgn = sign_below(m, i);
                    if (__builtin_popcount(static_cast<unsigned>(m)) % 2 == 1) sgn = -sgn;
                    op.push_back({pos[cur], pos[m], Rational(sgn)});
                }
                if (!op.empty()) rep.ops.push_back(std::move(op));
            }
    }
    return rep;
}

// Does X^T B + B X = 0 admit a nonzero B with the prescribed symmetry?
// B_{p,q} can be nonzero only for weight-opposite basis pairs, and in a
// minuscule representation each basis vector has at most one opposite
// partner. Unknowns are the pairs p < q, with B_{q,p} = sym * B_{p,q}.
bool has_invariant_form(const ExplicitRep& rep, int sym) {
    std::vector<int> opp(rep.dim, -1);
    for (int p = 0; p < rep.dim; ++p)
        for (int q = 0; q < rep.dim; ++q) {
            if (p == q) continue;
            bool opposite = true;
            Rational first = rep.wt[p][0] + rep.wt[q][0];
            for (size_t k = 0; k < rep.wt[p].size(); ++k) {
                Rational sum = rep.wt[p][k] + rep.wt[q][k];
                if (rep.pair_mod_constant ? sum != first : sum != 0) {
                    opposite = false;
                    break;
                }
            }
            if (opposite) {
                if (opp[p] != -1) throw ValidationError("weight multiplicity violation in oracle");
                opp[p] = q;
            }
        }
    std::map<std::pair<int, int>, int> uidx;
    int nunknowns = 0;
    for (int p = 0; p < rep.dim; ++p)
        if (opp[p] > p) uidx[{p, opp[p]}] = nunknowns++;
    if (nunknowns == 0) return false;
    const size_t ncols = static_cast<size_t>(nunknowns);

    auto coeff_of = [&](int p, int q) -> std::pair<int, Rational> {
        if (p < q) {
            auto it = uidx.find({p, q});
            return it == uidx.end() ? std::make_pair(-1, Rational(0)) : std::make_pair(it->second, Rational(1));
        }
        auto it = uidx.find({q, p});
        return it == uidx.end() ? std::make_pair(-1, Rational(0)) : std::make_pair(it->second, Rational(sym));
    };

    // incremental row reduction with early full-rank exit
    std::vector<std::vector<Rational>> basis;
    std::vector<size_t> lead;
    auto add_row = [&](std::vector<Rational> row) -> bool {  // true once rank is full
        for (size_t i = 0; i < basis.size(); ++i) {
            if (row[lead[i]] == 0) continue;
            Rational f = row[lead[i]] / basis[i][lead[i]];
            for (size_t c = 0; c < ncols; ++c) row[c] -= f * basis[i][c];
        }
        size_t l = 0;
        while (l < ncols && row[l] == 0) ++l;
        if (l == ncols) return false;
        basis.push_back(std::move(row));
        lead.push_back(l);
        return basis.size() == ncols;
    };

    for (const auto& op : rep.ops) {
        std::map<std::pair<int, int>, std::vector<Rational>> eqs;
        auto touch = [&](int p, int q) -> std::vector<Rational>& {
            auto it = eqs.find({p, q});
            if (it == eqs.end()) it = eqs.emplace(std::make_pair(p, q), std::vector<Rational>(ncols, Rational(0))).first;
            return it->second;
        };
        for (const auto& e : op) {
            int mate = opp[e.row];
            if (mate < 0) continue;
            {  // (X^T B)_{c,mate} += X_{r,c} B_{r,mate}
                auto [u, coef] = coeff_of(e.row, mate);
                if (u >= 0) touch(e.col, mate)[u] += e.val * coef;
            }
            {  // (B X)_{mate,c} += B_{mate,r} X_{r,c}
                auto [u, coef] = coeff_of(mate, e.row);
                if (u >= 0) touch(mate, e.col)[u] += e.val * coef;
            }
        }
        for (auto& [key, row] : eqs)
            if (add_row(std::move(row))) return false;
    }
    return basis.size() < ncols;
}

}  // namespace

DualityType duality_oracle(const RepDescriptor& rep) {
    RepDescriptor c = rep.canonical();
    BigInt dim = rep_dimension(c);
    if (dim > 64 || c.lie.rank > 6)
        throw ResourceError("duality oracle caps exceeded for " + rep.label() + " (dim <= 64, rank <= 6)");

    ExplicitRep er;
    int n = c.lie.rank;
    switch (c.lie.family) {
        case LieFamily::A: er = build_exterior_power(n, c.weight.index); break;
        case LieFamily::B: er = build_spin(n, true, -1); break;
        case LieFamily::C: er = build_standard_bcd(n, true); break;
        case LieFamily::D:
            if (c.weight.index == 1)
                er = build_standard_bcd(n, false);
            else
                er = build_spin(n, false, c.weight.index == n ? 0 : 1);
            break;
    }

    bool orth = has_invariant_form(er, +1);
    bool symp = has_invariant_form(er, -1);
    if (orth && symp) throw ValidationError("oracle found two independent invariant forms for " + rep.label());
    if (orth) return DualityType::Orthogonal;
    if (symp) return DualityType::Symplectic;
    return DualityType::NonSelfDual;
}

bool is_sd_standard(const RepDescriptor& rep) {
    RepDescriptor c = rep.canonical();
    if (c.lie.family != LieFamily::A) return true;
    return c.weight.index == 1 || c.weight.index == c.lie.rank;
}

std::vector<Rational> ratio_menu(const RepDescriptor& rep) {
    std::set<Rational> menu;
    for (const auto& cls : admissible_cocharacter_classes(rep)) menu.insert(pair_ratio(cls.pair.m_id, cls.pair.m_triv));
    return {menu.begin(), menu.end()};
}

// ---------------------------------------------------------------------------
// Catalogs
// ---------------------------------------------------------------------------

std::vector<RepDescriptor> catalog_of_dim(long long d) {
    if (d < 2) throw ValidationError("catalog dimension must be >= 2");
    std::vector<RepDescriptor> out;
    // A family: dim binom(r+1, s) = d. Iterate the normalized index s' <= (r+1)/2.
    if (d >= 2) {
        LieType a(LieFamily::A, static_cast<int>(d - 1));
        out.emplace_back(a, 1);
        if (d - 1 >= 2) out.emplace_back(a, static_cast<int>(d - 1));
    }
    for (long long s = 2;; ++s) {
        if (binomial(2 * s, s) > d) break;
        for (long long m = 2 * s;; ++m) {
            BigInt b = binomial(m, s);
            if (b > d) break;
            if (b == d) {
                LieType a(LieFamily::A, static_cast<int>(m - 1));
                out.emplace_back(a, static_cast<int>(s));
                if (m - s != s) out.emplace_back(a, static_cast<int>(m - s));
            }
        }
    }
    // B_n spin: 2^n, n >= 3 (B_1, B_2 are aliases already listed above)
    for (int n = 3; pow2(n) <= d; ++n)
        if (pow2(n) == d) out.emplace_back(LieType(LieFamily::B, n), n);
    // C_n standard: 2n, n >= 2
    if (d % 2 == 0 && d / 2 >= 2) out.emplace_back(LieType(LieFamily::C, static_cast<int>(d / 2)), 1);
    // D_n standard: 2n, n >= 4
    if (d % 2 == 0 && d / 2 >= 4) out.emplace_back(LieType(LieFamily::D, static_cast<int>(d / 2)), 1);
    // D_n half-spins: 2^{n-1}, n >= 4
    for (int n = 4; pow2(n - 1) <= d; ++n)
        if (pow2(n - 1) == d) {
            out.emplace_back(LieType(LieFamily::D, n), n - 1);
            out.emplace_back(LieType(LieFamily::D, n), n);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](const RepDescriptor& x, const RepDescriptor& y) { return x == y; }),
              out.end());
    return out;
}

std::vector<RepDescriptor> factor_catalog(long long max_dim) {
    if (max_dim < 2) throw ValidationError("factor_catalog requires max_dim >= 2");
    std::vector<RepDescriptor> out;
    for (long long d = 2; d <= max_dim; ++d) {
        auto part = catalog_of_dim(d);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mtshim
