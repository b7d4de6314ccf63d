#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blink/groupring.hpp"
#include "blink/seifert.hpp"

namespace blink {

// Presentation matrix phi_D = D - T D^T over Z[F_n], with T the diagonal of
// generators (t_i repeated m_i times). Block (i,j) is A_ij - t_i A_ji^T; for
// one component this is A - t A^T. coker(phi_D) presents pi_2.
class PhiMatrix {
public:
    PhiMatrix(int components, std::vector<int> block_sizes, GroupRingMatrix entries);

    int components() const { return n_; }
    int size() const { return entries_.rows(); }
    const std::vector<int>& block_sizes() const { return sizes_; }
    const GroupRingMatrix& entries() const { return entries_; }
    const GroupRingElement& at(int r, int c) const { return entries_.at(r, c); }

private:
    int n_;
    std::vector<int> sizes_;
    GroupRingMatrix entries_;
};

PhiMatrix build_phi(const SeifertMatrix& d);

// Entrywise abelianization of phi into a Laurent-polynomial matrix.
PolyMatrix abelianized(const PhiMatrix& phi);

// The data of the generalized Milnor pairing built from a Seifert matrix:
// the presentation phi_D, the forms I_i, the maps iota_i (i-th block column
// of D), the class w2 and optional per-component Kirby-Siebenmann bits.
struct MilnorPairingData {
    int n = 0;
    PhiMatrix phi;
    std::vector<IntMatrix> forms;           // I_i = A_ii + A_ii^T
    std::vector<IntMatrix> iota;            // m x m_i, columns in the free generators
    std::vector<int> w2;                    // length m, 0/1
    std::optional<std::vector<int>> ks;     // length n, 0/1
};

// Assembles the pairing data. A given w2 must satisfy the well-definedness
// congruence w2^T (D + D^T) = 0 (mod 2); when D passes the unimodularity
// conditions that forces w2 = 0.
MilnorPairingData build_pairing(const SeifertMatrix& d,
                                std::optional<std::vector<int>> w2 = std::nullopt,
                                std::optional<std::vector<int>> ks = std::nullopt);

// Finitely supported element of Hom(Lambda^m, Q), intended to descend to the
// Q-dual of coker(phi_D). Generator indices are 0-based; descent is only
// ever certified up to a word-length depth (see check_functional).
class FiniteFunctional {
public:
    FiniteFunctional(int rank, int generators);

    int rank() const { return rank_; }
    int generators() const { return generators_; }

    void set(int k, const Word& w, const Rat& value);
    Rat value(int k, const Word& w) const;
    const std::map<std::pair<int, Word>, Rat>& support() const { return values_; }

    // Largest word length in the support.
    int support_radius() const;

    // Depth certified by the last successful check_functional, -1 if none.
    int certified_depth() const { return certified_depth_; }

    // Translated functional (g.u)(x) = u(g^{-1} x).
    FiniteFunctional translated(const Word& g) const;

    bool operator==(const FiniteFunctional& rhs) const;

private:
    friend bool check_functional(const MilnorPairingData&, FiniteFunctional&, int);

    int rank_;
    int generators_;
    int certified_depth_ = -1;
    std::map<std::pair<int, Word>, Rat> values_;
};

// True iff u vanishes on g * (every column of phi_D) for every word g of
// length <= depth: a finite certificate that u descends to the cokernel.
// On success the depth is recorded on the functional.
bool check_functional(const MilnorPairingData& data, FiniteFunctional& u, int depth);

// Component i of the pairing: I_i(iota_i^* u, iota_i^* v), where the
// pullback evaluates u on the columns of iota_i placed at the identity word.
std::vector<Rat> eval_pairing(const MilnorPairingData& data,
                              const FiniteFunctional& u, const FiniteFunctional& v);

// Diagnostic for the translation relation sum_i I_i(u, v) =
// sum_i I_i(t_i.u, t_i.v). Both sides are reported; no invariance is
// asserted, the relation is not established for arbitrary matrix data.
struct SumRelation {
    Rat direct;
    Rat translated;
    bool equal;
};
SumRelation sum_relation(const MilnorPairingData& data,
                         const FiniteFunctional& u, const FiniteFunctional& v);

// Signature of I_i on the quotient by its radical.
int signature_component(const SeifertMatrix& d, int i);

// Normalized Alexander polynomial det(A - t A^T) of a one-component matrix.
LaurentPoly alexander_knot(const SeifertMatrix& d);

// Generators of the k-th elementary ideal of the abelianized presentation:
// all (m-k) x (m-k) minors, unit-normalized, deduplicated, sorted. Zero
// generators are dropped; an empty list is the zero ideal. E_m = (1).
std::vector<LaurentPoly> alexander_ideal(const SeifertMatrix& d, int k);

// Highest- and lowest-degree coefficients of a nonzero one-variable
// polynomial after unit normalization.
std::pair<Int, Int> leading_trailing(const LaurentPoly& p);

// Move-invariant shadow of the pairing. Every field is exactly computable
// and stable under congruence, enlargement and reduction: block sizes enter
// only through their parity, Smith data through the invariant factors other
// than 1, and the total form through |det|, signature and those factors.
struct ComponentFingerprint {
    int block_parity = 0;               // m_i mod 2
    int signature = 0;                  // sign(I_i)
    std::vector<Int> snf_nontrivial;    // invariant factors of I_i, 1s dropped
    bool even = true;
    bool operator==(const ComponentFingerprint&) const = default;
};

struct Fingerprint {
    int n = 0;
    std::vector<ComponentFingerprint> components;
    Int sym_det_abs;                        // |det(D + D^T)|
    int sym_signature = 0;                  // sign(D + D^T)
    std::vector<Int> sym_snf_nontrivial;    // invariant factors of D + D^T, 1s dropped
    LaurentPoly e0;                         // unit-normalized det of abelianized phi
    std::vector<Int> snf_phi_minus_one;     // invariant factors != 1 of phi^ab(t=-1)
    bool operator==(const Fingerprint&) const = default;

    Fingerprint() : sym_det_abs(0), e0(1) {}
};

Fingerprint fingerprint(const SeifertMatrix& d);

// Flat (name, printed value) view used for reports and Distinct witnesses;
// fields appear in comparison order, most significant first.
std::vector<std::pair<std::string, std::string>> fingerprint_fields(const Fingerprint& f);

// Symmetric bilinear form over Z, as used for the intersection form I(M) of
// a fibered-style total space. Construction checks symmetry.
struct FormZ {
    explicit FormZ(IntMatrix matrix);
    IntMatrix m;
};

bool form_is_even(const FormZ& f);       // all diagonal entries even
int form_signature(const FormZ& f);
// Evaluation of the first Pontryagin class against the fundamental class:
// 3 * signature. Requires |det| = 1.
Int p1_evaluation(const FormZ& f);

} // namespace blink
