#pragma once

#include <complex>
#include <optional>
#include <string>

#include "cmclab/rational.hpp"

namespace cmclab {

// Element of Iso(Omega) = PSL2(R) u PSL2^-(R) with exact rational entries.
//
// The stored matrix always has positive determinant; orientation is a
// separate flag. A holomorphic element acts by z -> (az+b)/(cz+d). An
// antiholomorphic element acts by z -> M(-conj z), so the paper's matrix
// (acting through conj z) is recovered by negating the first column.
// Entries are normalized to coprime integers with the first nonzero one
// positive, which makes equality and hashing exact.
class MoebiusElement {
  public:
    MoebiusElement(); // identity
    MoebiusElement(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                   bool antiholomorphic = false);

    // Builds from the paper's matrix convention: for antiholomorphic input the
    // matrix acts through conj z and must have negative determinant.
    static MoebiusElement from_action_matrix(const Rational& a, const Rational& b,
                                             const Rational& c, const Rational& d,
                                             bool antiholomorphic);

    static MoebiusElement identity();
    static MoebiusElement eta();  // z -> -conj z
    static MoebiusElement xi();   // z -> -1/z
    static MoebiusElement zeta(); // z -> 1/(1-z)
    static MoebiusElement m_s(const Rational& s);
    static MoebiusElement diagonal(const Rational& alpha); // diag(alpha,1), alpha > 0
    static MoebiusElement anti_diagonal(const Rational& beta); // ((0,beta),(-1/..,0)) in D.xi

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    bool antiholomorphic() const { return anti_; }
    Rational det() const { return a_ * d_ - b_ * c_; }

    bool operator==(const MoebiusElement& o) const;
    bool operator<(const MoebiusElement& o) const; // total order for containers

    std::string to_string() const;

  private:
    void normalize();

    Rational a_, b_, c_, d_;
    bool anti_ = false;
};

MoebiusElement compose(const MoebiusElement& f, const MoebiusElement& g);
MoebiusElement inverse(const MoebiusElement& f);
std::complex<double> apply(const MoebiusElement& f, std::complex<double> z);

// rho(f) = (b c)/(a d) in R u {infinity}; nullopt encodes infinity.
std::optional<Rational> rho(const MoebiusElement& f);
bool rho_equal(const std::optional<Rational>& x, const std::optional<Rational>& y);
std::optional<Rational> rho_inverse(const std::optional<Rational>& x);

bool in_D(const MoebiusElement& f);
bool in_T(const MoebiusElement& f);
bool in_GX(const MoebiusElement& f); // gamma = 0, both orientations
bool in_GY(const MoebiusElement& f); // D u D.xi, holomorphic only

enum class XYClass { IdClass, ZetaClass };
XYClass class_xy(const MoebiusElement& f);

// Canonical representative of the G_Y double coset of f:
// one of id, eta, m_s or eta m_s with s in [0, infinity).
struct CanonicalRep {
    enum class Tag { Id, Eta, M, EtaM } tag;
    Rational s = 0; // meaningful for M / EtaM only

    bool operator==(const CanonicalRep& o) const;
    bool operator<(const CanonicalRep& o) const;
    std::string to_string() const;
};

CanonicalRep canonical_yy(const MoebiusElement& f);

// Stabilizer of a pair under ambient congruences, by canonical data.
struct StabilizerDescriptor {
    enum class Tag { FullD, Trivial, FullGY, OrderTwo } tag;
    Rational mu_sq = 0; // OrderTwo: mu^2 = (1-s)/s

    std::string to_string() const;
    bool operator==(const StabilizerDescriptor& o) const;
};

struct PairKind {
    enum class Tag { A, B } tag;
    XYClass a_class = XYClass::IdClass; // for A
    CanonicalRep b_rep{CanonicalRep::Tag::Id, 0}; // for B

    static PairKind A(XYClass c);
    static PairKind B(CanonicalRep r);
};

StabilizerDescriptor stabilizer(const PairKind& kind);

// Exact check that conjugating the order-two stabilizer candidate by m_s
// lands in G_Y, with mu^2 = (1-s)/s substituted symbolically.
bool verify_order_two_stabilizer(const Rational& s);

} // namespace cmclab
