#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmclab/rational.hpp"

namespace cmclab {

// Exact multivariate polynomial over Q in the variables (nu, H, K, c).
// The c exponent may go negative in intermediate quantities (they carry a
// factor 1/c); every verified identity ends up with nonnegative exponents.
class RationalPoly {
  public:
    // exponents of (nu, H, K, c)
    using Expo = std::array<int, 4>;

    RationalPoly() = default;
    static RationalPoly constant(const Rational& v);
    static RationalPoly variable(int index, int power = 1);

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly scaled(const Rational& v) const;
    RationalPoly pow(int n) const;

    bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

    // coefficient of nu^d, as a polynomial in (H, K, c)
    RationalPoly nu_coefficient(int d) const;
    int nu_degree() const;
    int degree(int var) const;
    bool even_in_nu() const;

    // substitute K -> 4H^2 + c
    RationalPoly substitute_K() const;

    double eval(double nu, double H, double K, double c) const;
    Rational eval_exact(const Rational& nu, const Rational& H, const Rational& K,
                        const Rational& c) const;

    std::string to_string() const;
    const std::map<Expo, Rational>& terms() const { return terms_; }
    void set(const Expo& e, const Rational& coeff); // drops zeros, bounds exponents

  private:
    std::map<Expo, Rational> terms_;
};

// Building blocks of the degree-18 polynomial argument. Names follow the
// quantities r, W, p and the products r|grad .|^2, r Delta(.) they satisfy
// on a constant-curvature CMC surface.
RationalPoly poly_r();
RationalPoly poly_W();
RationalPoly poly_p();
RationalPoly poly_nu_delta_nu(); // nu Delta nu
RationalPoly poly_r_gradnu_sq(); // r |grad nu|^2  (carries a 1/c term)

// For f even in nu of nu-degree <= 6: r |grad f|^2 and r Delta f.
RationalPoly poly_r_grad_sq_of(const RationalPoly& f);
RationalPoly poly_r_delta_of(const RationalPoly& f);

// 4K p^2 r^3 - p r^2 (r Delta p) + r^2 (r |grad p|^2) - p^2 (r |grad r|^2) + p^2 r (r Delta r)
RationalPoly build_M6();

struct LemmaCheck {
    std::string label;
    bool pass;
    std::string detail;
};

struct LemmaReport {
    bool pass = false;
    std::vector<LemmaCheck> checks;
    // nu-coefficients of (M6), degree 0..20, as polynomials in (H,K,c)
    std::vector<std::pair<int, std::string>> coefficients;

    nlohmann::json to_json() const;
};

// Verifies every exact identity of the degree-18 argument; any mismatch is
// reported with the offending coefficient.
LemmaReport verify_lemma();

} // namespace cmclab
