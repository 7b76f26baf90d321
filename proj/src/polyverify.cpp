#include "cmclab/polyverify.hpp"

#include <cmath>
#include <sstream>

namespace cmclab {

namespace {
constexpr int kMaxExponent = 64;
constexpr const char* kVarNames[4] = {"nu", "H", "K", "c"};
} // namespace

void RationalPoly::set(const Expo& e, const Rational& coeff) {
    for (int v : e)
        if (v > kMaxExponent || v < -kMaxExponent)
            throw ShapeError("RationalPoly: exponent out of bounds");
    if (coeff == 0)
        terms_.erase(e);
    else
        terms_[e] = coeff;
}

RationalPoly RationalPoly::constant(const Rational& v) {
    RationalPoly p;
    p.set({0, 0, 0, 0}, v);
    return p;
}

RationalPoly RationalPoly::variable(int index, int power) {
    RationalPoly p;
    Expo e{0, 0, 0, 0};
    e[index] = power;
    p.set(e, 1);
    return p;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r = *this;
    for (const auto& [e, v] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    RationalPoly r;
    for (const auto& [e1, v1] : terms_)
        for (const auto& [e2, v2] : o.terms_) {
            Expo e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                const Rational v = v1 * v2;
                if (v != 0) r.set(e, v);
            } else {
                it->second += v1 * v2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

RationalPoly RationalPoly::scaled(const Rational& v) const {
    RationalPoly r;
    if (v == 0) return r;
    r = *this;
    for (auto& [e, c] : r.terms_) c *= v;
    return r;
}

RationalPoly RationalPoly::pow(int n) const {
    RationalPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

RationalPoly RationalPoly::nu_coefficient(int d) const {
    RationalPoly r;
    for (const auto& [e, v] : terms_)
        if (e[0] == d) r.set({0, e[1], e[2], e[3]}, v);
    return r;
}

int RationalPoly::nu_degree() const { return degree(0); }

int RationalPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, v] : terms_) d = std::max(d, e[var]);
    return d;
}

bool RationalPoly::even_in_nu() const {
    for (const auto& [e, v] : terms_)
        if (e[0] % 2 != 0) return false;
    return true;
}

RationalPoly RationalPoly::substitute_K() const {
    // K -> 4H^2 + c
    const RationalPoly repl =
        RationalPoly::variable(1, 2).scaled(4) + RationalPoly::variable(3, 1);
    RationalPoly out;
    for (const auto& [e, v] : terms_) {
        RationalPoly term;
        term.set({e[0], e[1], 0, e[3]}, v);
        if (e[2] < 0) throw ShapeError("substitute_K: negative K exponent");
        for (int i = 0; i < e[2]; ++i) term = term * repl;
        out = out + term;
    }
    return out;
}

double RationalPoly::eval(double nu, double H, double K, double c) const {
    double s = 0.0;
    for (const auto& [e, v] : terms_)
        s += static_cast<double>(v) * std::pow(nu, e[0]) * std::pow(H, e[1]) * std::pow(K, e[2]) *
             std::pow(c, e[3]);
    return s;
}

Rational RationalPoly::eval_exact(const Rational& nu, const Rational& H, const Rational& K,
                                  const Rational& c) const {
    auto rpow = [](const Rational& b, int n) {
        Rational r = 1;
        for (int i = 0; i < std::abs(n); ++i) r *= b;
        if (n < 0) {
            if (r == 0) throw ParameterError("eval_exact: division by zero");
            r = 1 / r;
        }
        return r;
    };
    Rational s = 0;
    for (const auto& [e, v] : terms_)
        s += v * rpow(nu, e[0]) * rpow(H, e[1]) * rpow(K, e[2]) * rpow(c, e[3]);
    return s;
}

std::string RationalPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending total degree reads more naturally
    std::vector<std::pair<Expo, Rational>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int ta = a.first[0] + a.first[1] + a.first[2] + a.first[3];
        const int tb = b.first[0] + b.first[1] + b.first[2] + b.first[3];
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    for (const auto& [e, v] : items) {
        const bool neg = v < 0;
        const Rational av = neg ? Rational(-v) : v;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool printed = false;
        if (av != 1 || (e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0)) {
            os << cmclab::to_string(av);
            printed = true;
        }
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << kVarNames[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {
const RationalPoly NU = RationalPoly::variable(0);
const RationalPoly H2 = RationalPoly::variable(1, 2);
const RationalPoly Kv = RationalPoly::variable(2);
const RationalPoly Cv = RationalPoly::variable(3);
const RationalPoly Cinv = RationalPoly::variable(3, -1);
RationalPoly nu2() { return RationalPoly::variable(0, 2); }
} // namespace

RationalPoly poly_r() { return (H2 - Kv - Cv * nu2()).scaled(3); }

RationalPoly poly_W() {
    const RationalPoly t1 =
        (H2 * Cv * nu2()).scaled(4) * (H2 - Kv - Cv.scaled(2) + (Cv * nu2()).scaled(3));
    const RationalPoly t2 = (H2 - Kv + Cv * nu2()) * (Kv - Cv - H2) * (Kv + (Cv * nu2()).scaled(2));
    return t1 - t2.scaled(4);
}

RationalPoly poly_p() {
    const RationalPoly one = RationalPoly::constant(1);
    const RationalPoly w = one - nu2();
    const RationalPoly s =
        (H2 * (H2 - Kv + Cv * nu2())).scaled(4) + (H2 * Cv * w).scaled(2) +
        (Cv * Cv * w * w).scaled(Rational(1, 4));
    return -poly_W() + poly_r() * s;
}

RationalPoly poly_nu_delta_nu() {
    return (Kv.scaled(2) - H2.scaled(4) - Cv) * nu2() - Cv * RationalPoly::variable(0, 4);
}

RationalPoly poly_r_gradnu_sq() {
    const RationalPoly one = RationalPoly::constant(1);
    return poly_r() * (Cv * nu2() - Kv) * (one - nu2()) + Cinv * poly_W();
}

namespace {

void require_even_low_degree(const RationalPoly& f) {
    if (!f.even_in_nu()) throw ShapeError("polynomial must be even in nu");
    if (f.nu_degree() > 6) throw ShapeError("polynomial must have nu-degree <= 6");
}

// 2 f2 + 4 f4 nu^2 + 6 f6 nu^4  (= f'(nu)/nu)
RationalPoly chain_factor(const RationalPoly& f) {
    return f.nu_coefficient(2).scaled(2) + f.nu_coefficient(4).scaled(4) * nu2() +
           f.nu_coefficient(6).scaled(6) * RationalPoly::variable(0, 4);
}

// 2 f2 + 12 f4 nu^2 + 30 f6 nu^4  (= f''(nu) as an even polynomial)
RationalPoly hessian_factor(const RationalPoly& f) {
    return f.nu_coefficient(2).scaled(2) + f.nu_coefficient(4).scaled(12) * nu2() +
           f.nu_coefficient(6).scaled(30) * RationalPoly::variable(0, 4);
}

} // namespace

RationalPoly poly_r_grad_sq_of(const RationalPoly& f) {
    require_even_low_degree(f);
    const RationalPoly cf = chain_factor(f);
    return nu2() * cf * cf * poly_r_gradnu_sq();
}

RationalPoly poly_r_delta_of(const RationalPoly& f) {
    require_even_low_degree(f);
    return chain_factor(f) * poly_nu_delta_nu() * poly_r() +
           hessian_factor(f) * poly_r_gradnu_sq();
}

RationalPoly build_M6() {
    const RationalPoly p = poly_p();
    const RationalPoly r = poly_r();
    const RationalPoly r2 = r * r;
    return (Kv * p * p * r * r2).scaled(4) - p * r2 * poly_r_delta_of(p) +
           r2 * poly_r_grad_sq_of(p) - p * p * poly_r_grad_sq_of(r) +
           p * p * r * poly_r_delta_of(r);
}

nlohmann::json LemmaReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(cs);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [d, s] : coefficients) coeffs.push_back({{"nu_degree", d}, {"coefficient", s}});
    j["m6_nu_coefficients"] = std::move(coeffs);
    return j;
}

LemmaReport verify_lemma() {
    LemmaReport rep;
    auto check = [&rep](const std::string& label, const RationalPoly& got,
                        const RationalPoly& expect) {
        const bool ok = got == expect;
        rep.checks.push_back(
            {label, ok, ok ? got.to_string() : "got " + got.to_string() + ", expected " + expect.to_string()});
    };

    const RationalPoly p = poly_p();
    const RationalPoly r = poly_r();
    const RationalPoly rg = poly_r_gradnu_sq();
    const RationalPoly nd = poly_nu_delta_nu();

    // intermediate coefficients, verbatim from the degree count
    check("p_6", p.nu_coefficient(6), Cv.pow(3).scaled(Rational(-3, 4)));
    check("p_4", p.nu_coefficient(4),
          (Cv * Cv * (H2.scaled(101) - Kv.scaled(29) + Cv.scaled(26))).scaled(Rational(-1, 4)));
    check("r_0", r.nu_coefficient(0), H2.scaled(3) - Kv.scaled(3));
    check("r_2", r.nu_coefficient(2), Cv.scaled(-3));
    check("(r|grad nu|^2)_4", rg.nu_coefficient(4),
          Cv * (H2.scaled(17) - Kv.scaled(8) + Cv.scaled(5)));
    check("(r|grad nu|^2)_6", rg.nu_coefficient(6), (Cv * Cv).scaled(3));
    check("(nu Delta nu)_2", nd.nu_coefficient(2), Kv.scaled(2) - H2.scaled(4) - Cv);
    check("(nu Delta nu)_4", nd.nu_coefficient(4), -Cv);

    // shape of p
    {
        const bool ok = p.even_in_nu() && p.nu_degree() == 6 && p.degree(1) <= 6;
        rep.checks.push_back({"p shape (even, nu-degree 6, H-degree <= 6)", ok,
                              ok ? "ok" : "unexpected degrees"});
    }

    const RationalPoly m6 = build_M6();
    {
        bool odd_zero = true;
        for (int d = 1; d <= m6.nu_degree(); d += 2)
            if (!m6.nu_coefficient(d).is_zero()) odd_zero = false;
        rep.checks.push_back({"(M6) odd nu-coefficients vanish", odd_zero, odd_zero ? "ok" : "odd term present"});
    }
    check("(M6)_20", m6.nu_coefficient(20), RationalPoly());
    const RationalPoly expected18 =
        (Cv.pow(9) * (H2.scaled(4) + Cv - Kv)).scaled(-486);
    check("(M6)_18", m6.nu_coefficient(18), expected18);
    check("(M6)_18 after K -> 4H^2+c", m6.nu_coefficient(18).substitute_K(), RationalPoly());

    for (int d = 0; d <= 20; d += 2)
        rep.coefficients.emplace_back(d, m6.nu_coefficient(d).to_string());

    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace cmclab
