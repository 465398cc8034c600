#pragma once
// Torus-equivariant calculus on products of P^1 and on P^N: diagonal classes,
// pushforwards along multiplication maps, discriminant ideals, the identity
// suite behind them, multiple-root classes, and the singular-quartic classes.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "stratachow/groebner.hpp"
#include "stratachow/poly.hpp"

namespace stratachow {

struct ParameterOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownIdentity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Q[tau, h_1..h_n] with the relations h_i^2 + tau*h_i = 0; every class has a
// unique normal form multilinear in the h_i (h_i^e = (-tau)^(e-1) * h_i).
class ProductP1Ring {
 public:
  explicit ProductP1Ring(int n) : n_(n) {
    if (n < 1) throw ParameterOutOfRange("ProductP1Ring: need n >= 1");
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("tau", 1);
    for (int i = 1; i <= n; ++i) vars.emplace_back("h" + std::to_string(i), 1);
    ring_ = GradedRing::make(vars);
  }

  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  Polynomial tau() const { return Polynomial::variable(ring_, 0); }
  Polynomial h(int i) const {
    if (i < 1 || i > n_) throw ParameterOutOfRange("ProductP1Ring: h index out of range");
    return Polynomial::variable(ring_, static_cast<std::size_t>(i));
  }

  // Unique multilinear representative modulo <h_i^2 + tau*h_i>.
  Polynomial normal_form(const Polynomial& p) const {
    Polynomial out = Polynomial::zero(ring_);
    for (const auto& [m, c] : p.terms()) {
      Monomial red(ring_->nvars());
      red.e[0] = m.e[0];
      Rational coeff = c;
      int extra_tau = 0;
      bool negate = false;
      for (int i = 1; i <= n_; ++i) {
        int e = m.e[static_cast<std::size_t>(i)];
        if (e > 0) {
          red.e[static_cast<std::size_t>(i)] = 1;
          extra_tau += e - 1;
          if ((e - 1) % 2 == 1) negate = !negate;
        }
      }
      red.e[0] += extra_tau;
      if (negate) coeff = -coeff;
      out = out + Polynomial::monomial(ring_, red, coeff);
    }
    return out;
  }

  // Elementary symmetric polynomial of degree j in h_1..h_n.
  Polynomial sigma(int j) const {
    if (j < 0 || j > n_) return Polynomial::zero(ring_);
    std::vector<Polynomial> coeff(static_cast<std::size_t>(n_) + 1, Polynomial::zero(ring_));
    coeff[0] = Polynomial::constant(ring_, Rational(1));
    for (int i = 1; i <= n_; ++i)
      for (int d = i; d >= 1; --d)
        coeff[static_cast<std::size_t>(d)] =
            coeff[static_cast<std::size_t>(d)] + coeff[static_cast<std::size_t>(d - 1)] * h(i);
    return coeff[static_cast<std::size_t>(j)];
  }

 private:
  int n_;
  RingPtr ring_;
};

// Class of the small diagonal P^1 -> (P^1)^k: sum_j tau^(k-1-j) * sigma_j.
inline Polynomial diagonal_class(int k) {
  if (k < 2) throw ParameterOutOfRange("diagonal_class: need k >= 2");
  ProductP1Ring P(k);
  Polynomial out = Polynomial::zero(P.ring());
  for (int j = 0; j <= k - 1; ++j)
    out = out + P.tau().pow(static_cast<unsigned>(k - 1 - j)) * P.sigma(j);
  return out;
}

// The ambient ring Q[tau, h0] of T-equivariant classes on P^N; h_i = h0 + i*tau.
inline RingPtr projective_ring() { return GradedRing::make({{"tau", 1}, {"h0", 1}}); }

namespace equidetail {

inline mpz_class factorial(long n) {
  mpz_class f;
  if (n < 0) throw ParameterOutOfRange("factorial of a negative number");
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// alpha_l^(k,d): coefficient of x^l in (sum_{j=0}^{k-1} C(k,j) x^j)^d.
inline mpz_class alpha(long k, long d, long l) {
  std::vector<mpz_class> poly{1};
  std::vector<mpz_class> base;
  for (long j = 0; j <= k - 1; ++j) base.push_back(binomial(k, j));
  for (long rep = 0; rep < d; ++rep) {
    std::vector<mpz_class> next(poly.size() + base.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += poly[i] * base[j];
    poly = std::move(next);
  }
  if (l < 0 || static_cast<std::size_t>(l) >= poly.size()) return 0;
  return poly[static_cast<std::size_t>(l)];
}

// h_0 h_1 ... h_{j-1} with h_i = h0 + i*tau; empty product for j <= 0.
inline Polynomial h_product(const RingPtr& R, long j) {
  Polynomial tau = Polynomial::variable(R, 0), h0 = Polynomial::variable(R, 1);
  Polynomial out = Polynomial::constant(R, Rational(1));
  for (long i = 0; i < j; ++i) out = out * (h0 + tau * Rational(static_cast<long>(i)));
  return out;
}

}  // namespace equidetail

// pi_{r,*}(h_0...h_m) as a polynomial in Q[tau, h0]; m = -1 encodes pi_{r,*}(1).
inline Polynomial pushforward_pi_r(long N, long k, long r, long m) {
  if (k < 1 || r < 1 || r * k > N) throw ParameterOutOfRange("pushforward_pi_r: need 1 <= r <= N/k");
  if (m < -1 || m > r - 1) throw ParameterOutOfRange("pushforward_pi_r: need -1 <= m <= r-1");
  long d = r - (m + 1);
  RingPtr R = projective_ring();
  Polynomial tau = Polynomial::variable(R, 0);
  Polynomial out = Polynomial::zero(R);
  mpz_class denom = equidetail::factorial(N - k * r) * equidetail::factorial(d);
  for (long l = 0; l <= d * (k - 1); ++l) {
    mpz_class a = equidetail::alpha(k, d, l);
    if (a == 0) continue;
    mpz_class num = equidetail::factorial(N - (m + 1) * k - l);
    Rational beta(mpq_class(num) / mpq_class(denom));
    out = out + Polynomial::constant(R, Rational(mpq_class(a)) * beta) *
                    tau.pow(static_cast<unsigned>(d * (k - 1) - l)) *
                    equidetail::h_product(R, (m + 1) * k + l);
  }
  return out;
}

struct DiscriminantIdeal {
  long N, k;
  Ideal ideal;  // generated by pi_{1,*}(1) and pi_{1,*}(h0)
};

inline DiscriminantIdeal discriminant_ideal(long N, long k) {
  if (k > N || k < 1) throw ParameterOutOfRange("discriminant_ideal: need 1 <= k <= N");
  RingPtr R = projective_ring();
  return DiscriminantIdeal{
      N, k, Ideal(R, {pushforward_pi_r(N, k, 1, -1), pushforward_pi_r(N, k, 1, 0)})};
}

// Gamma_t = (N-t)!/(N-2k+1)! * tau^(2(k-1)-t) * h_0...h_{t-1}.
inline Polynomial gamma_class(long N, long k, long t) {
  if (t < 0 || t > k - 1) throw ParameterOutOfRange("gamma_class: need 0 <= t <= k-1");
  if (N - 2 * k + 1 < 0) throw ParameterOutOfRange("gamma_class: need N >= 2k-1");
  RingPtr R = projective_ring();
  mpz_class c = equidetail::factorial(N - t) / equidetail::factorial(N - 2 * k + 1);
  return Polynomial::constant(R, Rational(mpq_class(c))) *
         Polynomial::variable(R, 0).pow(static_cast<unsigned>(2 * (k - 1) - t)) *
         equidetail::h_product(R, t);
}

struct IdentityReport {
  std::string name;
  bool pass;
  Polynomial witness;  // defect polynomial (zero on pass); for memberships, the normal form
};

// Named identity checks. Supported names and parameters:
//   C04 (k)        : diagonal_class equals the reduced product form
//   C08 (N,k,r,m)  : pi_{r,*}(h_0..h_m) in the discriminant ideal, m >= 0
//   C09 (N,n,m)    : squared-prefix product expansion identity
//   C10 (N,k,m)    : alternating binomial sum (numeric, reported as constant)
//   C11 (N,k,t)    : prefix product times pi_{1,*}(1) identity modulo the ideal
//   C12 (N,k,t)    : Gamma_t in the discriminant ideal
//   C14 (k,r,l)    : alpha_l^(k,r) = C(rk, l) for l <= k-1 (numeric)
//   C15 (N,k,r)    : pi_{r,*}(1) in the discriminant ideal, r >= 2
inline IdentityReport verify_appendix_identity(const std::string& name,
                                               const std::vector<long>& params) {
  RingPtr R = projective_ring();
  Polynomial tau = Polynomial::variable(R, 0);
  auto numeric_report = [&](const std::string& n, const mpz_class& lhs, const mpz_class& rhs) {
    Rational defect(mpq_class(lhs - rhs));
    return IdentityReport{n, lhs == rhs, Polynomial::constant(R, defect)};
  };
  auto membership_report = [&](const std::string& n, const Polynomial& p, const Ideal& I) {
    auto rep = is_member(p, I);
    return IdentityReport{n, rep.member_over_Q, rep.certificate.remainder};
  };

  if (name == "C04") {
    if (params.size() != 1) throw ParameterOutOfRange("C04 expects (k)");
    long k = params[0];
    if (k < 2) throw ParameterOutOfRange("C04: k >= 2");
    ProductP1Ring P(static_cast<int>(k));
    Polynomial product = Polynomial::constant(P.ring(), Rational(1));
    for (int i = 1; i <= k - 1; ++i) product = product * (P.h(i) + P.h(i + 1) + P.tau());
    Polynomial defect = P.normal_form(product) - P.normal_form(diagonal_class(static_cast<int>(k)));
    return IdentityReport{"C04", defect.is_zero(), defect};
  }
  if (name == "C08") {
    if (params.size() != 4) throw ParameterOutOfRange("C08 expects (N,k,r,m)");
    long N = params[0], k = params[1], r = params[2], m = params[3];
    if (m < 0) throw ParameterOutOfRange("C08: m >= 0");
    return membership_report("C08", pushforward_pi_r(N, k, r, m), discriminant_ideal(N, k).ideal);
  }
  if (name == "C09") {
    if (params.size() != 2) throw ParameterOutOfRange("C09 expects (n,m)");
    long n = params[0], m = params[1];
    if (n > m || n < 0) throw ParameterOutOfRange("C09: 0 <= n <= m");
    Polynomial h0 = Polynomial::variable(R, 1);
    Polynomial lhs = Polynomial::constant(R, Rational(1));
    for (long i = 0; i < n; ++i)
      lhs = lhs * (h0 + tau * Rational(i)) * (h0 + tau * Rational(i));
    for (long i = n; i < m; ++i) lhs = lhs * (h0 + tau * Rational(i));
    Polynomial rhs = Polynomial::zero(R);
    for (long s = 0; s <= n; ++s) {
      mpz_class c = equidetail::factorial(s) * equidetail::binomial(n, s) *
                    equidetail::binomial(m, s);
      if (s % 2 == 1) c = -c;
      rhs = rhs + Polynomial::constant(R, Rational(mpq_class(c))) *
                      tau.pow(static_cast<unsigned>(s)) *
                      equidetail::h_product(R, m + n - s);
    }
    Polynomial defect = lhs - rhs;
    return IdentityReport{"C09", defect.is_zero(), defect};
  }
  if (name == "C10") {
    if (params.size() != 3) throw ParameterOutOfRange("C10 expects (N,k,m)");
    long N = params[0], k = params[1], m = params[2];
    mpz_class lhs = 0;
    for (long l = 0; l <= k - 1; ++l) {
      mpz_class t = equidetail::binomial(m, l) * equidetail::binomial(N - l, k - 1 - l);
      lhs += (l % 2 == 0) ? t : -t;
    }
    return numeric_report("C10", lhs, equidetail::binomial(N - m, k - 1));
  }
  if (name == "C11") {
    if (params.size() != 3) throw ParameterOutOfRange("C11 expects (N,k,t)");
    long N = params[0], k = params[1], t = params[2];
    if (t < 0 || t > k - 1) throw ParameterOutOfRange("C11: 0 <= t <= k-1");
    Polynomial lhs = equidetail::h_product(R, t) * pushforward_pi_r(N, k, 1, -1);
    Polynomial rhs = Polynomial::zero(R);
    for (long f = 0; f <= k - 1; ++f) {
      mpz_class c = (equidetail::factorial(N - f - t) / equidetail::factorial(N - k - t)) *
                    equidetail::binomial(k, f);
      rhs = rhs + Polynomial::constant(R, Rational(mpq_class(c))) *
                      tau.pow(static_cast<unsigned>(k - 1 - f)) *
                      equidetail::h_product(R, t + f);
    }
    return membership_report("C11", lhs - rhs, discriminant_ideal(N, k).ideal);
  }
  if (name == "C12") {
    if (params.size() != 3) throw ParameterOutOfRange("C12 expects (N,k,t)");
    long N = params[0], k = params[1], t = params[2];
    return membership_report("C12", gamma_class(N, k, t), discriminant_ideal(N, k).ideal);
  }
  if (name == "C14") {
    if (params.size() != 3) throw ParameterOutOfRange("C14 expects (k,r,l)");
    long k = params[0], r = params[1], l = params[2];
    if (l > k - 1) throw ParameterOutOfRange("C14: l <= k-1");
    return numeric_report("C14", equidetail::alpha(k, r, l), equidetail::binomial(r * k, l));
  }
  if (name == "C15") {
    if (params.size() != 3) throw ParameterOutOfRange("C15 expects (N,k,r)");
    long N = params[0], k = params[1], r = params[2];
    if (r < 2) throw ParameterOutOfRange("C15: r >= 2");
    return membership_report("C15", pushforward_pi_r(N, k, r, -1), discriminant_ideal(N, k).ideal);
  }
  throw UnknownIdentity("verify_appendix_identity: unknown name " + name);
}

// The factor-of-2 refinement for Gamma_0: its membership certificate after
// halving must still have 2,3-smooth cofactor denominators.
inline MembershipReport gamma0_half_membership(long N, long k) {
  Polynomial half = gamma_class(N, k, 0) * Rational(1, 2);
  return is_member(half, discriminant_ideal(N, k).ideal);
}

// Weight dictionary used on the first boundary stratum: the calibrated
// convention fixing tau and h0 as linear forms in t0, t1. Frozen after
// matching the three published target classes.
inline RingPtr t01_ring() { return GradedRing::make({{"t0", 1}, {"t1", 1}}); }

inline RingMap delta1_weight_convention() {
  RingPtr T = t01_ring();
  Polynomial t0 = Polynomial::variable(T, 0), t1 = Polynomial::variable(T, 1);
  // tau -> t0 - t1, h0 -> -4*t0 + 2*t1  (so h_i = (i-4)*t0 + (2-i)*t1)
  return RingMap(projective_ring(), T, {t0 - t1, t0 * Rational(-4) + t1 * Rational(2)});
}

// Fundamental class of forms with a root of multiplicity >= k, evaluated
// under a weight assignment for tau and h0.
inline Polynomial multiple_root_class(long N, long k, const RingMap& weights) {
  if (!same_ring(weights.source(), projective_ring()))
    throw std::invalid_argument("multiple_root_class: weights must be defined on Q[tau, h0]");
  return weights.apply(pushforward_pi_r(N, k, 1, -1));
}

// Classes of quartics with an A_n singularity, n = 2..7.
inline RingPtr quartic_ring() {
  return GradedRing::make({{"h14", 1}, {"k", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}});
}

inline Polynomial an_class_quartic(int n) {
  if (n < 2 || n > 7) throw ParameterOutOfRange("an_class_quartic: need 2 <= n <= 7");
  RingPtr R = quartic_ring();
  Polynomial h = Polynomial::variable(R, 0), kk = Polynomial::variable(R, 1),
             c1 = Polynomial::variable(R, 2), c2 = Polynomial::variable(R, 3);
  Polynomial base = (h + kk - c1) * (h + kk * Rational(4)) *
                    ((h + kk * Rational(3)).pow(2) - (c1 + kk) * (h + kk * Rational(2)) + c2) *
                    Rational(2);
  Polynomial coeff = Polynomial::constant(R, Rational(1));
  for (int m = 3; m <= n; ++m)
    coeff = coeff * (c1 * Rational(-m) + h * Rational(2 * m - 1, 2) + kk * Rational(4 - m));
  return coeff * base;
}

}  // namespace stratachow
