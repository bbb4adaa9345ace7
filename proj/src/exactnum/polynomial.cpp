#include "laxwb/exactnum/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace laxwb {

Polynomial::Polynomial(Scalar constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Scalar c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  const Scalar inv_lead = divisor.leading().inverse();
  std::vector<Scalar> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd) + 1);
  for (int k = degree(); k >= dd; --k) {
    Scalar c = rem[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!inv_lead.is_one()) c *= inv_lead;
    for (int j = 0; j <= dd; ++j) {
      const Scalar& d = divisor.coeffs_[static_cast<std::size_t>(j)];
      if (!d.is_zero()) rem[static_cast<std::size_t>(k - dd + j)] -= c * d;
    }
    quot[static_cast<std::size_t>(k - dd)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const { return divmod(divisor).first; }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(out));
}

Scalar Polynomial::evaluate(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shifted(const Scalar& c) const {
  // Taylor shift p(x + c) by repeated synthetic division.
  std::vector<Scalar> a = coeffs_;
  if (c.is_zero() || a.size() <= 1) return *this;
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1; j + 1 > i; --j) a[j] += c * a[j + 1];
  return Polynomial(std::move(a));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result(Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (c.is_one()) {
        term = mono;
      } else if (c == Scalar(-1)) {
        term = "-" + mono;
      } else {
        term = cs + "*" + mono;
      }
    }
    if (!out.empty()) {
      if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    } else {
      out = term;
    }
  }
  return out;
}

namespace {

// Polynomials over Z[i] for the gcd: no rational normalization inside the
// remainder sequence.
struct GaussInt {
  mpz_class re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

using ZPoly = std::vector<GaussInt>;

GaussInt mul(const GaussInt& a, const GaussInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

void trim(ZPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly to_integral(const Polynomial& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    out.push_back({c.re().get_num() * (den / c.re().get_den()), c.im().get_num() * (den / c.im().get_den())});
  }
  return out;
}

mpz_class norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

// Nearest integer to n / d for d > 0.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class twice = 2 * n + d;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * d).get_mpz_t());
  return q;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    const mpz_class n = norm(b);
    const GaussInt num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};  // a * conj(b)
    const GaussInt q{round_div(num.re, n), round_div(num.im, n)};
    const GaussInt qb = mul(q, b);
    GaussInt r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Divides out the Gaussian gcd of the coefficients.
void make_primitive(ZPoly& p) {
  GaussInt g{0, 0};
  for (const auto& c : p) {
    g = gauss_gcd(std::move(g), c);
    if (norm(g) == 1) return;
  }
  if (g.is_zero()) return;
  const mpz_class n = norm(g);
  for (auto& c : p) {
    GaussInt t{c.re * g.re + c.im * g.im, c.im * g.re - c.re * g.im};  // c * conj(g)
    mpz_divexact(c.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(c.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  }
}

// lc(v)^k u - q v with deg < deg v.
ZPoly pseudo_remainder(ZPoly u, const ZPoly& v) {
  const std::size_t dv = v.size() - 1;
  const GaussInt& lead = v.back();
  while (!u.empty() && u.size() - 1 >= dv) {
    const GaussInt c = u.back();
    const std::size_t shift = u.size() - 1 - dv;
    for (auto& x : u) x = mul(x, lead);
    for (std::size_t j = 0; j <= dv; ++j) {
      const GaussInt t = mul(c, v[j]);
      u[shift + j].re -= t.re;
      u[shift + j].im -= t.im;
    }
    trim(u);
  }
  return u;
}

// Reduction modulo a prime p = 1 mod 4, with i sent to a square root of -1.
// If both images keep their degree and are coprime, so are the polynomials.
constexpr std::uint64_t kPrime = 1000000009;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t sqrt_minus_one() {
  for (std::uint64_t g = 2;; ++g) {
    const std::uint64_t r = powmod(g, (kPrime - 1) / 4);
    if (mulmod(r, r) == kPrime - 1) return r;
  }
}

std::optional<std::uint64_t> reduce(const mpq_class& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulmod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), powmod(den, kPrime - 2));
}

std::optional<std::vector<std::uint64_t>> reduce(const Polynomial& p) {
  static const std::uint64_t unit = sqrt_minus_one();
  std::vector<std::uint64_t> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    const auto re = reduce(c.re()), im = reduce(c.im());
    if (!re || !im) return std::nullopt;
    out.push_back((*re + mulmod(*im, unit)) % kPrime);
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

bool coprime_mod_p(const Polynomial& a, const Polynomial& b) {
  auto u = reduce(a), v = reduce(b);
  if (!u || !v) return false;
  auto trim_mod = [](std::vector<std::uint64_t>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  while (!v->empty()) {
    if (v->size() == 1) return true;
    const std::uint64_t inv = powmod(v->back(), kPrime - 2);
    while (u->size() >= v->size()) {
      const std::uint64_t c = mulmod(u->back(), inv);
      const std::size_t shift = u->size() - v->size();
      for (std::size_t j = 0; j < v->size(); ++j)
        (*u)[shift + j] = ((*u)[shift + j] + kPrime - mulmod(c, (*v)[j])) % kPrime;
      trim_mod(*u);
      if (u->empty()) break;
    }
    std::swap(u, v);
  }
  return false;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(Scalar(1));
  if (coprime_mod_p(a, b)) return Polynomial(Scalar(1));
  ZPoly u = to_integral(a), v = to_integral(b);
  make_primitive(u);
  make_primitive(v);
  if (u.size() < v.size()) std::swap(u, v);
  while (true) {
    ZPoly r = pseudo_remainder(u, v);
    if (r.empty()) break;
    if (r.size() == 1) return Polynomial(Scalar(1));
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(v.size());
  for (const auto& c : v) coeffs.emplace_back(mpq_class(c.re), mpq_class(c.im));
  return Polynomial(std::move(coeffs)).monic();
}

}  // namespace laxwb
