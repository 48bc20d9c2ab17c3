#include "conjd/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conjd {

namespace {
const Integer kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& coeff, int degree) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, Integer(0));
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

// For value = u/v with v > 0 the homogenized sum a_i u^i v^(d-i) has the
// sign of p(u/v).
int IntPolynomial::sign_at(const Rational& value) const {
  if (is_zero()) return 0;
  const Integer& u = value.get_num();
  const Integer& v = value.get_den();
  Integer acc = coeffs_.back();
  Integer vpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    vpow *= v;
    acc = acc * u + coeffs_[static_cast<std::size_t>(i)] * vpow;
  }
  return sgn(acc);
}

Rational IntPolynomial::evaluate(const Rational& value) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * value + Rational(coeffs_[static_cast<std::size_t>(i)]);
  return acc;
}

Integer IntPolynomial::evaluate(const Integer& value) const {
  Integer acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * value + coeffs_[static_cast<std::size_t>(i)];
  return acc;
}

int IntPolynomial::sign_at_neg_infinity() const {
  if (is_zero()) return 0;
  const int s = sgn(leading());
  return degree() % 2 == 0 ? s : -s;
}

int IntPolynomial::sign_at_pos_infinity() const { return is_zero() ? 0 : sgn(leading()); }

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
  std::vector<Integer> c(p.coeffs_);
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divided_exactly(const Integer& d) const {
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  out << '[';
  if (is_zero()) out << '0';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out << (i ? ", " : "") << coeffs_[i].get_str();
  out << ']';
  return out.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::string s(text);
  const auto open = s.find('[');
  const auto close = s.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("polynomial must be a bracketed coefficient list: '" + s + "'");
  std::vector<Integer> c;
  std::stringstream body(s.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    const auto r = parse_rational(item);
    if (r.get_den() != 1) throw std::invalid_argument("non-integer coefficient '" + item + "'");
    c.push_back(r.get_num());
  }
  return IntPolynomial(std::move(c));
}

Integer height(const IntPolynomial& p) {
  Integer h = 0;
  for (const auto& c : p.coeffs()) h = std::max(h, Integer(abs(c)));
  return h;
}

ContentSplit content_and_primitive(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("undefined content");
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return {g, p.divided_exactly(g)};
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (f.is_zero()) return IntPolynomial{};
  if (f.degree() < g.degree()) return std::nullopt;

  std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Integer(0));
  const int dg = g.degree();
  const Integer& lg = g.leading();
  for (int i = f.degree(); i >= dg; --i) {
    Integer& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
    q[static_cast<std::size_t>(i - dg)] = t;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= t * g[j];
  }
  for (int i = 0; i < dg; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo remainder by the zero polynomial");
  const int dg = g.degree();
  const Integer scale = abs(g.leading());
  const int s = sgn(g.leading());
  std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
  for (int i = f.degree(); i >= dg; --i) {
    const Integer top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    // r <- |lc g| r - sgn(lc g) top x^(i-dg) g keeps a positive multiple.
    for (auto& c : r) c *= scale;
    for (int j = 0; j <= dg; ++j) {
      if (s > 0)
        r[static_cast<std::size_t>(i - dg + j)] -= top * g[j];
      else
        r[static_cast<std::size_t>(i - dg + j)] += top * g[j];
    }
  }
  r.resize(static_cast<std::size_t>(std::max(dg, 0)));
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  IntPolynomial u = a.is_zero() ? b : a;
  IntPolynomial v = a.is_zero() ? a : b;
  u = content_and_primitive(u).primitive_part;
  if (!v.is_zero()) v = content_and_primitive(v).primitive_part;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : content_and_primitive(r).primitive_part;
  }
  return sgn(u.leading()) < 0 ? -u : u;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  IntPolynomial prim = content_and_primitive(p).primitive_part;
  if (prim.degree() < 1) return prim;
  const IntPolynomial g = gcd(prim, prim.derivative());
  if (g.degree() == 0) return prim;
  auto q = divide_exact(prim, g);
  // g is primitive and divides prim in Q[x], so Gauss' lemma makes this exact.
  return content_and_primitive(*q).primitive_part;
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  IntPolynomial f = content_and_primitive(p).primitive_part;
  int zero_mult = 0;
  while (f.degree() >= 1 && f[0] == 0) {
    std::vector<Integer> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = IntPolynomial(std::move(c));
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(0);
  if (f.degree() >= 1) {
    const auto nums = positive_divisors(f[0]);
    const auto dens = positive_divisors(f.leading());
    for (auto q : dens) {
      for (auto u : nums) {
        if (std::gcd(u, q) != 1) continue;
        for (int s : {-1, 1}) {
          Rational r(Integer(static_cast<long>(s * u)), Integer(static_cast<long>(q)));
          r.canonicalize();
          if (f.sign_at(r) == 0) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<IntPolynomial> normalize_to_prime(const IntPolynomial& p) {
  if (p.degree() < 1) return std::nullopt;
  IntPolynomial prim = content_and_primitive(p).primitive_part;
  if (sgn(prim.leading()) < 0) prim = -prim;
  if (!is_irreducible_over_q(prim)) return std::nullopt;
  return prim;
}

}  // namespace conjd
