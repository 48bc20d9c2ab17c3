#include "conjd/real_roots.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace conjd {

namespace {

int count_variations(std::span<const int> signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Cauchy bound: every root satisfies |x| < 1 + max|a_i| / |a_d|.
Rational cauchy_bound(const IntPolynomial& f) {
  Integer m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Integer(abs(f[i])));
  return Rational(1) + Rational(m, abs(f.leading()));
}

// One bisection step keeping the sign change; f(lo), f(hi) nonzero.
IsolatingInterval halve(const IntPolynomial& f, const IsolatingInterval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  const int s = f.sign_at(mid);
  if (s == 0) return {mid, mid};
  if (f.sign_at(iv.lo) * s < 0) return {iv.lo, mid};
  return {mid, iv.hi};
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() < 1) return;
  chain_.push_back(content_and_primitive(chain_.front().derivative()).primitive_part);
  while (true) {
    const IntPolynomial r = pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-content_and_primitive(r).primitive_part);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return count_variations(s);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.sign_at_neg_infinity());
  return count_variations(s);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.sign_at_pos_infinity());
  return count_variations(s);
}

int SturmSequence::count_in(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_at_most(const Rational& e) const { return variations_at_neg_infinity() - variations_at(e); }

int SturmSequence::count_below(const Rational& e) const {
  return count_at_most(e) - (base().sign_at(e) == 0 ? 1 : 0);
}

int SturmSequence::real_root_count() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (a >= b) throw std::invalid_argument("sturm_count needs a < b");
  return SturmSequence(p).count_in(a, b);
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  if (p.degree() < 1) return {};
  const IntPolynomial f = squarefree_part(p);

  // Split off rational roots so the remaining factor has none; its interval
  // endpoints can then never be roots.
  const auto rats = rational_roots(f);
  IntPolynomial g = f;
  for (const auto& r : rats) {
    IntPolynomial linear({-r.get_num(), r.get_den()});
    g = *divide_exact(g, linear);
  }

  std::vector<IsolatingInterval> irrational;
  if (g.degree() >= 1) {
    const SturmSequence sturm(g);
    const Rational bound = cauchy_bound(g);
    std::function<void(const Rational&, const Rational&, int)> bisect = [&](const Rational& lo, const Rational& hi,
                                                                            int count) {
      if (count == 0) return;
      if (count == 1) {
        irrational.push_back({lo, hi});
        return;
      }
      const Rational mid = (lo + hi) / 2;
      const int left = sturm.count_in(lo, mid);
      bisect(lo, mid, left);
      bisect(mid, hi, count - left);
    };
    bisect(-bound, bound, sturm.count_in(-bound, bound));

    // Neighbours may share an endpoint; shrink until strictly separated.
    for (std::size_t i = 0; i + 1 < irrational.size(); ++i) {
      while (irrational[i].hi >= irrational[i + 1].lo) {
        irrational[i] = halve(g, irrational[i]);
        irrational[i + 1] = halve(g, irrational[i + 1]);
      }
    }
    // Keep rational roots of f out of the irrational intervals.
    for (auto& iv : irrational)
      for (const auto& r : rats)
        while (iv.lo <= r && r <= iv.hi) iv = halve(g, iv);
  }

  std::vector<IsolatingInterval> out;
  for (const auto& r : rats) out.push_back({r, r});
  out.insert(out.end(), irrational.begin(), irrational.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  AlgebraicNumber out = a;
  const IntPolynomial& f = out.minpoly;
  auto& iv = out.interval;
  if (iv.is_point()) return out;
  if (f.sign_at(iv.lo) == 0) {
    iv.hi = iv.lo;
    return out;
  }
  if (f.sign_at(iv.hi) == 0) {
    iv.lo = iv.hi;
    return out;
  }
  while (!iv.is_point() && iv.width() > width) iv = halve(f, iv);
  return out;
}

int compare_root(const IntPolynomial& f, const IsolatingInterval& iv, const Rational& e) {
  if (iv.is_point()) return cmp(iv.lo, e) < 0 ? -1 : (iv.lo == e ? 0 : 1);
  if (e <= iv.lo) return 1;
  if (e >= iv.hi) return -1;
  const int s = f.sign_at(e);
  if (s == 0) return 0;
  return f.sign_at(iv.lo) * s < 0 ? -1 : 1;
}

std::uint64_t count_k_tuples(const IntPolynomial& p, int k, const Box& box) {
  if (p.is_zero()) throw std::invalid_argument("count_k_tuples of the zero polynomial");
  if (k < 1 || k > p.degree()) throw std::invalid_argument("count_k_tuples needs 1 <= k <= deg p");
  if (box.dimension() != k) throw std::invalid_argument("box dimension must equal k");

  const IntPolynomial f = squarefree_part(p);
  const auto roots = isolate_real_roots(f);
  if (static_cast<int>(roots.size()) < k) return 0;

  std::vector<std::uint32_t> allowed(static_cast<std::size_t>(k), 0);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (int i = 0; i < k; ++i) {
      const auto& side = box.side(i);
      if (compare_root(f, roots[r], side.lo) >= 0 && compare_root(f, roots[r], side.hi) <= 0)
        allowed[static_cast<std::size_t>(i)] |= std::uint32_t{1} << r;
    }
  }
  return count_ordered_tuples(allowed);
}

}  // namespace conjd
