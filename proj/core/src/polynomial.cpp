#include "projlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "projlab/error.hpp"

namespace projlab {

int UniPoly::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

double UniPoly::operator()(double t) const {
  double v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
  return v;
}

std::string UniPoly::str() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    os << (first ? "" : " + ") << coeffs[k];
    if (k > 0) os << "*t^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<int>(k));
  trim(d);
  return d;
}

// Remainder of a divided by b (b nonzero, trimmed).
RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

RationalPoly quotient(RationalPoly a, const RationalPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RationalPoly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return q;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational eval(const RationalPoly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * t + p[k];
  return v;
}

int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_changes(const std::vector<RationalPoly>& chain, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign(eval(p, t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational to_rational(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::RootIsolationFailure, "non-finite coefficient");
  return Rational(v);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

std::vector<double> real_roots(const UniPoly& poly, double tol) {
  RationalPoly p;
  for (double c : poly.coeffs) p.push_back(to_rational(c));
  trim(p);
  if (p.empty()) throw Error(ErrorCode::RootIsolationFailure, "zero polynomial");
  if (p.size() > 21) throw Error(ErrorCode::RootIsolationFailure, "degree above 20");
  if (p.size() == 1) return {};
  RationalPoly q = quotient(p, gcd(p, derivative(p)));
  std::vector<RationalPoly> chain{q, derivative(q)};
  while (chain.back().size() > 1) {
    RationalPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  // Cauchy bound, rounded up to a power of two.
  Rational bound = 0;
  for (std::size_t k = 0; k + 1 < q.size(); ++k) {
    Rational ratio = abs(q[k] / q.back());
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  Rational hi = 1;
  while (hi < bound) hi *= 2;
  Rational lo = -hi;

  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<double> exact_roots;
  std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
  int guard = 0;
  while (!work.empty()) {
    if (++guard > 100000) throw Error(ErrorCode::RootIsolationFailure, "isolation did not terminate");
    auto [a, b] = work.back();
    work.pop_back();
    int count = sign_changes(chain, a) - sign_changes(chain, b);
    if (count <= 0) continue;
    if (count == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / 2;
    if (eval(q, mid) == 0) {
      exact_roots.push_back(to_double(mid));
      // Shift the split slightly so neither half starts on the root.
      Rational eps = (b - a) / 1024;
      while (sign_changes(chain, mid - eps) - sign_changes(chain, mid + eps) != 1) eps /= 2;
      work.emplace_back(a, mid - eps);
      work.emplace_back(mid + eps, b);
      continue;
    }
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }
  std::vector<double> roots = exact_roots;
  for (auto [a, b] : isolated) {
    // (a, b] holds one root; q changes sign across it unless it sits at b.
    if (eval(q, b) == 0) {
      roots.push_back(to_double(b));
      continue;
    }
    int sa = sign(eval(q, a));
    for (int it = 0; it < 2000 && to_double(b - a) > tol; ++it) {
      Rational mid = (a + b) / 2;
      int sm = sign(eval(q, mid));
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sa)
        a = mid;
      else
        b = mid;
    }
    roots.push_back(to_double((a + b) / 2));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

double normal_pdf(double t) {
  if (std::isinf(t)) return 0;
  return std::exp(-0.5 * t * t) / std::sqrt(2 * std::numbers::pi);
}

// P(a < Z < b) without cancellation in the tails.
double normal_mass(double a, double b) {
  const double s = std::numbers::sqrt2;
  if (a >= 0) return 0.5 * (std::erfc(a / s) - std::erfc(b / s));
  if (b <= 0) return 0.5 * (std::erfc(-b / s) - std::erfc(-a / s));
  return 1 - 0.5 * (std::erfc(-a / s) + std::erfc(b / s));
}

// int_a^b p(t) phi(t) dt via M_k = a^{k-1} phi(a) - b^{k-1} phi(b) + (k-1) M_{k-2}.
double segment_integral(const std::vector<double>& c, double a, double b) {
  std::vector<double> m(c.size(), 0.0);
  double pa = normal_pdf(a), pb = normal_pdf(b);
  auto boundary = [&](double t, double phi, std::size_t k) {
    if (phi == 0) return 0.0;
    return std::pow(t, static_cast<double>(k)) * phi;
  };
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == 0)
      m[k] = normal_mass(a, b);
    else if (k == 1)
      m[k] = pa - pb;
    else
      m[k] = boundary(a, pa, k - 1) - boundary(b, pb, k - 1) + (k - 1.0) * m[k - 2];
  }
  double sum = 0;
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * m[k];
  return sum;
}

}  // namespace

double gaussian_abs_moment(const UniPoly& p) {
  std::vector<double> roots = real_roots(p, 1e-13);
  std::vector<double> cuts{-std::numeric_limits<double>::infinity()};
  cuts.insert(cuts.end(), roots.begin(), roots.end());
  cuts.push_back(std::numeric_limits<double>::infinity());
  double total = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) total += std::abs(segment_integral(p.coeffs, cuts[k], cuts[k + 1]));
  return total;
}

double gaussian_moment(const UniPoly& p) {
  // E Z^k = (k-1)!! for even k.
  double total = 0, moment = 1;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (k % 2 == 0) {
      if (k >= 2) moment *= static_cast<double>(k - 1);
      total += p.coeffs[k] * moment;
    }
  }
  return total;
}

}  // namespace projlab
