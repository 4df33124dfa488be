#include "projlab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "projlab/error.hpp"

namespace projlab {

double conjugate_exponent(double r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "exponent must be >= 1");
  if (r == 1) return kInf;
  if (std::isinf(r)) return 1;
  return r / (r - 1);
}

namespace {

void check_exponent(double r) {
  if (!(r >= 1)) throw Error(ErrorCode::InvalidArgument, "exponents must lie in [1, inf]");
}

double lr_norm(std::span<const double> a, double r) {
  if (std::isinf(r)) {
    double m = 0;
    for (double v : a) m = std::max(m, v);
    return m;
  }
  double scale = 0;
  for (double v : a) scale = std::max(scale, v);
  if (scale == 0) return 0;
  double sum = 0;
  if (r == 1) {
    for (double v : a) sum += v;
    return sum;
  }
  for (double v : a) sum += std::pow(v / scale, r);
  return scale * std::pow(sum, 1 / r);
}

std::string format_exponent(double r) {
  if (std::isinf(r)) return "inf";
  std::ostringstream os;
  os.precision(15);
  os << r;
  return os.str();
}

}  // namespace

std::vector<double> decreasing_rearrangement(std::span<const double> abs_values) {
  std::vector<double> d(abs_values.begin(), abs_values.end());
  std::stable_sort(d.begin(), d.end(), std::greater<>());
  return d;
}

SequenceSpace SequenceSpace::lr(std::size_t n, double r) {
  check_exponent(r);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (std::isinf(r)) return linf(n);
  SequenceSpace x;
  x.family_ = SpaceFamily::Lr;
  x.dimension_ = n;
  x.r_ = r;
  x.s_ = r;
  return x;
}

SequenceSpace SequenceSpace::linf(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  SequenceSpace x;
  x.family_ = SpaceFamily::LInfty;
  x.dimension_ = n;
  x.r_ = kInf;
  x.s_ = kInf;
  return x;
}

SequenceSpace SequenceSpace::lorentz(std::size_t n, double r, double s) {
  check_exponent(r);
  check_exponent(s);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (std::isinf(r)) throw Error(ErrorCode::InvalidArgument, "Lorentz space needs finite r");
  SequenceSpace x;
  x.family_ = SpaceFamily::Lorentz;
  x.dimension_ = n;
  x.r_ = r;
  x.s_ = s;
  if (!std::isinf(s)) {
    x.lorentz_weights_.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
      double kk = static_cast<double>(k);
      x.lorentz_weights_[k - 1] = std::pow(kk, s / r) - std::pow(kk - 1, s / r);
    }
  }
  return x;
}

SequenceSpace SequenceSpace::nakano(std::vector<double> exponents) {
  if (exponents.empty()) throw Error(ErrorCode::InvalidArgument, "Nakano space needs exponents");
  for (double p : exponents) {
    check_exponent(p);
    if (std::isinf(p)) throw Error(ErrorCode::InvalidArgument, "Nakano exponents must be finite");
  }
  SequenceSpace x;
  x.family_ = SpaceFamily::Nakano;
  x.dimension_ = exponents.size();
  x.exponents_ = std::move(exponents);
  return x;
}

SequenceSpace SequenceSpace::nakano_dual(std::vector<double> exponents) {
  SequenceSpace x = nakano(std::move(exponents));
  for (double p : x.exponents_)
    if (p <= 1) throw Error(ErrorCode::DualNotImplemented, "Nakano dual needs all p_i > 1");
  x.family_ = SpaceFamily::NakanoDual;
  return x;
}

SequenceSpace SequenceSpace::mixed(double p, double q, std::size_t rows, std::size_t cols) {
  check_exponent(p);
  check_exponent(q);
  if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "mixed space needs rows, cols >= 1");
  SequenceSpace x;
  x.family_ = SpaceFamily::Mixed;
  x.dimension_ = rows * cols;
  x.r_ = p;
  x.s_ = q;
  x.rows_ = rows;
  x.cols_ = cols;
  return x;
}

bool SequenceSpace::is_symmetric() const {
  switch (family_) {
    case SpaceFamily::Lr:
    case SpaceFamily::Lorentz:
    case SpaceFamily::LInfty:
      return true;
    case SpaceFamily::Nakano:
    case SpaceFamily::NakanoDual:
      return std::all_of(exponents_.begin(), exponents_.end(), [&](double p) { return p == exponents_.front(); });
    case SpaceFamily::Mixed:
      return rows_ == 1 || cols_ == 1 || r_ == s_;
  }
  return false;
}

double SequenceSpace::nakano_norm(std::span<const double> a) const {
  // F(s) = log sum (a_i e^{-s})^{p_i} is convex and decreasing in s = log t, so Newton
  // started left of the root increases monotonically to it.
  double amax = 0;
  for (double v : a) amax = std::max(amax, v);
  if (amax == 0) return 0;
  double s = std::log(amax);
  for (int it = 0; it < 100; ++it) {
    double top = -kInf;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) top = std::max(top, exponents_[i] * (std::log(a[i]) - s));
    double sum = 0, dsum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] <= 0) continue;
      double w = std::exp(exponents_[i] * (std::log(a[i]) - s) - top);
      sum += w;
      dsum += exponents_[i] * w;
    }
    double f = top + std::log(sum);
    double step = f / (dsum / sum);
    s += step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(s))) break;
  }
  return std::exp(s);
}

double SequenceSpace::nakano_dual_norm(std::span<const double> a) const {
  // Maximizer x_i = (a_i / (lambda p_i))^{1/(p_i-1)} with lambda fixed by sum x_i^{p_i} = 1.
  // G(l) = log sum x_i^{p_i} is convex decreasing in l = log lambda; same Newton scheme.
  double l = -kInf;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) l = std::max(l, std::log(a[i] / exponents_[i]));
  if (std::isinf(l)) return 0;
  auto log_x = [&](std::size_t i, double ll) {
    return (std::log(a[i] / exponents_[i]) - ll) / (exponents_[i] - 1);
  };
  for (int it = 0; it < 100; ++it) {
    double top = -kInf;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) top = std::max(top, exponents_[i] * log_x(i, l));
    double sum = 0, dsum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] <= 0) continue;
      double p = exponents_[i];
      double w = std::exp(p * log_x(i, l) - top);
      sum += w;
      dsum += p / (p - 1) * w;
    }
    double g = top + std::log(sum);
    double step = g / (dsum / sum);
    l += step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(l))) break;
  }
  double value = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) value += a[i] * std::exp(log_x(i, l));
  return value;
}

double SequenceSpace::norm_abs(std::span<const double> a) const {
  if (a.size() != dimension_) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length " + std::to_string(a.size()) + " vs dimension " + std::to_string(dimension_));
  }
  switch (family_) {
    case SpaceFamily::Lr:
    case SpaceFamily::LInfty:
      return lr_norm(a, r_);
    case SpaceFamily::Lorentz: {
      auto d = decreasing_rearrangement(a);
      if (std::isinf(s_)) {
        double best = 0, partial = 0;
        for (std::size_t k = 1; k <= d.size(); ++k) {
          partial += d[k - 1];
          best = std::max(best, partial / std::pow(static_cast<double>(k), 1 - 1 / r_));
        }
        return best;
      }
      double scale = d.empty() ? 0 : d.front();
      if (scale == 0) return 0;
      double sum = 0;
      for (std::size_t k = 0; k < d.size(); ++k) sum += std::pow(d[k] / scale, s_) * lorentz_weights_[k];
      return scale * std::pow(sum, 1 / s_);
    }
    case SpaceFamily::Nakano:
      return nakano_norm(a);
    case SpaceFamily::NakanoDual:
      return nakano_dual_norm(a);
    case SpaceFamily::Mixed: {
      std::vector<double> row_norms(rows_);
      for (std::size_t i = 0; i < rows_; ++i) row_norms[i] = lr_norm(a.subspan(i * cols_, cols_), s_);
      return lr_norm(row_norms, r_);
    }
  }
  return 0;
}

double SequenceSpace::norm(std::span<const std::complex<double>> z) const {
  std::vector<double> a(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) a[i] = std::abs(z[i]);
  return norm_abs(a);
}

double SequenceSpace::norm(std::span<const double> z) const {
  std::vector<double> a(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) a[i] = std::abs(z[i]);
  return norm_abs(a);
}

double SequenceSpace::fundamental(std::size_t k) const {
  if (k < 1 || k > dimension_) throw Error(ErrorCode::InvalidArgument, "fundamental function index out of range");
  double kk = static_cast<double>(k);
  switch (family_) {
    case SpaceFamily::Lr:
      return std::pow(kk, 1 / r_);
    case SpaceFamily::LInfty:
      return 1;
    case SpaceFamily::Lorentz:
      return std::pow(kk, 1 / r_);
    default: {
      std::vector<double> ones(dimension_, 0.0);
      std::fill(ones.begin(), ones.begin() + static_cast<std::ptrdiff_t>(k), 1.0);
      return norm_abs(ones);
    }
  }
}

double SequenceSpace::dual_fundamental(std::size_t k) const {
  if (is_symmetric() && family_ != SpaceFamily::Mixed) return static_cast<double>(k) / fundamental(k);
  return kothe_dual().fundamental(k);
}

SequenceSpace SequenceSpace::kothe_dual() const {
  switch (family_) {
    case SpaceFamily::Lr:
      return lr(dimension_, conjugate_exponent(r_));
    case SpaceFamily::LInfty:
      return lr(dimension_, 1);
    case SpaceFamily::Lorentz:
      throw Error(ErrorCode::DualNotImplemented, "Lorentz dual is exposed only through dual_fundamental");
    case SpaceFamily::Nakano:
      return nakano_dual(exponents_);
    case SpaceFamily::NakanoDual:
      return nakano(exponents_);
    case SpaceFamily::Mixed:
      return mixed(conjugate_exponent(r_), conjugate_exponent(s_), rows_, cols_);
  }
  throw Error(ErrorCode::DualNotImplemented, describe());
}

std::string SequenceSpace::describe() const {
  std::ostringstream os;
  switch (family_) {
    case SpaceFamily::Lr:
      os << "lr:" << format_exponent(r_);
      break;
    case SpaceFamily::LInfty:
      os << "linf";
      break;
    case SpaceFamily::Lorentz:
      os << "lorentz:" << format_exponent(r_) << ',' << format_exponent(s_);
      break;
    case SpaceFamily::Nakano:
    case SpaceFamily::NakanoDual:
      os << (family_ == SpaceFamily::Nakano ? "nakano:" : "nakano-dual:");
      for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << format_exponent(exponents_[i]);
      break;
    case SpaceFamily::Mixed:
      os << "mixed:" << format_exponent(r_) << ',' << format_exponent(s_) << ',' << rows_ << 'x' << cols_;
      break;
  }
  return os.str();
}

namespace {

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInf;
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad exponent '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

SequenceSpace parse_space(const std::string& text, std::size_t n) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto parts = split(rest, ',');
  if (head == "linf" && rest.empty()) return SequenceSpace::linf(n);
  if (head == "lr" && parts.size() == 1) return SequenceSpace::lr(n, parse_exponent(parts[0]));
  if (head == "lorentz" && parts.size() == 2)
    return SequenceSpace::lorentz(n, parse_exponent(parts[0]), parse_exponent(parts[1]));
  if ((head == "nakano" || head == "nakano-dual") && !parts.empty()) {
    std::vector<double> p;
    for (const auto& s : parts) p.push_back(parse_exponent(s));
    return head == "nakano" ? SequenceSpace::nakano(p) : SequenceSpace::nakano_dual(p);
  }
  if (head == "mixed" && parts.size() == 3) {
    auto dims = split(parts[2], 'x');
    if (dims.size() != 2) throw Error(ErrorCode::Parse, "mixed space needs RxC");
    try {
      return SequenceSpace::mixed(parse_exponent(parts[0]), parse_exponent(parts[1]), std::stoul(dims[0]),
                                  std::stoul(dims[1]));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::Parse, "mixed space dimensions '" + parts[2] + "'");
    }
  }
  throw Error(ErrorCode::Parse, "space descriptor '" + text + "'");
}

}  // namespace projlab
