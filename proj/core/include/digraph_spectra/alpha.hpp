#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dgs {

/// Interpolation parameter in [0, 1]. Carries exact-rational provenance when
/// supplied as "p/q", which the normality and equality checks use to decide
/// cases like alpha = 1/k in integer arithmetic.
class Alpha {
public:
  static Alpha of(double value) {
    check_range(value);
    Alpha a;
    a.value_ = value;
    return a;
  }

  static Alpha rational(long long p, long long q) {
    if (q <= 0) throw std::invalid_argument("alpha denominator must be positive");
    if (p < 0 || p > q) throw std::invalid_argument("alpha must lie in [0, 1]");
    long long g = std::gcd(p, q);
    Alpha a;
    a.exact_ = true;
    a.num_ = p / g;
    a.den_ = q / g;
    a.value_ = static_cast<double>(a.num_) / static_cast<double>(a.den_);
    return a;
  }

  /// Accepts "0.3" or "p/q".
  static Alpha parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash != std::string::npos) {
        return rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
      }
      return of(std::stod(text));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse alpha: \"" + text + "\"");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("alpha out of range: \"" + text + "\"");
    }
  }

  double value() const { return value_; }
  bool exact() const { return exact_; }
  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return exact_ ? num_ == 0 : value_ == 0.0; }
  bool is_one() const { return exact_ ? num_ == den_ : value_ == 1.0; }

  /// True when alpha is exactly 1/k for the given k >= 1.
  bool equals_unit_fraction(long long k) const {
    if (exact_) return num_ == 1 && den_ == k;
    return value_ != 0.0 && std::abs(value_ - 1.0 / static_cast<double>(k)) <= 1e-12;
  }

private:
  static void check_range(double v) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  }

  double value_ = 0.0;
  bool exact_ = false;
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace dgs
