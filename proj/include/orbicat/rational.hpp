#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace orbicat {

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Prints as `p/q`, or `p` when the denominator is one.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts `p`, `-p`, `p/q`. Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static ExactRational parse(std::string_view text);

  std::string str() const;
  std::string numerator() const;
  std::string denominator() const;
  bool isInteger() const;

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) { ExactRational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace orbicat
