#include "orbicat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbicat {

namespace {

boost::multiprecision::cpp_int parseInteger(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  boost::multiprecision::cpp_int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  ExactRational r;
  if (slash == std::string_view::npos) {
    r.value_ = boost::multiprecision::cpp_rational(parseInteger(text));
    return r;
  }
  auto num = parseInteger(text.substr(0, slash));
  auto den = parseInteger(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.value_ = boost::multiprecision::cpp_rational(num, den);
  return r;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string ExactRational::numerator() const {
  return boost::multiprecision::numerator(value_).str();
}

std::string ExactRational::denominator() const {
  return boost::multiprecision::denominator(value_).str();
}

bool ExactRational::isInteger() const {
  return boost::multiprecision::denominator(value_) == 1;
}

std::string ExactRational::str() const {
  if (isInteger()) return numerator();
  return numerator() + "/" + denominator();
}

}  // namespace orbicat
