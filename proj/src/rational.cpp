#include "tnnlag/rational.hpp"

#include <cctype>

#include "tnnlag/error.hpp"

namespace tnnlag {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotRhoSymmetric: return "NotRhoSymmetric";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InconsistentNecklace: return "InconsistentNecklace";
    case ErrorKind::MalformedMap: return "MalformedMap";
    case ErrorKind::DanglingStrand: return "DanglingStrand";
    case ErrorKind::OddBoundary: return "OddBoundary";
    case ErrorKind::SiteMismatch: return "SiteMismatch";
    case ErrorKind::UnknownCell: return "UnknownCell";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoMatching: return "NoMatching";
    case ErrorKind::StepWeightMismatch: return "StepWeightMismatch";
    case ErrorKind::NotInCell: return "NotInCell";
    case ErrorKind::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorKind::FirstMinorZero: return "FirstMinorZero";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t d = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == d) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    return s.substr(start, i - start);
  };
  std::string num = digits(true);
  if (num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = digits(false);
  }
  if (i != s.size()) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace tnnlag
