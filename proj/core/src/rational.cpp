#include "qdl/rational.hpp"

#include <cctype>

#include "qdl/errors.hpp"

namespace qdl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::ClosureOverflow: return "ClosureOverflow";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_integer_token(text))
        throw Error(ErrorKind::ParseError, "expected rational 'p/q' or integer, got '" + text + "'");
      return Rat(boost::multiprecision::mpz_int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw Error(ErrorKind::ParseError, "expected rational 'p/q', got '" + text + "'");
    boost::multiprecision::mpz_int n(num), d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rat(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, "cannot parse rational '" + text + "': " + e.what());
  }
}

std::string to_string(const Rat& value) { return value.str(); }

void require_unit_interval(const Rat& value, const char* what) {
  if (!in_unit_interval(value))
    throw Error(ErrorKind::OutOfRange, std::string(what) + " = " + to_string(value) + " is outside [0,1]");
}

}  // namespace qdl
