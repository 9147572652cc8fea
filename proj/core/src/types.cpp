#include "diracsieve/types.hpp"

#include <cctype>
#include <sstream>

namespace ds {

bool type_is_supported(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1 && rank <= 6;
    case Family::B: return rank >= 2 && rank <= 4;
    case Family::C: return rank >= 2 && rank <= 4;
    case Family::D: return rank >= 4 && rank <= 6;
    case Family::E: return rank == 6;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

TypeLabel::TypeLabel(Family f, int r) : family(f), rank(r) {
  if (!type_is_supported(f, r))
    throw UnsupportedType("unsupported type " + std::string(1, static_cast<char>(f)) +
                          std::to_string(r));
}

TypeLabel TypeLabel::parse(const std::string& text) {
  if (text.size() < 2) throw UnsupportedType("cannot parse type label '" + text + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string digits = text.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw UnsupportedType("cannot parse type label '" + text + "'");
  int rank = std::stoi(digits);
  switch (f) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return TypeLabel(static_cast<Family>(f), rank);
    default:
      throw UnsupportedType("unknown family in type label '" + text + "'");
  }
}

std::string TypeLabel::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  try {
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse rational '" + text + "'");
  }
}

std::string weight_str(const Weight& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rational_str(v[i]);
  }
  out += "]";
  return out;
}

Weight parse_weight(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("weight must be bracketed: '" + text + "'");
  Weight out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionMismatch("weight size mismatch in +");
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionMismatch("weight size mismatch in -");
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Weight operator*(const Rational& c, const Weight& v) {
  Weight out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Weight operator-(const Weight& a) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

}  // namespace ds
