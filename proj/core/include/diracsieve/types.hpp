#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ds {

/// Exact rational scalar. Every quantity in the library is an integer or a
/// rational; no floating point is used anywhere.
using Rational = mpq_class;

/// A weight written in the fundamental-weight basis: [n_1,...,n_l] stands
/// for n_1*w_1 + ... + n_l*w_l.
using Weight = std::vector<Rational>;

// All supported root systems have rank <= 6.
inline constexpr int kMaxRank = 6;

/// Integer coordinate vector used on hot paths (rho-lattice vectors,
/// doubled weights 2*lambda, Zhelobenko T/A-parameters).
using ICoords = std::array<std::int64_t, kMaxRank>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class DsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public DsError {
 public:
  using DsError::DsError;
};
class DimensionMismatch : public DsError {
 public:
  using DsError::DsError;
};
class IndexOutOfRange : public DsError {
 public:
  using DsError::DsError;
};
class NotDominant : public DsError {
 public:
  using DsError::DsError;
};
class NotDominantIntegral : public DsError {
 public:
  using DsError::DsError;
};
class NotInOrbit : public DsError {
 public:
  using DsError::DsError;
};
class InfiniteFamily : public DsError {
 public:
  using DsError::DsError;
};
class NotAnInvolution : public DsError {
 public:
  using DsError::DsError;
};
class MissingCatalog : public DsError {
 public:
  using DsError::DsError;
};
class ParseError : public DsError {
 public:
  using DsError::DsError;
};
class TypeMismatch : public DsError {
 public:
  using DsError::DsError;
};
class BadFreeValue : public DsError {
 public:
  using DsError::DsError;
};

/// One of the simple types in which Conjecture B is known to hold:
/// A1-A6, B2-B4, C2-C4, D4-D6, E6, F4, G2. Anything else is rejected.
struct TypeLabel {
  Family family;
  int rank;

  TypeLabel(Family f, int r);

  /// Parses labels such as "E6", "A3", "d5" (case-insensitive family letter).
  static TypeLabel parse(const std::string& text);

  std::string str() const;

  friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const TypeLabel& a, const TypeLabel& b) { return !(a == b); }
  friend bool operator<(const TypeLabel& a, const TypeLabel& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

bool type_is_supported(Family family, int rank);

// -- rational / weight helpers ------------------------------------------------

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonicalized rational from a scaled-integer pair.
inline Rational make_ratio(std::int64_t num, std::int64_t den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// Renders a rational as "p" or "p/q".
std::string rational_str(const Rational& q);

/// Parses "p" or "p/q" (arbitrary precision), canonicalized.
Rational parse_rational(const std::string& text);

/// Renders a weight as "[a,b,...]" with rational entries.
std::string weight_str(const Weight& v);

/// Parses the bracket syntax used throughout: "[-2,5,6,-7,6,-2]" or
/// "[1,1/2,1/2,1/2,1/2,1]". Whitespace around entries is ignored.
Weight parse_weight(const std::string& text);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& c, const Weight& v);
Weight operator-(const Weight& a);

inline bool weight_is_integral(const Weight& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

}  // namespace ds
