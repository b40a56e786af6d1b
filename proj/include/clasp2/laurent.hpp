#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clasp2 {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair of a monomial v^v * z^z. Ordered by z first so that the
/// canonical term order is "ascending z, then ascending v".
struct Monomial {
  int v = 0;
  int z = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.v <=> b.v;
  }
};

struct Term {
  Monomial exp;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact sparse Laurent polynomial in v and z over the integers.
///
/// Terms are kept sorted by Monomial order with no zero coefficients, so two
/// polynomials are equal iff their term lists are identical. A polynomial in z
/// alone is simply one whose terms all have v-exponent 0 (and symmetrically),
/// which makes mixed-arity arithmetic the ordinary ring operations.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: integers embed as constants
  explicit LaurentPoly(Integer c);

  static LaurentPoly monomial(Integer c, int v_exp, int z_exp);
  static LaurentPoly v(int k = 1) { return monomial(1, k, 0); }
  static LaurentPoly z(int k = 1) { return monomial(1, 0, k); }

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(int v_exp, int z_exp) const;

  /// True when no term carries a nonzero v (resp. z) exponent.
  bool is_z_only() const;
  bool is_v_only() const;

  std::optional<int> min_z() const;
  std::optional<int> max_z() const;
  std::optional<int> min_v() const;
  std::optional<int> max_v() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const;

  /// Multiplies every term by v^dv z^dz.
  LaurentPoly shifted(int dv, int dz) const;

  /// Replaces v by +1 or -1, leaving a polynomial in z.
  LaurentPoly substitute_v(int value) const;

  /// Replaces v by v^-1.
  LaurentPoly invert_v() const;

  /// Replaces v by -v^-1: the HOMFLY polynomial of the mirror image.
  LaurentPoly mirror_v() const;

  /// Exact quotient by a polynomial in v alone, or nullopt if the division
  /// leaves a remainder. Both operands must be free of z.
  std::optional<LaurentPoly> divide_exact_v(const LaurentPoly& divisor) const;

  /// Text form such as `2*v^2 - 1*v^4 + 1*v^2*z^2`; zero prints as `0`.
  std::string to_string() const;

  /// Inverse of to_string; also accepts `+ -c*...`, bare monomials and
  /// whitespace anywhere. Throws std::invalid_argument on malformed input.
  static LaurentPoly parse(std::string_view text);

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  static LaurentPoly from_unsorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

/// p^i_K(v): the i-th coefficient polynomial of a HOMFLY polynomial of a link
/// with `num_components` components, i.e. the coefficient of z^{2i} in
/// (v^-1 z)^{#K-1} P. Throws std::invalid_argument if the normalized
/// polynomial has odd or negative z-exponents.
LaurentPoly extract_p_i(const LaurentPoly& homfly, int num_components, int i);

}  // namespace clasp2
