#pragma once

// Exact rational scalars, 3-vectors and integer matrices.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zonotile {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library. The message carries the
/// user-facing reason (e.g. "degenerate zonotope").
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that fails to parse or violates a precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// Rational helpers -----------------------------------------------------------

/// Parses "p", "p/q", or a decimal literal such as "-1.25" or "3e-2" exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

/// num/den in lowest terms.
Rational make_rational(long num, long den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);

// Vec3 -----------------------------------------------------------------------

struct Vec3 {
  Rational x, y, z;

  Vec3() = default;
  Vec3(Rational x_, Rational y_, Rational z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Vec3 zero() { return {0, 0, 0}; }
  static Vec3 axis(int k);

  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }

  Vec3& operator+=(const Vec3& o);
  Vec3& operator-=(const Vec3& o);
  Vec3& operator*=(const Rational& s);
};

Vec3 operator+(Vec3 a, const Vec3& b);
Vec3 operator-(Vec3 a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const Rational& s, Vec3 a);
Vec3 operator*(Vec3 a, const Rational& s);
Vec3 operator/(Vec3 a, const Rational& s);
bool operator==(const Vec3& a, const Vec3& b);
bool operator!=(const Vec3& a, const Vec3& b);
/// Lexicographic order on (x, y, z).
bool operator<(const Vec3& a, const Vec3& b);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rational det(const Vec3& a, const Vec3& b, const Vec3& c);
Rational norm2(const Vec3& a);
bool parallel(const Vec3& a, const Vec3& b);

/// Smallest integer vector on the ray of `v` (v != 0).
Vec3 primitive(const Vec3& v);
/// Primitive integer vector on the line of `v` with its first nonzero entry positive.
Vec3 direction_key(const Vec3& v);

/// Rank of a set of vectors (0..3).
int rank_of(const std::vector<Vec3>& vs);

std::array<double, 3> to_double(const Vec3& v);

// Matrices -------------------------------------------------------------------

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// Exact inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;  ///< rows x rows, unimodular
  IntMatrix s;  ///< rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix v;  ///< cols x cols, unimodular
};

/// u * m * v = s.
SmithForm smith_normal_form(const IntMatrix& m);

/// 3x3 rational matrix stored by columns.
struct Mat3 {
  std::array<Vec3, 3> col;

  static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) { return {{a, b, c}}; }
  Rational det() const { return zonotile::det(col[0], col[1], col[2]); }
  Vec3 row(int i) const { return {col[0][i], col[1][i], col[2][i]}; }
  Vec3 operator*(const Vec3& v) const { return v.x * col[0] + v.y * col[1] + v.z * col[2]; }
  Mat3 transpose() const { return from_columns(row(0), row(1), row(2)); }
  /// Throws Error when singular.
  Mat3 inverse() const;
};

}  // namespace zonotile
