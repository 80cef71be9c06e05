#include "zonotile/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace zonotile {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw InputError("malformed rational: \"" + std::string(whole) + "\"");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InputError("malformed rational: \"" + std::string(text) + "\"");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') throw InputError("malformed rational: \"" + std::string(text) + "\"");
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw InputError("malformed rational: zero denominator in \"" + std::string(text) + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal literal: [sign] digits [. digits] [e [sign] digits]
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ex = parse_integer(s.substr(e + 1), text);
    if (!ex.fits_slong_p()) throw InputError("malformed rational: exponent out of range in \"" + std::string(text) + "\"");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw InputError("malformed rational: \"" + std::string(text) + "\"");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw InputError("malformed rational: \"" + std::string(text) + "\"");
    digits = std::string(s);
  }
  Rational q{Integer(digits, 10)};
  if (exponent > 0) q *= pow10(exponent);
  if (exponent < 0) q /= pow10(-exponent);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  Rational scaled = abs(q) * pow10(digits) + Rational(1, 2);
  Integer n = floor(scaled);
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(q) < 0 && n != 0) s.insert(0, "-");
  return s;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }
int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

// Vec3 -----------------------------------------------------------------------

Vec3 Vec3::axis(int k) {
  Vec3 v = zero();
  v[k] = 1;
  return v;
}

Vec3& Vec3::operator+=(const Vec3& o) {
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Vec3& Vec3::operator-=(const Vec3& o) {
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Vec3& Vec3::operator*=(const Rational& s) {
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
Vec3 operator*(const Rational& s, Vec3 a) { return a *= s; }
Vec3 operator*(Vec3 a, const Rational& s) { return a *= s; }
Vec3 operator/(Vec3 a, const Rational& s) {
  if (sgn(s) == 0) throw Error("division by zero");
  a.x /= s;
  a.y /= s;
  a.z /= s;
  return a;
}
bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
bool operator<(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << to_string(v.x) << ", " << to_string(v.y) << ", " << to_string(v.z) << ")";
}

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational det(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }
Rational norm2(const Vec3& a) { return dot(a, a); }
bool parallel(const Vec3& a, const Vec3& b) { return cross(a, b).is_zero(); }

Vec3 primitive(const Vec3& v) {
  if (v.is_zero()) throw Error("primitive of zero vector");
  Integer l = 1;
  for (int i = 0; i < 3; ++i) l = lcm(l, v[i].get_den());
  Integer g = 0;
  std::array<Integer, 3> n;
  for (int i = 0; i < 3; ++i) {
    n[i] = v[i].get_num() * (l / v[i].get_den());
    g = gcd(g, n[i]);
  }
  return {Rational(n[0] / g), Rational(n[1] / g), Rational(n[2] / g)};
}

Vec3 direction_key(const Vec3& v) {
  Vec3 p = primitive(v);
  for (int i = 0; i < 3; ++i) {
    if (sgn(p[i]) > 0) return p;
    if (sgn(p[i]) < 0) return -p;
  }
  return p;
}

int rank_of(const std::vector<Vec3>& vs) {
  std::vector<Vec3> basis;
  for (const Vec3& v : vs) {
    if (v.is_zero()) continue;
    if (basis.empty()) {
      basis.push_back(v);
    } else if (basis.size() == 1) {
      if (!parallel(basis[0], v)) basis.push_back(v);
    } else if (sgn(det(basis[0], basis[1], v)) != 0) {
      return 3;
    }
  }
  return static_cast<int>(basis.size());
}

std::array<double, 3> to_double(const Vec3& v) { return {v.x.get_d(), v.y.get_d(), v.z.get_d()}; }

// IntMatrix ------------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << "]";
  }
  return os << "]";
}

namespace {

// Gauss-Jordan on rationals; returns det and optionally the inverse.
Rational gauss_jordan(const IntMatrix& m, std::vector<Rational>* inverse) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("square matrix required");
  std::vector<Rational> a(n * n), inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      inv[i * n + j] = i == j ? 1 : 0;
    }
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p * n + c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[p * n + j], a[c * n + j]);
        std::swap(inv[p * n + j], inv[c * n + j]);
      }
      d = -d;
    }
    Rational piv = a[c * n + c];
    d *= piv;
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] /= piv;
      inv[c * n + j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i * n + c]) == 0) continue;
      Rational f = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[c * n + j];
        inv[i * n + j] -= f * inv[c * n + j];
      }
    }
  }
  if (inverse) *inverse = std::move(inv);
  return d;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  Rational d = gauss_jordan(m, nullptr);
  return d.get_num();
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  std::vector<Rational> inv;
  Rational d = gauss_jordan(m, &inv);
  if (abs(d) != 1) throw Error("matrix is not unimodular");
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = inv[i * m.cols() + j].get_num();
  return r;
}

// Smith normal form ----------------------------------------------------------

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}
void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}
// row_i += f * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
}
// col_i += f * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& s = f.s;
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (!found || abs(s(i, j)) < abs(s(pr, pc)))) {
            found = true;
            pr = i;
            pc = j;
          }
      if (!found) return f;
      if (pr != t) {
        swap_rows(s, pr, t);
        swap_rows(f.u, pr, t);
      }
      if (pc != t) {
        swap_cols(s, pc, t);
        swap_cols(f.v, pc, t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        add_row(s, i, t, -q);
        add_row(f.u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        add_col(s, j, t, -q);
        add_col(f.v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull any offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row(s, t, i, 1);
            add_row(f.u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) s(t, c) = -s(t, c);
      for (std::size_t c = 0; c < rows; ++c) f.u(t, c) = -f.u(t, c);
    }
  }
  return f;
}

// Mat3 -----------------------------------------------------------------------

Mat3 Mat3::inverse() const {
  Rational d = det();
  if (sgn(d) == 0) throw Error("singular matrix");
  // Rows of the inverse are the cross products of column pairs.
  Vec3 r0 = cross(col[1], col[2]) / d;
  Vec3 r1 = cross(col[2], col[0]) / d;
  Vec3 r2 = cross(col[0], col[1]) / d;
  return Mat3::from_columns(r0, r1, r2).transpose();
}

}  // namespace zonotile
