#include "liecert/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace liecert {

namespace {

bool fits_small(const mpz_class& z) {
  // INT64_MIN is excluded so negation never overflows on the inline path.
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != mpz_class(INT64_MIN) &&
         sizeof(long) == sizeof(std::int64_t);
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_mul_overflow(a, b, &out) && out != INT64_MIN;
}

bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_add_overflow(a, b, &out) && out != INT64_MIN;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    assign_big(mpq_class(to_mpz(num), to_mpz(den)));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = gcd64(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(q);
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_)
      *big_ = *other.big_;
    else
      big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::promote_from_small() {
  big_ = std::make_unique<mpq_class>(to_mpz(num_), to_mpz(den_));
  big_->canonicalize();
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::to_fraction_string() const { return numerator_string() + "/" + denominator_string(); }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::range_error("Rational: not an integer: " + to_string());
  if (big_) throw std::range_error("Rational: integer out of int64 range");
  return num_;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (num_ == 0) return *this = rhs;
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t s;
      if (checked_add(num_, rhs.num_, s)) {
        num_ = s;
        return *this;
      }
    } else {
      const std::int64_t g = std::gcd(den_, rhs.den_);
      const std::int64_t lf = den_ / g;
      const std::int64_t rf = rhs.den_ / g;
      std::int64_t a, b, s, d;
      if (checked_mul(num_, rf, a) && checked_mul(rhs.num_, lf, b) && checked_add(a, b, s) &&
          checked_mul(den_, rf, d)) {
        const std::int64_t h = gcd64(s, d);
        num_ = s / h;
        den_ = d / h;
        if (num_ == 0) den_ = 1;
        return *this;
      }
    }
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0) return *this;
    if (rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = gcd64(num_, rhs.den_);
    const std::int64_t g2 = gcd64(rhs.num_, den_);
    std::int64_t n, d;
    if (checked_mul(num_ / g1, rhs.num_ / g2, n) && checked_mul(den_ / g2, rhs.den_ / g1, d)) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!rhs.big_) {
    // rhs.num_ != INT64_MIN on the inline path, so the reciprocal is inline too.
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_)
    r.assign_big(-*big_);
  else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false; // canonical storage: a value has exactly one representation
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace liecert
