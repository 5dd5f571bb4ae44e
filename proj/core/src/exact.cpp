#include "hvec/exact.hpp"

#include <limits>
#include <utility>

namespace hvec {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic)
    : characteristic_(characteristic) {
  if (characteristic == 0) return;
  if (characteristic > kMaxPrime) {
    throw InvalidInput("characteristic " + std::to_string(characteristic) +
                       " exceeds the supported maximum 2^31-1");
  }
  if (!is_prime(characteristic)) {
    throw InvalidInput("characteristic " + std::to_string(characteristic) +
                       " is not prime");
  }
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(characteristic_) + ")";
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    const auto p = static_cast<long>(field.characteristic());
    long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    return;
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw InvalidInput("denominator vanishes in " + field.name());
  }
  value_ = mul_mod(reduce(value.get_num(), p), inverse_mod(den, p), p);
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw InvalidInput("residue() requested over Q");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw InvalidInput("rational() requested over " + field_.name());
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw InvalidInput("mixed fields: " + field_.name() + " and " +
                       rhs.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  Scalar out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    *r = inverse_mod(*r, field_.characteristic());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    const std::uint64_t p = field_.characteristic();
    *r = (p - *r) % p;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = (*r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = mul_mod(*r, std::get<std::uint64_t>(rhs.value_),
                 field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    return std::to_string(*r);
  }
  return std::get<mpq_class>(value_).get_str();
}

DenseMatrix::DenseMatrix(const FieldSpec& field, std::size_t rows,
                         std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::zero(field)) {}

void DenseMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.field() != field_) {
    throw InvalidInput("matrix entry over " + value.field().name() +
                       " in a matrix over " + field_.name());
  }
  entries_[r * cols_ + c] = value;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
  }
}

std::size_t rank_mod_p(std::vector<std::uint64_t> m, std::size_t rows,
                       std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = c; k < cols; ++k) {
        std::swap(m[pivot * cols + k], m[rank * cols + k]);
      }
    }
    const std::uint64_t inv = inverse_mod(m[rank * cols + c], p);
    for (std::size_t k = c; k < cols; ++k) {
      m[rank * cols + k] = mul_mod(m[rank * cols + k], inv, p);
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = m[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = mul_mod(factor, m[rank * cols + k], p);
        m[r * cols + k] = (m[r * cols + k] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_integer(std::vector<mpz_class> m, std::size_t rows,
                         std::size_t cols) {
  // Fraction-free echelon form: after each pivot step the active entries
  // are minors of the input, so the division by the previous pivot is exact.
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = c; k < cols; ++k) {
        std::swap(m[pivot * cols + k], m[rank * cols + k]);
      }
    }
    const mpz_class& lead = m[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class& below = m[r * cols + c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class& cell = m[r * cols + k];
        cell = lead * cell - below * m[rank * cols + k];
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), previous.get_mpz_t());
      }
      below = 0;
    }
    previous = lead;
    ++rank;
  }
  return rank;
}

std::size_t rank(const DenseMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (!m.field().is_rational()) {
    std::vector<std::uint64_t> data(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        data[r * cols + c] = m.at(r, c).residue();
      }
    }
    return rank_mod_p(std::move(data), rows, cols, m.field().characteristic());
  }
  // Clear denominators row by row; row scaling preserves rank.
  std::vector<mpz_class> data(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class& den = m.at(r, c).rational().get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      data[r * cols + c] = q.get_num() * (scale / q.get_den());
    }
  }
  return rank_integer(std::move(data), rows, cols);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below: bound must be positive");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v > limit);
  return v % bound;
}

Scalar ScalarSampler::next() {
  if (!field_.is_rational()) {
    const std::uint64_t p = field_.characteristic();
    return Scalar(field_, static_cast<long>(1 + rng_.below(p - 1)));
  }
  const auto h = static_cast<std::uint64_t>(kRationalSampleHeight);
  const std::uint64_t v = rng_.below(2 * h);
  const long value = v < h ? static_cast<long>(v + 1)
                           : -static_cast<long>(v - h + 1);
  return Scalar(field_, value);
}

std::vector<Scalar> sample_scalars(const FieldSpec& field, std::size_t count,
                                   std::uint64_t seed) {
  ScalarSampler sampler(field, seed);
  std::vector<Scalar> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace hvec
