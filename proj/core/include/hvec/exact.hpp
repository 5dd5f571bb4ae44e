// Exact scalars over Q or GF(p), dense matrices and their rank, and the
// seeded sampling streams used to realize "general" choices.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hvec/seqcore.hpp"

namespace hvec {

/// Largest prime modulus accepted; keeps residue products inside 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

/// Characteristic 0 (the rationals) or a prime p.
class FieldSpec {
 public:
  /// Throws InvalidInput unless characteristic is 0 or a prime <= kMaxPrime.
  explicit FieldSpec(std::uint64_t characteristic = 0);

  static FieldSpec rationals() { return FieldSpec(0); }

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t characteristic_;
};

class Scalar {
 public:
  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;

  /// Residue in [0, p); only valid over GF(p).
  std::uint64_t residue() const;
  /// Only valid over Q.
  const mpq_class& rational() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

/// Row-major matrix of scalars over a single field.
class DenseMatrix {
 public:
  DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  /// Throws InvalidInput if `value` lives over a different field.
  void set(std::size_t r, std::size_t c, const Scalar& value);

  void swap_rows(std::size_t a, std::size_t b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Field rank. Gaussian elimination over GF(p); fraction-free (Bareiss)
/// elimination on row-scaled integer data over Q.
std::size_t rank(const DenseMatrix& m);

/// Rank of a row-major residue matrix over GF(p). Entries must be < p.
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows,
                       std::size_t cols, std::uint64_t p);

/// Rank of a row-major integer matrix over Q.
std::size_t rank_integer(std::vector<mpz_class> entries, std::size_t rows,
                         std::size_t cols);

inline constexpr const char* kGeneratorName = "mt19937_64";
inline constexpr const char* kSeedMixName = "splitmix64";

/// Per-trial stream seed: splitmix64 finalizer over seed and index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Portable 64-bit stream. Bounded draws use rejection sampling so the
/// sequence does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Height bound for characteristic-0 samples: |value| <= 2^20.
inline constexpr long kRationalSampleHeight = 1L << 20;

/// Stream of nonzero field elements: residues in [1, p) over GF(p), nonzero
/// integers in [-2^20, 2^20] over Q.
class ScalarSampler {
 public:
  ScalarSampler(const FieldSpec& field, std::uint64_t seed)
      : field_(field), rng_(seed) {}

  Scalar next();

 private:
  FieldSpec field_;
  Rng rng_;
};

std::vector<Scalar> sample_scalars(const FieldSpec& field, std::size_t count,
                                   std::uint64_t seed);

}  // namespace hvec
