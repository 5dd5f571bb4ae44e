// Integer-sequence calculus for h-vectors: Macaulay expansions and growth
// bounds, and the classification predicates built on top of them.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hvec {

using Integer = mpz_class;

/// Raised for arguments that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binomial coefficient C(n, k) in arbitrary precision; zero when k < 0 or
/// k > n, and n >= 0 is required.
Integer binomial(long n, long k);

/// Finite sequence (1, h_1, ..., h_e) of positive integers.
class HVector {
 public:
  explicit HVector(std::vector<Integer> entries);
  HVector(std::initializer_list<long> entries);

  static HVector from_longs(std::span<const long> entries);

  const std::vector<Integer>& entries() const { return entries_; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }

  /// e: the index of the last entry.
  std::size_t socle_degree() const { return entries_.size() - 1; }

  /// r = h_1. Requires length >= 2.
  const Integer& codimension() const;

  std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<Integer> entries_;
};

/// Parses "1, 3, 6" style literals (brackets and parentheses optional).
HVector parse_hvector(const std::string& literal);

/// The greedy decomposition n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j).
struct BinomialExpansion {
  struct Term {
    Integer top;
    long bottom;
    friend bool operator==(const Term&, const Term&) = default;
  };

  long index = 0;
  std::vector<Term> terms;

  /// Sum of C(top, bottom) over the terms.
  Integer value() const;
};

BinomialExpansion binomial_expansion(const Integer& n, long i);

/// n^<i>: every term of the i-binomial expansion shifted by +1 top and bottom.
Integer macaulay_bound(const Integer& n, long i);

/// A failed growth step from degree `degree` to `degree + 1`.
struct GrowthViolation {
  std::size_t degree;
  Integer value;    // s[degree]
  Integer next;     // s[degree + 1]
  Integer bound;    // macaulay_bound(value, degree)
};

/// First degree i >= 1 with s[i+1] > s[i]^<i>. Entries of `seq` must be
/// positive from index 1 on.
std::optional<GrowthViolation> first_growth_violation(
    std::span<const Integer> seq);

bool is_o_sequence(const HVector& h);

std::vector<Integer> first_difference(std::span<const Integer> seq);

/// Why a sequence fails differentiability.
struct DifferenceViolation {
  enum class Kind { Negative, InternalZero, Growth };
  Kind kind;
  std::size_t degree;
  std::optional<GrowthViolation> growth;  // set when kind == Growth
};

std::optional<DifferenceViolation> first_difference_violation(
    std::span<const Integer> seq);

bool is_differentiable(const HVector& h);

/// First index i with h_i != h_{e-i}.
std::optional<std::size_t> first_asymmetry(const HVector& h);
bool is_symmetric(const HVector& h);

/// Index of the first strict increase that follows a strict decrease.
std::optional<std::size_t> first_unimodality_break(const HVector& h);
bool is_unimodal(const HVector& h);

/// The prefix (h_0, ..., h_{floor(e/2)}).
std::vector<Integer> first_half(const HVector& h);

bool is_si_sequence(const HVector& h);

}  // namespace hvec
