// Macaulay inverse systems under the contraction action: monomials, dense
// homogeneous forms, contraction matrices and the Hilbert functions they
// determine, plus drivers that check the family constructions numerically.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hvec/construct.hpp"
#include "hvec/exact.hpp"
#include "hvec/seqcore.hpp"

namespace hvec {

struct Monomial {
  std::vector<unsigned> exponents;

  long degree() const;
  std::size_t num_vars() const { return exponents.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Number of monomials of `degree` in `num_vars` variables.
std::size_t monomial_count(std::size_t num_vars, long degree);

/// All monomials of one degree in canonical order: lexicographically
/// descending exponent tuples, so y_1^e comes first.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, long degree);

/// Position of `m` within monomials_of_degree(m.num_vars(), m.degree()).
std::size_t monomial_index(const Monomial& m);

/// Homogeneous form stored densely over the canonical monomial order.
class Form {
 public:
  Form(const FieldSpec& field, std::size_t num_vars, long degree);

  static Form monomial(const FieldSpec& field, const Monomial& m);
  /// The linear form c_1 y_1 + ... + c_r y_r.
  static Form linear(const FieldSpec& field, const std::vector<Scalar>& coeffs);

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  long degree() const { return degree_; }

  const Scalar& coefficient(const Monomial& m) const;
  const Scalar& coefficient_at(std::size_t index) const {
    return coefficients_[index];
  }
  void set_coefficient(const Monomial& m, const Scalar& value);

  bool is_zero() const;
  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  Form& operator+=(const Form& rhs);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
  friend Form operator*(Form lhs, const Scalar& c) { return lhs *= c; }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  FieldSpec field_;
  std::size_t num_vars_;
  long degree_;
  std::vector<Scalar> coefficients_;
};

/// L^[n] for a linear form L = sum c_k y_k: coefficient of y^a is
/// prod c_k^{a_k}. Under contraction x^b o L^[n] = c^b L^[n-|b|], the
/// behaviour of ordinary powers under differentiation in characteristic 0.
Form divided_power(const Form& linear_form, long n);

/// x^b o f: lowers exponents by b, dropping terms where that goes negative.
Form contract(const Monomial& op, const Form& f);

/// Rows: (generator, operator monomial of degree e - i) in generator-major,
/// canonical order. Columns: monomials of degree i.
DenseMatrix contraction_matrix(const std::vector<Form>& generators, long degree);

/// Entry i is the rank of contraction_matrix(generators, i), 0 <= i <= e.
HVector hilbert_function(const std::vector<Form>& generators);

/// Same, with per-degree wall time in seconds appended to `seconds`.
HVector hilbert_function(const std::vector<Form>& generators,
                         std::vector<double>& seconds);

/// All monomials of `degree` in the first `used_vars` of `ambient_vars`
/// variables.
std::vector<Form> truncation_generators(std::size_t ambient_vars,
                                        std::size_t used_vars, long degree,
                                        const FieldSpec& field);

/// Random form with every coefficient drawn from `sampler`.
Form random_form(const FieldSpec& field, std::size_t num_vars, long degree,
                 ScalarSampler& sampler);

/// Signalled when the field is too small for random points to be general.
class BelowGenericityFloor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Collinear point count. The level plateau is C(d+1, 2) plus this count:
/// d + 4 in the odd case, d + 3 in the even case.
std::size_t collinear_forms(Parity parity, long d);

/// Number of random linear forms the construction samples (0 for ThmE).
std::size_t sampled_linear_forms(FamilyKind kind, long parameter);

/// Smallest admissible characteristic: 2 * (sampled linear forms)^2.
std::uint64_t genericity_floor(FamilyKind kind, long parameter);

bool below_genericity_floor(const FieldSpec& field, FamilyKind kind,
                            long parameter);

struct PointConfiguration {
  std::vector<Form> general_forms;  // C(d+1, 2) forms in y_1, y_2, y_3
  std::vector<Form> line_forms;     // collinear_forms(parity, d) forms in y_2, y_3
  std::uint64_t seed;
  FieldSpec field;
};

struct Thm34Forms {
  PointConfiguration points;
  Form f1;
  Form f2;
};

/// F_1, F_2 as random combinations of the (2d)-th (odd) or (2d-1)-th (even)
/// divided powers of the sampled linear forms. Throws BelowGenericityFloor
/// over GF(p) with p below genericity_floor.
Thm34Forms build_thm34_forms(long d, Parity parity, const FieldSpec& field,
                             std::uint64_t seed);

enum class Verdict { Match, Mismatch, Inconclusive };

std::string_view to_string(Verdict verdict);

struct VerificationReport {
  FamilyKind kind = FamilyKind::ThmE;
  long parameter = 0;
  std::uint64_t characteristic = 0;  // may be invalid when status is an error
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> trial_seeds;
  std::optional<HVector> target;
  std::vector<HVector> per_trial;
  std::optional<HVector> best;  // elementwise maximum over trials
  Verdict verdict = Verdict::Inconclusive;
  std::string status = "ok";    // "ok", "below-genericity-floor" or an error
  std::vector<double> degree_seconds;
};

/// Level target of the given family (what the generators should realize).
HVector verification_target(FamilyKind kind, long parameter);

/// Generators used in one trial.
std::vector<Form> verification_generators(FamilyKind kind, long parameter,
                                          const FieldSpec& field,
                                          std::uint64_t trial_seed);

/// Runs `trials` independent trials with seeds mix_seed(seed, t). Trials may
/// run concurrently when `parallel` is set; the report is identical either way.
VerificationReport verify_construction(FamilyKind kind, long parameter,
                                       const FieldSpec& field,
                                       std::uint64_t seed, std::size_t trials,
                                       bool parallel = false);

/// One report per characteristic, in input order. Per-characteristic failures
/// are recorded in the report status and never abort the sweep.
std::vector<VerificationReport> sweep_characteristics(
    FamilyKind kind, long parameter,
    const std::vector<std::uint64_t>& characteristics, std::uint64_t seed,
    std::size_t trials, bool parallel = false);

}  // namespace hvec
