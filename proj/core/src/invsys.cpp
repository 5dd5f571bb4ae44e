#include "hvec/invsys.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>

namespace hvec {

long Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

std::size_t monomial_count(std::size_t num_vars, long degree) {
  if (degree < 0 || num_vars == 0) return degree == 0 && num_vars == 0 ? 1 : 0;
  return binomial(degree + static_cast<long>(num_vars) - 1,
                  static_cast<long>(num_vars) - 1)
      .get_ui();
}

namespace {

void append_monomials(std::size_t var, long remaining, std::vector<unsigned>& prefix,
                      std::vector<Monomial>& out) {
  if (var + 1 == prefix.size()) {
    prefix[var] = static_cast<unsigned>(remaining);
    out.push_back({prefix});
    return;
  }
  for (long a = remaining; a >= 0; --a) {
    prefix[var] = static_cast<unsigned>(a);
    append_monomials(var + 1, remaining - a, prefix, out);
  }
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t k = 0; k < out.exponents.size(); ++k) {
    out.exponents[k] += b.exponents[k];
  }
  return out;
}

void require_nonnegative_degree(long degree) {
  if (degree < 0) throw InvalidInput("degree must be nonnegative");
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, long degree) {
  require_nonnegative_degree(degree);
  if (num_vars == 0) throw InvalidInput("at least one variable required");
  std::vector<Monomial> out;
  out.reserve(monomial_count(num_vars, degree));
  std::vector<unsigned> prefix(num_vars, 0);
  append_monomials(0, degree, prefix, out);
  return out;
}

std::size_t monomial_index(const Monomial& m) {
  // Monomials ahead of m in the current slot are those with a larger
  // exponent there: as many as the monomials of degree (remaining - a - 1)
  // in the variables from this slot on.
  std::size_t index = 0;
  long remaining = m.degree();
  const std::size_t n = m.num_vars();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const long a = m.exponents[k];
    index += monomial_count(n - k, remaining - a - 1);
    remaining -= a;
  }
  return index;
}

Form::Form(const FieldSpec& field, std::size_t num_vars, long degree)
    : field_(field),
      num_vars_(num_vars),
      degree_(degree),
      coefficients_() {
  require_nonnegative_degree(degree);
  if (num_vars == 0) throw InvalidInput("at least one variable required");
  coefficients_.assign(monomial_count(num_vars, degree), Scalar::zero(field));
}

Form Form::monomial(const FieldSpec& field, const Monomial& m) {
  Form out(field, m.num_vars(), m.degree());
  out.set_coefficient(m, Scalar::one(field));
  return out;
}

Form Form::linear(const FieldSpec& field, const std::vector<Scalar>& coeffs) {
  Form out(field, coeffs.size(), 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m{std::vector<unsigned>(coeffs.size(), 0)};
    m.exponents[k] = 1;
    out.set_coefficient(m, coeffs[k]);
  }
  return out;
}

const Scalar& Form::coefficient(const Monomial& m) const {
  if (m.num_vars() != num_vars_ || m.degree() != degree_) {
    throw InvalidInput("monomial does not belong to this form's degree");
  }
  return coefficients_[monomial_index(m)];
}

void Form::set_coefficient(const Monomial& m, const Scalar& value) {
  if (m.num_vars() != num_vars_ || m.degree() != degree_) {
    throw InvalidInput("monomial does not belong to this form's degree");
  }
  if (value.field() != field_) throw InvalidInput("coefficient field mismatch");
  coefficients_[monomial_index(m)] = value;
}

bool Form::is_zero() const { return term_count() == 0; }

std::size_t Form::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coefficients_.begin(), coefficients_.end(),
                    [](const Scalar& c) { return !c.is_zero(); }));
}

Form& Form::operator+=(const Form& rhs) {
  if (rhs.field_ != field_ || rhs.num_vars_ != num_vars_ ||
      rhs.degree_ != degree_) {
    throw InvalidInput("adding forms of different shape");
  }
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    coefficients_[k] += rhs.coefficients_[k];
  }
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  for (auto& coeff : coefficients_) coeff *= c;
  return *this;
}

Form divided_power(const Form& linear_form, long n) {
  if (linear_form.degree() != 1) {
    throw InvalidInput("divided_power expects a linear form");
  }
  require_nonnegative_degree(n);
  const FieldSpec& field = linear_form.field();
  const std::size_t r = linear_form.num_vars();
  // powers[k][a] = c_k^a
  std::vector<std::vector<Scalar>> powers(r);
  for (std::size_t k = 0; k < r; ++k) {
    Monomial unit{std::vector<unsigned>(r, 0)};
    unit.exponents[k] = 1;
    const Scalar c = linear_form.coefficient(unit);
    powers[k].push_back(Scalar::one(field));
    for (long a = 1; a <= n; ++a) powers[k].push_back(powers[k].back() * c);
  }
  Form out(field, r, n);
  for (const auto& m : monomials_of_degree(r, n)) {
    Scalar value = Scalar::one(field);
    for (std::size_t k = 0; k < r; ++k) value *= powers[k][m.exponents[k]];
    out.set_coefficient(m, value);
  }
  return out;
}

Form contract(const Monomial& op, const Form& f) {
  if (op.num_vars() != f.num_vars()) {
    throw InvalidInput("contract: variable count mismatch");
  }
  if (op.degree() > f.degree()) {
    throw InvalidInput("contract: operator degree exceeds form degree");
  }
  Form out(f.field(), f.num_vars(), f.degree() - op.degree());
  for (const auto& m : monomials_of_degree(f.num_vars(), out.degree())) {
    out.set_coefficient(m, f.coefficient(product(m, op)));
  }
  return out;
}

DenseMatrix contraction_matrix(const std::vector<Form>& generators,
                               long degree) {
  if (generators.empty()) throw InvalidInput("no generators");
  const Form& first = generators.front();
  for (const auto& g : generators) {
    if (g.degree() != first.degree() || g.field() != first.field() ||
        g.num_vars() != first.num_vars()) {
      throw InvalidInput("generators must share degree, field and variables");
    }
  }
  if (degree < 0 || degree > first.degree()) {
    throw InvalidInput("contraction degree out of range");
  }
  const std::size_t r = first.num_vars();
  const auto ops = monomials_of_degree(r, first.degree() - degree);
  const auto cols = monomials_of_degree(r, degree);

  std::vector<std::size_t> lookup(ops.size() * cols.size());
  for (std::size_t o = 0; o < ops.size(); ++o) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      lookup[o * cols.size() + c] = monomial_index(product(ops[o], cols[c]));
    }
  }
  DenseMatrix m(first.field(), generators.size() * ops.size(), cols.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t o = 0; o < ops.size(); ++o) {
      const std::size_t row = g * ops.size() + o;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        m.set(row, c,
              generators[g].coefficient_at(lookup[o * cols.size() + c]));
      }
    }
  }
  return m;
}

HVector hilbert_function(const std::vector<Form>& generators,
                         std::vector<double>& seconds) {
  if (generators.empty() ||
      std::all_of(generators.begin(), generators.end(),
                  [](const Form& g) { return g.is_zero(); })) {
    throw InvalidInput("hilbert_function: generators are all zero");
  }
  const long e = generators.front().degree();
  std::vector<Integer> entries;
  for (long i = 0; i <= e; ++i) {
    const auto start = std::chrono::steady_clock::now();
    entries.emplace_back(
        static_cast<unsigned long>(rank(contraction_matrix(generators, i))));
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    seconds.push_back(elapsed.count());
  }
  return HVector(std::move(entries));
}

HVector hilbert_function(const std::vector<Form>& generators) {
  std::vector<double> unused;
  return hilbert_function(generators, unused);
}

std::vector<Form> truncation_generators(std::size_t ambient_vars,
                                        std::size_t used_vars, long degree,
                                        const FieldSpec& field) {
  if (degree < 1) throw InvalidInput("truncation degree must be >= 1");
  if (used_vars == 0 || used_vars > ambient_vars) {
    throw InvalidInput("used variables must be in 1..ambient variables");
  }
  std::vector<Form> out;
  for (const auto& m : monomials_of_degree(used_vars, degree)) {
    Monomial embedded{std::vector<unsigned>(ambient_vars, 0)};
    std::copy(m.exponents.begin(), m.exponents.end(),
              embedded.exponents.begin());
    out.push_back(Form::monomial(field, embedded));
  }
  return out;
}

Form random_form(const FieldSpec& field, std::size_t num_vars, long degree,
                 ScalarSampler& sampler) {
  Form out(field, num_vars, degree);
  for (const auto& m : monomials_of_degree(num_vars, degree)) {
    out.set_coefficient(m, sampler.next());
  }
  return out;
}

std::size_t collinear_forms(Parity parity, long d) {
  return static_cast<std::size_t>(parity == Parity::Odd ? d + 4 : d + 3);
}

std::size_t sampled_linear_forms(FamilyKind kind, long parameter) {
  if (kind == FamilyKind::ThmE) return 0;
  const long d = parameter;
  const Parity parity = kind == FamilyKind::ThmROdd ? Parity::Odd : Parity::Even;
  return binomial(d + 1, 2).get_ui() + collinear_forms(parity, d);
}

std::uint64_t genericity_floor(FamilyKind kind, long parameter) {
  const std::uint64_t n = sampled_linear_forms(kind, parameter);
  return 2 * n * n;
}

bool below_genericity_floor(const FieldSpec& field, FamilyKind kind,
                            long parameter) {
  return !field.is_rational() &&
         field.characteristic() < genericity_floor(kind, parameter);
}

Thm34Forms build_thm34_forms(long d, Parity parity, const FieldSpec& field,
                             std::uint64_t seed) {
  if (d < 10) throw InvalidInput("d must be >= 10");
  const FamilyKind kind =
      parity == Parity::Odd ? FamilyKind::ThmROdd : FamilyKind::ThmREven;
  if (below_genericity_floor(field, kind, d)) {
    throw BelowGenericityFloor(
        field.name() + " is below the genericity floor " +
        std::to_string(genericity_floor(kind, d)));
  }
  ScalarSampler sampler(field, seed);
  PointConfiguration points{{}, {}, seed, field};
  const std::size_t general = binomial(d + 1, 2).get_ui();
  for (std::size_t k = 0; k < general; ++k) {
    points.general_forms.push_back(Form::linear(
        field, {sampler.next(), sampler.next(), sampler.next()}));
  }
  for (std::size_t k = 0; k < collinear_forms(parity, d); ++k) {
    points.line_forms.push_back(Form::linear(
        field, {Scalar::zero(field), sampler.next(), sampler.next()}));
  }

  const long n = parity == Parity::Odd ? 2 * d : 2 * d - 1;
  std::vector<Form> powers;
  for (const auto& l : points.general_forms) powers.push_back(divided_power(l, n));
  for (const auto& m : points.line_forms) powers.push_back(divided_power(m, n));

  auto combine = [&] {
    Form f(field, 3, n);
    for (const auto& p : powers) f += p * sampler.next();
    return f;
  };
  Form f1 = combine();
  Form f2 = combine();
  return {std::move(points), std::move(f1), std::move(f2)};
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

HVector verification_target(FamilyKind kind, long parameter) {
  switch (kind) {
    case FamilyKind::ThmE: {
      auto outcome = construct_thm_e(parameter);
      if (!outcome) throw InvalidInput(outcome.nonexistent->reason);
      return outcome.result->level_hvector;
    }
    case FamilyKind::ThmROdd:
      return construct_thm_r_level(parameter, Parity::Odd);
    case FamilyKind::ThmREven:
      return construct_thm_r_level(parameter, Parity::Even);
  }
  throw InvalidInput("unknown family kind");
}

std::vector<Form> verification_generators(FamilyKind kind, long parameter,
                                          const FieldSpec& field,
                                          std::uint64_t trial_seed) {
  if (kind == FamilyKind::ThmE) {
    const long degree = parameter - 1;
    auto gens = truncation_generators(3, 2, degree, field);
    ScalarSampler sampler(field, trial_seed);
    gens.push_back(random_form(field, 3, degree, sampler));
    return gens;
  }
  const Parity parity = kind == FamilyKind::ThmROdd ? Parity::Odd : Parity::Even;
  auto forms = build_thm34_forms(parameter, parity, field, trial_seed);
  return {std::move(forms.f1), std::move(forms.f2)};
}

namespace {

struct TrialResult {
  HVector hilbert;
  std::vector<double> seconds;
};

HVector elementwise_max(const HVector& a, const HVector& b) {
  std::vector<Integer> out = a.entries();
  for (std::size_t i = 0; i < out.size() && i < b.size(); ++i) {
    out[i] = std::max(out[i], b[i]);
  }
  return HVector(std::move(out));
}

VerificationReport blank_report(FamilyKind kind, long parameter,
                                std::uint64_t characteristic,
                                std::uint64_t seed) {
  VerificationReport report;
  report.kind = kind;
  report.parameter = parameter;
  report.characteristic = characteristic;
  report.seed = seed;
  return report;
}

}  // namespace

VerificationReport verify_construction(FamilyKind kind, long parameter,
                                       const FieldSpec& field,
                                       std::uint64_t seed, std::size_t trials,
                                       bool parallel) {
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  VerificationReport report = blank_report(kind, parameter,
                                           field.characteristic(), seed);
  report.target = verification_target(kind, parameter);
  for (std::size_t t = 0; t < trials; ++t) {
    report.trial_seeds.push_back(mix_seed(seed, t));
  }
  if (below_genericity_floor(field, kind, parameter)) {
    report.verdict = Verdict::Inconclusive;
    report.status = "below-genericity-floor";
    return report;
  }

  std::vector<std::future<TrialResult>> pending;
  for (const std::uint64_t trial_seed : report.trial_seeds) {
    pending.push_back(std::async(
        parallel ? std::launch::async : std::launch::deferred, [=] {
          TrialResult out{HVector{1}, {}};
          out.hilbert = hilbert_function(
              verification_generators(kind, parameter, field, trial_seed),
              out.seconds);
          return out;
        }));
  }
  for (auto& p : pending) {
    TrialResult result = p.get();
    if (report.degree_seconds.size() < result.seconds.size()) {
      report.degree_seconds.resize(result.seconds.size(), 0.0);
    }
    for (std::size_t i = 0; i < result.seconds.size(); ++i) {
      report.degree_seconds[i] += result.seconds[i];
    }
    report.best = report.best ? elementwise_max(*report.best, result.hilbert)
                              : result.hilbert;
    report.per_trial.push_back(std::move(result.hilbert));
  }
  report.verdict =
      *report.best == *report.target ? Verdict::Match : Verdict::Mismatch;
  return report;
}

std::vector<VerificationReport> sweep_characteristics(
    FamilyKind kind, long parameter,
    const std::vector<std::uint64_t>& characteristics, std::uint64_t seed,
    std::size_t trials, bool parallel) {
  if (characteristics.empty()) {
    throw InvalidInput("sweep needs at least one characteristic");
  }
  std::vector<VerificationReport> reports;
  for (const std::uint64_t c : characteristics) {
    try {
      reports.push_back(
          verify_construction(kind, parameter, FieldSpec(c), seed, trials,
                              parallel));
    } catch (const std::exception& ex) {
      VerificationReport failed = blank_report(kind, parameter, c, seed);
      failed.verdict = Verdict::Inconclusive;
      failed.status = std::string("error: ") + ex.what();
      reports.push_back(std::move(failed));
    }
  }
  return reports;
}

}  // namespace hvec
