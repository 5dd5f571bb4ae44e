#include "hvec/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hvec {

Integer binomial(long n, long k) {
  if (n < 0) throw InvalidInput("binomial: negative top");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

namespace {

Integer binomial(const Integer& n, long k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// Largest m with C(m, k) <= n, for n >= 1 and k >= 1. Such m is >= k.
Integer largest_top(const Integer& n, long k) {
  if (k == 1) return n;
  Integer lo = k;  // C(k, k) = 1 <= n
  Integer hi = k + 1;
  while (binomial(hi, k) <= n) {
    lo = hi;
    hi *= 2;
  }
  // invariant: C(lo, k) <= n < C(hi, k)
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binomial(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

HVector::HVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("h-vector must be nonempty");
  if (entries_.front() != 1) throw InvalidInput("h-vector must start with 1");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] <= 0) {
      throw InvalidInput("h-vector entry " + std::to_string(i) +
                         " is not positive");
    }
  }
}

HVector::HVector(std::initializer_list<long> entries)
    : HVector(std::vector<Integer>(entries.begin(), entries.end())) {}

HVector HVector::from_longs(std::span<const long> entries) {
  return HVector(std::vector<Integer>(entries.begin(), entries.end()));
}

const Integer& HVector::codimension() const {
  if (entries_.size() < 2) {
    throw InvalidInput("codimension is undefined for socle degree 0");
  }
  return entries_[1];
}

std::string HVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].get_str();
  }
  return out + ")";
}

HVector parse_hvector(const std::string& literal) {
  std::string body;
  for (char c : literal) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    body += c;
  }
  std::vector<Integer> entries;
  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto first = std::find_if_not(token.begin(), token.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    auto last = std::find_if_not(token.rbegin(), token.rend(), [](char c) {
                  return std::isspace(static_cast<unsigned char>(c));
                }).base();
    if (first >= last) throw InvalidInput("empty entry in vector literal");
    std::string digits(first, last);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw InvalidInput("malformed vector entry '" + digits + "'");
    }
    entries.emplace_back(digits, 10);
  }
  if (!body.empty() && body.back() == ',') {
    throw InvalidInput("trailing comma in vector literal");
  }
  return HVector(std::move(entries));
}

Integer BinomialExpansion::value() const {
  Integer sum = 0;
  for (const auto& t : terms) sum += binomial(t.top, t.bottom);
  return sum;
}

BinomialExpansion binomial_expansion(const Integer& n, long i) {
  if (n <= 0) throw InvalidInput("binomial_expansion: n must be positive");
  if (i <= 0) throw InvalidInput("binomial_expansion: i must be positive");
  BinomialExpansion out;
  out.index = i;
  Integer rest = n;
  for (long k = i; k >= 1 && rest > 0; --k) {
    Integer top = largest_top(rest, k);
    rest -= binomial(top, k);
    out.terms.push_back({std::move(top), k});
  }
  return out;
}

Integer macaulay_bound(const Integer& n, long i) {
  Integer sum = 0;
  for (const auto& t : binomial_expansion(n, i).terms) {
    sum += binomial(Integer(t.top + 1), t.bottom + 1);
  }
  return sum;
}

std::optional<GrowthViolation> first_growth_violation(
    std::span<const Integer> seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    Integer bound =
        seq[i] > 0 ? macaulay_bound(seq[i], static_cast<long>(i)) : Integer(0);
    if (seq[i + 1] > bound) return GrowthViolation{i, seq[i], seq[i + 1], bound};
  }
  return std::nullopt;
}

bool is_o_sequence(const HVector& h) {
  return !first_growth_violation(h.entries()).has_value();
}

std::vector<Integer> first_difference(std::span<const Integer> seq) {
  std::vector<Integer> out(seq.begin(), seq.end());
  for (std::size_t i = 1; i < seq.size(); ++i) out[i] = seq[i] - seq[i - 1];
  return out;
}

std::optional<DifferenceViolation> first_difference_violation(
    std::span<const Integer> seq) {
  using Kind = DifferenceViolation::Kind;
  const auto diff = first_difference(seq);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] < 0) return DifferenceViolation{Kind::Negative, i, {}};
  }
  auto zero = std::find(diff.begin(), diff.end(), 0);
  auto positive_after = std::find_if(zero, diff.end(),
                                     [](const Integer& v) { return v > 0; });
  if (positive_after != diff.end()) {
    return DifferenceViolation{
        Kind::InternalZero,
        static_cast<std::size_t>(positive_after - diff.begin()),
        {}};
  }
  std::span<const Integer> prefix(diff.data(),
                                  static_cast<std::size_t>(zero - diff.begin()));
  if (auto g = first_growth_violation(prefix)) {
    return DifferenceViolation{Kind::Growth, g->degree, g};
  }
  return std::nullopt;
}

bool is_differentiable(const HVector& h) {
  return !first_difference_violation(h.entries()).has_value();
}

std::optional<std::size_t> first_asymmetry(const HVector& h) {
  const std::size_t e = h.socle_degree();
  for (std::size_t i = 0; i <= e / 2; ++i) {
    if (h[i] != h[e - i]) return i;
  }
  return std::nullopt;
}

bool is_symmetric(const HVector& h) { return !first_asymmetry(h).has_value(); }

std::optional<std::size_t> first_unimodality_break(const HVector& h) {
  bool decreased = false;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] < h[i - 1]) decreased = true;
    if (h[i] > h[i - 1] && decreased) return i;
  }
  return std::nullopt;
}

bool is_unimodal(const HVector& h) {
  return !first_unimodality_break(h).has_value();
}

std::vector<Integer> first_half(const HVector& h) {
  const std::size_t half = h.socle_degree() / 2;
  return {h.entries().begin(),
          h.entries().begin() + static_cast<std::ptrdiff_t>(half + 1)};
}

bool is_si_sequence(const HVector& h) {
  return is_symmetric(h) && !first_difference_violation(first_half(h));
}

}  // namespace hvec
