#include "hvec/construct.hpp"

#include <algorithm>

namespace hvec {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ThmE: return "thm_e";
    case FamilyKind::ThmROdd: return "thm_r_odd";
    case FamilyKind::ThmREven: return "thm_r_even";
  }
  return "unknown";
}

std::string_view to_string(Parity parity) {
  return parity == Parity::Odd ? "odd" : "even";
}

std::optional<Parity> parse_parity(std::string_view text) {
  if (text == "odd") return Parity::Odd;
  if (text == "even") return Parity::Even;
  return std::nullopt;
}

HVector trivial_extension(const HVector& level) {
  const std::size_t e = level.socle_degree() + 1;
  if (e < 2) throw InvalidInput("trivial_extension: socle degree must be >= 1");
  std::vector<Integer> out(e + 1);
  out[0] = 1;
  out[e] = 1;
  for (std::size_t i = 1; i < e; ++i) out[i] = level[i] + level[e - i];
  return HVector(std::move(out));
}

HVector compress_level(std::span<const Integer> hprime, long num_vars,
                       long degree) {
  if (num_vars <= 0) throw InvalidInput("compress_level: r must be positive");
  if (degree <= 0) throw InvalidInput("compress_level: e must be positive");
  if (hprime.size() > static_cast<std::size_t>(degree) + 1) {
    throw InvalidInput("compress_level: h' exceeds socle degree e");
  }
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(degree) + 1);
  for (long i = 0; i <= degree; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    Integer inner = idx < hprime.size() ? hprime[idx] : Integer(0);
    inner += binomial(num_vars - 1 + degree - i, degree - i);
    out.push_back(std::min(binomial(num_vars - 1 + i, i), inner));
  }
  return HVector(std::move(out));
}

HVector lift_codimension(const HVector& gorenstein, long a) {
  if (a < 0) throw InvalidInput("lift_codimension: a must be nonnegative");
  if (gorenstein.socle_degree() < 2) {
    throw InvalidInput("lift_codimension: socle degree must be >= 2");
  }
  if (!is_symmetric(gorenstein)) {
    throw InvalidInput("lift_codimension: input is not symmetric");
  }
  std::vector<Integer> out = gorenstein.entries();
  for (std::size_t i = 1; i + 1 < out.size(); ++i) out[i] += a;
  return HVector(std::move(out));
}

ThmEOutcome construct_thm_e(long e) {
  if (e < 3) {
    throw InvalidInput("construct_thm_e: socle degree must be >= 3, got " +
                       std::to_string(e));
  }
  if (e < 6) {
    return {std::nullopt,
            Nonexistent{e, "no unimodal non-SI Gorenstein h-vector exists in "
                           "socle degree " +
                               std::to_string(e) + " (requires e >= 6)"}};
  }
  // h' = (1, 2, ..., e): truncation of k[x, y] after degree e - 1.
  std::vector<Integer> truncation;
  for (long i = 0; i < e; ++i) truncation.emplace_back(i + 1);
  HVector level = compress_level(truncation, 3, e - 1);
  HVector gorenstein = trivial_extension(level);
  return {FamilyResult{FamilyKind::ThmE, e, std::move(level),
                       std::move(gorenstein), {2, 3}},
          std::nullopt};
}

FamilyResult construct_thm_e_in_codimension(long e, long r) {
  auto outcome = construct_thm_e(e);
  if (!outcome) throw InvalidInput(outcome.nonexistent->reason);
  FamilyResult out = std::move(*outcome.result);
  if (r < e + 4) {
    throw InvalidInput("codimension must be >= e + 4 = " +
                       std::to_string(e + 4));
  }
  out.lift = r - (e + 4);
  out.gorenstein_hvector = lift_codimension(out.gorenstein_hvector, out.lift);
  return out;
}

HVector construct_thm_r_level(long d, Parity parity) {
  if (d < 10) {
    throw InvalidInput("construct_thm_r: d must be >= 10, got " +
                       std::to_string(d));
  }
  // Odd: plateau rises to C(d+2,2)+3 at degree d+3, socle degree 2d.
  // Even: plateau rises to C(d+2,2)+2 at degree d+2, socle degree 2d-1.
  const long steps = parity == Parity::Odd ? 3 : 2;
  const long socle = parity == Parity::Odd ? 2 * d : 2 * d - 1;
  const Integer top = binomial(d + 2, 2);
  const Integer cap = top + steps;

  std::vector<Integer> h(static_cast<std::size_t>(socle) + 1);
  for (long i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)] = binomial(i + 2, 2);
  for (long s = 1; s <= steps; ++s) h[static_cast<std::size_t>(d + s)] = top + s;
  for (long i = d + steps + 1; i <= socle; ++i) {
    const long j = socle - i;
    h[static_cast<std::size_t>(i)] = std::min(cap, Integer(2 * binomial(j + 2, 2)));
  }
  return HVector(std::move(h));
}

FamilyResult construct_thm_r_gorenstein(long d, Parity parity) {
  HVector level = construct_thm_r_level(d, parity);
  HVector gorenstein = trivial_extension(level);
  const auto from = static_cast<std::size_t>(d - 1);
  return FamilyResult{
      parity == Parity::Odd ? FamilyKind::ThmROdd : FamilyKind::ThmREven,
      d,
      std::move(level),
      std::move(gorenstein),
      {from, from + 1}};
}

FamilyResult construct_thm_r_in_codimension(long d, Parity parity, long r) {
  if (r < 5) throw InvalidInput("codimension must be >= 5");
  FamilyResult out = construct_thm_r_gorenstein(d, parity);
  out.lift = r - 5;
  out.gorenstein_hvector = lift_codimension(out.gorenstein_hvector, out.lift);
  return out;
}

}  // namespace hvec
