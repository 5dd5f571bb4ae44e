// h-vector constructions: trivial extension, compressed level vectors,
// codimension lifting, and the two families of unimodal non-SI Gorenstein
// h-vectors (socle-degree family and codimension-five family).
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hvec/seqcore.hpp"

namespace hvec {

enum class FamilyKind { ThmE, ThmROdd, ThmREven };

enum class Parity { Odd, Even };

std::string_view to_string(FamilyKind kind);
std::string_view to_string(Parity parity);
std::optional<Parity> parse_parity(std::string_view text);

struct FamilyResult {
  FamilyKind kind;
  long parameter;  // e for ThmE, d for ThmR*
  HVector level_hvector;
  HVector gorenstein_hvector;
  // Growth step (from, to) of the Gorenstein vector's first-half difference
  // that breaks Macaulay's bound.
  std::pair<std::size_t, std::size_t> predicted_violation;
  // Extra codimension added by lift_codimension (0 for the base family).
  long lift = 0;
};

/// H_i = h_i + h_{e-i} on a level vector of socle degree e-1; output has
/// socle degree e and is symmetric by construction.
HVector trivial_extension(const HVector& level);

/// Elementwise min{ C(r-1+i, i), h'_i + C(r-1+e-i, e-i) } for 0 <= i <= e.
/// `hprime` may be empty (M = 0); entries past its end read as zero.
HVector compress_level(std::span<const Integer> hprime, long num_vars,
                       long degree);

/// Adds `a` to every interior entry of a symmetric vector.
HVector lift_codimension(const HVector& gorenstein, long a);

/// Outcome for socle degrees 3..5, where no unimodal non-SI Gorenstein
/// h-vector exists.
struct Nonexistent {
  long socle_degree;
  std::string reason;
};

struct ThmEOutcome {
  std::optional<FamilyResult> result;
  std::optional<Nonexistent> nonexistent;

  explicit operator bool() const { return result.has_value(); }
};

/// Socle-degree family. e >= 6 yields a result; e in {3,4,5} yields
/// Nonexistent; anything smaller throws InvalidInput.
ThmEOutcome construct_thm_e(long e);

/// Same family lifted to codimension r >= e + 4.
FamilyResult construct_thm_e_in_codimension(long e, long r);

/// Level vector of the codimension-five family. Socle degree 2d (odd case)
/// or 2d - 1 (even case); d >= 10.
HVector construct_thm_r_level(long d, Parity parity);

FamilyResult construct_thm_r_gorenstein(long d, Parity parity);

/// Codimension-five family lifted to codimension r >= 5.
FamilyResult construct_thm_r_in_codimension(long d, Parity parity, long r);

}  // namespace hvec
