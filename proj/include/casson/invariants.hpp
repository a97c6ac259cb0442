#pragma once

#include "casson/core.hpp"
#include "casson/exterior.hpp"
#include "casson/splitting.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace casson {

enum class Sign { Plus, Minus, Undetermined };

std::string to_string(Sign s);

/// The three independent computations of |lambda|.
struct PipelineValues {
  BigInt det_power; ///< |det(glue matrix)|^lie_rank
  BigInt ext_degree; ///< |degree| of the assembled word map by exterior expansion
  BigInt k_power; ///< K^lie_rank, or 0 when K is infinite
  bool agree = false;
};

struct InvariantReport {
  GroupKind kind = GroupKind::unitary(1);
  int T = 0;
  BigInt abs_value;
  /// Reported sign: Undetermined unless the generator-order convention was opted into.
  Sign sign = Sign::Undetermined;
  /// Sign of the exterior-algebra degree of the assembled word map.
  int degree_sign = 0;
  /// degree_sign with the (-1)^{lie_rank * u_hat_genus} and orientation factors applied.
  int relative_sign = 0;
  GroupOrder K = GroupOrder::infinite();
  std::optional<std::string> vanishing_reason;
  PipelineValues pipelines;
};

struct LambdaOptions {
  /// Report relative_sign as the sign instead of Undetermined.
  bool sign_convention_opt_in = false;
};

/// lambda_G(M, S1) for T == 0. Throws WrongCodimension for T != 0 and
/// InternalConsistencyError if the pipelines disagree.
InvariantReport lambda(const AdaptedSplitting& s, const LambdaOptions& options = {});

/// "H2_nonzero" or "restriction_not_iso" when lambda is forced to vanish.
std::optional<std::string> vanishing_check(const AdaptedSplitting& s);

/// (-1)^n for U(n), (-1)^{n-1} for SU(n): lambda(M) = sign * lambda(-M).
int orientation_flip_sign(const GroupKind& kind);

struct MultiIndex {
  std::vector<std::pair<int, int>> I; ///< (i_p, r_p)
  std::vector<std::pair<int, int>> J; ///< (j_p, s_p)
};

/// Empty when well formed for the family; otherwise the problems found.
std::vector<std::string> check_multi_index(const MultiIndex& m, GroupFamily family);

/// sum 2 i_p r_p + sum (4 j_p - 2) s_p. Throws std::invalid_argument when malformed.
long multiindex_degree(const MultiIndex& m);

/// Parses "1:2,3:1" into [(1,2),(3,1)]; the empty string is the empty list.
std::vector<std::pair<int, int>> parse_index_list(const std::string& text);

/// Cylinder example: evaluation of (prod_j y_j)^{g-h} on the product cycle.
/// Requires g > h >= 2.
BigInt lambda_polynomial_cylinder(int g, int h, const GroupKind& kind);

/// Flat key=value lines in the machine-output key order.
std::vector<std::pair<std::string, std::string>> report_fields(const InvariantReport& r);

} // namespace casson
