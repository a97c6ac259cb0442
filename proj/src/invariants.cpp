#include "casson/invariants.hpp"

#include "casson/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace casson {

std::string to_string(Sign s) {
  switch (s) {
  case Sign::Plus: return "+1";
  case Sign::Minus: return "-1";
  case Sign::Undetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

int orientation_flip_sign(const GroupKind& kind) { return kind.lie_rank() % 2 ? -1 : 1; }

std::optional<std::string> vanishing_check(const AdaptedSplitting& s) {
  const PairHomologyReport p = pair_cohomology(s);
  if (p.order_H2_M.is_infinite()) return "H2_nonzero";
  if (!p.restriction_iso) return "restriction_not_iso";
  return std::nullopt;
}

InvariantReport lambda(const AdaptedSplitting& s, const LambdaOptions& options) {
  const ValidationReport v = validate(s);
  if (!v.ok()) throw InvalidSplitting("invalid splitting: " + v.violations.front());
  if (v.T != 0)
    throw WrongCodimension("lambda is an integer invariant only for T = 0 (here T = " + std::to_string(v.T) +
                           "); use the multi-index / polynomial path for T > 0");

  const unsigned r = static_cast<unsigned>(s.kind.lie_rank());
  InvariantReport report;
  report.kind = s.kind;
  report.T = v.T;

  // P1: determinant of the glue matrix.
  const BigInt det = determinant(glue_matrix(s));
  report.pipelines.det_power = pow(abs(det), r);

  // P2: exterior-algebra degree of the assembled word map.
  const BigInt degree = degree_of_word_map(assembled_word_map(s), s.kind);
  report.pipelines.ext_degree = abs(degree);

  // P3: order of H^2(M, S1; Z) through the Mayer-Vietoris kernel.
  const PairHomologyReport pair = pair_cohomology(s);
  report.K = pair.order_H2_pair;
  report.pipelines.k_power = report.K.is_finite() ? pow(report.K.value(), r) : BigInt(0);

  const PipelineValues& p = report.pipelines;
  report.pipelines.agree = p.det_power == p.ext_degree && p.ext_degree == p.k_power;
  if (!report.pipelines.agree)
    throw InternalConsistencyError("pipelines disagree: det^r = " + p.det_power.str() +
                                   ", exterior degree = " + p.ext_degree.str() + ", K^r = " + p.k_power.str());
  report.abs_value = p.det_power;

  report.vanishing_reason = vanishing_check(s);
  if ((report.abs_value == 0) != report.vanishing_reason.has_value())
    throw InternalConsistencyError("vanishing criteria disagree with |lambda| = " + report.abs_value.str());

  if (report.abs_value != 0) {
    report.degree_sign = degree > 0 ? 1 : -1;
    int sign = report.degree_sign;
    if (r % 2 == 1 && s.u_hat_genus % 2 == 1) sign = -sign;
    if (s.orientation_reversed) sign *= orientation_flip_sign(s.kind);
    report.relative_sign = sign;
    if (options.sign_convention_opt_in) report.sign = sign > 0 ? Sign::Plus : Sign::Minus;
  }
  return report;
}

std::vector<std::string> check_multi_index(const MultiIndex& m, GroupFamily family) {
  std::vector<std::string> problems;
  auto check = [&](const std::vector<std::pair<int, int>>& list, const char* name) {
    for (std::size_t p = 0; p < list.size(); ++p) {
      const auto [index, power] = list[p];
      if (index < 1) problems.push_back(std::string(name) + " index " + std::to_string(index) + " is not positive");
      if (power < 1) problems.push_back(std::string(name) + " power " + std::to_string(power) + " is not positive");
      if (p > 0 && index <= list[p - 1].first)
        problems.push_back(std::string(name) + " indices must be strictly increasing");
    }
    if (family == GroupFamily::SpecialUnitary && !list.empty() && list.front().first <= 1)
      problems.push_back(std::string(name) + " must start above 1 for SU(n)");
  };
  check(m.I, "I");
  check(m.J, "J");
  return problems;
}

long multiindex_degree(const MultiIndex& m) {
  const auto problems = check_multi_index(m, GroupFamily::Unitary);
  if (!problems.empty()) throw std::invalid_argument("malformed multi-index: " + problems.front());
  long t = 0;
  for (const auto& [i, r] : m.I) t += 2L * i * r;
  for (const auto& [j, s] : m.J) t += (4L * j - 2) * s;
  return t;
}

std::vector<std::pair<int, int>> parse_index_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected index:power, got '" + item + "'");
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("expected index:power, got '" + item + "'");
    }
  }
  return out;
}

BigInt lambda_polynomial_cylinder(int g, int h, const GroupKind& kind) {
  if (g <= h) throw std::invalid_argument("cylinder example needs g > h");
  if (h < 2) throw std::invalid_argument("cylinder example needs S1 of genus h >= 2");
  return cylinder_monomial_value(g - h, kind);
}

std::vector<std::pair<std::string, std::string>> report_fields(const InvariantReport& r) {
  return {
      {"group", r.kind.family == GroupFamily::Unitary ? "U" : "SU"},
      {"n", std::to_string(r.kind.n)},
      {"T", std::to_string(r.T)},
      {"abs_value", r.abs_value.str()},
      {"sign", to_string(r.sign)},
      {"K", r.K.to_string()},
      {"pipeline_det", r.pipelines.det_power.str()},
      {"pipeline_ext", r.pipelines.ext_degree.str()},
      {"pipeline_K", r.pipelines.k_power.str()},
      {"agree", r.pipelines.agree ? "true" : "false"},
      {"vanishing_reason", r.vanishing_reason.value_or("")},
  };
}

} // namespace casson
