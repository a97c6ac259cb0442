#include "casson/cli.hpp"

#include "casson/invariants.hpp"
#include "casson/linalg.hpp"
#include "casson/oracle.hpp"
#include "casson/splitting.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

namespace casson::cli {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

void emit(const Fields& fields, OutputFormat format, std::ostream& out) {
  for (const auto& [key, value] : fields) {
    if (format == OutputFormat::Machine) out << key << '=' << value << '\n';
    else out << key << ": " << (value.empty() ? "-" : value) << '\n';
  }
}

AdaptedSplitting read_input(const CliConfig& c, std::istream& in) {
  if (c.input_path.empty()) throw DocumentParseError("no input document given");
  if (c.input_path == "-") return parse_splitting(in);
  return load_splitting(c.input_path);
}

GroupKind kind_from(const std::string& group, int n) {
  if (group == "U") return GroupKind::unitary(n);
  if (group == "SU") return GroupKind::special_unitary(n);
  throw std::invalid_argument("group must be U or SU, got '" + group + "'");
}

int cmd_validate(const CliConfig& c, std::ostream& out, std::istream& in) {
  const ValidationReport r = validate(read_input(c, in));
  Fields f{{"valid", r.ok() ? "true" : "false"}, {"T", std::to_string(r.T)},
           {"violations", std::to_string(r.violations.size())}};
  for (std::size_t i = 0; i < r.violations.size(); ++i)
    f.emplace_back("violation." + std::to_string(i + 1), r.violations[i]);
  f.emplace_back("warnings", std::to_string(r.warnings.size()));
  for (std::size_t i = 0; i < r.warnings.size(); ++i)
    f.emplace_back("warning." + std::to_string(i + 1), r.warnings[i]);
  emit(f, c.output_format, out);
  return r.ok() ? kOk : kInputError;
}

int cmd_invariant(const CliConfig& c, std::ostream& out, std::istream& in) {
  const InvariantReport r = lambda(read_input(c, in), {c.sign_convention_opt_in});
  emit(report_fields(r), c.output_format, out);
  return kOk;
}

int cmd_homology(const CliConfig& c, std::ostream& out, std::istream& in) {
  const AdaptedSplitting s = read_input(c, in);
  const PairHomologyReport p = pair_cohomology(s);
  emit({{"betti1_M", std::to_string(p.betti1_M)},
        {"order_H2_M", p.order_H2_M.to_string()},
        {"order_H2_pair", p.order_H2_pair.to_string()},
        {"restriction_iso", p.restriction_iso ? "true" : "false"}},
       c.output_format, out);
  return kOk;
}

int cmd_degree(const CliConfig& c, std::ostream& out, std::istream& in) {
  const AdaptedSplitting s = read_input(c, in);
  const FreeHom f = assembled_word_map(s);
  const BigInt degree = degree_of_word_map(f, s.kind);
  emit({{"group", s.kind.family == GroupFamily::Unitary ? "U" : "SU"},
        {"n", std::to_string(s.kind.n)},
        {"degree", degree.str()},
        {"abs_degree", abs(degree).str()}},
       c.output_format, out);
  return kOk;
}

int cmd_stabilize(const CliConfig& c, std::ostream& out, std::istream& in) {
  const std::string doc = format_splitting(stabilize(read_input(c, in)));
  if (c.output_path.empty()) {
    out << doc;
  } else {
    std::ofstream file(c.output_path);
    if (!(file << doc)) throw DocumentParseError("cannot write '" + c.output_path + "'");
  }
  return kOk;
}

int cmd_oracle(const CliConfig& c, std::ostream& out, std::istream& in) {
  const AdaptedSplitting s = read_input(c, in);
  const IntMat glue = glue_matrix(s);
  const FreeHom f = assembled_word_map(s);
  const BigInt det = abs(determinant(glue));
  Fields fields{{"det_glue_abs", det.str()}};
  bool agree = true;

  if (det == 0) {
    fields.emplace_back("torus_count", "skipped (singular)");
  } else {
    const auto targets = oracle::generic_targets(abelianize(f).transpose(), 3, c.seed.value_or(1));
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const std::int64_t count = oracle::numeric_degree_u1(f, targets[i]);
      fields.emplace_back("torus_count." + std::to_string(i + 1), std::to_string(count));
      agree = agree && BigInt(count) == det;
    }
  }

  // |H^2(M, S1)| is the cokernel of the glue matrix; enumerate it directly.
  try {
    const GroupOrder enumerated = oracle::cokernel_enumeration(glue);
    const GroupOrder pair = pair_cohomology(s).order_H2_pair;
    fields.emplace_back("K_enumerated", enumerated.to_string());
    fields.emplace_back("K_pair", pair.to_string());
    agree = agree && enumerated == pair;
  } catch (const oracle::SizeLimitExceeded&) {
    fields.emplace_back("K_enumerated", "skipped (size)");
  }
  fields.emplace_back("agree", agree ? "true" : "false");
  emit(fields, c.output_format, out);
  return agree ? kOk : kCrossCheckFailure;
}

int cmd_poly(const CliConfig& c, std::ostream& out) {
  const GroupKind kind = kind_from(c.group, c.n);
  const BigInt value = lambda_polynomial_cylinder(c.g, c.h, kind);
  emit({{"group", c.group},
        {"n", std::to_string(c.n)},
        {"g_minus_h", std::to_string(c.g - c.h)},
        {"value", value.str()},
        {"abs_value", abs(value).str()},
        {"note", "(" + std::to_string(c.g - c.h) + "!)^" + std::to_string(kind.lie_rank())}},
       c.output_format, out);
  return kOk;
}

int cmd_multiindex(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const MultiIndex m{parse_index_list(c.I), parse_index_list(c.J)};
  const GroupFamily family = c.group == "SU" ? GroupFamily::SpecialUnitary : GroupFamily::Unitary;
  const auto problems = check_multi_index(m, family);
  if (!problems.empty()) {
    for (const auto& p : problems) err << "error: " << p << '\n';
    return kInputError;
  }
  emit({{"T", std::to_string(multiindex_degree(m))}}, c.output_format, out);
  return kOk;
}

} // namespace

std::optional<CliConfig> parse_args(int argc, const char* const* argv, int& status, std::ostream& out,
                                    std::ostream& err) {
  CliConfig c;
  std::string format = "text";
  CLI::App app{"Casson-type U(n)/SU(n) representation counts from adapted splitting data"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", c.input_path, "splitting document, '-' for stdin")->required();
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  };

  add_common(app.add_subcommand("validate", "check a splitting document"), true);
  auto* inv = app.add_subcommand("invariant", "lambda for a T = 0 splitting with all cross-checks");
  add_common(inv, true);
  inv->add_flag("--sign-convention", c.sign_convention_opt_in, "report the generator-order relative sign");
  add_common(app.add_subcommand("homology", "H^2(M), H^2(M, S1) and the restriction map"), true);
  add_common(app.add_subcommand("degree", "exterior-algebra degree of the assembled word map"), true);
  auto* stab = app.add_subcommand("stabilize", "write the once-stabilized document");
  add_common(stab, true);
  stab->add_option("--output", c.output_path, "write to a file instead of stdout");
  auto* orc = app.add_subcommand("oracle", "brute-force cross-checks");
  add_common(orc, true);
  orc->add_option("--seed", c.seed, "seed for the generic torus targets");
  auto* poly = app.add_subcommand("poly", "cylinder example value ((g-h)!)^rank up to sign");
  add_common(poly, false);
  poly->set_help_flag("--help", "print this help message and exit"); // frees -h for --h
  poly->add_option("--g", c.g, "genus of the boundary surface")->required();
  poly->add_option("--h", c.h, "genus of S1")->required();
  poly->add_option("--group", c.group, "U or SU")->check(CLI::IsMember({"U", "SU"}));
  poly->add_option("--n", c.n, "matrix size")->check(CLI::PositiveNumber);
  auto* mi = app.add_subcommand("multiindex", "T for a multi-index pair I, J");
  add_common(mi, false);
  mi->add_option("--I", c.I, "pairs i:r separated by commas");
  mi->add_option("--J", c.J, "pairs j:s separated by commas");
  mi->add_option("--group", c.group, "U or SU")->check(CLI::IsMember({"U", "SU"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    status = app.exit(e, out, err) == 0 ? kOk : kInputError;
    return std::nullopt;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.output_format = format == "machine" ? OutputFormat::Machine : OutputFormat::Text;
  status = kOk;
  return c;
}

int run(const CliConfig& c, std::ostream& out, std::ostream& err, std::istream& in) {
  try {
    if (c.command == "validate") return cmd_validate(c, out, in);
    if (c.command == "invariant") return cmd_invariant(c, out, in);
    if (c.command == "homology") return cmd_homology(c, out, in);
    if (c.command == "degree") return cmd_degree(c, out, in);
    if (c.command == "stabilize") return cmd_stabilize(c, out, in);
    if (c.command == "oracle") return cmd_oracle(c, out, in);
    if (c.command == "poly") return cmd_poly(c, out);
    if (c.command == "multiindex") return cmd_multiindex(c, out, err);
    err << "error: unknown command '" << c.command << "'\n";
    return kInputError;
  } catch (const WrongCodimension& e) {
    err << "error: " << e.what() << '\n';
    return kWrongMode;
  } catch (const InternalConsistencyError& e) {
    err << "internal cross-check failure: " << e.what() << '\n';
    return kCrossCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

} // namespace casson::cli
