#include "casson/splitting.hpp"

#include "casson/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace casson {

namespace {

void check_map(const FreeHom& f, const char* name, int source, int target, const char* target_name,
               std::vector<std::string>& out) {
  if (f.source_rank() != source)
    out.push_back(std::string(name) + " has " + std::to_string(f.source_rank()) + " images but u = " +
                  std::to_string(source));
  for (int i = 1; i <= f.source_rank(); ++i) {
    const int top = f.image(i).max_index();
    if (top > target)
      out.push_back(std::string(name) + " image of z" + std::to_string(i) + " uses g" + std::to_string(top) +
                    " beyond " + target_name + " = " + std::to_string(target));
  }
}

void require_valid(const AdaptedSplitting& s) {
  const ValidationReport r = validate(s);
  if (!r.ok()) throw InvalidSplitting("invalid splitting: " + r.violations.front());
}

// Copy of `a` with `rows` rows and `cols` columns, zero padded or truncated.
IntMat resized(const IntMat& a, Index rows, Index cols) {
  IntMat out = IntMat::Zero(rows, cols);
  const Index r = std::min(rows, a.rows());
  const Index c = std::min(cols, a.cols());
  out.topLeftCorner(r, c) = a.topLeftCorner(r, c);
  return out;
}

// b and c as u x h1 and u x h2 matrices.
IntMat pullback_b(const AdaptedSplitting& s) { return resized(abelianize(s.k_map), s.h1, s.u).transpose(); }
IntMat pullback_c(const AdaptedSplitting& s) { return resized(abelianize(s.l_map), s.h2, s.u).transpose(); }

} // namespace

ValidationReport validate(const AdaptedSplitting& s) {
  ValidationReport r;
  auto& v = r.violations;
  if (s.h1 < 1) v.push_back("h1 must be positive");
  if (s.h2 < 1) v.push_back("h2 must be positive");
  if (s.u < 1) v.push_back("u must be positive");
  if (s.g1 < 0) v.push_back("g1 must be nonnegative");
  if (s.g1 > s.h1) v.push_back("S1 generators exceed H1 rank (g1 = " + std::to_string(s.g1) + " > h1 = " +
                               std::to_string(s.h1) + ")");
  if (s.u_hat_genus < 0) v.push_back("u_hat_genus must be nonnegative");
  check_map(s.k_map, "k_map", s.u, s.h1, "h1", v);
  check_map(s.l_map, "l_map", s.u, s.h2, "h2", v);
  r.T = s.codimension();
  if (r.T < 0) v.push_back("T = (h1 + h2 - u) - g1 = " + std::to_string(r.T) + " is negative");
  else if (r.T % 2 == 1) r.warnings.push_back("T = " + std::to_string(r.T) + " is odd");
  return r;
}

IntMat glue_matrix(const AdaptedSplitting& s) {
  require_valid(s);
  const int free_h1 = s.h1 - s.g1;
  IntMat h(s.u, free_h1 + s.h2);
  h << pullback_b(s).rightCols(free_h1), -pullback_c(s);
  return h;
}

IntMat mayer_vietoris_matrix(const AdaptedSplitting& s) {
  require_valid(s);
  IntMat bc(s.u, s.h1 + s.h2);
  bc << pullback_b(s), -pullback_c(s);
  return bc;
}

HomologyOfM homology_of_M(const AdaptedSplitting& s) {
  const IntMat bc = mayer_vietoris_matrix(s);
  return {static_cast<int>(kernel_basis(bc).cols()), cokernel_order(bc)};
}

PairHomologyReport pair_cohomology(const AdaptedSplitting& s) {
  const IntMat bc = mayer_vietoris_matrix(s);
  const IntMat h1_of_m = kernel_basis(bc);
  // m.i : H^1(M) -> H^1(S1) keeps the S1 coordinates of H^1(H1).
  const IntMat restriction = h1_of_m.topRows(s.g1);

  PairHomologyReport r;
  r.betti1_M = static_cast<int>(h1_of_m.cols());
  r.order_H2_M = cokernel_order(bc);
  r.restriction_cokernel = cokernel_order(restriction);
  r.order_H2_pair = r.order_H2_M * r.restriction_cokernel;
  r.restriction_iso = r.betti1_M == s.g1 && rank(restriction) == s.g1;
  return r;
}

AdaptedSplitting stabilize(const AdaptedSplitting& s) {
  require_valid(s);
  AdaptedSplitting t = s;
  t.h1 = s.h1 + 1;
  t.u = s.u + 1;
  t.u_hat_genus = s.u_hat_genus + 1;

  std::vector<Word> k_images = s.k_map.images();
  k_images.push_back(Word::generator(t.h1));
  t.k_map = FreeHom(t.u, t.h1, std::move(k_images));

  std::vector<Word> l_images = s.l_map.images();
  l_images.emplace_back();
  t.l_map = FreeHom(t.u, s.l_map.target_rank(), std::move(l_images));
  return t;
}

FreeHom assembled_word_map(const AdaptedSplitting& s) {
  require_valid(s);
  if (s.codimension() != 0)
    throw WrongCodimension("assembled word map is square only for T = 0, here T = " +
                           std::to_string(s.codimension()));
  // Target generators: w_1..w_h2 -> 1..h2, y_{g1+p} -> h2 + p, y_1..y_g1 -> 1.
  std::vector<Word> h1_subst;
  for (int k = 1; k <= s.h1; ++k)
    h1_subst.push_back(k <= s.g1 ? Word() : Word::generator(s.h2 + (k - s.g1)));
  std::vector<Word> h2_subst;
  for (int q = 1; q <= s.h2; ++q) h2_subst.push_back(Word::generator(q));
  const FreeHom from_h1(s.h1, s.u, std::move(h1_subst));
  const FreeHom from_h2(s.h2, s.u, std::move(h2_subst));

  std::vector<Word> images;
  for (int i = 1; i <= s.u; ++i)
    images.push_back(from_h2.apply(s.l_map.image(i)) * from_h1.apply(s.k_map.image(i)).inverse());
  return FreeHom(s.u, s.u, std::move(images));
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw DocumentParseError("field '" + key + "' expects an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw DocumentParseError("field '" + key + "' expects true or false, got '" + value + "'");
}

std::vector<Word> parse_word_list(const std::string& key, const std::string& value) {
  std::vector<Word> words;
  std::size_t start = 0;
  for (;;) {
    const auto semi = value.find(';', start);
    const std::string item = value.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    try {
      words.push_back(parse_word(item));
    } catch (const MalformedWord& e) {
      throw DocumentParseError("field '" + key + "': " + e.what());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return words;
}

FreeHom hom_from_words(std::vector<Word> words, int declared_target) {
  int target = std::max(declared_target, 1);
  for (const Word& w : words) target = std::max(target, w.max_index());
  const int source = static_cast<int>(words.size());
  return FreeHom(source, target, std::move(words));
}

} // namespace

AdaptedSplitting parse_splitting(std::istream& in) {
  static const std::vector<std::string> known = {"n",  "group", "h1",          "h2",
                                                 "u",  "g1",    "u_hat_genus", "orientation_reversed",
                                                 "k_map", "l_map"};
  std::map<std::string, std::string> fields;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DocumentParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw DocumentParseError("line " + std::to_string(line_no) + ": unknown field '" + key + "'");
    if (!fields.emplace(key, trim(line.substr(eq + 1))).second)
      throw DocumentParseError("line " + std::to_string(line_no) + ": duplicate field '" + key + "'");
  }
  for (const char* required : {"n", "group", "h1", "h2", "u", "g1", "k_map", "l_map"})
    if (!fields.count(required)) throw DocumentParseError(std::string("missing field '") + required + "'");

  AdaptedSplitting s;
  const int n = parse_int("n", fields["n"]);
  const std::string& group = fields["group"];
  try {
    if (group == "U") s.kind = GroupKind::unitary(n);
    else if (group == "SU") s.kind = GroupKind::special_unitary(n);
    else throw DocumentParseError("field 'group' must be U or SU, got '" + group + "'");
  } catch (const std::invalid_argument& e) {
    throw DocumentParseError(e.what());
  }
  s.h1 = parse_int("h1", fields["h1"]);
  s.h2 = parse_int("h2", fields["h2"]);
  s.u = parse_int("u", fields["u"]);
  s.g1 = parse_int("g1", fields["g1"]);
  s.u_hat_genus = fields.count("u_hat_genus") ? parse_int("u_hat_genus", fields["u_hat_genus"]) : s.u;
  s.orientation_reversed =
      fields.count("orientation_reversed") && parse_bool("orientation_reversed", fields["orientation_reversed"]);
  s.k_map = hom_from_words(parse_word_list("k_map", fields["k_map"]), s.h1);
  s.l_map = hom_from_words(parse_word_list("l_map", fields["l_map"]), s.h2);
  return s;
}

AdaptedSplitting parse_splitting(const std::string& text) {
  std::istringstream in(text);
  return parse_splitting(in);
}

AdaptedSplitting load_splitting(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentParseError("cannot open '" + path + "'");
  return parse_splitting(in);
}

std::string format_splitting(const AdaptedSplitting& s) {
  auto join = [](const FreeHom& f) {
    std::string out;
    for (std::size_t i = 0; i < f.images().size(); ++i) {
      if (i) out += " ; ";
      out += f.images()[i].empty() ? "1" : format_word(f.images()[i]);
    }
    return out;
  };
  std::ostringstream out;
  out << "group = " << (s.kind.family == GroupFamily::Unitary ? "U" : "SU") << '\n'
      << "n = " << s.kind.n << '\n'
      << "h1 = " << s.h1 << '\n'
      << "h2 = " << s.h2 << '\n'
      << "u = " << s.u << '\n'
      << "g1 = " << s.g1 << '\n'
      << "u_hat_genus = " << s.u_hat_genus << '\n'
      << "orientation_reversed = " << (s.orientation_reversed ? "true" : "false") << '\n'
      << "k_map = " << join(s.k_map) << '\n'
      << "l_map = " << join(s.l_map) << '\n';
  return out.str();
}

} // namespace casson
