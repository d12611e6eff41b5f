#include "dposet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "dposet/checks.hpp"
#include "dposet/completions.hpp"
#include "dposet/enumeration.hpp"
#include "dposet/errors.hpp"
#include "dposet/export.hpp"
#include "dposet/hopf.hpp"
#include "dposet/pairing.hpp"
#include "dposet/products.hpp"
#include "dposet/text.hpp"
#include "dposet/twoas.hpp"

namespace dposet::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<DoublePoset> parse_list(const std::string& text) {
  std::vector<DoublePoset> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_poset(part));
  return out;
}

Product parse_op(const std::string& op) { return op == "g" ? Product::g : Product::h; }

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with double posets", "dposet"};
  app.require_subcommand(1);

  std::string p_text, q_text, cls, op = "g", format, target, left, right, args_text, suite;
  int n = 0, max_n = 5;
  bool count_only = false, reduced = false, xy = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List isomorphism classes of one size");
  enumerate_cmd->add_option("--class", cls)->required()->check(CLI::IsMember({"dp", "pp", "wn", "wnh", "wnr", "pf"}));
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_flag("--count-only", count_only);

  auto* classify_cmd = app.add_subcommand("classify", "Structural flags of a poset");
  classify_cmd->add_option("P", p_text)->required();

  auto* product_cmd = app.add_subcommand("product", "P g Q or P h Q");
  product_cmd->add_option("--op", op)->check(CLI::IsMember({"g", "h"}));
  product_cmd->add_option("P", p_text)->required();
  product_cmd->add_option("Q", q_text)->required();

  auto* factor_cmd = app.add_subcommand("factor", "Factorization into indecomposables");
  factor_cmd->add_option("--op", op)->check(CLI::IsMember({"g", "h"}));
  factor_cmd->add_option("P", p_text)->required();

  auto* tree_cmd = app.add_subcommand("tree", "Alternating g/h expression tree");
  tree_cmd->add_option("P", p_text)->required();

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Ideal coproduct");
  coproduct_cmd->add_flag("--reduced", reduced);
  coproduct_cmd->add_option("P", p_text)->required();

  auto* deconcat_cmd = app.add_subcommand("deconcat", "Deconcatenation along the g-factorization");
  deconcat_cmd->add_option("P", p_text)->required();

  auto* pairing_cmd = app.add_subcommand("pairing", "Number of pictures between P and Q");
  pairing_cmd->add_option("P", p_text)->required();
  pairing_cmd->add_option("Q", q_text)->required();

  auto* matrix_cmd = app.add_subcommand("pairing-matrix", "Pairing matrix on one degree");
  matrix_cmd->add_option("--class", cls)->required()->check(CLI::IsMember({"pp", "wn"}));
  matrix_cmd->add_option("--n", n)->required();
  matrix_cmd->add_flag("--xy-order", xy, "rows in xy order, columns their involution images");

  auto* nondeg_cmd = app.add_subcommand("nondegenerate", "Exact rank of the pairing on one degree");
  nondeg_cmd->add_option("--class", cls)->required()->check(CLI::IsMember({"pp", "wn", "dp"}));
  nondeg_cmd->add_option("--n", n)->required();

  auto* star_cmd = app.add_subcommand("star", "P * Q on plane posets");
  star_cmd->add_option("P", p_text)->required();
  star_cmd->add_option("Q", q_text)->required();

  auto* phi_cmd = app.add_subcommand("phi", "sum of <P, Q> Q over WN posets Q");
  phi_cmd->add_option("P", p_text)->required();

  auto* binfty_cmd = app.add_subcommand("binfty", "B-infinity bracket");
  binfty_cmd->add_option("--left", left)->required();
  binfty_cmd->add_option("--right", right)->required();

  auto* operad_cmd = app.add_subcommand("operad-compose", "Composition of indexed WN posets");
  operad_cmd->add_option("Q", q_text)->required();
  operad_cmd->add_option("--args", args_text)->required();

  auto* complete_cmd = app.add_subcommand("complete", "Second orders completing a poset");
  complete_cmd->add_option("--target", target)->required()->check(CLI::IsMember({"plane", "wn"}));
  complete_cmd->add_option("SP", p_text)->required();

  auto* crown_cmd = app.add_subcommand("crown", "Crown poset on 2N vertices");
  crown_cmd->add_option("N", n)->required();

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"sequences", "hopf", "pairing", "operad"}));
  check_cmd->add_option("--max-n", max_n);

  auto* export_cmd = app.add_subcommand("export", "DOT or JSON rendering");
  export_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("P", p_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate_cmd->parsed()) {
      const PosetClass c = parse_poset_class(cls);
      if (count_only) {
        out << count(c, n) << '\n';
      } else {
        for (const auto& p : enumerate(c, n)) out << to_string(p) << '\n';
      }
    } else if (classify_cmd->parsed()) {
      const DoublePoset p = parse_poset(p_text);
      out << "plane=" << flag(is_plane(p)) << " wn=" << flag(is_wn(p)) << " forest=" << flag(is_forest(p))
          << " h-connected=" << flag(is_connected(p, Order::h)) << " r-connected=" << flag(is_connected(p, Order::r))
          << " class=" << to_string(classify(p)) << " aut=" << automorphism_count(p) << '\n';
    } else if (product_cmd->parsed()) {
      out << to_string(compose(parse_op(op), parse_poset(p_text), parse_poset(q_text))) << '\n';
    } else if (factor_cmd->parsed()) {
      for (const auto& f : factorize(parse_poset(p_text), parse_op(op)).factors) out << to_string(f) << '\n';
    } else if (tree_cmd->parsed()) {
      out << to_string(decomposition_tree(parse_poset(p_text))) << '\n';
    } else if (coproduct_cmd->parsed()) {
      const DoublePoset p = parse_poset(p_text);
      out << to_string(reduced ? reduced_coproduct(p) : coproduct(p));
    } else if (deconcat_cmd->parsed()) {
      out << to_string(deconcat_coproduct_g(parse_poset(p_text)));
    } else if (pairing_cmd->parsed()) {
      out << pictures_count(parse_poset(p_text), parse_poset(q_text)) << '\n';
    } else if (matrix_cmd->parsed()) {
      const auto& basis = enumerate(parse_poset_class(cls), n);
      out << to_string(xy ? triangular_form(basis) : pairing_matrix(basis));
    } else if (nondeg_cmd->parsed()) {
      const auto report = nondegeneracy_check(enumerate(parse_poset_class(cls), n));
      out << "rank " << report.rank << " of " << report.dimension << (report.full_rank() ? " full" : " deficient")
          << '\n';
      return report.full_rank() ? 0 : 1;
    } else if (star_cmd->parsed()) {
      out << to_string(star(parse_poset(p_text), parse_poset(q_text)));
    } else if (phi_cmd->parsed()) {
      out << to_string(phi(parse_poset(p_text)));
    } else if (binfty_cmd->parsed()) {
      out << to_string(binfty_bracket(parse_list(left), parse_list(right)));
    } else if (operad_cmd->parsed()) {
      std::vector<IndexedWNPoset> parts;
      for (const auto& part : split(args_text, ';')) parts.push_back(parse_indexed(part));
      out << to_string(operad_compose(parse_indexed(q_text), parts));
    } else if (complete_cmd->parsed()) {
      const SinglePoset sp = parse_single_poset(p_text);
      for (const auto& p : target == "plane" ? plane_completions(sp) : wn_completions(sp)) out << to_string(p) << '\n';
    } else if (crown_cmd->parsed()) {
      out << to_string(crown_poset(n)) << '\n';
    } else if (check_cmd->parsed()) {
      return run_suite(parse_suite(suite), max_n, out) ? 0 : 1;
    } else if (export_cmd->parsed()) {
      const DoublePoset p = parse_poset(p_text);
      out << (format == "dot" ? export_dot(p) : export_json(p) + "\n");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace dposet::cli
