#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "ncribbon/json_io.hpp"
#include "ncribbon/nabla.hpp"
#include "ncribbon/qt_bases.hpp"
#include "ncribbon/tables.hpp"
#include "ncribbon/text_io.hpp"
#include "ncribbon/verify.hpp"

using namespace ncribbon;

namespace {

struct BasisChoice {
  BasisKind kind;
  bool needs_level;
};

BasisChoice parse_basis(const std::string& name) {
  if (name == "homogeneous" || name == "h") return {BasisKind::Homogeneous, false};
  if (name == "ribbon") return {BasisKind::Ribbon, false};
  if (name == "hall-littlewood") return {BasisKind::HallLittlewood, false};
  if (name == "macdonald") return {BasisKind::Macdonald, false};
  if (name == "modified-macdonald") return {BasisKind::ModifiedMacdonald, false};
  if (name == "modified-hall-littlewood") return {BasisKind::ModifiedHallLittlewood, false};
  if (name == "gamma-schur") return {BasisKind::GammaSchur, true};
  throw Error("unknown basis '" + name + "'");
}

BasisTag make_tag(const std::string& basis, const std::optional<std::string>& level,
                  BasisFlavor flavor, uint32_t degree, bool inverted_t = false) {
  BasisChoice choice = parse_basis(basis);
  BasisTag tag;
  tag.kind = choice.kind;
  tag.flavor = flavor;
  tag.inverted_t = inverted_t;
  if (choice.needs_level) {
    if (!level) throw Error("basis '" + basis + "' requires --level");
    tag.level = parse_dotted(*level);
    if (tag.level->degree() != degree)
      throw Error("level degree does not match the index degree");
  } else if (level) {
    throw Error("basis '" + basis + "' does not take --level");
  }
  return tag;
}

void emit_element(const NcsfElement& e, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(e).dump(2) << "\n";
  } else {
    std::cout << to_text(e) << "\n";
  }
}

uint32_t verify_degree_cap() {
  if (const char* env = std::getenv("NCRIBBON_MAX_DEGREE")) {
    return static_cast<uint32_t>(std::stoul(env));
  }
  return 8;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the degree-n non-commutative symmetric functions:\n"
               "ribbon Schur, Hall-Littlewood, Macdonald and gamma-ribbon Schur bases,\n"
               "with the non-commutative nabla operator"};
  app.require_subcommand(1);

  std::string format = "text";

  // ---- expand
  auto* cmd_expand = app.add_subcommand("expand", "expand a basis element over ribbons");
  std::string ex_basis, ex_index, ex_flavor = "single";
  std::optional<std::string> ex_level;
  bool ex_inverted = false;
  cmd_expand->add_option("--basis", ex_basis, "basis name")->required();
  cmd_expand->add_option("--index", ex_index, "composition, dot-separated parts")->required();
  cmd_expand->add_option("--level", ex_level, "level composition (gamma-schur)");
  cmd_expand->add_option("--flavor", ex_flavor, "single | multivariate")
      ->check(CLI::IsMember({"single", "multivariate"}));
  cmd_expand->add_flag("--inverted-t", ex_inverted, "expand the basis at 1/t (gamma-schur)");
  cmd_expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- table
  auto* cmd_table = app.add_subcommand("table", "emit a weight-n coefficient table");
  std::string tb_kind, tb_level;
  std::optional<uint32_t> tb_n;
  cmd_table->add_option("--kind", tb_kind, "gamma-schur | macdonald-gamma")
      ->required()
      ->check(CLI::IsMember({"gamma-schur", "macdonald-gamma"}));
  cmd_table->add_option("--level", tb_level, "level composition")->required();
  cmd_table->add_option("--n", tb_n, "degree (cross-checked against the level)");
  cmd_table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- verify
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem verification suite");
  std::string vf_suite;
  uint32_t vf_max_degree = 6;
  uint64_t vf_seed = kDefaultVerifySeed;
  cmd_verify->add_option("--suite", vf_suite, "suite name or 'all'")->required();
  cmd_verify->add_option("--max-degree", vf_max_degree, "largest degree to check (default 6)");
  cmd_verify->add_option("--seed", vf_seed, "seed for the sampled degrees");

  // ---- nabla
  auto* cmd_nabla = app.add_subcommand("nabla", "apply the non-commutative nabla operator");
  std::string nb_basis, nb_index;
  std::optional<std::string> nb_level;
  bool nb_to_ribbon = false;
  cmd_nabla->add_option("--basis", nb_basis,
                        "ribbon | modified-macdonald | gamma-schur | modified-hall-littlewood")
      ->required();
  cmd_nabla->add_option("--index", nb_index, "composition")->required();
  cmd_nabla->add_option("--level", nb_level, "level (gamma-schur, modified-hall-littlewood)");
  cmd_nabla->add_flag("--to-ribbon", nb_to_ribbon,
                      "land in the full ribbon basis (gamma-schur input)");
  cmd_nabla->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- convert
  auto* cmd_convert = app.add_subcommand("convert", "change of basis");
  std::string cv_from, cv_to, cv_index;
  std::optional<std::string> cv_level;
  cmd_convert->add_option("--from", cv_from, "source basis")->required();
  cmd_convert->add_option("--to", cv_to, "target basis")->required();
  cmd_convert->add_option("--index", cv_index, "composition")->required();
  cmd_convert->add_option("--level", cv_level, "level for gamma-schur endpoints");
  cmd_convert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- branch
  auto* cmd_branch = app.add_subcommand("branch", "branch a gamma-schur function to a coarser level");
  std::string br_from, br_to, br_index;
  cmd_branch->add_option("--from", br_from, "current level")->required();
  cmd_branch->add_option("--to", br_to, "target (coarser) level")->required();
  cmd_branch->add_option("--index", br_index, "composition")->required();
  cmd_branch->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_expand) {
      Composition index = parse_dotted(ex_index);
      BasisFlavor flavor =
          ex_flavor == "multivariate" ? BasisFlavor::Multivariate : BasisFlavor::SingleParam;
      BasisTag tag = make_tag(ex_basis, ex_level, flavor, index.degree(), ex_inverted);
      NcsfElement e = expand_to_ribbon(
          NcsfElement::unit(index, tag, family_for(index.degree(), flavor)));
      emit_element(e, format);
    } else if (*cmd_table) {
      Composition level = parse_dotted(tb_level);
      if (tb_n && *tb_n != level.degree())
        throw Error("--n does not match the degree of --level");
      TableDocument doc =
          tb_kind == "gamma-schur" ? gamma_schur_table(level) : macdonald_gamma_table(level);
      if (format == "json") {
        std::cout << doc.to_json().dump(2) << "\n";
      } else {
        std::cout << doc.render();
      }
    } else if (*cmd_verify) {
      uint32_t cap = verify_degree_cap();
      if (vf_max_degree > cap)
        throw Error("--max-degree exceeds the cap of " + std::to_string(cap) +
                    " (raise NCRIBBON_MAX_DEGREE to override)");
      std::vector<std::string> suites =
          vf_suite == "all" ? suite_names() : std::vector<std::string>{vf_suite};
      bool ok = true;
      for (const auto& s : suites) {
        SuiteResult r = run_suite(s, vf_max_degree, vf_seed);
        std::cout << r.summary() << "\n";
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    } else if (*cmd_nabla) {
      Composition index = parse_dotted(nb_index);
      BasisChoice choice = parse_basis(nb_basis);
      BasisTag tag;
      tag.kind = choice.kind;
      if (choice.kind == BasisKind::GammaSchur) {
        if (!nb_level) throw Error("gamma-schur input requires --level");
        tag.level = parse_dotted(*nb_level);
        tag.inverted_t = true;  // nabla acts on the gamma-schur basis at 1/t
      }
      NcsfElement e = NcsfElement::unit(index, tag);
      std::optional<Composition> level;
      if (choice.kind == BasisKind::ModifiedHallLittlewood && nb_level)
        level = parse_dotted(*nb_level);
      NcsfElement image = nb_to_ribbon && choice.kind == BasisKind::GammaSchur
                              ? nabla_to_ribbon(e)
                              : nabla(e, level);
      SignSplit split = sign_normalize(image);
      if (format == "json") {
        Json j;
        j["sign"] = split.sign;
        j["positive_part"] = to_json(split.positive_part);
        j["image"] = to_json(image);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "sign: " << (split.sign < 0 ? "-1" : "+1") << "\n";
        std::cout << "positive part: " << to_text(split.positive_part) << "\n";
      }
    } else if (*cmd_convert) {
      Composition index = parse_dotted(cv_index);
      BasisChoice from = parse_basis(cv_from);
      BasisChoice to = parse_basis(cv_to);
      NcsfElement result = [&]() -> NcsfElement {
        if (to.kind == BasisKind::Ribbon) {
          BasisTag tag = make_tag(cv_from, cv_level, BasisFlavor::SingleParam, index.degree());
          return expand_to_ribbon(NcsfElement::unit(index, tag));
        }
        if (from.kind == BasisKind::Ribbon && to.kind == BasisKind::Homogeneous)
          return ribbon_to_h(NcsfElement::unit(index, BasisTag::ribbon()));
        if (from.kind == BasisKind::Homogeneous && to.kind == BasisKind::Ribbon)
          return h_to_ribbon(NcsfElement::unit(index, BasisTag::homogeneous()));
        if (to.kind == BasisKind::GammaSchur) {
          if (!cv_level) throw Error("--to gamma-schur requires --level");
          Composition level = parse_dotted(*cv_level);
          if (from.kind == BasisKind::HallLittlewood) return hl_to_gamma_schur(level, index);
          if (from.kind == BasisKind::Macdonald)
            return macdonald_in_gamma_schur(level, index, false);
          if (from.kind == BasisKind::ModifiedMacdonald)
            return macdonald_in_gamma_schur(level, index, true);
        }
        if (from.kind == BasisKind::GammaSchur && to.kind == BasisKind::HallLittlewood) {
          if (!cv_level) throw Error("--from gamma-schur requires --level");
          return gamma_schur_to_hl(parse_dotted(*cv_level), index);
        }
        throw Error("unsupported conversion " + cv_from + " -> " + cv_to);
      }();
      emit_element(result, format);
    } else if (*cmd_branch) {
      NcsfElement result =
          branch(parse_dotted(br_from), parse_dotted(br_to), parse_dotted(br_index));
      emit_element(result, format);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
