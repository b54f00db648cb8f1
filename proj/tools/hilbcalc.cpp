#include "hilbcalc/gamma.hpp"
#include "hilbcalc/local_model.hpp"
#include "hilbcalc/parse.hpp"
#include "hilbcalc/staircase.hpp"
#include "hilbcalc/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hilbcalc;
using nlohmann::json;

namespace {

struct Globals {
  std::string backend = "pencil";
  std::string format = "text";
  std::uint64_t seed = 1;
  bool seed_given = false;
};

// "d=3,g2=0,sig=2"
std::map<std::string, Q> parse_chars(const std::string &s) {
  std::map<std::string, Q> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected name=value in --chars: " + item);
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

void emit_class(const Globals &g, const TautClass &c, const CharExpr *value) {
  if (g.format == "json") {
    json j = to_json(c);
    if (value)
      j["value"] = to_json(*value);
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (value)
    std::cout << value->str() << "\n";
  else
    std::cout << c.str() << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"hilbcalc: tautological classes on relative Hilbert schemes of nodal curves"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--backend", g.backend, "curve, pencil or symbolic")
      ->check(CLI::IsMember({"curve", "pencil", "symbolic"}));
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto *seed_opt = app.add_option("--seed", g.seed, "seed for randomized checks");

  int m = 0, k = 1, n = 1;
  std::string expr, twist = "1", chars;
  bool eval = false, symbolic_chars = false, symbolic = false;
  std::string oracle = "polygon", check = "all";
  std::string d_str, g_str;

  auto *c_beta = app.add_subcommand("beta", "beta_{m,j} for j = 1..m-1");
  c_beta->add_option("m", m)->required()->check(CLI::Range(2, 60));
  c_beta->add_option("--oracle", oracle, "polygon, cobasis or linear")
      ->check(CLI::IsMember({"polygon", "cobasis", "linear"}));

  auto *c_alpha = app.add_subcommand("alpha", "lattice count alpha_m");
  c_alpha->add_option("m", m)->required()->check(CLI::Range(1, 1000));

  auto *c_gp = app.add_subcommand("gamma-power", "Gamma<m>^k");
  c_gp->add_option("--m", m)->required()->check(CLI::Range(1, 8));
  c_gp->add_option("--k", k)->required()->check(CLI::Range(0, 12));
  c_gp->add_flag("--eval", eval, "integrate");
  c_gp->add_flag("--symbolic-chars", symbolic_chars, "keep characters symbolic");
  c_gp->add_option("--chars", chars, "character values, e.g. d=3,g2=0");

  auto *c_mul = app.add_subcommand("mul", "Gamma<m> times a class");
  c_mul->add_option("--m", m)->required()->check(CLI::Range(1, 12));
  c_mul->add_option("--expr", expr)->required();
  c_mul->add_flag("--eval", eval, "integrate the product");

  auto *c_tr = app.add_subcommand("transfer", "tau of a class with a twist on the new point");
  c_tr->add_option("--expr", expr)->required();
  c_tr->add_option("--twist", twist, "twist of the new point");
  c_tr->add_flag("--eval", eval, "integrate the result");

  auto *c_tc = app.add_subcommand("trisecant-curve", "trisecant scroll degree");
  c_tc->add_option("--d", d_str)->required();
  c_tc->add_option("--g", g_str)->required();

  auto *c_tp = app.add_subcommand("trisecant-pencil", "trisecant count on a pencil");
  auto *chars_opt = c_tp->add_option("--chars", chars, "character values, e.g. b=1,d=4");
  c_tp->add_flag("--symbolic", symbolic, "print the grand total only")->excludes(chars_opt);

  auto *c_dp = app.add_subcommand("double-point", "double-point class");
  c_dp->add_option("--n", n)->required()->check(CLI::Range(1, 8));

  auto *c_lm = app.add_subcommand("verify-local-model", "local-model identities");
  c_lm->add_option("--m", m)->required()->check(CLI::Range(2, 5));
  c_lm->add_option("--check", check, "all, sigma, det, G, diagonal or vanishing")
      ->check(CLI::IsMember({"all", "sigma", "det", "G", "diagonal", "vanishing"}));

  CLI11_PARSE(app, argc, argv);

  g.seed_given = seed_opt->count() > 0;
  if (!g.seed_given)
    if (const char *env = std::getenv("HILBCALC_SEED"))
      g.seed = std::strtoull(env, nullptr, 10);
  const Backend backend = parse_backend(g.backend);
  const bool as_json = g.format == "json";

  try {
    if (*c_beta) {
      std::vector<std::int64_t> v;
      for (int j = 1; j < m; ++j)
        v.push_back(oracle == "polygon"   ? beta(m, j)
                    : oracle == "cobasis" ? beta_cobasis(m, j)
                                          : beta_linear_algebra(m, j, g.seed));
      if (as_json) {
        std::cout << json{{"m", m}, {"beta", v}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < v.size(); ++i)
          std::cout << (i ? " " : "") << v[i];
        std::cout << "\n";
      }
      return 0;
    }
    if (*c_alpha) {
      auto a = alpha(m);
      if (as_json)
        std::cout << json{{"m", m}, {"alpha", a}, {"closed_form", alpha_closed_form(m)}}.dump()
                  << "\n";
      else
        std::cout << a << "\n";
      return 0;
    }
    if (*c_gp) {
      TautClass c = gamma_power_class(k, m, backend);
      if (!eval) {
        emit_class(g, c, nullptr);
        return 0;
      }
      CharExpr v = evaluate(c);
      if (!chars.empty() && !symbolic_chars)
        v = v.substitute(parse_chars(chars));
      emit_class(g, c, &v);
      return 0;
    }
    if (*c_mul) {
      TautClass c = mul_gamma(parse_class(expr, backend, m));
      if (eval) {
        CharExpr v = evaluate(c);
        emit_class(g, c, &v);
      } else {
        emit_class(g, c, nullptr);
      }
      return 0;
    }
    if (*c_tr) {
      TautClass c = transfer(parse_class(expr, backend), parse_twist(twist));
      if (eval) {
        CharExpr v = evaluate(c);
        emit_class(g, c, &v);
      } else {
        emit_class(g, c, nullptr);
      }
      return 0;
    }
    if (*c_tc) {
      Q d = parse_rational(d_str), gg = parse_rational(g_str);
      Q v = trisecant_scroll_degree(d, gg);
      if (as_json)
        std::cout << json{{"d", d.get_str()}, {"g", gg.get_str()}, {"degree", v.get_str()}}.dump()
                  << "\n";
      else
        std::cout << v.get_str() << "\n";
      return 0;
    }
    if (*c_tp) {
      SecantReport r = multisecant_N3();
      if (!chars.empty())
        r = specialize(r, parse_chars(chars));
      if (symbolic) {
        if (as_json)
          std::cout << json{{"total", to_json(r.total)}}.dump() << "\n";
        else
          std::cout << r.total.str() << "\n";
        return 0;
      }
      if (as_json) {
        json cases = json::array();
        for (const auto &c : r.cases)
          cases.push_back({{"j", c.j}, {"listed", c.listed}, {"subtotal", to_json(c.subtotal)},
                           {"text", c.subtotal.str()}});
        std::cout << json{{"cases", cases}, {"total", to_json(r.total)},
                          {"total_text", r.total.str()}, {"unexpected", r.unexpected}}
                         .dump(2)
                  << "\n";
        return 0;
      }
      for (const auto &c : r.cases) {
        if (!c.listed && c.subtotal.is_zero())
          continue;
        std::ostringstream key;
        key << "(" << c.j[0] << "," << c.j[1] << "," << c.j[2] << ")";
        std::cout << std::left << std::setw(10) << key.str() << c.subtotal.str()
                  << (c.listed ? "" : "   [not among the nine cases]") << "\n";
      }
      std::cout << std::left << std::setw(10) << "total" << r.total.str() << "\n";
      return 0;
    }
    if (*c_dp) {
      DoublePoint dp = double_point_class(n);
      if (as_json) {
        json j = {{"n", n}, {"formal", dp.formal_str}, {"on_hilb", to_json(dp.on_hilb)},
                  {"on_base", to_json(dp.on_base)}};
        if (dp.has_pencil)
          j["pencil"] = to_json(dp.pencil);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "formal   " << dp.formal_str << "\n"
                  << "on X<2>  " << dp.on_hilb.str() << "\n"
                  << "on B     " << dp.on_base.str() << "\n";
        if (dp.has_pencil)
          std::cout << "pencil   " << dp.pencil.str() << "\n";
      }
      return 0;
    }
    if (*c_lm) {
      LocalReport rep;
      rep.m = m;
      if (check == "all")
        rep = verify_local_model(m, g.seed);
      else if (check == "sigma")
        rep = verify_sigma_relations(m);
      else if (check == "det")
        rep = verify_determinants(m);
      else if (check == "G")
        rep = verify_G_recursion(m);
      else if (check == "diagonal")
        rep = verify_small_diagonal_restriction(m, g.seed);
      else {
        auto tab = vanishing_order_table(m, g.seed);
        if (as_json)
          std::cout << json{{"m", m}, {"ord", tab.ord}, {"expected", tab.expected},
                            {"pass", tab.matches_expected()}}
                           .dump()
                    << "\n";
        else
          std::cout << tab.str();
        return tab.matches_expected() ? 0 : 1;
      }
      if (as_json) {
        json arr = json::array();
        for (const auto &c : rep.checks)
          arr.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
        std::cout << json{{"m", m}, {"checks", arr}, {"pass", rep.all_pass()}}.dump(2) << "\n";
      } else {
        std::cout << rep.str();
      }
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
