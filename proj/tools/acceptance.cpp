// One line per acceptance criterion. Exit status 0 iff every criterion passes,
// or, with --known-failures=LIST, iff the failing set is exactly LIST.
#include "hilbcalc/gamma.hpp"
#include "hilbcalc/local_model.hpp"
#include "hilbcalc/properties.hpp"
#include "hilbcalc/staircase.hpp"
#include "hilbcalc/transfer.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace hilbcalc;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

CharExpr sym(const std::string &s) { return CharExpr::symbol(s); }

// the characters b, d, lw, w2, g2, sig
const CharExpr b = sym("b"), d = sym("d"), lw = sym("lw"), w2 = sym("w2"),
               g2 = sym("g2"), sig = sym("sig");

CharExpr c(long v) { return CharExpr(Q(v)); }
CharExpr c(long p, long q) { return CharExpr(canon(Q(p, q))); }

std::string jstr(const std::array<int, 3> &j) {
  return "(" + std::to_string(j[0]) + "," + std::to_string(j[1]) + "," + std::to_string(j[2]) + ")";
}

Outcome crit1() {
  const std::vector<std::vector<std::int64_t>> want{
      {1}, {3, 3}, {6, 8, 6}, {10, 15, 15, 10}, {15, 24, 27, 24, 15}};
  const std::int64_t sums[] = {1, 6, 20, 50, 105};
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    auto v = beta_vector(m);
    std::int64_t s = 0;
    for (auto x : v)
      s += x;
    if (v != want[m - 2] || s != sums[m - 2]) {
      o.pass = false;
      o.note += "m=" + std::to_string(m) + " ";
    }
  }
  return o;
}

Outcome crit2() {
  Outcome o;
  for (int m = 2; m <= 9; ++m)
    for (int j = 1; j < m; ++j) {
      auto p = beta(m, j), cb = beta_cobasis(m, j), la = beta_linear_algebra(m, j, 1);
      if (p != cb || p != la) {
        o.pass = false;
        o.note += "(" + std::to_string(m) + "," + std::to_string(j) + ") ";
      }
    }
  return o;
}

Outcome crit3() {
  Outcome o;
  for (std::int64_t m = 1; m <= 30; ++m)
    if (alpha(static_cast<int>(m)) != m * (m + 2) * (m * m - 1) / 24) {
      o.pass = false;
      o.note += std::to_string(m) + " ";
    }
  return o;
}

Outcome equal(const CharExpr &got, const CharExpr &want) {
  Outcome o;
  o.pass = got == want;
  o.note = got.str();
  if (!o.pass)
    o.note += "  expected " + want.str();
  return o;
}

Outcome crit4() {
  return equal(evaluate(gamma_power_class(3, 2, Backend::Pencil)), c(1, 2) * w2 - c(1, 2) * sig);
}

Outcome crit5() {
  return equal(evaluate(gamma_power_class(4, 3, Backend::Pencil)), c(13) * w2 - c(9) * sig);
}

Outcome crit6() {
  TautClass f = TautClass::of(3, Backend::Pencil, Term::scroll(2, 1, {{1, {}}}, {}));
  TautClass g2f = mul_gamma(mul_gamma(f)); // (-Gamma)^2 = Gamma^2
  return equal(evaluate(g2f), c(-3) * sig);
}

std::vector<std::pair<std::array<int, 3>, CharExpr>> boxed_subtotals() {
  return {
      {{2, 1, 1}, b * (d - c(1)) * (d - c(2))},
      {{1, 1, 2}, c(-5) * b * d + b * d * d + c(6) * b - c(2) * d * lw + c(4) * lw},
      {{2, 0, 2}, c(-2) * b * d - b * g2 + c(2) * b},
      {{1, 2, 1}, (b * d - c(2) * b - lw) * (d - c(2))},
      {{1, 0, 3}, c(-3) * b * d - c(3) * d * lw + c(6) * b + c(6) * lw - d * w2},
      {{0, 3, 1}, (c(-3) * b - c(3) * lw - (w2 - sig)) * (d - c(2))},
      {{0, 2, 2}, c(-2) * d * sig + c(10) * b + c(12) * lw + c(4) * w2 - c(2) * sig -
                      c(4) * b * d - c(2) * b * g2},
      {{0, 1, 3}, c(-3) * d * b - c(3) * d * lw - d * w2 + c(4) * d * sig + c(12) * b +
                      c(18) * lw + c(8) * w2 - c(24) * sig},
      {{0, 0, 4}, c(12) * b + c(24) * lw + c(14) * w2},
  };
}

const SecantReport &secant() {
  static const SecantReport r = multisecant_N3();
  return r;
}

Outcome crit7() {
  Outcome o;
  const auto &r = secant();
  for (const auto &[j, want] : boxed_subtotals()) {
    CharExpr got;
    for (const auto &cs : r.cases)
      if (cs.j == j)
        got = cs.subtotal;
    if (!(got == want)) {
      o.pass = false;
      o.note += jstr(j) + " differs by " + (got - want).str() + "; ";
    }
  }
  if (!r.unexpected.empty()) {
    o.pass = false;
    o.note += "nonzero unlisted cases present; ";
  }
  return o;
}

Outcome crit8() {
  CharExpr want = (c(3) * d * d - c(25) * d + c(60)) * b + (c(-12) * d + c(72)) * lw +
                  (c(-3) * d + c(28)) * w2 - c(3) * b * g2 + (c(3) * d - c(20)) * sig;
  Outcome o = equal(multisecant_N3().total, want);
  if (!o.pass)
    o.note += "  (difference " + (multisecant_N3().total - want).str() + ")";
  return o;
}

Outcome crit9() {
  Outcome o = equal(trisecant_scroll_degree(), trisecant_closed_form());
  Q at = trisecant_scroll_degree(Q(3), Q(0));
  if (at != 0) {
    o.pass = false;
    o.note += "  value at (3,0): " + at.get_str();
  }
  return o;
}

Outcome crit10() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    auto s = verify_sigma_relations(m), g = verify_G_recursion(m);
    if (!s.all_pass() || !g.all_pass()) {
      o.pass = false;
      o.note += "identities fail at m=" + std::to_string(m) + "; ";
    }
    auto tab = vanishing_order_table(m, 1);
    if (!tab.matches_expected()) {
      o.pass = false;
      o.note += "vanishing orders differ at m=" + std::to_string(m) + "; ";
    }
  }
  if (o.pass)
    o.note = "sigma relations, G recursion, vanishing orders";
  else if (o.note.find("identities") == std::string::npos)
    o.note = "sigma relations and G recursion pass; " + o.note;
  return o;
}

Outcome crit11() {
  Outcome o;
  long cases = 0;
  auto take = [&](const std::string &what, const PropertyResult &r) {
    cases += r.cases;
    if (!r.ok) {
      o.pass = false;
      o.note += what + ": " + r.detail + "; ";
    }
  };
  for (int m = 2; m <= 5; ++m) {
    take("mul_gamma m=" + std::to_string(m), check_mul_gamma_laws(m, Backend::Pencil, 500, 1));
    take("transfer m=" + std::to_string(m), check_transfer_laws(m, Backend::Pencil, 100, 1));
    take("normalize m=" + std::to_string(m), check_normalize_idempotent(m, Backend::Pencil, 200, 1));
  }
  take("rule 1", check_rule1(Backend::Symbolic));
  take("rule 2", check_rule2(Backend::Symbolic));
  take("rule 2 pencil", check_rule2(Backend::Pencil));
  take("beta symmetry", check_beta_symmetry(12));
  take("nu", check_nu_example());
  if (o.pass)
    o.note = std::to_string(cases) + " cases";
  return o;
}

Outcome crit12() {
  Outcome o = equal(gamma2_power_pencil(3), c(1, 2) * w2 - c(1, 2) * sig);
  DoublePoint dp = double_point_class(1);
  std::map<std::array<int, 3>, Q> want{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, -1}};
  if (dp.formal != want) {
    o.pass = false;
    o.note += "  double point: " + dp.formal_str;
  } else {
    o.note += "; double point n=1: " + dp.formal_str;
  }
  return o;
}

std::set<int> parse_list(const std::string &s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.insert(std::stoi(item));
  return out;
}

} // namespace

int main(int argc, char **argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    const std::string key = "--known-failures=";
    if (a.rfind(key, 0) == 0)
      known = parse_list(a.substr(key.size()));
    else {
      std::cerr << "usage: acceptance [--known-failures=7,8,10]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> crits{
      {"beta tables and sums, m = 2..6", crit1},
      {"beta by polygon, cobasis and linear algebra agree, m <= 9", crit2},
      {"alpha lattice count, m <= 30", crit3},
      {"integral of Gamma<2>^3", crit4},
      {"integral of Gamma<3>^4", crit5},
      {"(-Gamma<3>)^2 F_1(2:1|0) per node", crit6},
      {"nine trisecant case subtotals", crit7},
      {"trisecant grand total", crit8},
      {"trisecant scroll degree closed form, zero at (3,0)", crit9},
      {"local model identities, m <= 4", crit10},
      {"property suites", crit11},
      {"Gamma<2>^3 closed form on a pencil, double point n = 1", crit12},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < crits.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = crits[i].second();
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int id = static_cast<int>(i) + 1;
    if (!o.pass)
      failed.insert(id);
    std::printf("criterion %2d: %s  %s [%.3fs]  %s\n", id, o.pass ? "PASS" : "FAIL",
                crits[i].first.c_str(), sec, o.note.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", crits.size() - failed.size(), crits.size());
  if (!known.empty()) {
    if (failed == known)
      return 0;
    std::printf("failing set differs from the documented one\n");
    return 1;
  }
  return failed.empty() ? 0 : 1;
}
