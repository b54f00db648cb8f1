#pragma once

#include "hilbcalc/charexpr.hpp"
#include "hilbcalc/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbcalc {

struct Block {
  int size = 1;
  Twist tw;

  auto operator<=>(const Block &) const = default;
};

// size descending, then twist
void sort_blocks(std::vector<Block> &blocks);
Distribution sizes_of(const std::vector<Block> &blocks);
// a(n.) of a block list: prod mu(size)!, twists ignored
std::int64_t aut_of(const std::vector<Block> &blocks);

enum class TermKind { Diagonal, Scroll };

// Diagonal terms are averaged: Diag(n.)[a.] = (1/a(n.)) times the push-forward
// of the ordered twisted diagonal. Scroll terms F_j^{(n : x | y)} are averaged
// the same way over the x and y parts; sect = 1 means (-Gamma) * F. The node
// twist is a base class restricted to the node section.
struct Term {
  TermKind kind = TermKind::Diagonal;
  std::vector<Block> blocks;
  int n = 0;
  int j = 0;
  std::vector<Block> xs;
  std::vector<Block> ys;
  Twist node;
  int px = 0;
  int py = 0;
  int sect = 0;

  static Term diagonal(std::vector<Block> blocks);
  static Term scroll(int n, int j, std::vector<Block> xs, std::vector<Block> ys,
                     int sect = 0, Twist node = {}, int px = 0, int py = 0);

  bool is_scroll() const { return kind == TermKind::Scroll; }
  int length() const;
  int codim() const;
  std::string str() const;

  auto operator<=>(const Term &) const = default;
};

class TautClass {
public:
  TautClass() = default;
  TautClass(int m, Backend backend) : m_(m), backend_(backend) {}

  static TautClass unit(int m, Backend backend);
  static TautClass of(int m, Backend backend, const Term &t, const Q &c = 1);
  // Gamma<m>[a, b] = 1/2 Diag(2|1^{m-2})[a, b, 1, ...]
  static TautClass gamma(int m, Backend backend, Twist a = {}, Twist b = {});

  int m() const { return m_; }
  Backend backend() const { return backend_; }
  const std::map<Term, Q> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c*t after dropping it if it vanishes in this backend.
  void add(const Term &t, const Q &c);
  void add_raw(const Term &t, const Q &c);

  TautClass &operator+=(const TautClass &o);
  TautClass &operator-=(const TautClass &o);
  TautClass &operator*=(const Q &c);
  friend TautClass operator+(TautClass a, const TautClass &b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass &b) { return a -= b; }
  friend TautClass operator*(const Q &c, TautClass a) { return a *= c; }
  bool operator==(const TautClass &o) const {
    return m_ == o.m_ && backend_ == o.backend_ && terms_ == o.terms_;
  }

  // Terms of one codimension.
  TautClass part_of_codim(int c) const;
  std::string str() const;

private:
  int m_ = 0;
  Backend backend_ = Backend::Pencil;
  std::map<Term, Q> terms_;
};

// True if t is zero in the given backend on X<m>.
bool vanishes(const Term &t, int m, Backend backend);
TautClass normalize(const TautClass &c);
int codim(const Term &t);
// dim X<m>_B, or -1 for the symbolic backend
int ambient_dim(int m, Backend backend);

} // namespace hilbcalc
