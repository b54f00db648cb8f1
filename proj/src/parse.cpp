#include "hilbcalc/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace hilbcalc {

namespace {

class Parser {
public:
  Parser(const std::string &s, Backend backend) : s_(s), backend_(backend) {}

  std::vector<std::pair<Term, Q>> parse_sum() {
    std::vector<std::pair<Term, Q>> out;
    skip();
    Q sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    for (;;) {
      parse_term(sign, out);
      skip();
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        break;
    }
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

  Twist twist() {
    skip();
    Twist t;
    if (eat('1'))
      return t;
    bool any = false;
    for (;;) {
      skip();
      if (s_.compare(pos_, 2, "th") == 0) {
        pos_ += 2;
        if (t.theta)
          fail("theta squared");
        t.theta = true;
      } else if (eat('L')) {
        t.eL += power();
      } else if (eat('w')) {
        t.eW += power();
      } else {
        fail("expected L, w, th or 1");
      }
      any = true;
      skip();
      if (!eat('*') && !eat('.'))
        break;
    }
    if (!any)
      fail("empty twist");
    int dx = dim_X(backend_);
    if (dx >= 0 && t.eL + t.eW > dx)
      fail("twist-degree overflow: " + t.str());
    return t;
  }

  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  int integer() {
    if (!peek_digit())
      fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000)
        fail("integer too large");
    }
    return static_cast<int>(v);
  }
  int power() {
    if (eat('^'))
      return integer();
    return 1;
  }
  Q rational() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '/'))
      ++pos_;
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception &) {
      pos_ = start;
      fail("bad rational");
    }
  }

  std::vector<Twist> twist_list(char close, char alt = 0) {
    std::vector<Twist> v;
    skip();
    if (pos_ < s_.size() && (s_[pos_] == close || (alt && s_[pos_] == alt)))
      return v;
    for (;;) {
      v.push_back(twist());
      if (!eat(','))
        break;
    }
    return v;
  }

  std::vector<Block> dist() {
    std::vector<Block> v;
    int first = integer();
    if (first == 0)
      return v;
    v.push_back({first, {}});
    while (eat(','))
      v.push_back({integer(), {}});
    return v;
  }

  void apply_twists(std::vector<Block> &bs, const std::vector<Twist> &tw,
                    bool pad) {
    if (tw.size() > bs.size() || (!pad && !tw.empty() && tw.size() != bs.size()))
      fail("twist count does not match the blocks");
    for (std::size_t i = 0; i < tw.size(); ++i)
      bs[i].tw = tw[i];
  }

  void parse_term(const Q &sign, std::vector<std::pair<Term, Q>> &out) {
    Q c = sign;
    if (peek_digit()) {
      c *= rational();
      expect('*');
    }
    skip();
    std::size_t at = pos_;
    try {
      if (s_.compare(pos_, 5, "Diag(") == 0) {
        pos_ += 5;
        std::vector<Block> bs{{integer(), {}}};
        while (eat('|'))
          bs.push_back({integer(), {}});
        expect(')');
        if (eat('[')) {
          apply_twists(bs, twist_list(']'), false);
          expect(']');
        }
        for (const auto &b : bs)
          if (b.size < 1)
            fail("block size must be positive");
        out.emplace_back(Term::diagonal(bs), c);
        return;
      }
      if (s_.compare(pos_, 2, "F(") == 0 || s_.compare(pos_, 5, "Sect(") == 0) {
        int sect = s_[pos_] == 'S';
        pos_ += sect ? 5 : 2;
        int j = integer();
        expect(';');
        int n = integer();
        expect(':');
        auto xs = dist();
        expect('|');
        auto ys = dist();
        expect(')');
        if (eat('[')) {
          apply_twists(xs, twist_list('|'), false);
          expect('|');
          apply_twists(ys, twist_list(']'), false);
          expect(']');
        }
        Twist node;
        int px = 0, py = 0;
        if (eat('{')) {
          for (;;) {
            skip();
            std::size_t k = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
              ++pos_;
            std::string key = s_.substr(k, pos_ - k);
            expect('=');
            if (key == "node")
              node = twist();
            else if (key == "psix")
              px = integer();
            else if (key == "psiy")
              py = integer();
            else {
              pos_ = k;
              fail("unknown scroll attribute '" + key + "'");
            }
            if (!eat(','))
              break;
          }
          expect('}');
        }
        out.emplace_back(Term::scroll(n, j, xs, ys, sect, node, px, py), c);
        return;
      }
      if (s_.compare(pos_, 1, "G") == 0) {
        ++pos_;
        bool angle = eat('<');
        int m = integer();
        if (angle)
          expect('>');
        if (m < 2)
          fail("Gamma needs m >= 2");
        std::vector<Block> bs{{2, {}}};
        for (int i = 2; i < m; ++i)
          bs.push_back({1, {}});
        if (eat('[')) {
          apply_twists(bs, twist_list(']'), true);
          expect(']');
        }
        out.emplace_back(Term::diagonal(bs), c / 2);
        return;
      }
    } catch (const std::domain_error &e) {
      throw ParseError(e.what(), at);
    }
    fail("expected Diag(, G, F( or Sect(");
  }

  const std::string &s_;
  Backend backend_;
  std::size_t pos_ = 0;
};

} // namespace

Twist parse_twist(const std::string &text) {
  Parser p(text, Backend::Symbolic);
  Twist t = p.twist();
  if (!p.at_end())
    p.fail("trailing input after twist");
  return t;
}

TautClass parse_class(const std::string &text, Backend backend, int m) {
  Parser p(text, backend);
  auto terms = p.parse_sum();
  for (const auto &[t, c] : terms) {
    int len = t.length();
    if (m == 0)
      m = len;
    else if (len != m)
      throw ParseError("ambient-length mismatch: " + t.str() + " has length " +
                           std::to_string(len) + ", expected " + std::to_string(m),
                       0);
  }
  TautClass out(m, backend);
  try {
    for (const auto &[t, c] : terms)
      out.add(t, c);
  } catch (const std::domain_error &e) {
    throw ParseError(e.what(), 0);
  }
  return normalize(out);
}

namespace {

nlohmann::json blocks_json(const std::vector<Block> &bs) {
  auto a = nlohmann::json::array();
  for (const auto &b : bs)
    a.push_back({{"size", b.size}, {"twist", b.tw.str()}});
  return a;
}

std::vector<Block> blocks_from(const nlohmann::json &a) {
  std::vector<Block> v;
  for (const auto &b : a)
    v.push_back({b.at("size").get<int>(), parse_twist(b.at("twist").get<std::string>())});
  return v;
}

} // namespace

nlohmann::json to_json(const TautClass &c) {
  nlohmann::json j;
  j["m"] = c.m();
  j["backend"] = backend_name(c.backend());
  auto arr = nlohmann::json::array();
  for (const auto &[t, v] : c.terms()) {
    nlohmann::json e;
    e["coeff"] = v.get_str();
    if (!t.is_scroll()) {
      e["kind"] = "diagonal";
      e["blocks"] = blocks_json(t.blocks);
    } else {
      e["kind"] = t.sect ? "section" : "scroll";
      e["n"] = t.n;
      e["j"] = t.j;
      e["x"] = blocks_json(t.xs);
      e["y"] = blocks_json(t.ys);
      e["node"] = t.node.str();
      e["psix"] = t.px;
      e["psiy"] = t.py;
    }
    e["text"] = t.str();
    arr.push_back(std::move(e));
  }
  j["class"] = std::move(arr);
  return j;
}

nlohmann::json to_json(const CharExpr &e) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[mono, c] : e.terms())
    j[mono.empty() ? "1" : monomial_str(mono)] = c.get_str();
  return j;
}

TautClass class_from_json(const nlohmann::json &j) {
  TautClass c(j.at("m").get<int>(), parse_backend(j.at("backend").get<std::string>()));
  for (const auto &e : j.at("class")) {
    Q v = parse_rational(e.at("coeff").get<std::string>());
    std::string kind = e.at("kind").get<std::string>();
    if (kind == "diagonal") {
      c.add_raw(Term::diagonal(blocks_from(e.at("blocks"))), v);
    } else if (kind == "scroll" || kind == "section") {
      c.add_raw(Term::scroll(e.at("n").get<int>(), e.at("j").get<int>(),
                             blocks_from(e.at("x")), blocks_from(e.at("y")),
                             kind == "section", parse_twist(e.at("node").get<std::string>()),
                             e.at("psix").get<int>(), e.at("psiy").get<int>()),
                v);
    } else {
      throw std::invalid_argument("unknown term kind: " + kind);
    }
  }
  return c;
}

} // namespace hilbcalc
