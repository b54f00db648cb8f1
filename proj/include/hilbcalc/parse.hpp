#pragma once

#include "hilbcalc/taut.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hilbcalc {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

// "1", "L^2", "L*w", "L.w", "th"
Twist parse_twist(const std::string &text);

// class := term (('+'|'-') term)*
// term  := [rational '*'] atom
// atom  := Diag(sizes)[twists] | G<m>[twists] | Gm[twists]
//        | F(j;n:xs|ys)[xtw|ytw]{node=..,psix=..,psiy=..} | Sect(...)...
// m = 0 takes the length from the terms.
TautClass parse_class(const std::string &text, Backend backend, int m = 0);

nlohmann::json to_json(const TautClass &c);
nlohmann::json to_json(const CharExpr &e);
TautClass class_from_json(const nlohmann::json &j);

} // namespace hilbcalc
