#include "gv/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace gv {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto ok_digits = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!ok_digits(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!ok_digits(num) || !ok_digits(den))
    throw std::invalid_argument("bad rational literal: " + s);
  Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace gv
