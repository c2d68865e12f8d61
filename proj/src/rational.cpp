#include "unfold/rational.hpp"

#include <cctype>

namespace unfold {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = t.find('/');
  auto check_digits = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + s);
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw std::invalid_argument("malformed rational: " + s);
      }
    }
  };
  if (slash == std::string::npos) {
    check_digits(t);
    Rat r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    return r;
  }
  std::string num = t.substr(0, slash);
  std::string den = t.substr(slash + 1);
  check_digits(num);
  check_digits(den);
  Rat r;
  if (r.set_str(num + "/" + den, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace unfold
