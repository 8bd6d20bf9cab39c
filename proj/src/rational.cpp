#include "linelab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace linelab {

Rat rat_parse(const std::string& s) {
  // strict format check first: gmp is lenient about whitespace and bases
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t k = from;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) k++;
    return k - from;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) i++;
  size_t num_len = digits(i);
  if (num_len == 0) throw std::runtime_error("bad rational '" + s + "'");
  i += num_len;
  if (i < s.size()) {
    if (s[i] != '/') throw std::runtime_error("bad rational '" + s + "'");
    i++;
    size_t den_len = digits(i);
    if (den_len == 0 || i + den_len != s.size())
      throw std::runtime_error("bad rational '" + s + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::runtime_error("bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::runtime_error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace linelab
