#include "halfint.hpp"

#include <charconv>
#include <stdexcept>

namespace qso {

HalfInt HalfInt::parse(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'"); };
  long long num = 0, den = 1;
  auto slash = text.find('/');
  std::string_view np = text.substr(0, slash);
  auto r = std::from_chars(np.data(), np.data() + np.size(), num);
  if (r.ec != std::errc{} || r.ptr != np.data() + np.size()) bad();
  if (slash != std::string_view::npos) {
    std::string_view dp = text.substr(slash + 1);
    auto r2 = std::from_chars(dp.data(), dp.data() + dp.size(), den);
    if (r2.ec != std::errc{} || r2.ptr != dp.data() + dp.size()) bad();
    if (den != 1 && den != 2) bad();
  }
  return den == 1 ? HalfInt(num) : HalfInt::from_twice(num);
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace qso
