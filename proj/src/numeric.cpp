#include "quotcert/numeric.hpp"

#include <algorithm>

namespace quotcert {

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational result(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::optional<Int> exact_nth_root(const Int& x, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return x;
  if (x < 0 && n % 2 == 0) return std::nullopt;
  Int ax = abs(x);
  Int r;
  int exact = mpz_root(r.backend().data(), ax.backend().data(), n);
  if (!exact) return std::nullopt;
  return x < 0 ? Int(-r) : r;
}

std::optional<Rational> exact_nth_root(const Rational& x, unsigned n) {
  auto num = exact_nth_root(numerator(x), n);
  if (!num) return std::nullopt;
  auto den = exact_nth_root(denominator(x), n);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::vector<Int> small_divisors(const Int& x) {
  Int ax = abs(x);
  // Trial division only; callers fall back to other tactics on big inputs.
  if (ax == 0 || ax > Int(100000000LL)) return {};
  std::vector<Int> divs;
  for (Int d = 1; d * d <= ax; ++d) {
    if (ax % d == 0) {
      divs.push_back(d);
      if (d * d != ax) divs.push_back(ax / d);
    }
    if (divs.size() > 4096) return {};
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace quotcert
