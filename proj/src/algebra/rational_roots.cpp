#include "foliage/algebra/rational_roots.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace foliage {
namespace {

bool is_probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. n is odd composite.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const mpz_class& v) {
      mpz_class w = v * v + c;
      return mpz_class(w % n);
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& value) {
  if (value == 0) throw std::invalid_argument("factor_integer: zero");
  mpz_class n = abs(value);
  std::map<mpz_class, int> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    if (p * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++primes[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, primes);
  return {primes.begin(), primes.end()};
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t count = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
  std::size_t hi = coeffs.size();
  while (hi > 0 && coeffs[hi - 1] == 0) --hi;
  if (hi <= 1) return {};
  std::size_t lo = 0;
  while (coeffs[lo] == 0) ++lo;

  // Clear denominators and content.
  mpz_class den = 1;
  for (std::size_t i = lo; i < hi; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coeffs[i].get_den_mpz_t());
  std::vector<mpz_class> a;
  for (std::size_t i = lo; i < hi; ++i) a.push_back(mpz_class(coeffs[i] * den));
  mpz_class content = 0;
  for (const auto& c : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : a) c /= content;

  std::vector<mpq_class> roots;
  if (lo > 0) roots.push_back(0);
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;

  auto vanishes = [&](const mpz_class& p, const mpz_class& q) {
    // sum a_i p^i q^(n-i) == 0
    mpz_class acc = 0, ppow = 1;
    std::vector<mpz_class> qpow(n + 1);
    qpow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
    for (std::size_t i = 0; i <= n; ++i) {
      acc += a[i] * ppow * qpow[n - i];
      ppow *= p;
    }
    return acc == 0;
  };

  const auto ps = positive_divisors(a.front());
  const auto qs = positive_divisors(a.back());
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      if (vanishes(p, q)) roots.emplace_back(p, q);
      if (vanishes(-p, q)) roots.emplace_back(-p, q);
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace foliage
