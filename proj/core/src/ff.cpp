#include "kummer/ff.hpp"

#include <algorithm>

namespace kummer {

std::string dec_string(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + (int)(x % 10)));
    x /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::string dec_string(i128 x) {
  if (x < 0) return "-" + dec_string(static_cast<u128>(-x));
  return dec_string(static_cast<u128>(x));
}

i128 parse_i128(const std::string& s) {
  if (s.empty()) throw domain_error("empty integer literal");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw domain_error("bad integer literal: " + s);
  u128 acc = 0;
  const u128 limit = (u128)1 << 126;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw domain_error("bad integer literal: " + s);
    acc = acc * 10 + (u128)(s[i] - '0');
    if (acc > limit) throw domain_error("integer literal out of range: " + s);
  }
  return neg ? -(i128)acc : (i128)acc;
}

u64 ipow_u64(u64 ell, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / ell) throw domain_error("ell^e overflows 64 bits");
    r *= ell;
  }
  return r;
}

int nu_ell(u128 x, u64 ell) {
  if (x == 0) throw domain_error("valuation of zero is undefined");
  int a = 0;
  while (x % ell == 0) {
    x /= ell;
    ++a;
  }
  return a;
}

int nu_ell(i128 x, u64 ell) {
  if (x == 0) throw domain_error("valuation of zero is undefined");
  return nu_ell(x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x), ell);
}

namespace {

u64 powmod_u64(u64 x, u128 e, u64 m) {
  u64 r = 1 % m;
  x %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, x, m);
    x = mulmod(x, x, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this base set.
bool is_prime_u64(u64 x) {
  if (x < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x % p == 0) return x == p;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 v = powmod_u64(a % x, d, x);
    if (v == 1 || v == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod(v, v, x);
      if (v == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 q, u64 ell, int n) : q_(q), ell_(ell), n_(n) {
  if (q >= (1ull << 63)) throw domain_error("q out of supported 64-bit range");
  if (!is_prime_u64(q)) throw domain_error("q = " + std::to_string(q) + " is not prime");
  if (!is_prime_u64(ell)) throw domain_error("ell = " + std::to_string(ell) + " is not prime");
  if (n < 1) throw domain_error("n must be >= 1");
  ell_n_ = ipow_u64(ell, static_cast<unsigned>(n));
  if ((q - 1) % ell_n_ != 0)
    throw domain_error("ell^n = " + std::to_string(ell_n_) + " does not divide q-1 = " +
                       std::to_string(q - 1));
}

u64 PrimeField::ell_pow(int e) const {
  if (e < 0) throw internal_error("negative power of ell requested");
  return ipow_u64(ell_, static_cast<unsigned>(e));
}

u64 PrimeField::pow(u64 x, u128 e) const { return powmod_u64(x % q_, e, q_); }

u64 PrimeField::inv(u64 a) const {
  if (a % q_ == 0) throw domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

int PrimeField::lpower_level(u64 eps) const {
  if (eps % q_ == 0) throw domain_error("lpower_level of zero");
  int w = 0;
  bool seen_nonpower = false;
  for (int j = 1; j <= n_; ++j) {
    bool is_power = pow(eps, (q_ - 1) / ell_pow(j)) == 1;
    if (is_power) {
      // The power criterion is monotone: a failure at some level cannot be
      // followed by a success at a higher one.
      if (seen_nonpower) throw internal_error("power criterion not monotone");
      w = j;
    } else {
      seen_nonpower = true;
    }
  }
  return w;
}

int PrimeField::alpha_exponent(u64 eps, int d) const {
  if (d < 0 || d > n_) throw domain_error("alpha: d must lie in [0, n]");
  int w = lpower_level(eps);
  int a = std::max(0, n_ - w) - std::max(0, d - w);
  if (a < 0 || a > n_ - d) throw internal_error("alpha out of [0, n-d]");
  return a;
}

}  // namespace kummer
