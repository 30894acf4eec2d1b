#include "kummer/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kummer {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (a.q() != b.q()) throw domain_error("polynomials over different fields");
}

u64 q_add(u64 q, u64 a, u64 b) {
  u64 s = a + b;
  return s >= q ? s - q : s;
}
u64 q_sub(u64 q, u64 a, u64 b) { return a >= b ? a - b : a + q - b; }
u64 q_inv(u64 q, u64 a) {
  // Fermat; q is prime everywhere in this library.
  u64 r = 1, x = a % q;
  u64 e = q - 2;
  while (e) {
    if (e & 1) r = mulmod(r, x, q);
    x = mulmod(x, x, q);
    e >>= 1;
  }
  return r;
}

}  // namespace

Poly::Poly(u64 q, std::vector<u64> coeffs) : q_(q), c_(std::move(coeffs)) {
  if (q < 2) throw domain_error("polynomial modulus must be >= 2");
  for (auto& x : c_) x %= q_;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 Poly::leading() const {
  if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

Poly add(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = q_add(a.q(), a.coeff(i), b.coeff(i));
  return Poly(a.q(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = q_sub(a.q(), a.coeff(i), b.coeff(i));
  return Poly(a.q(), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.q());
  std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = q_add(a.q(), c[i + j], mulmod(a.coeff(i), b.coeff(j), a.q()));
  }
  return Poly(a.q(), std::move(c));
}

Poly mul_scalar(const Poly& a, u64 s) {
  std::vector<u64> c = a.coeffs();
  for (auto& x : c) x = mulmod(x, s % a.q(), a.q());
  return Poly(a.q(), std::move(c));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly::zero(a.q()), a};
  const u64 q = a.q();
  std::vector<u64> r = a.coeffs();
  std::vector<u64> quo(a.coeffs().size() - b.coeffs().size() + 1, 0);
  u64 lead_inv = q_inv(q, b.leading());
  for (size_t i = quo.size(); i-- > 0;) {
    u64 f = mulmod(r[i + b.coeffs().size() - 1], lead_inv, q);
    quo[i] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      r[i + j] = q_sub(q, r[i + j], mulmod(f, b.coeff(j), q));
  }
  return {Poly(q, std::move(quo)), Poly(q, std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return mul_scalar(a, q_inv(a.q(), a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(x, y);
    x = y;
    y = r;
  }
  return monic(x);
}

Poly powmod(const Poly& base, u128 e, const Poly& mod) {
  Poly r = Poly::constant(base.q(), 1);
  Poly x = rem(base, mod);
  while (e > 0) {
    if (e & 1) r = rem(mul(r, x), mod);
    x = rem(mul(x, x), mod);
    e >>= 1;
  }
  return r;
}

Poly derivative(const Poly& a) {
  if (a.coeffs().size() <= 1) return Poly::zero(a.q());
  std::vector<u64> c(a.coeffs().size() - 1);
  for (size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = mulmod(a.coeff(i), i % a.q(), a.q());
  return Poly(a.q(), std::move(c));
}

u64 eval(const Poly& a, u64 x) {
  u64 r = 0;
  for (size_t i = a.coeffs().size(); i-- > 0;) r = q_add(a.q(), mulmod(r, x, a.q()), a.coeff(i));
  return r;
}

std::string to_coeff_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.coeff(i));
  }
  return s;
}

Poly poly_from_coeff_string(u64 q, const std::string& s) {
  std::vector<u64> c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw domain_error("bad coefficient '" + item + "'");
    }
    while (pos < item.size() && isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw domain_error("bad coefficient '" + item + "'");
    c.push_back(mod_i128(v, q));
  }
  if (c.empty()) throw domain_error("empty polynomial literal");
  return Poly(q, std::move(c));
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) throw domain_error("irreducibility test needs degree >= 1");
  const u64 q = p.q();
  const u64 d = static_cast<u64>(p.degree());
  if (d == 1) return true;
  Poly x = Poly::t(q);
  // Rabin: T^(q^d) == T mod p, and gcd(T^(q^(d/t)) - T, p) = 1 for primes t | d.
  auto frob_power = [&](u64 k) {
    Poly r = rem(x, p);
    for (u64 i = 0; i < k; ++i) r = powmod(r, q, p);
    return r;
  };
  if (!rem(sub(frob_power(d), x), p).is_zero()) return false;
  u64 m = d;
  std::vector<u64> prime_divs;
  for (u64 t = 2; t * t <= m; ++t) {
    if (m % t == 0) {
      prime_divs.push_back(t);
      while (m % t == 0) m /= t;
    }
  }
  if (m > 1) prime_divs.push_back(m);
  for (u64 t : prime_divs) {
    Poly g = gcd(sub(frob_power(d / t), x), p);
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace {

// Square-free decomposition in characteristic q (q prime, so the base field
// is perfect and p-th roots leave coefficients unchanged).
std::map<Poly, int> squarefree_parts(const Poly& f0) {
  std::map<Poly, int> out;
  const u64 q = f0.q();
  struct Item {
    Poly f;
    int mult;
  };
  std::vector<Item> work{{monic(f0), 1}};
  while (!work.empty()) {
    auto [f, mult] = work.back();
    work.pop_back();
    if (f.degree() < 1) continue;
    Poly fp = derivative(f);
    if (fp.is_zero()) {
      // f = g(T^q); extract the q-th root and scale multiplicity.
      std::vector<u64> c;
      for (size_t i = 0; i < f.coeffs().size(); i += static_cast<size_t>(q))
        c.push_back(f.coeff(i));
      work.push_back({Poly(q, std::move(c)), mult * static_cast<int>(q)});
      continue;
    }
    Poly a = gcd(f, fp);
    Poly w = divrem(f, a).first;  // product of squarefree factors at this level
    int i = 1;
    while (w.degree() >= 1) {
      Poly y = gcd(w, a);
      Poly sf = divrem(w, y).first;  // factors of exact multiplicity i
      if (sf.degree() >= 1) out[monic(sf)] += mult * i;
      a = divrem(a, y).first;
      w = y;
      ++i;
    }
    if (a.degree() >= 1) work.push_back({a, mult});
  }
  return out;
}

std::vector<Poly> distinct_degree(const Poly& f) {
  // returns products of irreducible factors grouped by degree; index = degree,
  // entry may be the constant 1
  const u64 q = f.q();
  std::vector<Poly> groups(static_cast<size_t>(f.degree()) + 1, Poly::constant(q, 1));
  Poly rest = f;
  Poly h = rem(Poly::t(q), rest);
  u64 d = 0;
  while (rest.degree() > static_cast<i64>(2 * (d + 1)) - 1 && rest.degree() >= 1) {
    ++d;
    h = powmod(h, q, rest);
    Poly g = gcd(sub(h, Poly::t(q)), rest);
    if (g.degree() >= 1) {
      groups[d] = g;
      rest = divrem(rest, g).first;
      h = rem(h, rest);
    }
  }
  if (rest.degree() >= 1) groups[static_cast<size_t>(rest.degree())] = rest;
  return groups;
}

Poly random_poly_below(std::mt19937_64& rng, u64 q, i64 deg_bound) {
  std::vector<u64> c(static_cast<size_t>(deg_bound));
  std::uniform_int_distribution<u64> dist(0, q - 1);
  for (auto& x : c) x = dist(rng);
  return Poly(q, std::move(c));
}

void equal_degree_split(const Poly& f, u64 d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<i64>(d)) {
    out.push_back(monic(f));
    return;
  }
  const u64 q = f.q();
  // Cantor-Zassenhaus for odd q: gcd(h^((q^d-1)/2) - 1, f) splits f.
  // h^((q^d-1)/2) = N(h)^((q-1)/2) with N(h) = h^(1+q+...+q^(d-1)),
  // keeping every exponent below q.
  while (true) {
    Poly h = random_poly_below(rng, q, f.degree());
    if (h.degree() < 1) continue;
    Poly g = gcd(h, f);
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divrem(f, g).first, d, rng, out);
      return;
    }
    Poly norm = rem(h, f);
    Poly frob = norm;
    for (u64 i = 1; i < d; ++i) {
      frob = powmod(frob, q, f);
      norm = rem(mul(norm, frob), f);
    }
    Poly t = sub(powmod(norm, (q - 1) / 2, f), Poly::constant(q, 1));
    g = gcd(t, f);
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divrem(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const Poly& p, std::mt19937_64& rng) {
  if (p.is_zero()) throw domain_error("factor of zero polynomial");
  Factorization out;
  out.unit = p.leading();
  if (p.degree() == 0) return out;
  std::map<Poly, int> irreducibles;
  for (const auto& [sf, mult] : squarefree_parts(p)) {
    auto groups = distinct_degree(sf);
    for (u64 d = 1; d < groups.size(); ++d) {
      if (groups[d].degree() < 1) continue;
      std::vector<Poly> split;
      equal_degree_split(groups[d], d, rng, split);
      for (const auto& irr : split) irreducibles[irr] += mult;
    }
  }
  out.factors.assign(irreducibles.begin(), irreducibles.end());
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Factorization factor(const Poly& p, u64 seed) {
  std::mt19937_64 rng(seed);
  return factor(p, rng);
}

}  // namespace kummer
