#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kummer {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant or precondition that valid inputs cannot reach.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

std::string dec_string(u128 x);
std::string dec_string(i128 x);
i128 parse_i128(const std::string& s);

// ell^e as u64, throws on overflow.
u64 ipow_u64(u64 ell, unsigned e);

// ell-adic valuation of |x|; x must be nonzero.
int nu_ell(i128 x, u64 ell);
int nu_ell(u128 x, u64 ell);

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

// Least nonnegative residue of x mod m (m > 0).
inline u64 mod_i128(i128 x, u64 m) {
  i128 r = x % (i128)m;
  if (r < 0) r += (i128)m;
  return static_cast<u64>(r);
}

}  // namespace kummer
