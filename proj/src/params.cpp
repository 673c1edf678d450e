#include "hpart/params.hpp"

#include <algorithm>

#include "hpart/errors.hpp"

namespace hpart {

namespace {

constexpr int kMaxH = 24;  // k roughly doubles per level; keeps int64 safe

void check_common(int h, int d, int k) {
  if (h < 0 || h > kMaxH) throw InputError("parameter h out of range");
  if (d < 0 || k < 0) throw InputError("parameters d, k must be non-negative");
  if (k > 100000000) throw InputError("parameter k out of range");
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX))
      throw InputError("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::int64_t tau(int h, int k) {
  check_common(h, 1, k);
  std::int64_t kk = k, add = 0;
  for (int level = h; level >= 1; --level) {
    add += kk + 1;
    kk = 2 * kk + 1;
  }
  return add + (kk - 2);
}

std::int64_t c_param(int h, int d, int k) {
  check_common(h, d, k);
  if (h == 0) return 1;
  if (k > 62) throw InputError("c_param: 2^k overflows");
  std::int64_t rec = c_param(h - 1, d + 2 * k, 2 * k + 1);
  std::int64_t pow2k = std::int64_t{1} << k;
  return std::max<std::int64_t>(
      {d - 1, 2, k, rec, 2 * (d - 1) * pow2k - 1});
}

std::int64_t t_size(int h, int d, int k) {
  check_common(h, d, k);
  if (d < 1) throw InputError("t_size requires d >= 1");
  if (d == 1) return k + h;
  std::int64_t tree = 0, level = 1;
  for (int i = 0; i < h; ++i) {
    tree += level;
    if (tree > (std::int64_t{1} << 40)) throw InputError("t_size overflows");
    level *= d;
  }
  return k + d * tree;
}

std::int64_t eps_impl(int h, int d, int k, int t) {
  check_common(h, d, k);
  if (t < 1) throw InputError("eps_impl requires t >= 1");
  if (h == 0) return std::max<std::int64_t>(k - 3, 1);
  std::int64_t rec = eps_impl(h - 1, d + 2 * k, 2 * k + 1, t);
  return std::max<std::int64_t>(
      {d - 1, k, static_cast<std::int64_t>(d - 1) * t, rec});
}

std::uint64_t grohe_bound(int t, int r) { return binomial(r + t, t); }

std::uint64_t wcol_pipeline_bound(int h, int d, int t, int r) {
  std::uint64_t e = static_cast<std::uint64_t>(eps_impl(h, d, 0, t));
  std::uint64_t binom = binomial(static_cast<int>(tau(h, 0)) + r,
                                 static_cast<int>(tau(h, 0)));
  unsigned __int128 val =
      static_cast<unsigned __int128>(2) * e * (2 * r + 1) * binom;
  if (val > static_cast<unsigned __int128>(UINT64_MAX))
    throw InputError("wcol bound overflows 64 bits");
  return static_cast<std::uint64_t>(val);
}

std::uint64_t wcol_chordal_bound(int t, int r) {
  if (t < 3) throw InputError("wcol_chordal_bound requires t >= 3");
  std::uint64_t geod = static_cast<std::uint64_t>(std::max(t - 3, 1));
  unsigned __int128 val = static_cast<unsigned __int128>(
                              binomial(r + t - 2, t - 2)) *
                          geod * (2 * r + 1);
  if (val > static_cast<unsigned __int128>(UINT64_MAX))
    throw InputError("wcol bound overflows 64 bits");
  return static_cast<std::uint64_t>(val);
}

}  // namespace hpart
