#pragma once

#include <cstdint>

namespace hpart {

// binom(n, k) in checked 64-bit arithmetic; throws InputError on overflow.
std::uint64_t binomial(int n, int k);

// tau(0,k) = k-2; tau(h,k) = tau(h-1, 2k+1) + k + 1. Closed form
// tau(h,0) = 2^(h+1) - 4.
std::int64_t tau(int h, int k);

// c(0,d,k) = 1; c(h,d,k) = max{d-1, 2, k, c(h-1, d+2k, 2k+1), 2(d-1)2^k - 1}.
std::int64_t c_param(int h, int d, int k);

// |V(K_k (+) U_{h,d})| = k + d(d^h - 1)/(d - 1); k + h for d = 1.
std::int64_t t_size(int h, int d, int k);

// Desk-scale replacement for the paper-level eps (whose gamma/delta come from
// the graph minor structure theorem and are non-constructive): the hitting
// set is taken from at most d-1 bags of an exact tree-decomposition of width
// < t, so the A-part is at most (d-1)t vertices and the B-part at most
// (d-1)t subgeodesics.
//   eps_impl(0,d,k,t) = max{k-3, 1}
//   eps_impl(h,d,k,t) = max{d-1, k, (d-1)t, eps_impl(h-1, d+2k, 2k+1, t)}
std::int64_t eps_impl(int h, int d, int k, int t);

// Grohe elimination bound binom(r+t, t).
std::uint64_t grohe_bound(int t, int r);

// Certified weak coloring bound for the ordered pipeline:
// 2 eps_impl(h,d,0,t) (2r+1) binom(tau(h,0)+r, tau(h,0)).
std::uint64_t wcol_pipeline_bound(int h, int d, int t, int r);

// K_t-minor-free chordal-partition bound
// binom(r+t-2, t-2) max{t-3,1} (2r+1).
std::uint64_t wcol_chordal_bound(int t, int r);

}  // namespace hpart
