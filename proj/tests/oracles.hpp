// Copyright 2026 The avgfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only reference implementations. Nothing here calls the evolution or
// closed-form code it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "avgfusion/fock.hpp"
#include "avgfusion/transfer_matrix.hpp"

namespace avgfusion::oracle {

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Permanent by summing over all permutations.
inline Complex permanent(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum = 0.0;
  do {
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a(i, perm[static_cast<std::size_t>(i)]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// <out| U |in> = Perm(T[out rows, in cols]) / sqrt(prod n! prod m!) for the
/// convention a_j^dagger -> sum_l T(l, j) a_l^dagger.
inline Complex transition_amplitude(const TransferMatrix& t, const FockKet& in,
                                    const FockKet& out) {
  if (in.photon_count() != out.photon_count()) return 0.0;
  std::vector<int> cols;
  std::vector<int> rows;
  double norm = 1.0;
  for (int j = 0; j < in.mode_count(); ++j) {
    for (int k = 0; k < in[j]; ++k) cols.push_back(j);
    norm *= factorial(in[j]);
  }
  for (int l = 0; l < out.mode_count(); ++l) {
    for (int k = 0; k < out[l]; ++k) rows.push_back(l);
    norm *= factorial(out[l]);
  }
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXcd sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) sub(r, c) = t(rows[static_cast<std::size_t>(r)],
                                               cols[static_cast<std::size_t>(c)]);
  }
  return permanent(sub) / std::sqrt(norm);
}

/// Every occupation vector with `photons` photons over `modes` modes.
inline std::vector<FockKet> enumerate_kets(int modes, int photons) {
  std::vector<FockKet> kets;
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  auto rec = [&](auto&& self, int mode, int left) -> void {
    if (mode == modes - 1) {
      occ[static_cast<std::size_t>(mode)] = left;
      kets.emplace_back(occ);
      return;
    }
    for (int n = left; n >= 0; --n) {
      occ[static_cast<std::size_t>(mode)] = n;
      self(self, mode + 1, left - n);
    }
  };
  rec(rec, 0, photons);
  return kets;
}

/// Output state computed one transition amplitude at a time.
inline StateVec evolve_by_permanents(const TransferMatrix& t, const StateVec& s) {
  StateVec out(s.mode_count());
  if (s.is_zero()) return out;
  for (const FockKet& o : enumerate_kets(s.mode_count(), s.photon_count())) {
    Complex amp = 0.0;
    for (const auto& [in, a] : s.terms()) amp += a * transition_amplitude(t, in, o);
    out.add(o, amp);
  }
  out.prune();
  return out;
}

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Eigen::MatrixXcd random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  return z;
}

/// Random superposition of up to `terms` kets with `photons` photons.
inline StateVec random_state(int modes, int photons, int terms, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> pick(0, modes - 1);
  StateVec s(modes);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    for (int p = 0; p < photons; ++p) ++occ[static_cast<std::size_t>(pick(rng))];
    s.add(FockKet(occ), Complex(g(rng), g(rng)));
  }
  s.prune();
  return s;
}

// BSM success probabilities expanded pair by pair, per copy count.

inline double sq(double eta) { return std::sqrt(eta); }
inline double sr(double eta) { return std::sqrt(1.0 - eta); }

inline double psuccess_pairwise_n2(const std::vector<double>& h,
                                   const std::vector<double>& v) {
  return 0.25 * (1 + sr(h[0]) * sr(h[1]) + sq(h[0]) * sq(h[1])) *
         (1 + sr(v[0]) * sr(v[1]) + sq(v[0]) * sq(v[1]));
}

inline double psuccess_pairwise_n3(const std::vector<double>& h,
                                   const std::vector<double>& v) {
  auto f = [](const std::vector<double>& e) {
    return 3 + 2 * (sr(e[0]) * sr(e[1]) + sr(e[0]) * sr(e[2]) + sr(e[1]) * sr(e[2]) +
                    sq(e[0]) * sq(e[1]) + sq(e[0]) * sq(e[2]) + sq(e[1]) * sq(e[2]));
  };
  return f(h) * f(v) / 81.0;
}

inline double psuccess_pairwise_n4(const std::vector<double>& h,
                                   const std::vector<double>& v) {
  auto f = [](const std::vector<double>& e) {
    return 2 + sr(e[0]) * sr(e[1]) + sr(e[0]) * sr(e[2]) + sr(e[0]) * sr(e[3]) +
           sr(e[1]) * sr(e[2]) + sr(e[1]) * sr(e[3]) + sr(e[2]) * sr(e[3]) +
           sq(e[0]) * sq(e[1]) + sq(e[0]) * sq(e[2]) + sq(e[0]) * sq(e[3]) +
           sq(e[1]) * sq(e[2]) + sq(e[1]) * sq(e[3]) + sq(e[2]) * sq(e[3]);
  };
  return f(h) * f(v) / 64.0;
}

// N = 5 with all ten pairs. `duplicate_pair` swaps in an H factor that counts
// the (4,5) transmitted pair twice and drops (3,5).
inline double psuccess_pairwise_n5(const std::vector<double>& h,
                                   const std::vector<double>& v, bool duplicate_pair) {
  auto reflected = [](const std::vector<double>& e) {
    return sr(e[0]) * sr(e[1]) + sr(e[0]) * sr(e[2]) + sr(e[0]) * sr(e[3]) +
           sr(e[0]) * sr(e[4]) + sr(e[1]) * sr(e[2]) + sr(e[1]) * sr(e[3]) +
           sr(e[1]) * sr(e[4]) + sr(e[2]) * sr(e[3]) + sr(e[2]) * sr(e[4]) +
           sr(e[3]) * sr(e[4]);
  };
  auto transmitted = [](const std::vector<double>& e) {
    return sq(e[0]) * sq(e[1]) + sq(e[0]) * sq(e[2]) + sq(e[0]) * sq(e[3]) +
           sq(e[0]) * sq(e[4]) + sq(e[1]) * sq(e[2]) + sq(e[1]) * sq(e[3]) +
           sq(e[1]) * sq(e[4]) + sq(e[2]) * sq(e[3]) + sq(e[2]) * sq(e[4]) +
           sq(e[3]) * sq(e[4]);
  };
  auto transmitted_h_duplicated = [](const std::vector<double>& e) {
    return sq(e[0]) * sq(e[1]) + sq(e[0]) * sq(e[2]) + sq(e[0]) * sq(e[3]) +
           sq(e[0]) * sq(e[4]) + sq(e[1]) * sq(e[2]) + sq(e[1]) * sq(e[3]) +
           sq(e[1]) * sq(e[4]) + sq(e[2]) * sq(e[3]) + sq(e[3]) * sq(e[4]) +
           sq(e[3]) * sq(e[4]);
  };
  const double hf = 5 + 2 * (reflected(h) + (duplicate_pair ? transmitted_h_duplicated(h)
                                                        : transmitted(h)));
  const double vf = 5 + 2 * (reflected(v) + transmitted(v));
  return hf * vf / 625.0;
}

/// Squared root-sum bracket of the unnormalized fidelity, without 1/N^4.
inline double fidelity_bracket(const std::vector<double>& h,
                                       const std::vector<double>& v) {
  double sh = 0, rh = 0, sv = 0, rv = 0;
  for (double e : h) sh += sq(e), rh += sr(e);
  for (double e : v) sv += sq(e), rv += sr(e);
  const double b = sh * rv + rh * sv;
  return b * b;
}

}  // namespace avgfusion::oracle
