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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "avgfusion/transfer_matrix.hpp"

namespace avgfusion {

/// Amplitudes at or below this magnitude are dropped from every state.
inline constexpr double kPruneThreshold = 1e-15;

/// Occupation-number basis vector |n_0 n_1 ... n_{M-1}>.
class FockKet {
 public:
  FockKet() = default;
  explicit FockKet(std::vector<int> occupations);
  FockKet(std::initializer_list<int> occupations);

  /// Vacuum on `modes` modes.
  static FockKet vacuum(int modes);
  /// Parses "|1001>" / "1001" (single-digit occupations).
  static FockKet parse(const std::string& text);

  int mode_count() const { return static_cast<int>(occ_.size()); }
  int photon_count() const { return photons_; }
  int operator[](int mode) const { return occ_[static_cast<std::size_t>(mode)]; }
  std::span<const int> occupations() const { return occ_; }

  std::string to_string() const;

  friend auto operator<=>(const FockKet& a, const FockKet& b) {
    return a.occ_ <=> b.occ_;
  }
  friend bool operator==(const FockKet& a, const FockKet& b) {
    return a.occ_ == b.occ_;
  }

 private:
  std::vector<int> occ_;
  int photons_ = 0;
};

/// Concatenation |a>|b>.
FockKet concat(const FockKet& a, const FockKet& b);

/// Sparse superposition of Fock kets over a fixed number of modes.
///
/// All kets share one total photon number; adding a ket with a different
/// count throws. The state is not renormalized anywhere.
class StateVec {
 public:
  using Terms = std::map<FockKet, Complex>;

  StateVec() = default;
  explicit StateVec(int mode_count);
  StateVec(int mode_count, std::initializer_list<std::pair<FockKet, Complex>> terms);

  static StateVec basis(const FockKet& ket, Complex amplitude = 1.0);

  int mode_count() const { return modes_; }
  /// -1 for the zero state.
  int photon_count() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Complex amplitude(const FockKet& ket) const;

  /// Accumulates `amplitude` onto `ket`.
  void add(const FockKet& ket, Complex amplitude);
  /// Drops entries with |amplitude| <= kPruneThreshold.
  void prune();

  StateVec& operator*=(Complex factor);
  friend StateVec operator*(Complex factor, StateVec s) { return s *= factor; }
  friend StateVec operator+(const StateVec& a, const StateVec& b);
  friend StateVec operator-(const StateVec& a, const StateVec& b);

  std::string to_string() const;

 private:
  int modes_ = 0;
  Terms terms_;
};

/// Number of Fock states of `n_photons` photons in `n_modes` modes.
/// Throws std::overflow_error when the count does not fit in 64 bits.
std::uint64_t fock_dimension(int n_modes, int n_photons);

StateVec tensor(const StateVec& a, const StateVec& b);

/// <a|b>, antilinear in `a`.
Complex inner_product(const StateVec& a, const StateVec& b);

double norm_sq(const StateVec& s);

/// Evolves `s` through the linear-optical map `t`.
///
/// Every creation operator a_j^dagger is replaced by sum_l t(l, j) a_l^dagger
/// and the resulting polynomial is re-expanded on the Fock basis with exact
/// sqrt(n!) factors. `t` need not be unitary.
StateVec apply_transfer(const TransferMatrix& t, const StateVec& s);

/// Largest componentwise |a - b| over the union of supports.
double max_amplitude_deviation(const StateVec& a, const StateVec& b);

/// Same as max_amplitude_deviation after removing the best global phase
/// from `b` relative to `a`.
double max_deviation_up_to_phase(const StateVec& a, const StateVec& b);

/// Moves each mode i of `s` to position `new_index[i]` in a state with
/// `new_mode_count` modes (unlisted target modes are vacuum).
StateVec remap_modes(const StateVec& s, std::span<const int> new_index,
                     int new_mode_count);

}  // namespace avgfusion
