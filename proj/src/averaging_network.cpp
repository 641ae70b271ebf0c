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

#include "avgfusion/averaging_network.hpp"

#include <stdexcept>
#include <string>

#include "avgfusion/interferometry.hpp"

namespace avgfusion {

NetworkLayout::NetworkLayout(int n_copies, int n_logical, int n_passthrough)
    : copies_(n_copies), logical_(n_logical), passthrough_(n_passthrough) {
  if (n_copies < 1 || n_logical < 1 || n_passthrough < 0) {
    throw std::invalid_argument(
        "NetworkLayout: need N >= 1, m >= 1 and n_passthrough >= 0");
  }
}

int NetworkLayout::physical(int logical, int replica) const {
  if (logical < 0 || logical >= logical_ || replica < 0 || replica >= copies_) {
    throw std::out_of_range("NetworkLayout::physical: index out of range");
  }
  return logical * copies_ + replica;
}

int NetworkLayout::passthrough(int index) const {
  if (index < 0 || index >= passthrough_) {
    throw std::out_of_range("NetworkLayout::passthrough: index out of range");
  }
  return encoded_modes() + index;
}

std::vector<int> NetworkLayout::kept_modes() const {
  std::vector<int> modes;
  modes.reserve(static_cast<std::size_t>(kept_mode_count()));
  for (int j = 0; j < logical_; ++j) modes.push_back(physical(j, 0));
  for (int i = 0; i < passthrough_; ++i) modes.push_back(passthrough(i));
  return modes;
}

std::vector<int> NetworkLayout::ancilla_modes() const {
  std::vector<int> modes;
  for (int j = 0; j < logical_; ++j) {
    for (int r = 1; r < copies_; ++r) modes.push_back(physical(j, r));
  }
  return modes;
}

AveragedNetwork build_averaged_network(const std::vector<TransferMatrix>& copies,
                                       int n_passthrough) {
  if (copies.empty()) {
    throw std::invalid_argument("build_averaged_network: no copies");
  }
  const int n = static_cast<int>(copies.size());
  const int m = static_cast<int>(copies.front().dim());
  std::vector<TransferMatrix> checked;
  checked.reserve(copies.size());
  for (const auto& c : copies) {
    if (c.dim() != m) {
      throw std::invalid_argument(
          "build_averaged_network: copies have different dimensions");
    }
    if (!c.is_unitary()) {
      throw std::invalid_argument("build_averaged_network: copy is not unitary");
    }
    checked.push_back(TransferMatrix::unitary(c.matrix()));
  }
  NetworkLayout layout(n, m, n_passthrough);

  const std::vector<TransferMatrix> dft_blocks(static_cast<std::size_t>(m),
                                               dft_matrix(n));
  const TransferMatrix dft_layer = direct_sum(dft_blocks);

  // Logical-major (j * N + r) to copy-major (r * m + j).
  std::vector<int> to_copy_major(static_cast<std::size_t>(m * n));
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < n; ++r) {
      to_copy_major[static_cast<std::size_t>(layout.physical(j, r))] = r * m + j;
    }
  }
  const TransferMatrix route = permutation_matrix(to_copy_major);

  const TransferMatrix encoded =
      dft_layer * route.adjoint() * direct_sum(checked) * route * dft_layer;

  TransferMatrix total = n_passthrough > 0
                             ? direct_sum(encoded, TransferMatrix::identity(n_passthrough))
                             : encoded;
  return AveragedNetwork{layout, std::move(total), std::move(checked)};
}

StateVec run_averaged(const AveragedNetwork& net, const StateVec& input_primary) {
  const NetworkLayout& layout = net.layout;
  if (input_primary.mode_count() != layout.kept_mode_count()) {
    throw std::invalid_argument(
        "run_averaged: input has " + std::to_string(input_primary.mode_count()) +
        " modes, network expects " + std::to_string(layout.kept_mode_count()));
  }
  const std::vector<int> kept = layout.kept_modes();
  const StateVec embedded = remap_modes(input_primary, kept, layout.total_modes());
  return apply_transfer(net.total, embedded);
}

StateVec postselect_vacuum_ancilla(const StateVec& full_state,
                                   const NetworkLayout& layout) {
  if (full_state.mode_count() != layout.total_modes()) {
    throw std::invalid_argument(
        "postselect_vacuum_ancilla: state does not match the layout");
  }
  const std::vector<int> kept = layout.kept_modes();
  const std::vector<int> ancillas = layout.ancilla_modes();
  StateVec out(layout.kept_mode_count());
  for (const auto& [ket, amp] : full_state.terms()) {
    bool vacuum = true;
    for (int a : ancillas) {
      if (ket[a] != 0) {
        vacuum = false;
        break;
      }
    }
    if (!vacuum) continue;
    std::vector<int> occ;
    occ.reserve(kept.size());
    for (int p : kept) occ.push_back(ket[p]);
    out.add(FockKet(std::move(occ)), amp);
  }
  out.prune();
  return out;
}

}  // namespace avgfusion
