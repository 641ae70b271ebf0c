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

#include <vector>

#include "avgfusion/fock.hpp"
#include "avgfusion/transfer_matrix.hpp"

namespace avgfusion {

/// Mode bookkeeping for an N-copy averaged gate of width m.
///
/// Encoded modes are laid out logical-major: logical mode j, replica r sits
/// at physical index j * N + r. Replica 0 of each logical mode is the primary
/// line; replicas 1..N-1 are ancillas. Passthrough modes follow the encoded
/// block and are never encoded.
class NetworkLayout {
 public:
  NetworkLayout(int n_copies, int n_logical, int n_passthrough);

  int n_copies() const { return copies_; }
  int n_logical() const { return logical_; }
  int n_passthrough() const { return passthrough_; }
  int encoded_modes() const { return logical_ * copies_; }
  int total_modes() const { return encoded_modes() + passthrough_; }
  /// Modes left after ancilla post-selection: primaries, then passthrough.
  int kept_mode_count() const { return logical_ + passthrough_; }

  int physical(int logical, int replica) const;
  int passthrough(int index) const;

  /// Physical indices of the post-selected output, in the order used by
  /// the input and output of the averaged gate: primaries then passthrough.
  std::vector<int> kept_modes() const;
  std::vector<int> ancilla_modes() const;

 private:
  int copies_;
  int logical_;
  int passthrough_;
};

struct AveragedNetwork {
  NetworkLayout layout;
  TransferMatrix total;
  std::vector<TransferMatrix> copies;
};

/// Encode (per-mode DFT), route to the copies, apply them in parallel, route
/// back and decode with the DFT again; passthrough modes see the identity.
AveragedNetwork build_averaged_network(const std::vector<TransferMatrix>& copies,
                                       int n_passthrough);

/// Places `input_primary` (m + n_passthrough modes) on the primary and
/// passthrough lines with vacuum ancillas and evolves it through the network.
StateVec run_averaged(const AveragedNetwork& net, const StateVec& input_primary);

/// Keeps kets with every ancilla empty and drops the ancilla modes. The
/// result is unnormalized; its norm squared is the post-selection probability.
StateVec postselect_vacuum_ancilla(const StateVec& full_state,
                                   const NetworkLayout& layout);

}  // namespace avgfusion
