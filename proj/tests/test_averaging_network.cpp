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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "avgfusion/averaging_network.hpp"
#include "avgfusion/interferometry.hpp"
#include "oracles.hpp"

namespace avgfusion {
namespace {

// Reference: the kept modes see (1/N) sum_r U_r, with passthrough untouched.
StateVec expected_kept(const std::vector<TransferMatrix>& copies, int n_pass,
                       const StateVec& input) {
  const Eigen::Index m = copies[0].dim();
  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& c : copies) avg += c.matrix();
  avg /= static_cast<double>(copies.size());
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(m + n_pass, m + n_pass);
  full.topLeftCorner(m, m) = avg;
  return oracle::evolve_by_permanents(TransferMatrix::general(full), input);
}

StateVec run_kept(const std::vector<TransferMatrix>& copies, int n_pass,
                  const StateVec& input) {
  const auto net = build_averaged_network(copies, n_pass);
  return postselect_vacuum_ancilla(run_averaged(net, input), net.layout);
}

TEST(NetworkLayout, Indices) {
  const NetworkLayout l(2, 4, 3);
  EXPECT_EQ(l.physical(2, 1), 5);
  EXPECT_EQ(l.physical(0, 0), 0);
  EXPECT_EQ(l.passthrough(0), 8);
  EXPECT_EQ(l.total_modes(), 11);
  EXPECT_EQ(l.kept_mode_count(), 7);
  EXPECT_EQ(l.kept_modes(), (std::vector<int>{0, 2, 4, 6, 8, 9, 10}));
  EXPECT_EQ(l.ancilla_modes(), (std::vector<int>{1, 3, 5, 7}));
  EXPECT_THROW(l.physical(4, 0), std::out_of_range);
  EXPECT_THROW(l.physical(0, 2), std::out_of_range);
  EXPECT_THROW(NetworkLayout(0, 4, 0), std::invalid_argument);
}

TEST(AveragedNetwork, SingleCopyIsTheCopy) {
  const auto f = fusion_gate(0.3, 0.7);
  const auto net = build_averaged_network({f}, 0);
  EXPECT_LT((net.total.matrix() - f.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  const auto with_pass = build_averaged_network({f}, 2);
  EXPECT_EQ(with_pass.total.dim(), 6);
  EXPECT_EQ(with_pass.total(5, 5), Complex(1.0));
}

TEST(AveragedNetwork, IdenticalCopiesSucceedWithCertainty) {
  const auto b = bsm_matrix(0.35, 0.8);
  const StateVec in(4, {{FockKet{1, 0, 0, 1}, 0.6}, {FockKet{0, 1, 1, 0}, Complex(0, 0.8)}});
  const StateVec kept = run_kept({b, b, b}, 0, in);
  EXPECT_NEAR(norm_sq(kept), 1.0, 1e-12);
  EXPECT_LT(max_amplitude_deviation(kept, apply_transfer(b, in)), 1e-12);
}

TEST(AveragedNetwork, OppositeCopiesCancel) {
  const auto plus = TransferMatrix::identity(1);
  Eigen::MatrixXcd minus_one(1, 1);
  minus_one << -1.0;
  const auto minus = TransferMatrix::unitary(minus_one);
  const StateVec kept = run_kept({plus, minus}, 0, StateVec::basis(FockKet{1}));
  EXPECT_TRUE(kept.is_zero());
}

TEST(AveragedNetwork, PassthroughSpectatorsAreUntouched) {
  const auto b = beamsplitter_layer(0.5, 0.5);
  const StateVec in = StateVec::basis(FockKet{1, 0, 0, 0, 2, 1});
  const StateVec kept = run_kept({b, TransferMatrix::identity(4)}, 2, in);
  EXPECT_LT(max_amplitude_deviation(kept, expected_kept({b, TransferMatrix::identity(4)}, 2, in)),
            1e-13);
  for (const auto& [ket, amp] : kept.terms()) {
    EXPECT_EQ(ket[4], 2);
    EXPECT_EQ(ket[5], 1);
  }
}

TEST(AveragedNetwork, TotalIsUnitary) {
  std::mt19937_64 rng(77);
  for (int n = 1; n <= 5; ++n) {
    std::vector<TransferMatrix> copies;
    for (int i = 0; i < n; ++i) {
      copies.push_back(TransferMatrix::unitary(oracle::random_unitary(3, rng)));
    }
    const auto net = build_averaged_network(copies, 1);
    EXPECT_TRUE(net.total.unitary_flag());
    EXPECT_LT(unitarity_defect(net.total.matrix()), 1e-12) << n;
  }
}

TEST(AveragedNetwork, RejectsBadInputs) {
  EXPECT_THROW(build_averaged_network({}, 0), std::invalid_argument);
  EXPECT_THROW(build_averaged_network({dft_matrix(2), dft_matrix(3)}, 0),
               std::invalid_argument);
  Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  EXPECT_THROW(build_averaged_network({TransferMatrix::general(half)}, 0),
               std::invalid_argument);
  const auto net = build_averaged_network({dft_matrix(2), dft_matrix(2)}, 1);
  EXPECT_THROW(run_averaged(net, StateVec::basis(FockKet{1, 0})), std::invalid_argument);
  EXPECT_THROW(postselect_vacuum_ancilla(StateVec::basis(FockKet{1, 0, 0}), net.layout),
               std::invalid_argument);
}

TEST(AveragedNetwork, UnitaryFlagIsRestoredOnCopies) {
  const auto d = dft_matrix(2);
  const auto flagged_general = TransferMatrix::general(d.matrix());
  const auto net = build_averaged_network({flagged_general, d}, 0);
  EXPECT_TRUE(net.copies[0].unitary_flag());
}

// Post-selected output equals evolution under the averaged map.
class AveragingEquivalence : public ::testing::TestWithParam<int> {};

TEST_P(AveragingEquivalence, RandomUnitaries) {
  std::mt19937_64 rng(500 + GetParam());
  const int n_copies = 2 + GetParam() % 3;
  const int modes = 2 + GetParam() % 2;
  const int n_pass = GetParam() % 2;
  const int photons = 1 + GetParam() % 3;
  std::vector<TransferMatrix> copies;
  for (int i = 0; i < n_copies; ++i) {
    copies.push_back(TransferMatrix::unitary(oracle::random_unitary(modes, rng)));
  }
  const StateVec in = oracle::random_state(modes + n_pass, photons, 3, rng);
  EXPECT_LT(max_amplitude_deviation(run_kept(copies, n_pass, in),
                                    expected_kept(copies, n_pass, in)),
            1e-10);
}

TEST_P(AveragingEquivalence, NoisyFusionGates) {
  std::mt19937_64 rng(900 + GetParam());
  std::uniform_real_distribution<double> eta(0.2, 0.8);
  const int n_copies = 2 + GetParam() % 3;
  std::vector<TransferMatrix> copies;
  for (int i = 0; i < n_copies; ++i) copies.push_back(fusion_gate(eta(rng), eta(rng)));
  const StateVec in(6, {{FockKet{1, 0, 1, 0, 1, 0}, 0.5},
                        {FockKet{0, 1, 1, 0, 0, 1}, 0.5},
                        {FockKet{1, 0, 0, 1, 1, 0}, -0.5},
                        {FockKet{0, 1, 0, 1, 0, 1}, Complex(0, 0.5)}});
  EXPECT_LT(max_amplitude_deviation(run_kept(copies, 2, in), expected_kept(copies, 2, in)),
            1e-10);
}

INSTANTIATE_TEST_SUITE_P(Seeds, AveragingEquivalence, ::testing::Range(0, 12));

}  // namespace
}  // namespace avgfusion
