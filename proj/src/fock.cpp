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

#include "avgfusion/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace avgfusion {

namespace {

int sum_occupations(const std::vector<int>& occ) {
  int total = 0;
  for (int n : occ) {
    if (n < 0) {
      throw std::invalid_argument("FockKet: negative occupation");
    }
    total += n;
  }
  return total;
}

double sqrt_factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return std::sqrt(f);
}

void require_same_modes(const StateVec& a, const StateVec& b, const char* op) {
  if (a.mode_count() != b.mode_count()) {
    throw std::invalid_argument(std::string(op) + ": mode-count mismatch");
  }
}

}  // namespace

FockKet::FockKet(std::vector<int> occupations)
    : occ_(std::move(occupations)), photons_(sum_occupations(occ_)) {}

FockKet::FockKet(std::initializer_list<int> occupations)
    : FockKet(std::vector<int>(occupations)) {}

FockKet FockKet::vacuum(int modes) {
  if (modes < 0) throw std::invalid_argument("FockKet::vacuum: negative modes");
  return FockKet(std::vector<int>(static_cast<std::size_t>(modes), 0));
}

FockKet FockKet::parse(const std::string& text) {
  std::vector<int> occ;
  for (char c : text) {
    if (c == '|' || c == '>' || c == ' ') continue;
    if (c < '0' || c > '9') {
      throw std::invalid_argument("FockKet::parse: unexpected character in '" +
                                  text + "'");
    }
    occ.push_back(c - '0');
  }
  return FockKet(std::move(occ));
}

std::string FockKet::to_string() const {
  std::string out = "|";
  for (std::size_t i = 0; i < occ_.size(); ++i) {
    if (occ_[i] > 9) {
      out += (i ? "," : "") + std::to_string(occ_[i]) + ",";
    } else {
      out += static_cast<char>('0' + occ_[i]);
    }
  }
  return out + ">";
}

FockKet concat(const FockKet& a, const FockKet& b) {
  std::vector<int> occ(a.occupations().begin(), a.occupations().end());
  occ.insert(occ.end(), b.occupations().begin(), b.occupations().end());
  return FockKet(std::move(occ));
}

StateVec::StateVec(int mode_count) : modes_(mode_count) {
  if (mode_count < 0) {
    throw std::invalid_argument("StateVec: negative mode count");
  }
}

StateVec::StateVec(int mode_count,
                   std::initializer_list<std::pair<FockKet, Complex>> terms)
    : StateVec(mode_count) {
  for (const auto& [ket, amp] : terms) add(ket, amp);
  prune();
}

StateVec StateVec::basis(const FockKet& ket, Complex amplitude) {
  StateVec s(ket.mode_count());
  s.add(ket, amplitude);
  s.prune();
  return s;
}

int StateVec::photon_count() const {
  return terms_.empty() ? -1 : terms_.begin()->first.photon_count();
}

Complex StateVec::amplitude(const FockKet& ket) const {
  auto it = terms_.find(ket);
  return it == terms_.end() ? Complex{} : it->second;
}

void StateVec::add(const FockKet& ket, Complex amplitude) {
  if (ket.mode_count() != modes_) {
    throw std::invalid_argument("StateVec::add: ket " + ket.to_string() +
                                " does not match mode count " +
                                std::to_string(modes_));
  }
  if (!terms_.empty() && ket.photon_count() != photon_count()) {
    throw std::invalid_argument(
        "StateVec::add: mixed photon numbers in one state");
  }
  terms_[ket] += amplitude;
}

void StateVec::prune() {
  std::erase_if(terms_, [](const auto& kv) {
    return std::abs(kv.second) <= kPruneThreshold;
  });
}

StateVec& StateVec::operator*=(Complex factor) {
  for (auto& [ket, amp] : terms_) amp *= factor;
  prune();
  return *this;
}

StateVec operator+(const StateVec& a, const StateVec& b) {
  require_same_modes(a, b, "StateVec +");
  StateVec out = a;
  for (const auto& [ket, amp] : b.terms_) out.add(ket, amp);
  out.prune();
  return out;
}

StateVec operator-(const StateVec& a, const StateVec& b) {
  return a + Complex(-1.0) * b;
}

std::string StateVec::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [ket, amp] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+")
       << std::abs(amp.imag()) << "i)" << ket.to_string();
  }
  return os.str();
}

std::uint64_t fock_dimension(int n_modes, int n_photons) {
  if (n_modes < 1 || n_photons < 0) {
    throw std::invalid_argument(
        "fock_dimension: need n_modes >= 1 and n_photons >= 0");
  }
  // C(n_modes + n_photons - 1, n_photons). After step i the running value is
  // C(n_modes - 1 + i, i), so result * x / i is exact; dividing the common
  // factor out first keeps the product overflow check exact too.
  std::uint64_t result = 1;
  for (int i = 1; i <= n_photons; ++i) {
    auto x = static_cast<std::uint64_t>(n_modes - 1 + i);
    auto d = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, d);
    result /= g;
    d /= g;
    x /= d;
    if (result > std::numeric_limits<std::uint64_t>::max() / x) {
      throw std::overflow_error("fock_dimension: count exceeds 64 bits");
    }
    result *= x;
  }
  return result;
}

StateVec tensor(const StateVec& a, const StateVec& b) {
  StateVec out(a.mode_count() + b.mode_count());
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      out.add(concat(ka, kb), va * vb);
    }
  }
  out.prune();
  return out;
}

Complex inner_product(const StateVec& a, const StateVec& b) {
  require_same_modes(a, b, "inner_product");
  Complex acc{};
  const auto& small = a.size() <= b.size() ? a.terms() : b.terms();
  const bool a_small = a.size() <= b.size();
  for (const auto& [ket, amp] : small) {
    const Complex other = a_small ? b.amplitude(ket) : a.amplitude(ket);
    acc += a_small ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return acc;
}

double norm_sq(const StateVec& s) {
  double acc = 0.0;
  for (const auto& [ket, amp] : s.terms()) acc += std::norm(amp);
  return acc;
}

StateVec apply_transfer(const TransferMatrix& t, const StateVec& s) {
  if (t.dim() != s.mode_count()) {
    throw std::invalid_argument("apply_transfer: dimension mismatch (matrix " +
                                std::to_string(t.dim()) + ", state " +
                                std::to_string(s.mode_count()) + ")");
  }
  const int modes = s.mode_count();
  const auto& m = t.matrix();

  // Nonzero column entries, so sparse maps (permutations, passthrough
  // identities) expand only into reachable modes.
  std::vector<std::vector<std::pair<int, Complex>>> column(modes);
  for (int j = 0; j < modes; ++j) {
    for (int l = 0; l < modes; ++l) {
      if (m(l, j) != Complex{}) column[j].emplace_back(l, m(l, j));
    }
  }

  StateVec out(modes);
  using Poly = std::map<std::vector<int>, Complex>;
  for (const auto& [ket, amp] : s.terms()) {
    double in_norm = 1.0;
    for (int n : ket.occupations()) in_norm *= sqrt_factorial(n);

    // Monomial coefficients of prod_j (sum_l m(l,j) a_l^dagger)^{n_j}.
    Poly poly{{std::vector<int>(modes, 0), amp / in_norm}};
    for (int j = 0; j < modes; ++j) {
      for (int rep = 0; rep < ket[j]; ++rep) {
        Poly next;
        for (const auto& [mono, coeff] : poly) {
          for (const auto& [l, entry] : column[j]) {
            auto grown = mono;
            ++grown[l];
            next[std::move(grown)] += coeff * entry;
          }
        }
        poly = std::move(next);
      }
    }
    for (auto& [mono, coeff] : poly) {
      double out_norm = 1.0;
      for (int n : mono) out_norm *= sqrt_factorial(n);
      out.add(FockKet(mono), coeff * out_norm);
    }
  }
  out.prune();
  return out;
}

double max_amplitude_deviation(const StateVec& a, const StateVec& b) {
  require_same_modes(a, b, "max_amplitude_deviation");
  double dev = 0.0;
  for (const auto& [ket, amp] : a.terms()) {
    dev = std::max(dev, std::abs(amp - b.amplitude(ket)));
  }
  for (const auto& [ket, amp] : b.terms()) {
    dev = std::max(dev, std::abs(amp - a.amplitude(ket)));
  }
  return dev;
}

double max_deviation_up_to_phase(const StateVec& a, const StateVec& b) {
  const Complex overlap = inner_product(b, a);
  Complex phase = 1.0;
  if (std::abs(overlap) > 0.0) phase = overlap / std::abs(overlap);
  return max_amplitude_deviation(a, phase * b);
}

StateVec remap_modes(const StateVec& s, std::span<const int> new_index,
                     int new_mode_count) {
  if (static_cast<int>(new_index.size()) != s.mode_count()) {
    throw std::invalid_argument("remap_modes: index map has wrong length");
  }
  std::vector<bool> used(static_cast<std::size_t>(std::max(new_mode_count, 0)));
  for (int target : new_index) {
    if (target < 0 || target >= new_mode_count) {
      throw std::invalid_argument("remap_modes: target index out of range");
    }
    if (used[static_cast<std::size_t>(target)]) {
      throw std::invalid_argument("remap_modes: target index used twice");
    }
    used[static_cast<std::size_t>(target)] = true;
  }
  StateVec out(new_mode_count);
  for (const auto& [ket, amp] : s.terms()) {
    std::vector<int> occ(static_cast<std::size_t>(new_mode_count), 0);
    for (int i = 0; i < s.mode_count(); ++i) {
      occ[static_cast<std::size_t>(new_index[static_cast<std::size_t>(i)])] = ket[i];
    }
    out.add(FockKet(std::move(occ)), amp);
  }
  out.prune();
  return out;
}

}  // namespace avgfusion
