// Copyright 2026 The cxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cxlab/pauli_algebra.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cxlab {
namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// σ_a σ_b = i^k σ_c for single-qubit letters, indexed [a][b] -> {c, k}.
struct LetterProduct {
  Pauli letter;
  int i_power;
};
constexpr LetterProduct kLetterTable[4][4] = {
    {{Pauli::I, 0}, {Pauli::X, 0}, {Pauli::Y, 0}, {Pauli::Z, 0}},
    {{Pauli::X, 0}, {Pauli::I, 0}, {Pauli::Z, 1}, {Pauli::Y, 3}},
    {{Pauli::Y, 0}, {Pauli::Z, 3}, {Pauli::I, 0}, {Pauli::X, 1}},
    {{Pauli::Z, 0}, {Pauli::Y, 1}, {Pauli::X, 3}, {Pauli::I, 0}},
};

void check_dense_size(std::size_t num_qubits, const char* where) {
  if (num_qubits == 0 || num_qubits > kMaxDenseQubits) {
    throw std::invalid_argument(std::string(where) + ": dense matrices need 1 <= K <= " +
                                std::to_string(kMaxDenseQubits));
  }
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxPauliQubits) {
    throw std::invalid_argument("PauliString: at most 64 qubits are supported");
  }
}

PauliString PauliString::parse(std::string_view letters) {
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set_letter(q, Pauli::X);
        break;
      case 'Y':
        p.set_letter(q, Pauli::Y);
        break;
      case 'Z':
        p.set_letter(q, Pauli::Z);
        break;
      default:
        throw std::invalid_argument("PauliString::parse: unexpected letter '" +
                                    std::string(1, letters[q]) + "'");
    }
  }
  return p;
}

std::uint64_t PauliString::bit(std::size_t qubit) const {
  if (qubit >= num_qubits_) throw std::out_of_range("PauliString: qubit index out of range");
  return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
}

Pauli PauliString::letter(std::size_t qubit) const {
  const std::uint64_t b = bit(qubit);
  const bool x = (x_ & b) != 0;
  const bool z = (z_ & b) != 0;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set_letter(std::size_t qubit, Pauli p) {
  const std::uint64_t b = bit(qubit);
  x_ &= ~b;
  z_ &= ~b;
  if (p == Pauli::X || p == Pauli::Y) x_ |= b;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= b;
}

std::size_t PauliString::weight() const { return std::popcount(x_ | z_); }

bool PauliString::commutes_with(const PauliString& other) const {
  // Symplectic form: anticommuting positions counted mod 2.
  const int overlap = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return overlap % 2 == 0;
}

std::string PauliString::str() const {
  static constexpr char kNames[4] = {'I', 'X', 'Y', 'Z'};
  std::string out(num_qubits_, 'I');
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    out[q] = kNames[static_cast<int>(letter(q))];
  }
  return out;
}

std::size_t PauliStringHash::operator()(const PauliString& p) const noexcept {
  return static_cast<std::size_t>(mix_seed(p.x_mask() ^ (p.z_mask() << 1), p.num_qubits()));
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("multiply: Pauli strings act on different qubit counts");
  }
  PauliString out(a.num_qubits());
  int power = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    const auto& entry =
        kLetterTable[static_cast<int>(a.letter(q))][static_cast<int>(b.letter(q))];
    out.set_letter(q, entry.letter);
    power += entry.i_power;
  }
  return {kIPowers[power % 4], out};
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      if (pa.commutes_with(pb)) continue;
      const PauliProduct prod = multiply(pa, pb);
      out[prod.string] += 2.0 * ca * cb * prod.phase;
    }
  }
  return out;
}

double pauli_norm_sq(const PauliSum& op) {
  double total = 0.0;
  for (const auto& [p, c] : op) total += std::norm(c);
  return total;
}

std::vector<PauliString> enumerate_pauli_strings(std::size_t num_qubits, std::size_t min_weight,
                                                 std::size_t max_weight) {
  if (num_qubits == 0 || num_qubits > kMaxPauliQubits) {
    throw std::invalid_argument("enumerate_pauli_strings: need 1 <= K <= 64");
  }
  max_weight = std::min(max_weight, num_qubits);
  std::vector<PauliString> out;
  for (std::size_t w = std::max<std::size_t>(min_weight, 1); w <= max_weight; ++w) {
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
      std::vector<int> letters(w, 1);
      while (true) {
        PauliString p(num_qubits);
        for (std::size_t i = 0; i < w; ++i) {
          p.set_letter(support[i], static_cast<Pauli>(letters[i]));
        }
        out.push_back(p);
        std::size_t pos = w;
        while (pos > 0 && letters[pos - 1] == 3) letters[--pos] = 1;
        if (pos == 0) break;
        ++letters[pos - 1];
      }
      // Next combination in lexicographic order.
      std::size_t i = w;
      while (i > 0 && support[i - 1] == num_qubits - w + (i - 1)) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  }
  return out;
}

Matrix pauli_matrix(const PauliString& p) {
  check_dense_size(p.num_qubits(), "pauli_matrix");
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  const Complex global = kIPowers[std::popcount(p.x_mask() & p.z_mask()) % 4];
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    const double sign = (std::popcount(c & p.z_mask()) % 2 == 0) ? 1.0 : -1.0;
    m(static_cast<Eigen::Index>(c ^ p.x_mask()), static_cast<Eigen::Index>(c)) = global * sign;
  }
  return m;
}

Complex normalized_trace_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() || a.rows() == 0) {
    throw std::invalid_argument("normalized_trace_product: shape mismatch");
  }
  // Tr(AB) = Σ_ij A_ij B_ji
  const Complex trace = a.cwiseProduct(b.transpose()).sum();
  return trace / static_cast<double>(a.rows());
}

Complex pauli_component(const PauliString& p, const Matrix& m) {
  check_dense_size(p.num_qubits(), "pauli_component");
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  if (static_cast<std::uint64_t>(m.rows()) != dim || m.rows() != m.cols()) {
    throw std::invalid_argument("pauli_component: dimension mismatch");
  }
  const Complex global = kIPowers[std::popcount(p.x_mask() & p.z_mask()) % 4];
  Complex total = 0.0;
  for (std::uint64_t c = 0; c < dim; ++c) {
    const double sign = (std::popcount(c & p.z_mask()) % 2 == 0) ? 1.0 : -1.0;
    total += sign * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ p.x_mask()));
  }
  return global * total / static_cast<double>(dim);
}

KLocalHamiltonian::KLocalHamiltonian(std::size_t num_qubits, std::size_t locality,
                                     bool exactly_local, Terms terms, double coupling_variance)
    : num_qubits_(num_qubits),
      locality_(locality),
      exactly_local_(exactly_local),
      coupling_variance_(coupling_variance),
      terms_(std::move(terms)) {
  if (num_qubits == 0 || num_qubits > kMaxPauliQubits) {
    throw std::invalid_argument("KLocalHamiltonian: need 1 <= K <= 64");
  }
  if (locality == 0 || locality > num_qubits) {
    throw std::invalid_argument("KLocalHamiltonian: need 1 <= k <= K");
  }
  if (!(coupling_variance > 0.0)) {
    throw std::invalid_argument("KLocalHamiltonian: coupling variance must be positive");
  }
  for (const auto& [p, j] : terms_) {
    if (p.num_qubits() != num_qubits) {
      throw std::invalid_argument("KLocalHamiltonian: term " + p.str() + " has wrong qubit count");
    }
    const std::size_t w = p.weight();
    if (w == 0 || w > locality || (exactly_local && w != locality)) {
      throw std::invalid_argument("KLocalHamiltonian: term " + p.str() +
                                  " violates the locality bound");
    }
  }
}

double KLocalHamiltonian::coupling_norm_sq() const {
  double total = 0.0;
  for (const auto& [p, j] : terms_) total += j * j;
  return total;
}

Matrix KLocalHamiltonian::matrix() const {
  check_dense_size(num_qubits_, "KLocalHamiltonian::matrix");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits_;
  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [p, j] : terms_) {
    const Complex global = j * kIPowers[std::popcount(p.x_mask() & p.z_mask()) % 4];
    for (std::uint64_t c = 0; c < dim; ++c) {
      const double sign = (std::popcount(c & p.z_mask()) % 2 == 0) ? 1.0 : -1.0;
      h(static_cast<Eigen::Index>(c ^ p.x_mask()), static_cast<Eigen::Index>(c)) += global * sign;
    }
  }
  return h;
}

PauliSum KLocalHamiltonian::pauli_sum() const {
  PauliSum out;
  for (const auto& [p, j] : terms_) out.emplace(p, Complex(j, 0.0));
  return out;
}

std::size_t admissible_term_count(std::size_t num_qubits, std::size_t locality,
                                  bool exactly_local) {
  if (locality == 0 || locality > num_qubits) {
    throw std::invalid_argument("admissible_term_count: need 1 <= k <= K");
  }
  std::uint64_t total = 0;
  std::uint64_t pow3 = 1;
  for (std::size_t w = 1; w <= locality; ++w) {
    pow3 *= 3;
    if (!exactly_local || w == locality) total += pow3 * binomial(num_qubits, w);
  }
  return static_cast<std::size_t>(total);
}

KLocalHamiltonian sample_klocal(std::size_t num_qubits, std::size_t locality, bool exactly_local,
                                double target_energy_variance, std::uint64_t seed,
                                std::uint64_t draw) {
  if (locality == 0 || locality > num_qubits) {
    throw std::invalid_argument("sample_klocal: need 1 <= k <= K");
  }
  if (!(target_energy_variance > 0.0)) {
    throw std::invalid_argument("sample_klocal: target energy variance must be positive");
  }
  const auto strings =
      enumerate_pauli_strings(num_qubits, exactly_local ? locality : 1, locality);
  const double variance = target_energy_variance / static_cast<double>(strings.size());
  auto rng = stream_rng(seed, draw);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance));
  KLocalHamiltonian::Terms terms;
  for (const auto& p : strings) terms.emplace(p, normal(rng));
  return KLocalHamiltonian(num_qubits, locality, exactly_local, std::move(terms), variance);
}

Matrix evolve(const Matrix& h, double t) {
  Matrix u = hermitian_evolution(h, t);
  if (!is_unitary(u, 1e-10)) {
    throw NumericError("evolve: propagator lost unitarity");
  }
  return u;
}

Matrix evolve(const KLocalHamiltonian& h, double t) { return evolve(h.matrix(), t); }

}  // namespace cxlab
