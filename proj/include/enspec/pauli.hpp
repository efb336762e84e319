#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "enspec/linalg.hpp"
#include "enspec/numeric.hpp"

namespace enspec {

/// Real-weighted signed Pauli string, one letter (I/X/Y/Z) per qubit.
struct PauliTerm {
  double coeff = 0.0;
  std::string letters;
};

/// Real linear combination of Pauli strings; Hermitian by construction.
struct PauliSum {
  int n = 0;
  std::vector<PauliTerm> terms;

  static PauliSum zero(int n) { return PauliSum{n, {}}; }

  static PauliSum identity(int n, double coeff) {
    return PauliSum{n, {{coeff, std::string(static_cast<std::size_t>(n), 'I')}}};
  }

  PauliSum& add(double coeff, std::string letters) {
    if (static_cast<int>(letters.size()) != n)
      throw validation_error("PauliSum::add: string length differs from qubit count");
    for (char c : letters)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw validation_error("PauliSum::add: letters must be I, X, Y or Z");
    terms.push_back({coeff, std::move(letters)});
    return *this;
  }

  /// Merge duplicate strings, drop negligible coefficients, sort.
  void simplify(double drop_tol = 1e-14) {
    std::map<std::string, double> merged;
    for (const auto& t : terms) merged[t.letters] += t.coeff;
    terms.clear();
    for (const auto& [letters, coeff] : merged)
      if (std::abs(coeff) > drop_tol) terms.push_back({coeff, letters});
  }

  static int term_locality(const PauliTerm& t) {
    return static_cast<int>(std::count_if(t.letters.begin(), t.letters.end(),
                                          [](char c) { return c != 'I'; }));
  }

  int max_locality() const {
    int loc = 0;
    for (const auto& t : terms) loc = std::max(loc, term_locality(t));
    return loc;
  }

  /// Triangle-inequality norm bound: sum of |coefficient| over terms.
  double coefficient_norm() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::abs(t.coeff);
    return s;
  }

  /// Conjugation by the global Hadamard layer: X<->Z, Y -> -Y.
  PauliSum hadamard_swapped() const {
    PauliSum out{n, {}};
    for (const auto& t : terms) {
      PauliTerm s = t;
      for (char& c : s.letters) {
        if (c == 'X')
          c = 'Z';
        else if (c == 'Z')
          c = 'X';
        else if (c == 'Y')
          s.coeff = -s.coeff;
      }
      out.terms.push_back(std::move(s));
    }
    return out;
  }

  /// Matrix element structure of one Pauli string: row z maps to column
  /// z ^ xmask with a +-1/+-i phase depending on the Y/Z letters and bits.
  HermitianOperator to_operator() const {
    const long long dim = 1LL << n;
    std::vector<Eigen::Triplet<cplx>> entries;
    entries.reserve(terms.size() * static_cast<std::size_t>(dim));
    for (const auto& t : terms) {
      std::uint64_t xmask = 0;
      for (int q = 0; q < n; ++q)
        if (t.letters[q] == 'X' || t.letters[q] == 'Y')
          xmask |= 1ULL << (n - 1 - q);
      for (long long col = 0; col < dim; ++col) {
        const auto z = static_cast<std::uint64_t>(col);
        cplx phase = t.coeff;
        for (int q = 0; q < n; ++q) {
          const int bit = qubit_bit(z, q, n);
          switch (t.letters[q]) {
            case 'Y':
              phase *= bit ? cplx(0, -1) : cplx(0, 1);
              break;
            case 'Z':
              if (bit) phase = -phase;
              break;
            default:
              break;
          }
        }
        entries.emplace_back(static_cast<long long>(z ^ xmask), col, phase);
      }
    }
    return HermitianOperator::from_triplets(dim, entries);
  }

  Eigen::MatrixXcd to_dense() const { return to_operator().to_dense(); }
};

}  // namespace enspec
