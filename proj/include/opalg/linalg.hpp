// Copyright 2026 The opalg Authors
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

#ifndef OPALG_LINALG_HPP_
#define OPALG_LINALG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "opalg/scalar.hpp"

namespace opalg {

  using Vector = std::vector<Scalar>;

  //! Row-major dense matrix over the rationals.
  class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols)
        : _r(rows), _c(cols), _a(rows * cols) {}

    std::size_t rows() const {
      return _r;
    }
    std::size_t cols() const {
      return _c;
    }
    Scalar& operator()(std::size_t i, std::size_t j) {
      return _a[i * _c + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _a[i * _c + j];
    }

    //! In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
      std::vector<std::size_t> piv;
      std::size_t row = 0;
      for (std::size_t col = 0; col < _c && row < _r; ++col) {
        std::size_t p = row;
        while (p < _r && (*this)(p, col) == 0) {
          ++p;
        }
        if (p == _r) {
          continue;
        }
        if (p != row) {
          for (std::size_t j = 0; j < _c; ++j) {
            std::swap((*this)(p, j), (*this)(row, j));
          }
        }
        Scalar inv = 1 / (*this)(row, col);
        for (std::size_t j = col; j < _c; ++j) {
          (*this)(row, j) *= inv;
        }
        for (std::size_t i = 0; i < _r; ++i) {
          if (i == row || (*this)(i, col) == 0) {
            continue;
          }
          Scalar f = (*this)(i, col);
          for (std::size_t j = col; j < _c; ++j) {
            (*this)(i, j) -= f * (*this)(row, j);
          }
        }
        piv.push_back(col);
        ++row;
      }
      return piv;
    }

   private:
    std::size_t _r, _c;
    std::vector<Scalar> _a;
  };

  inline std::size_t rank(Matrix m) {
    return m.rref().size();
  }

  //! Basis of {v : M v = 0}.
  inline std::vector<Vector> nullspace(Matrix m) {
    auto piv = m.rref();
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) {
      is_piv[p] = true;
    }
    std::vector<Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_piv[f]) {
        continue;
      }
      Vector v(m.cols());
      v[f] = 1;
      for (std::size_t i = 0; i < piv.size(); ++i) {
        v[piv[i]] = -m(i, f);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  //! Sparse column system: columns are maps from row keys to values.
  //! Finds c with sum_j c_j col_j = target, or nothing.
  template <class Key>
  std::optional<Vector> solve_columns(
      std::vector<std::map<Key, Scalar>> const& cols,
      std::map<Key, Scalar> const& target) {
    std::map<Key, std::size_t> index;
    auto idx = [&index](Key const& k) {
      auto it = index.find(k);
      if (it != index.end()) {
        return it->second;
      }
      std::size_t i = index.size();
      index.emplace(k, i);
      return i;
    };
    for (auto const& c : cols) {
      for (auto const& [k, v] : c) {
        idx(k);
      }
    }
    for (auto const& [k, v] : target) {
      idx(k);
    }
    Matrix m(index.size(), cols.size() + 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (auto const& [k, v] : cols[j]) {
        m(index[k], j) = v;
      }
    }
    for (auto const& [k, v] : target) {
      m(index[k], cols.size()) = v;
    }
    auto piv = m.rref();
    if (!piv.empty() && piv.back() == cols.size()) {
      return std::nullopt;
    }
    Vector sol(cols.size());
    for (std::size_t i = 0; i < piv.size(); ++i) {
      sol[piv[i]] = m(i, cols.size());
    }
    return sol;
  }

  //! Nullspace of a sparse column system.
  template <class Key>
  std::vector<Vector> column_nullspace(
      std::vector<std::map<Key, Scalar>> const& cols) {
    std::map<Key, std::size_t> index;
    for (auto const& c : cols) {
      for (auto const& [k, v] : c) {
        index.emplace(k, 0);
      }
    }
    std::size_t i = 0;
    for (auto& [k, v] : index) {
      v = i++;
    }
    Matrix m(index.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (auto const& [k, v] : cols[j]) {
        m(index[k], j) = v;
      }
    }
    return nullspace(std::move(m));
  }

}  // namespace opalg

#endif  // OPALG_LINALG_HPP_
