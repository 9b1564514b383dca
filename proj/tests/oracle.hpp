#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: forms are maps from label lists, signs come from bubble sort
// and ranks from textbook Gauss-Jordan elimination on mpq_class.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;
using Labels = std::vector<int>;        // 1-based generator labels
using Form = std::map<Labels, Q>;       // keys are strictly increasing

inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Dense to_dense(const sympcoh::Matrix& m) {
  Dense d(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Dense out(a.size(), std::vector<Q>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Sorts labels in place; returns the permutation sign, or 0 on a repeat.
inline int sort_sign(Labels& l) {
  int sign = 1;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j + 1 < l.size() - i; ++j)
      if (l[j] > l[j + 1]) {
        std::swap(l[j], l[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    if (l[i] == l[i + 1]) return 0;
  return sign;
}

inline void add(Form& f, Labels l, const Q& c) {
  const int s = sort_sign(l);
  if (s == 0 || c == 0) return;
  Q& slot = f[l];
  slot += s * c;
  if (slot == 0) f.erase(l);
}

inline Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      Labels l = la;
      l.insert(l.end(), lb.begin(), lb.end());
      add(out, l, ca * cb);
    }
  return out;
}

inline Form from_kform(const sympcoh::KForm& a) {
  Form out;
  for (const auto& [mask, c] : a.terms()) out[sympcoh::indices_of(mask)] = c;
  return out;
}

/// d(e^{i1..ik}) = Σ_j (-1)^(j-1) e^{i1} ∧ .. ∧ de^{ij} ∧ .. ∧ e^{ik}.
inline Form differential(const std::vector<Form>& de, const Form& a) {
  Form out;
  for (const auto& [l, c] : a)
    for (std::size_t j = 0; j < l.size(); ++j) {
      const Q sign = (j % 2 == 0) ? 1 : -1;
      for (const auto& [pair, cp] : de[l[j] - 1]) {
        Labels term(l.begin(), l.begin() + j);
        term.insert(term.end(), pair.begin(), pair.end());
        term.insert(term.end(), l.begin() + j + 1, l.end());
        add(out, term, sign * c * cp);
      }
    }
  return out;
}

inline std::vector<Form> structure(const sympcoh::LieAlgebra& g) {
  std::vector<Form> de;
  for (const auto& f : g.generator_differentials()) de.push_back(from_kform(f));
  return de;
}

/// All increasing k-subsets of 1..n in lexicographic order.
inline std::vector<Labels> subsets(int n, int k) {
  std::vector<Labels> out;
  Labels cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline Dense d_dense(const sympcoh::LieAlgebra& g, int k) {
  const int n = static_cast<int>(g.dim());
  const auto de = structure(g);
  const auto in = subsets(n, k);
  const auto out = subsets(n, k + 1);
  Dense m(out.size(), std::vector<Q>(in.size()));
  for (std::size_t c = 0; c < in.size(); ++c) {
    const Form image = differential(de, Form{{in[c], 1}});
    for (std::size_t r = 0; r < out.size(); ++r) {
      auto it = image.find(out[r]);
      if (it != image.end()) m[r][c] = it->second;
    }
  }
  return m;
}

inline std::vector<std::size_t> betti(const sympcoh::LieAlgebra& g) {
  const int n = static_cast<int>(g.dim());
  std::vector<std::size_t> ranks(n + 1, 0);
  for (int k = 0; k < n; ++k) ranks[k] = rank(d_dense(g, k));
  std::vector<std::size_t> b;
  for (int k = 0; k <= n; ++k) {
    const std::size_t size = subsets(n, k).size();
    b.push_back(size - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
  }
  return b;
}

}  // namespace oracle
