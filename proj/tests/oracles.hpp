#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into pircon; each routine follows the textbook
// definition as directly as possible and is only meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Rel = std::vector<std::vector<bool>>;  // rel[a][b] <=> a < b

/// Strict order generated by `pairs` (lo < hi), via depth-first search.
inline Rel closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : pairs)
    if (a != b) succ[a].push_back(b);
  Rel lt(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(succ[s].begin(), succ[s].end());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (lt[s][v]) continue;
      lt[s][v] = true;
      for (std::size_t w : succ[v]) stack.push_back(w);
    }
  }
  return lt;
}

/// x covers-below y: x < y with nothing strictly between.
inline bool covered(const Rel& lt, std::size_t x, std::size_t y) {
  if (!lt[x][y]) return false;
  for (std::size_t z = 0; z < lt.size(); ++z)
    if (lt[x][z] && lt[z][y]) return false;
  return true;
}

inline std::vector<std::pair<std::size_t, std::size_t>> covers(const Rel& lt) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < lt.size(); ++x)
    for (std::size_t y = 0; y < lt.size(); ++y)
      if (covered(lt, x, y)) out.emplace_back(x, y);
  return out;
}

/// Every self-inverse map on {0..n-1}, as image vectors.
inline std::vector<std::vector<std::size_t>> all_involutions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> img(n, n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    while (k < n && img[k] != n) ++k;
    if (k == n) {
      out.push_back(img);
      return;
    }
    img[k] = k;
    rec(k + 1);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (img[j] != n) continue;
      img[k] = j;
      img[j] = k;
      rec(k + 1);
      img[j] = n;
    }
    img[k] = n;
  };
  rec(0);
  return out;
}

/// Special partial matching straight from the definition.
inline bool is_spm(const Rel& lt, std::size_t top, const std::vector<std::size_t>& m) {
  const std::size_t n = lt.size();
  for (std::size_t x = 0; x < n; ++x)
    if (m[m[x]] != x) return false;
  if (!covered(lt, m[top], top)) return false;
  for (std::size_t x = 0; x < n; ++x)
    if (m[x] != x && !covered(lt, x, m[x]) && !covered(lt, m[x], x)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (covered(lt, x, y) && m[x] != y && !lt[m[x]][m[y]]) return false;
  return true;
}

inline std::size_t count_spms(const Rel& lt, std::size_t top) {
  std::size_t k = 0;
  for (const auto& m : all_involutions(lt.size()))
    if (is_spm(lt, top, m)) ++k;
  return k;
}

/// Windows (w(1), ..., w(n)) of every signed permutation of [±n].
inline std::vector<std::vector<int>> all_signed_windows(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1U) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.push_back(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline int apply(const std::vector<int>& w, int i) {
  return i > 0 ? w[static_cast<std::size_t>(i - 1)] : -w[static_cast<std::size_t>(-i - 1)];
}

inline bool signed_involution(const std::vector<int>& w) {
  for (int i = 1; i <= static_cast<int>(w.size()); ++i)
    if (apply(w, apply(w, i)) != i) return false;
  return true;
}

inline bool signed_fixed_point_free(const std::vector<int>& w) {
  for (int i = 1; i <= static_cast<int>(w.size()); ++i)
    if (apply(w, i) == i) return false;
  return true;
}

/// Full line (w(-n), ..., w(-1), w(1), ..., w(n)).
inline std::vector<int> full_line(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> line;
  for (int i = -n; i <= n; ++i)
    if (i != 0) line.push_back(apply(w, i));
  return line;
}

/// Tableau criterion: a <= b in Bruhat order iff, for every prefix length,
/// the prefix values sorted decreasingly are dominated entrywise.
inline bool tableau_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<int> pa(a.begin(), a.begin() + static_cast<long>(k));
    std::vector<int> pb(b.begin(), b.begin() + static_cast<long>(k));
    std::sort(pa.rbegin(), pa.rend());
    std::sort(pb.rbegin(), pb.rend());
    for (std::size_t t = 0; t < k; ++t)
      if (pa[t] > pb[t]) return false;
  }
  return true;
}

/// Coxeter length in B_n: inversions of the window, plus pairs i < j with
/// w(i) + w(j) < 0, plus negative entries.
inline int type_b_length(const std::vector<int>& w) {
  int len = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) ++len;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++len;
      if (w[i] + w[j] < 0) ++len;
    }
  }
  return len;
}

inline std::size_t double_factorial_odd(std::size_t m) {  // (2m-1)!!
  std::size_t r = 1;
  for (std::size_t k = 1; k <= m; ++k) r *= 2 * k - 1;
  return r;
}

/// Rank over GF(2) by dense Gaussian elimination.
inline std::size_t rank_gf2(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t t = 0; t < cols; ++t) rows[r][t] = rows[r][t] != rows[rank][t];
    ++rank;
  }
  return rank;
}

/// Reduced GF(2) Betti numbers (index d+1 for degree d) of the complex
/// generated by `facets`, via dense boundary matrices.
inline std::vector<long> reduced_betti(const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<std::vector<std::vector<std::size_t>>> faces;  // by size, size 0 = empty face
  std::size_t top = 0;
  for (const auto& f : facets) top = std::max(top, f.size());
  faces.resize(top + 1);
  for (const auto& f : facets)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t b = 0; b < f.size(); ++b)
        if (mask >> b & 1U) s.push_back(f[b]);
      std::sort(s.begin(), s.end());
      faces[s.size()].push_back(s);
    }
  for (auto& level : faces) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  // rank of boundary from size-k faces to size-(k-1) faces
  std::vector<std::size_t> rk(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::vector<bool>> m(faces[k].size(), std::vector<bool>(faces[k - 1].size(), false));
    for (std::size_t r = 0; r < faces[k].size(); ++r)
      for (std::size_t drop = 0; drop < k; ++drop) {
        auto face = faces[k][r];
        face.erase(face.begin() + static_cast<long>(drop));
        const auto it = std::lower_bound(faces[k - 1].begin(), faces[k - 1].end(), face);
        m[r][static_cast<std::size_t>(it - faces[k - 1].begin())] = true;
      }
    rk[k] = rank_gf2(m);
  }
  std::vector<long> betti;
  for (std::size_t k = 0; k <= top; ++k)
    betti.push_back(static_cast<long>(faces[k].size() - rk[k] - rk[k + 1]));
  return betti;
}

}  // namespace oracle
