#pragma once
// Reduced simplicial homology ranks with exact arithmetic.
//
// Complexes here are tiny (vertex sets are monomial supports), so boundary
// matrices are built densely over the full face lattice and ranks come from
// fraction-free elimination.

#include <cstdint>
#include <vector>

namespace pclean {

/// Rank of an integer matrix, Bareiss fraction-free elimination. Intermediate
/// products are taken in 128-bit to keep the minors exact.
inline int integer_matrix_rank(std::vector<std::vector<long long>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  long long prev = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        __int128 num = static_cast<__int128>(m[r][c]) * m[rank][col] -
                       static_cast<__int128>(m[rank][c]) * m[r][col];
        m[r][c] = static_cast<long long>(num / prev);
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Reduced Betti ranks of a simplicial complex on vertices 0..nverts-1.
/// `faces` lists the faces as vertex bitmasks; a non-void complex must contain
/// the empty face (mask 0). Returns ranks indexed by d+1 for dimensions
/// d = -1 .. nverts-1; the void complex (no faces at all) is all zeros.
inline std::vector<int> reduced_betti_ranks(int nverts, const std::vector<uint32_t>& faces) {
  std::vector<int> out(static_cast<size_t>(nverts) + 1, 0);
  if (faces.empty()) return out;

  // Faces bucketed by cardinality; position of each face within its bucket.
  std::vector<std::vector<uint32_t>> by_card(static_cast<size_t>(nverts) + 1);
  for (uint32_t f : faces) by_card[static_cast<size_t>(__builtin_popcount(f))].push_back(f);
  auto index_of = [](const std::vector<uint32_t>& bucket, uint32_t face) {
    return static_cast<size_t>(std::lower_bound(bucket.begin(), bucket.end(), face) -
                               bucket.begin());
  };
  for (auto& bucket : by_card) std::sort(bucket.begin(), bucket.end());

  // boundary_rank[k] = rank of the boundary map from k-element faces to
  // (k-1)-element faces; k = 1 is the augmentation onto the empty face.
  std::vector<int> boundary_rank(static_cast<size_t>(nverts) + 2, 0);
  for (size_t k = 1; k <= static_cast<size_t>(nverts); ++k) {
    const auto& domain = by_card[k];
    const auto& codomain = by_card[k - 1];
    if (domain.empty() || codomain.empty()) continue;
    std::vector<std::vector<long long>> mat(codomain.size(),
                                            std::vector<long long>(domain.size(), 0));
    for (size_t j = 0; j < domain.size(); ++j) {
      uint32_t face = domain[j];
      int sign = 1;
      for (int v = 0; v < nverts; ++v) {
        if (!((face >> v) & 1)) continue;
        uint32_t sub = face & ~(uint32_t{1} << v);
        mat[index_of(codomain, sub)][j] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = integer_matrix_rank(std::move(mat));
  }

  for (size_t k = 0; k <= static_cast<size_t>(nverts); ++k) {
    int h = static_cast<int>(by_card[k].size()) - boundary_rank[k] - boundary_rank[k + 1];
    out[k] = h;  // dimension d = k - 1
  }
  return out;
}

}  // namespace pclean
