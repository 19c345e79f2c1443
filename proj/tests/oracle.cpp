#include "oracle.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace oracle {

bool multiply(const Word& a, const Word& b, Word& out, int& sign) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return false;
      if (w[i] > w[j]) ++inversions;
    }
  // insertion sort keeps this independent of std::sort internals
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) std::swap(w[j - 1], w[j]);
  out = std::move(w);
  sign = inversions % 2 ? -1 : 1;
  return true;
}

namespace {

Word word_of(std::uint64_t mask) {
  Word w;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) w.push_back(i);
  return w;
}

std::uint64_t mask_of(const Word& w) {
  std::uint64_t m = 0;
  for (int i : w) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> betti(const sullivan::Cdga& cdga) {
  const auto& sig = cdga.sig();
  const int g = static_cast<int>(sig.size());
  if (g > 12) throw std::invalid_argument("oracle limited to 12 generators");
  for (const auto& s : sig.generators())
    if (s.degree % 2 == 0) throw std::invalid_argument("oracle needs odd generators");

  // d(x_i) as a list of (coefficient, word)
  std::vector<std::vector<ExteriorTerm>> dgen(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i)
    for (const auto& [m, c] : cdga.d(static_cast<std::size_t>(i)).terms())
      dgen[static_cast<std::size_t>(i)].push_back({c, word_of(m.odd_mask())});

  const std::uint64_t count = std::uint64_t{1} << g;
  int top = 0;
  for (const auto& s : sig.generators()) top += s.degree;
  std::vector<std::vector<std::uint64_t>> by_degree(static_cast<std::size_t>(top) + 2);
  auto degree_of = [&](std::uint64_t mask) {
    int d = 0;
    for (int i = 0; i < g; ++i)
      if (mask >> i & 1) d += sig[static_cast<std::size_t>(i)].degree;
    return d;
  };
  for (std::uint64_t mask = 0; mask < count; ++mask) by_degree[static_cast<std::size_t>(degree_of(mask))].push_back(mask);

  // d(x_{i1} ... x_{ik}) = sum_p (-1)^p x_{i1} .. d(x_{ip}) .. x_{ik}  (all odd)
  auto d_of = [&](std::uint64_t mask) {
    std::map<std::uint64_t, mpq_class> out;
    const Word w = word_of(mask);
    for (std::size_t p = 0; p < w.size(); ++p) {
      const Word pre(w.begin(), w.begin() + static_cast<long>(p));
      const Word post(w.begin() + static_cast<long>(p) + 1, w.end());
      for (const auto& t : dgen[static_cast<std::size_t>(w[p])]) {
        Word left, full;
        int s1 = 1, s2 = 1;
        if (!multiply(pre, t.word, left, s1)) continue;
        if (!multiply(left, post, full, s2)) continue;
        const int sign = (p % 2 ? -1 : 1) * s1 * s2;
        out[mask_of(full)] += sign * t.coeff;
      }
    }
    return out;
  };

  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 0; n <= top; ++n) {
    const auto& src = by_degree[static_cast<std::size_t>(n)];
    const auto& dst = by_degree[static_cast<std::size_t>(n) + 1];
    if (src.empty() || dst.empty()) continue;
    std::map<std::uint64_t, std::size_t> row;
    for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = i;
    std::vector<std::vector<mpq_class>> m(dst.size(), std::vector<mpq_class>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [mask, c] : d_of(src[j])) m[row.at(mask)][j] += c;
    ranks[static_cast<std::size_t>(n)] = dense_rank(std::move(m));
  }
  std::vector<std::size_t> out;
  for (int n = 0; n <= top; ++n) {
    const std::size_t dim = by_degree[static_cast<std::size_t>(n)].size();
    const std::size_t prev = n ? ranks[static_cast<std::size_t>(n) - 1] : 0;
    out.push_back(dim - ranks[static_cast<std::size_t>(n)] - prev);
  }
  return out;
}

}  // namespace oracle
