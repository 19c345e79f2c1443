#include "sullivan/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "sullivan/errors.hpp"

namespace sullivan {

// --- sparse vector helpers --------------------------------------------------

SparseVector axpy(const Rational& a, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Rational v = a * x[i].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j]);
      ++j;
    } else {
      Rational v = a * x[i].second + y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scale(const Rational& a, const SparseVector& x) {
  if (a == 0) return {};
  SparseVector out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

SparseVector unit_vector(std::size_t index) { return {{index, Rational(1)}}; }

// --- SparseExactMatrix ------------------------------------------------------

SparseExactMatrix::SparseExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseExactMatrix SparseExactMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                                   std::vector<Triplet> entries) {
  SparseExactMatrix m(rows, cols);
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) throw RangeError("matrix entry index out of range");
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    Rational sum = 0;
    while (j < entries.size() && entries[j].row == entries[i].row && entries[j].col == entries[i].col) {
      sum += entries[j].value;
      ++j;
    }
    if (sum != 0) m.data_[entries[i].row].emplace_back(entries[i].col, std::move(sum));
    i = j;
  }
  return m;
}

SparseExactMatrix SparseExactMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) t.push_back({r, c, v});
  return from_triplets(rows, columns.size(), std::move(t));
}

SparseExactMatrix SparseExactMatrix::identity(std::size_t n) {
  SparseExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

std::size_t SparseExactMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw RangeError("matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

SparseVector SparseExactMatrix::column(std::size_t c) const {
  if (c >= cols_) throw RangeError("column index out of range");
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational v = at(r, c);
    if (v != 0) out.emplace_back(r, std::move(v));
  }
  return out;
}

std::vector<SparseVector> SparseExactMatrix::columns() const {
  std::vector<SparseVector> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[c].emplace_back(r, v);
  return out;
}

SparseExactMatrix SparseExactMatrix::transpose() const {
  SparseExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

SparseVector SparseExactMatrix::multiply(const SparseVector& x) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& row = data_[r];
    Rational acc = 0;
    std::size_t i = 0, j = 0;
    while (i < row.size() && j < x.size()) {
      if (row[i].first < x[j].first) ++i;
      else if (x[j].first < row[i].first) ++j;
      else acc += row[i++].second * x[j++].second;
    }
    if (acc != 0) out.emplace_back(r, std::move(acc));
  }
  return out;
}

SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product dimension mismatch");
  SparseExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    SparseVector acc;
    for (const auto& [k, v] : a.data_[r]) acc = axpy(v, b.data_[k], acc);
    out.data_[r] = std::move(acc);
  }
  return out;
}

// --- elimination core -------------------------------------------------------

namespace {

template <class T>
using Row = std::vector<std::pair<std::size_t, T>>;

// Fraction-free integer elimination: target := (a/g)*target - (b/g)*pivot,
// followed by removal of the row content.
struct IntegerOps {
  using Value = Integer;

  static void prepare_pivot(Row<Value>&, std::size_t) {}

  static void eliminate(Row<Value>& target, const Row<Value>& pivot, const Value& a, const Value& b) {
    Value g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Value fa = a / g;
    const Value fb = b / g;
    Row<Value> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.emplace_back(target[i].first, fa * target[i].second);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, -fb * pivot[j].second);
        ++j;
      } else {
        Value v = fa * target[i].second - fb * pivot[j].second;
        if (v != 0) out.emplace_back(target[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    Value content = 0;
    for (const auto& e : out) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
      if (content == 1) break;
    }
    if (content > 1)
      for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
    target = std::move(out);
  }
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

struct ModOps {
  using Value = std::uint64_t;
  std::uint64_t p;

  // Scale the pivot row so the pivot entry is 1.
  void prepare_pivot(Row<Value>& row, std::size_t col) const {
    std::uint64_t pv = 0;
    for (const auto& e : row)
      if (e.first == col) pv = e.second;
    const std::uint64_t inv = pow_mod(pv, p - 2, p);
    for (auto& e : row) e.second = mul_mod(e.second, inv, p);
  }

  void eliminate(Row<Value>& target, const Row<Value>& pivot, const Value&, const Value& b) const {
    Row<Value> out;
    out.reserve(target.size() + pivot.size());
    const std::uint64_t nb = (p - b) % p;
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, mul_mod(nb, pivot[j].second, p));
        ++j;
      } else {
        const std::uint64_t v = (target[i].second + mul_mod(nb, pivot[j].second, p)) % p;
        if (v != 0) out.emplace_back(target[i].first, v);
        ++i;
        ++j;
      }
    }
    target = std::move(out);
  }
};

template <class T>
struct Elimination {
  std::vector<std::size_t> pivot_cols;  // in elimination order
  std::vector<std::size_t> pivot_rows;  // original row index per pivot
  std::vector<Row<T>> reduced;          // pivot rows at the time they were chosen
};

template <class T>
const T* find_entry(const Row<T>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Markowitz pivoting: minimise (row_len - 1) * (col_count - 1), ties broken
// by lowest column index, then lowest row index. Choices depend only on the
// matrix content.
template <class Ops>
Elimination<typename Ops::Value> eliminate(std::vector<std::pair<std::size_t, Row<typename Ops::Value>>> rows,
                                           const Ops& ops, std::vector<std::uint32_t>& col_count,
                                           bool keep_rows) {
  using Value = typename Ops::Value;
  Elimination<Value> out;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].second.empty()) active.push_back(i);

  while (!active.empty()) {
    for (std::size_t i : active)
      for (const auto& e : rows[i].second) ++col_count[e.first];

    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    std::size_t best_col = std::numeric_limits<std::size_t>::max();
    std::size_t best_row = std::numeric_limits<std::size_t>::max();
    std::size_t best_slot = 0;
    for (std::size_t s = 0; s < active.size(); ++s) {
      const auto& [orig, row] = rows[active[s]];
      const std::uint64_t rlen = row.size() - 1;
      for (const auto& e : row) {
        const std::uint64_t cost = rlen * (col_count[e.first] - 1);
        if (cost < best_cost || (cost == best_cost && (e.first < best_col || (e.first == best_col && orig < best_row)))) {
          best_cost = cost;
          best_col = e.first;
          best_row = orig;
          best_slot = s;
        }
      }
    }
    for (std::size_t i : active)
      for (const auto& e : rows[i].second) col_count[e.first] = 0;

    const std::size_t prow = active[best_slot];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_slot));
    Row<Value>& pivot = rows[prow].second;
    ops.prepare_pivot(pivot, best_col);
    const Value a = *find_entry(pivot, best_col);

    std::vector<std::size_t> still;
    still.reserve(active.size());
    for (std::size_t i : active) {
      auto& target = rows[i].second;
      if (const Value* b = find_entry(target, best_col)) {
        const Value bv = *b;
        ops.eliminate(target, pivot, a, bv);
      }
      if (!target.empty()) still.push_back(i);
    }
    active = std::move(still);

    out.pivot_cols.push_back(best_col);
    out.pivot_rows.push_back(rows[prow].first);
    if (keep_rows) out.reduced.push_back(std::move(pivot));
  }
  return out;
}

// Rows scaled by the lcm of their denominators.
std::vector<Row<Integer>> integer_rows(const SparseExactMatrix& m) {
  std::vector<Row<Integer>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    Integer l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    out[r].reserve(row.size());
    for (const auto& [c, v] : row) out[r].emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
  }
  return out;
}

struct Components {
  std::vector<std::vector<std::size_t>> rows;  // per component, ascending
  std::vector<std::vector<std::size_t>> cols;  // per component, ascending
};

Components connected_components(const std::vector<Row<Integer>>& rows, std::size_t ncols) {
  std::vector<std::size_t> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& row : rows) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      std::size_t a = find(row[0].first), b = find(row[k].first);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::unordered_map<std::size_t, std::size_t> slot;
  Components comp;
  for (std::size_t c = 0; c < ncols; ++c) {
    const std::size_t root = find(c);
    auto [it, inserted] = slot.try_emplace(root, comp.cols.size());
    if (inserted) {
      comp.cols.emplace_back();
      comp.rows.emplace_back();
    }
    comp.cols[it->second].push_back(c);
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) comp.rows[slot.at(find(rows[r][0].first))].push_back(r);
  return comp;
}

// Kernel vectors for one component: one per free column, by back-substitution
// through the pivot rows in reverse elimination order.
void component_kernel(const Elimination<Integer>& el, const std::vector<std::size_t>& cols,
                      std::vector<std::pair<std::size_t, SparseVector>>& kernel) {
  std::unordered_map<std::size_t, std::size_t> pivot_slot;
  for (std::size_t k = 0; k < el.pivot_cols.size(); ++k) pivot_slot.emplace(el.pivot_cols[k], k);
  for (std::size_t f : cols) {
    if (pivot_slot.count(f)) continue;
    std::map<std::size_t, Rational> x;
    x.emplace(f, Rational(1));
    for (std::size_t k = el.reduced.size(); k-- > 0;) {
      const auto& row = el.reduced[k];
      const std::size_t pc = el.pivot_cols[k];
      Rational acc = 0;
      Integer pv = 0;
      for (const auto& [c, v] : row) {
        if (c == pc) {
          pv = v;
          continue;
        }
        auto it = x.find(c);
        if (it != x.end()) acc += Rational(v) * it->second;
      }
      if (acc != 0) {
        Rational val = -acc / Rational(pv);
        val.canonicalize();
        x.emplace(pc, std::move(val));
      }
    }
    SparseVector v;
    v.reserve(x.size());
    for (auto& [c, val] : x) v.emplace_back(c, std::move(val));
    kernel.emplace_back(f, std::move(v));
  }
}

RankResult run_exact(const SparseExactMatrix& m, bool want_kernel) {
  const auto rows = integer_rows(m);
  const auto comp = connected_components(rows, m.cols());
  std::vector<std::uint32_t> col_count(m.cols(), 0);
  RankResult result;
  std::vector<std::pair<std::size_t, SparseVector>> kernel_by_col;
  for (std::size_t ci = 0; ci < comp.cols.size(); ++ci) {
    std::vector<std::pair<std::size_t, Row<Integer>>> local;
    local.reserve(comp.rows[ci].size());
    for (std::size_t r : comp.rows[ci]) local.emplace_back(r, rows[r]);
    auto el = eliminate(std::move(local), IntegerOps{}, col_count, want_kernel);
    result.rank += el.pivot_cols.size();
    result.pivot_columns.insert(result.pivot_columns.end(), el.pivot_cols.begin(), el.pivot_cols.end());
    if (want_kernel) component_kernel(el, comp.cols[ci], kernel_by_col);
  }
  std::sort(result.pivot_columns.begin(), result.pivot_columns.end());
  std::sort(kernel_by_col.begin(), kernel_by_col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, v] : kernel_by_col) result.kernel_basis.push_back(std::move(v));
  return result;
}

}  // namespace

RankResult rank_exact(const SparseExactMatrix& m) { return run_exact(m, true); }

std::size_t rank(const SparseExactMatrix& m) { return run_exact(m, false).rank; }

std::vector<std::uint64_t> default_primes() { return {2147483647ULL, 2147483629ULL, 2147483587ULL}; }

MultimodularRank rank_multimodular(const SparseExactMatrix& m, std::span<const std::uint64_t> primes) {
  {
    std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw UsageError("rank_multimodular: primes must be distinct");
    for (auto p : sorted)
      if (p < 2 || p >= (std::uint64_t{1} << 62)) throw UsageError("rank_multimodular: prime out of range");
  }
  const auto rows = integer_rows(m);
  const auto comp = connected_components(rows, m.cols());
  std::vector<std::uint32_t> col_count(m.cols(), 0);
  MultimodularRank out;
  std::size_t best_prime = 0;
  for (const std::uint64_t p : primes) {
    ModOps ops{p};
    std::size_t r = 0;
    for (std::size_t ci = 0; ci < comp.cols.size(); ++ci) {
      std::vector<std::pair<std::size_t, Row<std::uint64_t>>> local;
      for (std::size_t ri : comp.rows[ci]) {
        Row<std::uint64_t> row;
        for (const auto& [c, v] : rows[ri]) {
          const std::uint64_t red = mpz_fdiv_ui(v.get_mpz_t(), p);
          if (red != 0) row.emplace_back(c, red);
        }
        local.emplace_back(ri, std::move(row));
      }
      r += eliminate(std::move(local), ops, col_count, false).pivot_cols.size();
    }
    out.per_prime.emplace_back(p, r);
    if (r > out.bound || out.per_prime.size() == 1) {
      out.bound = r;
      best_prime = p;
    }
  }
  const std::size_t full = std::min(m.rows(), m.cols());
  if (!primes.empty() && out.bound == full) {
    out.confirmed = true;
    out.certificate = "full-size minor nonsingular mod " + std::to_string(best_prime);
  }
  return out;
}

ConfirmedRank rank_confirmed(const SparseExactMatrix& m, std::span<const std::uint64_t> primes) {
  const auto mm = rank_multimodular(m, primes);
  if (mm.confirmed) return {mm.bound, mm.bound, "full-size-minor"};
  const std::size_t exact = rank(m);
  if (exact < mm.bound) throw InternalError("modular rank exceeds exact rank");
  return {exact, mm.bound, "exact-elimination"};
}

// --- EchelonBasis -----------------------------------------------------------

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  std::map<std::size_t, Rational> work(v.begin(), v.end());
  auto it = work.begin();
  while (it != work.end()) {
    auto pr = rows_.find(it->first);
    if (pr == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t key = it->first;
    const Rational coef = it->second;
    for (const auto& [c, val] : pr->second) {
      auto [w, inserted] = work.try_emplace(c, 0);
      w->second -= coef * val;
      if (w->second == 0) work.erase(w);
    }
    it = work.upper_bound(key);
  }
  return SparseVector(work.begin(), work.end());
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Rational lead = r.front().second;
  for (auto& e : r) e.second /= lead;
  const std::size_t key = r.front().first;
  rows_.emplace(key, std::move(r));
  return true;
}

std::vector<SparseVector> quotient_representatives(std::span<const SparseVector> cocycles,
                                                   std::span<const SparseVector> boundaries) {
  EchelonBasis z;
  for (const auto& c : cocycles) z.insert(c);
  EchelonBasis span;
  for (const auto& b : boundaries) {
    if (!z.contains(b)) throw InternalError("boundary outside the cocycle span (d^2 != 0 upstream?)");
    span.insert(b);
  }
  std::vector<SparseVector> reps;
  for (const auto& c : cocycles)
    if (span.insert(c)) reps.push_back(c);
  return reps;
}

}  // namespace sullivan
