#include "glcd/distance.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "glcd/arith.hpp"

namespace glcd::distance {

using index_type = Field::index_type;

std::uint64_t message_cost(std::uint64_t q, std::size_t l) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < l; ++i) {
    total = arith::add_saturating(total, power);
    power = arith::mul_saturating(power, q);
  }
  return total;
}

std::uint64_t support_cost(std::size_t n, std::size_t max_w) {
  std::uint64_t total = 0;
  for (std::size_t w = 1; w <= max_w; ++w)
    total = arith::add_saturating(total, arith::binomial_saturating(static_cast<unsigned>(n), static_cast<unsigned>(w)));
  return total;
}

// ---------------------------------------------------------------- messages

namespace {

struct MessageBlock {
  std::size_t lead;            // position of the leading 1
  std::optional<index_type> next;  // fixed value of position lead + 1, if any
};

std::vector<MessageBlock> message_blocks(const Matrix& g) {
  std::vector<MessageBlock> blocks;
  const std::size_t l = g.rows();
  const std::uint64_t q = g.field().order();
  for (std::size_t t = 0; t < l; ++t) {
    if (t + 1 < l) {
      for (index_type v = 0; v < q; ++v) blocks.push_back({t, v});
    } else {
      blocks.push_back({t, std::nullopt});
    }
  }
  return blocks;
}

unsigned weight(const std::vector<index_type>& v) {
  return static_cast<unsigned>(std::count_if(v.begin(), v.end(), [](index_type x) { return x != 0; }));
}

void axpy(const Field& f, std::vector<index_type>& y, index_type a, const index_type* x) {
  if (a == 0) return;
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = f.add(y[j], f.mul(a, x[j]));
}

unsigned scan_block(const Matrix& g, const MessageBlock& block, unsigned best) {
  const Field& f = g.field();
  const std::size_t l = g.rows(), n = g.cols();
  const std::uint64_t q = f.order();
  std::vector<index_type> cw(g.row(block.lead), g.row(block.lead) + n);
  std::size_t start = block.lead + 1;
  if (block.next) {
    axpy(f, cw, *block.next, g.row(start));
    ++start;
  }
  best = std::min(best, weight(cw));
  std::vector<index_type> digit(l, 0);
  while (best > 1) {
    std::size_t pos = start;
    for (; pos < l; ++pos) {
      const index_type old = digit[pos];
      const index_type now = old + 1 < q ? old + 1 : 0;
      axpy(f, cw, f.sub(now, old), g.row(pos));
      digit[pos] = now;
      if (now != 0) break;
    }
    if (pos == l) break;
    best = std::min(best, weight(cw));
  }
  return best;
}

}  // namespace

unsigned min_weight_messages_serial(const Matrix& generator) {
  unsigned best = static_cast<unsigned>(generator.cols()) + 1;
  for (const auto& block : message_blocks(generator)) {
    best = scan_block(generator, block, best);
    if (best == 1) break;
  }
  return best;
}

unsigned min_weight_messages_parallel(const Matrix& generator) {
  const auto blocks = message_blocks(generator);
  unsigned best = static_cast<unsigned>(generator.cols()) + 1;
  const auto count = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t i = 0; i < count; ++i) best = std::min(best, scan_block(generator, blocks[i], best));
  return best;
}

// ---------------------------------------------------------------- supports

namespace {

class DependencySearch {
 public:
  DependencySearch(const Matrix& parity, unsigned w)
      : f_(parity.field()), m_(parity.rows()), n_(parity.cols()), w_(w), cols_(n_, std::vector<index_type>(m_)) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) cols_[j][i] = parity.at(i, j);
    basis_.assign(static_cast<std::size_t>(w) * m_, 0);
    pivot_.assign(w, 0);
    scratch_.assign(static_cast<std::size_t>(w + 1) * m_, 0);
  }

  /// Some w-subset whose smallest column is `first` is dependent.
  bool search_from(std::size_t first, const std::atomic<bool>& stop) {
    if (w_ == 1) return reduces_to_zero(first, 0);
    if (reduces_to_zero(first, 0)) return true;
    push(0);
    return descend(1, first + 1, stop);
  }

 private:
  // reduces column c against the first `depth` basis vectors into scratch row `depth`
  bool reduces_to_zero(std::size_t c, unsigned depth) {
    index_type* v = scratch_.data() + static_cast<std::size_t>(depth) * m_;
    std::copy(cols_[c].begin(), cols_[c].end(), v);
    for (unsigned b = 0; b < depth; ++b) {
      const index_type coef = v[pivot_[b]];
      if (coef == 0) continue;
      const index_type* bv = basis_.data() + static_cast<std::size_t>(b) * m_;
      for (std::size_t i = 0; i < m_; ++i)
        if (bv[i] != 0) v[i] = f_.sub(v[i], f_.mul(coef, bv[i]));
    }
    return std::all_of(v, v + m_, [](index_type x) { return x == 0; });
  }

  // moves the reduced scratch row `depth` into the basis, normalized at its pivot
  void push(unsigned depth) {
    const index_type* v = scratch_.data() + static_cast<std::size_t>(depth) * m_;
    std::size_t piv = 0;
    while (v[piv] == 0) ++piv;
    const index_type inv = f_.inv(v[piv]);
    index_type* bv = basis_.data() + static_cast<std::size_t>(depth) * m_;
    for (std::size_t i = 0; i < m_; ++i) bv[i] = f_.mul(v[i], inv);
    pivot_[depth] = piv;
  }

  bool descend(unsigned depth, std::size_t start, const std::atomic<bool>& stop) {
    if (stop.load(std::memory_order_relaxed)) return false;
    if (depth == w_ - 1) {
      for (std::size_t c = start; c < n_; ++c)
        if (reduces_to_zero(c, depth)) return true;
      return false;
    }
    for (std::size_t c = start; c + (w_ - depth) <= n_; ++c) {
      if (reduces_to_zero(c, depth)) return true;
      push(depth);
      if (descend(depth + 1, c + 1, stop)) return true;
    }
    return false;
  }

  const Field& f_;
  std::size_t m_, n_;
  unsigned w_;
  std::vector<std::vector<index_type>> cols_;
  std::vector<index_type> basis_;
  std::vector<std::size_t> pivot_;
  std::vector<index_type> scratch_;
};

template <bool Parallel>
SupportSearch min_dependency(const Matrix& parity, unsigned max_w, std::uint64_t budget) {
  SupportSearch result;
  const std::size_t n = parity.cols();
  max_w = std::min<unsigned>(max_w, static_cast<unsigned>(n));
  for (unsigned w = 1; w <= max_w; ++w) {
    const std::uint64_t level = arith::binomial_saturating(static_cast<unsigned>(n), w);
    if (arith::add_saturating(result.tests, level) > budget) return result;
    result.tests += level;
    std::atomic<bool> found{false};
    const auto firsts = static_cast<std::int64_t>(n - w + 1);
    if constexpr (Parallel) {
#pragma omp parallel
      {
        DependencySearch search(parity, w);
#pragma omp for schedule(dynamic)
        for (std::int64_t c = 0; c < firsts; ++c) {
          if (found.load(std::memory_order_relaxed)) continue;
          if (search.search_from(static_cast<std::size_t>(c), found)) found.store(true);
        }
      }
    } else {
      DependencySearch search(parity, w);
      for (std::int64_t c = 0; c < firsts && !found; ++c)
        if (search.search_from(static_cast<std::size_t>(c), found)) found.store(true);
    }
    if (found) {
      result.found = w;
      return result;
    }
    result.checked_through = w;
  }
  return result;
}

}  // namespace

SupportSearch min_dependency_serial(const Matrix& parity, unsigned max_w, std::uint64_t budget) {
  return min_dependency<false>(parity, max_w, budget);
}

SupportSearch min_dependency_parallel(const Matrix& parity, unsigned max_w, std::uint64_t budget) {
  return min_dependency<true>(parity, max_w, budget);
}

}  // namespace glcd::distance
