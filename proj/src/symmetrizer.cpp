#include "nichols/symmetrizer.hpp"

#include <algorithm>
#include <future>
#include <mutex>

namespace nichols {

std::size_t OrbitBasis::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w)
    throw std::out_of_range("OrbitBasis::index_of: word not in this orbit");
  return static_cast<std::size_t>(it - words.begin());
}

namespace {

// Shared symbolic engine for the F~(1^n|1^n) family; single-writer access.
MultiPoly tilde_f_1n_locked(std::size_t n) {
  static std::mutex mu;
  static SymmetrizerEngine<MultiPoly> engine(symbolic_braiding());
  std::lock_guard<std::mutex> lock(mu);
  const Word x = Word::repeated(1, n);
  const auto& image = engine.symmetrize(x);
  auto it = image.find(x);
  return it == image.end() ? MultiPoly::zero() : it->second;
}

}  // namespace

MultiPoly tilde_f_1n(std::size_t n) {
  return tilde_f_1n_locked(n).with_e_set_to_one();
}

MultiPoly tilde_f_k(std::size_t n, std::uint32_t k) {
  return tilde_f_1n(n).coeff_of_b(k);
}

std::size_t rank(const BlockMatrix<CyclotomicNumber>& m) {
  auto a = m.entries;  // working copy
  const std::size_t n = m.dim();
  std::size_t r = 0;
  CyclotomicNumber prev = CyclotomicNumber::one(1);
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    const CyclotomicNumber prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) * prev_inv;
      a[i][col] = CyclotomicNumber::zero(a[i][col].conductor());
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

namespace {

std::size_t graded_dim_with(SymmetrizerEngine<CyclotomicNumber>& engine, std::size_t n,
                            unsigned jobs) {
  if (n == 0) return 1;
  if (n == 1) return 2;
  // Build images first (memo is then read-only), blocks after, ranks last.
  std::vector<BlockMatrix<CyclotomicNumber>> blocks;
  for (const OrbitInfo& info : orbit_partition(n))
    blocks.push_back(symmetrizer_block(n, info.rep, engine));
  if (jobs <= 1 || blocks.size() <= 1) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += rank(b);
    return total;
  }
  // Fan ranks out over a bounded set of workers; summation order is
  // irrelevant for the integer total, so the result stays deterministic.
  const std::size_t width = std::min<std::size_t>(jobs, blocks.size());
  std::vector<std::future<std::size_t>> futures;
  futures.reserve(width);
  for (std::size_t w = 0; w < width; ++w) {
    futures.push_back(std::async(std::launch::async, [&blocks, w, width]() {
      std::size_t sum = 0;
      for (std::size_t i = w; i < blocks.size(); i += width) sum += rank(blocks[i]);
      return sum;
    }));
  }
  std::size_t total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

}  // namespace

std::size_t graded_dim(std::size_t n, const ParamPoint& pt, unsigned jobs) {
  SymmetrizerEngine<CyclotomicNumber> engine(braiding_at(pt));
  return graded_dim_with(engine, n, jobs);
}

GradedProfile nichols_dimension(const ParamPoint& pt, std::size_t cap, unsigned jobs) {
  if (cap < 2) throw std::invalid_argument("nichols_dimension: cap must be >= 2");
  GradedProfile profile;
  profile.point = pt.str();
  profile.cap = cap;
  profile.ranks = {1, 2};
  SymmetrizerEngine<CyclotomicNumber> engine(braiding_at(pt));
  for (std::size_t n = 2; n <= cap; ++n) {
    const std::size_t r = graded_dim_with(engine, n, jobs);
    profile.ranks.push_back(r);
    if (r == 0) {
      profile.status = GradedProfile::Status::terminated;
      unsigned long long total = 0;
      for (std::size_t v : profile.ranks) total += v;
      profile.total = total;
      return profile;
    }
  }
  profile.status = GradedProfile::Status::cap_exceeded;
  return profile;
}

}  // namespace nichols
