#include "nichols/sym_action.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace nichols {

Word s_act(std::size_t i, const Word& w) {
  if (i < 1 || i + 1 > w.size()) throw std::out_of_range("s_act: generator index out of range");
  const std::uint8_t x = w[i - 1], y = w[i];
  if (x != y) return w;
  std::vector<std::uint8_t> ls;
  ls.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) ls.push_back(w[j]);
  ls[i - 1] = static_cast<std::uint8_t>(3 - x);
  ls[i] = static_cast<std::uint8_t>(3 - y);
  return Word(std::move(ls));
}

Word act(const Perm& p, const Word& w) {
  if (p.degree() != w.size()) throw std::invalid_argument("act: length mismatch");
  Word r = w;
  const auto rw = reduced_word(p);
  for (auto it = rw.rbegin(); it != rw.rend(); ++it) r = s_act(*it, r);
  return r;
}

std::vector<Word> orbit(const Word& w) {
  std::unordered_set<std::uint64_t> seen{w.pack()};
  std::deque<Word> queue{w};
  std::vector<Word> out{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i + 1 <= u.size(); ++i) {
      Word v = s_act(i, u);
      if (seen.insert(v.pack()).second) {
        out.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// BFS over the t-generated subgroup: elements plus Cayley distances.
struct SubgroupData {
  std::vector<Perm> elements;  // sorted by one-line notation
  std::unordered_map<std::uint64_t, unsigned long> dist;  // pack -> tl
};

std::shared_ptr<const SubgroupData> subgroup_data(std::size_t n, const SearchCaps& caps) {
  if (n > caps.subgroup)
    throw std::length_error("subgroup_tgen: n exceeds the subgroup search cap");
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const SubgroupData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto data = std::make_shared<SubgroupData>();
  std::vector<Perm> gens;
  for (std::size_t i = 1; i + 2 <= n; ++i) gens.push_back(Perm::transposition_t(n, i));
  Perm id = Perm::identity(n);
  data->dist.emplace(id.pack(), 0);
  std::deque<Perm> queue{id};
  data->elements.push_back(id);
  while (!queue.empty()) {
    Perm u = std::move(queue.front());
    queue.pop_front();
    const unsigned long du = data->dist.at(u.pack());
    for (const Perm& g : gens) {
      Perm v = u * g;
      if (data->dist.emplace(v.pack(), du + 1).second) {
        data->elements.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(data->elements.begin(), data->elements.end());
  auto shared = std::shared_ptr<const SubgroupData>(std::move(data));
  cache.emplace(n, shared);
  return shared;
}

}  // namespace

std::vector<Perm> subgroup_tgen(std::size_t n, const SearchCaps& caps) {
  return subgroup_data(n, caps)->elements;
}

unsigned long tl(const Perm& p, std::size_t n, const SearchCaps& caps) {
  if (p.degree() != n) throw std::invalid_argument("tl: permutation degree differs from n");
  auto data = subgroup_data(n, caps);
  auto it = data->dist.find(p.pack());
  if (it == data->dist.end())
    throw std::domain_error("tl: permutation is not in the t-generated subgroup");
  return it->second;
}

FSet fset(const Word& x, const Word& y, const SearchCaps& caps) {
  if (x.size() != y.size()) throw std::invalid_argument("fset: word lengths differ");
  const std::size_t n = x.size();
  FSet out{x, y, {}};
  const bool constant_word = (x.count(1) == n || x.count(2) == n);
  if (x == y && constant_word) {
    // Lemma route: F(1^n|1^n) = F(2^n|2^n) = <t_1..t_{n-2}>.
    out.members = subgroup_tgen(n, caps);
    return out;
  }
  if (n > caps.full_scan)
    throw std::length_error("fset: n exceeds the full-scan cap");
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    Perm p = Perm::from_one_line(line);
    if (act(p, x) == y) out.members.push_back(p);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;  // next_permutation order is already sorted
}

EkTable ek_table(std::size_t n, long k_max, const SearchCaps& caps) {
  auto data = subgroup_data(n, caps);
  EkTable table;
  table.n = n;
  for (const Perm& p : data->elements) {
    const unsigned long k = data->dist.at(p.pack());
    if (k_max >= 0 && k > static_cast<unsigned long>(k_max)) continue;
    const unsigned long s = sl(p);
    ++table.counts[{k, s}];
  }
  return table;
}

namespace {

std::string form_label(int letter, std::size_t m, const char* pair, std::size_t k) {
  std::string s;
  if (m > 0) s += std::to_string(letter) + "^" + std::to_string(m);
  if (k > 0) s += "(" + std::string(pair) + ")^" + std::to_string(k);
  return s;
}

Word form_word(int letter, std::size_t m, const char* pair, std::size_t k) {
  Word w = Word::repeated(letter, m);
  std::string tail;
  for (std::size_t i = 0; i < k; ++i) tail += pair;
  return w.concat(Word::parse(tail));
}

}  // namespace

std::vector<OrbitInfo> orbit_partition(std::size_t n) {
  std::vector<OrbitInfo> parts;
  std::unordered_map<std::uint64_t, std::size_t> owner;  // word pack -> orbit index
  for (const Word& w : all_words(n)) {
    if (owner.count(w.pack())) continue;
    const std::vector<Word> ob = orbit(w);
    // Lexicographic scan order makes the first unseen word the orbit minimum.
    for (const Word& u : ob) owner.emplace(u.pack(), parts.size());
    parts.push_back(OrbitInfo{w, ob.size(), ""});
  }
  // Attach the theorem-named forms of the Pascal decomposition.
  auto attach = [&](const Word& form, const std::string& label) {
    auto it = owner.find(form.pack());
    if (it == owner.end()) return;
    OrbitInfo& info = parts[it->second];
    if (!info.label.empty() && info.label != label) {
      info.label += " = " + label;  // theorem violation; surfaced, not hidden
    } else {
      info.label = label;
    }
  };
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    attach(Word::repeated(2, n), form_label(2, n, "", 0));
    for (std::size_t k = 1; k <= m; ++k) {
      attach(form_word(2, 2 * (m - k), "21", k), form_label(2, 2 * (m - k), "21", k));
      attach(form_word(1, 2 * (m - k), "12", k), form_label(1, 2 * (m - k), "12", k));
    }
  } else {
    const std::size_t m = (n - 1) / 2;
    for (std::size_t k = 0; k <= m; ++k) {
      attach(form_word(2, 2 * (m - k) + 1, "12", k), form_label(2, 2 * (m - k) + 1, "12", k));
      attach(form_word(1, 2 * (m - k) + 1, "21", k), form_label(1, 2 * (m - k) + 1, "21", k));
    }
  }
  return parts;
}

}  // namespace nichols
