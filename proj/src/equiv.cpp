#include "bfcensus/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bfcensus/errors.hpp"
#include "bfcensus/store.hpp"

namespace bfcensus {

namespace {

constexpr int max_filter_vars = 8; // 8! index tables are the precompute cap

void check_perm(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (const int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation of 0..n-1");
    seen[v] = true;
  }
}

int resolve_threads(const equiv_options& opts) {
  const int t = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, t);
}

/* Byte-indexed scatter tables: applying a table permutation to a one-word
   function becomes record_bytes lookups. lut[(byte << 8) | value] is the
   output word contribution of that input byte. */
class scatter_luts {
public:
  scatter_luts(const std::vector<perm_index>& perms, int n)
      : rb_(detail::record_bytes_for(n)), lut_(perms.size() * rb_ * 256, 0) {
    const uint32_t bits = uint32_t{1} << n;
    for (std::size_t p = 0; p < perms.size(); ++p) {
      std::vector<uint32_t> inverse(bits);
      for (uint32_t i = 0; i < bits; ++i) inverse[perms[p].table[i]] = i;
      uint64_t* base = lut_.data() + p * rb_ * 256;
      for (uint32_t j = 0; j < bits; ++j) {
        const uint32_t byte = j >> 3;
        const uint32_t in_bit = uint32_t{1} << (7 - (j & 7));
        const uint64_t out = uint64_t{1} << (63 - inverse[j]);
        for (uint32_t v = 0; v < 256; ++v)
          if (v & in_bit) base[byte * 256 + v] |= out;
      }
    }
  }

  uint64_t apply(std::size_t p, uint64_t w) const {
    const uint64_t* base = lut_.data() + p * rb_ * 256;
    uint64_t out = 0;
    for (std::size_t b = 0; b < rb_; ++b)
      out |= base[b * 256 + ((w >> (56 - 8 * b)) & 0xFF)];
    return out;
  }

private:
  std::size_t rb_;
  std::vector<uint64_t> lut_;
};

bool word_binary_search(const std::vector<uint64_t>& sorted, uint64_t w) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
  return it != sorted.end() && *it == w;
}

} // namespace

perm_index build_perm_index(std::span<const int> perm, int n) {
  check_perm(perm, n);
  perm_index p;
  p.n = n;
  p.perm.assign(perm.begin(), perm.end());
  const uint32_t bits = uint32_t{1} << n;
  p.table.resize(bits);
  for (uint32_t i = 0; i < bits; ++i) {
    uint32_t j = 0;
    for (int k = 0; k < n; ++k)
      if ((i >> (n - 1 - perm[k])) & 1) j |= uint32_t{1} << (n - 1 - k);
    p.table[i] = j;
  }
  return p;
}

perm_index compose(const perm_index& p, const perm_index& q) {
  if (p.n != q.n) throw std::invalid_argument("compose needs equal variable counts");
  std::vector<int> perm(p.n);
  for (int k = 0; k < p.n; ++k) perm[k] = q.perm[p.perm[k]];
  perm_index r = build_perm_index(perm, p.n);
  for (uint32_t i = 0; i < r.table.size(); ++i)
    if (r.table[i] != p.table[q.table[i]])
      throw std::logic_error("index table composition mismatch");
  return r;
}

bool_fn apply_perm(const bool_fn& f, const perm_index& p) {
  if (f.vars() != p.n) throw std::invalid_argument("permutation width mismatch");
  bool_fn out(f.vars());
  for (uint32_t i = 0; i < f.num_bits(); ++i)
    if (f.get(p.table[i])) out.set(i, true);
  return out;
}

std::vector<perm_index> all_perm_indexes(int n) {
  if (n > max_filter_vars) throw resource_limit_error("permutation tables capped at n = 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<perm_index> out;
  do {
    out.push_back(build_perm_index(perm, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

class_census filter_classes(const function_set& s) {
  const int n = s.vars();
  const auto perms = all_perm_indexes(n);
  class_census census;
  census.source_size = s.size();

  if (n <= 6) {
    const scatter_luts luts(perms, n);
    const std::vector<uint64_t> words = s.as_words();
    std::vector<uint64_t> reps;
    for (const uint64_t w : words) {
      bool present = false;
      for (std::size_t p = 0; p < perms.size() && !present; ++p)
        present = word_binary_search(reps, luts.apply(p, w));
      if (!present) reps.push_back(w); // input ascending keeps reps sorted
    }
    census.representatives = function_set::from_words(n, s.origin(), reps);
  } else {
    std::vector<bool_fn> reps;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const bool_fn f = s.at(i);
      bool present = false;
      for (std::size_t p = 0; p < perms.size() && !present; ++p) {
        const bool_fn g = apply_perm(f, perms[p]);
        present = std::binary_search(reps.begin(), reps.end(), g);
      }
      if (!present) reps.push_back(f);
    }
    census.representatives = function_set::from_functions(n, s.origin(), std::move(reps));
  }
  census.class_count = census.representatives.size();
  return census;
}

bool_fn canonical_form(const bool_fn& f) {
  const auto perms = all_perm_indexes(f.vars());
  bool_fn best = f;
  for (std::size_t p = 1; p < perms.size(); ++p) best = std::min(best, apply_perm(f, perms[p]));
  return best;
}

class_census class_census_by_canonical(const function_set& s, const equiv_options& opts) {
  const int n = s.vars();
  const auto perms = all_perm_indexes(n);
  class_census census;
  census.source_size = s.size();

  if (n <= 6) {
    const scatter_luts luts(perms, n);
    const std::vector<uint64_t> words = s.as_words();
    std::vector<uint64_t> canon(words.size());
    const int threads = resolve_threads(opts);
    auto map_range = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        uint64_t best = words[i];
        for (std::size_t p = 1; p < perms.size(); ++p) best = std::min(best, luts.apply(p, words[i]));
        canon[i] = best;
      }
    };
    if (threads == 1 || words.size() < 1024) {
      map_range(0, words.size());
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back(map_range, words.size() * t / threads, words.size() * (t + 1) / threads);
      for (auto& th : pool) th.join();
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    census.representatives = function_set::from_words(n, s.origin(), canon);
  } else {
    std::vector<bool_fn> canon;
    canon.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const bool_fn f = s.at(i);
      bool_fn best = f;
      for (std::size_t p = 1; p < perms.size(); ++p) best = std::min(best, apply_perm(f, perms[p]));
      canon.push_back(std::move(best));
    }
    census.representatives = function_set::from_functions(n, s.origin(), std::move(canon));
  }
  census.class_count = census.representatives.size();
  return census;
}

void write_class_census(const class_census& census, std::string_view property,
                        const std::filesystem::path& fset_path) {
  write_fset(census.representatives, fset_path);
  nlohmann::json j;
  j["property"] = std::string(property);
  j["n"] = census.representatives.vars();
  j["classCount"] = census.class_count;
  j["sourceSize"] = census.source_size;
  std::ofstream out(fset_path.string() + ".json");
  out << j.dump(2) << "\n";
  if (!out) throw format_error("cannot write class census sidecar");
}

} // namespace bfcensus
