#include "bfcensus/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <thread>

#include "bfcensus/errors.hpp"
#include "bfcensus/store.hpp"

namespace bfcensus {

void count_collector::accept(std::span<const uint8_t> record) {
  ++total_;
  if (!weights_.empty()) {
    uint32_t w = 0;
    for (const uint8_t b : record) w += static_cast<uint32_t>(std::popcount(b));
    ++weights_[w];
  }
}

namespace {

int resolve_threads(const enumerate_options& opts) {
  const int t = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, t);
}

void pack_words(const uint64_t* words, std::size_t rec_bytes, uint8_t* out) {
  for (std::size_t k = 0; k < rec_bytes; ++k)
    out[k] = static_cast<uint8_t>(words[k / 8] >> (56 - 8 * (k % 8)));
}

/* ---- ordered output shards, spilled to .fset scratch files on demand ---- */

struct segment {
  std::vector<uint8_t> mem;
  std::filesystem::path file;
  bool is_file() const { return !file.empty(); }
};

class spill_buffer {
public:
  spill_buffer(int n, bool sigs, std::size_t budget, std::filesystem::path scratch)
      : n_(n),
        sigs_(sigs),
        eb_(detail::record_bytes_for(n) + (sigs ? 1 + sig_bytes_for(n) : 0)),
        budget_(std::max(budget, eb_ * 64)),
        scratch_(std::move(scratch)) {}

  std::size_t entry_bytes() const { return eb_; }

  void add(const uint8_t* entry) {
    mem_.insert(mem_.end(), entry, entry + eb_);
    if (mem_.size() >= budget_) flush();
  }

  std::vector<segment> take() {
    if (!mem_.empty()) {
      segments_.push_back({std::move(mem_), {}});
      mem_ = {};
    }
    return std::move(segments_);
  }

private:
  void flush() {
    auto path = make_scratch_file("bfcensus-shard");
    if (!scratch_.empty()) path = scratch_ / path.filename();
    fset_writer w(path, n_, /*sorted=*/true, sigs_);
    for (std::size_t off = 0; off < mem_.size(); off += eb_) w.add_entry({mem_.data() + off, eb_});
    w.close();
    segments_.push_back({{}, path});
    mem_.clear();
  }

  int n_;
  bool sigs_;
  std::size_t eb_;
  std::size_t budget_;
  std::filesystem::path scratch_;
  std::vector<uint8_t> mem_;
  std::vector<segment> segments_;
};

/* Sequential reader over a list of segments; deletes scratch files as they
   are drained. */
class entry_stream {
public:
  entry_stream(std::vector<segment> segs, std::size_t eb) : segs_(std::move(segs)), eb_(eb) {}

  const uint8_t* peek() {
    while (true) {
      if (cur_mem_) {
        if (off_ < cur_mem_->size()) return cur_mem_->data() + off_;
        cur_mem_ = nullptr;
      } else if (reader_) {
        if (have_) return buf_.data();
        if (reader_->next_entry(buf_)) {
          have_ = true;
          return buf_.data();
        }
        reader_.reset();
        std::filesystem::remove(segs_[idx_ - 1].file);
      } else {
        if (idx_ >= segs_.size()) return nullptr;
        segment& s = segs_[idx_++];
        if (s.is_file()) {
          reader_ = std::make_unique<fset_reader>(s.file);
          have_ = false;
        } else {
          cur_mem_ = &s.mem;
          off_ = 0;
        }
      }
    }
  }

  void advance() {
    if (cur_mem_)
      off_ += eb_;
    else
      have_ = false;
  }

private:
  std::vector<segment> segs_;
  std::size_t eb_;
  std::size_t idx_ = 0;
  std::vector<uint8_t>* cur_mem_ = nullptr;
  std::size_t off_ = 0;
  std::unique_ptr<fset_reader> reader_;
  std::vector<uint8_t> buf_;
  bool have_ = false;
};

void replay_stream(entry_stream& s, const std::function<void(const uint8_t*)>& fn) {
  while (const uint8_t* e = s.peek()) {
    fn(e);
    s.advance();
  }
}

/* k-way merge over individually sorted streams, dropping duplicates. */
void merge_streams(std::vector<entry_stream>& streams, std::size_t rb, std::size_t eb,
                   const std::function<void(const uint8_t*)>& fn) {
  struct head {
    const uint8_t* entry;
    std::size_t src;
  };
  auto cmp = [rb](const head& a, const head& b) {
    const int c = std::memcmp(a.entry, b.entry, rb);
    return c != 0 ? c > 0 : a.src > b.src;
  };
  std::priority_queue<head, std::vector<head>, decltype(cmp)> heap(cmp);
  for (std::size_t k = 0; k < streams.size(); ++k)
    if (const uint8_t* e = streams[k].peek()) heap.push({e, k});
  std::vector<uint8_t> prev;
  while (!heap.empty()) {
    const head h = heap.top();
    heap.pop();
    if (prev.empty() || std::memcmp(prev.data(), h.entry, rb) != 0) {
      prev.assign(h.entry, h.entry + eb);
      fn(prev.data());
    }
    streams[h.src].advance();
    if (const uint8_t* e = streams[h.src].peek()) heap.push({e, h.src});
  }
}

/* ---- task runner: workers pull tasks, emit ordered shards ---- */

struct run_stats {
  uint64_t pairs = 0;
  uint64_t emitted = 0;
};

std::vector<std::vector<segment>> run_tasks(
    std::size_t num_tasks, int n_out, bool sigs, const enumerate_options& opts,
    const std::function<void(std::size_t, spill_buffer&, run_stats&)>& work) {
  const int threads = static_cast<int>(
      std::min<std::size_t>(resolve_threads(opts), std::max<std::size_t>(num_tasks, 1)));
  std::vector<std::vector<segment>> out(num_tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<uint64_t> pairs{0}, emitted{0};
  std::atomic<bool> done{false};
  std::exception_ptr err;
  std::mutex err_mu;

  /* Residual unflushed buffers across all tasks stay within the budget. */
  const std::size_t per_task_budget =
      std::max<std::size_t>(opts.memory_budget / (2 * std::max<std::size_t>(num_tasks, 1)), 1 << 16);

  auto body = [&]() {
    try {
      while (true) {
        const std::size_t t = next.fetch_add(1);
        if (t >= num_tasks) break;
        spill_buffer buf(n_out, sigs, per_task_budget, opts.scratch);
        run_stats local;
        work(t, buf, local);
        out[t] = buf.take();
        pairs += local.pairs;
        emitted += local.emitted;
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  };

  std::thread monitor;
  if (opts.progress)
    monitor = std::thread([&]() {
      while (!done.load()) {
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
        opts.progress(pairs.load(), emitted.load());
      }
    });

  if (threads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  done = true;
  if (monitor.joinable()) monitor.join();
  if (err) std::rethrow_exception(err);
  if (opts.progress) opts.progress(pairs.load(), emitted.load());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t total, int threads) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(total, static_cast<std::size_t>(threads) * 8));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c)
    out.emplace_back(total * c / chunks, total * (c + 1) / chunks);
  return out;
}

/* ---- monotone generation ---- */

void check_monotone_range(int n, const enumerate_options& opts) {
  if (n < 0 || n > 7) throw std::invalid_argument("monotone enumeration supports 0 <= n <= 7");
  if (n == 7 && !opts.allow_large)
    throw resource_limit_error("monotone enumeration at n = 7 requires the allow-large override");
}

/* All k-variable monotone functions as single words, ascending; k <= 6.
   Level k is built from ordered pairs (g, h) of level k-1 with g <= h. */
std::vector<uint64_t> monotone_level(int k) {
  std::vector<uint64_t> lvl = {0, uint64_t{1} << 63};
  for (int j = 1; j <= k; ++j) {
    const uint32_t half = uint32_t{1} << (j - 1);
    std::vector<uint64_t> next;
    next.reserve(lvl.size() * 3);
    for (const uint64_t g : lvl)
      for (const uint64_t h : lvl)
        if ((g & ~h) == 0) next.push_back(g | (h >> half));
    lvl = std::move(next);
  }
  return lvl;
}

void replay_tasks_to(std::vector<std::vector<segment>> results, std::size_t eb,
                     const std::function<void(const uint8_t*)>& fn) {
  for (auto& segs : results) {
    entry_stream s(std::move(segs), eb);
    replay_stream(s, fn);
  }
}

void enumerate_monotone_stream_impl(int n, const enumerate_options& opts,
                                    const std::function<void(const uint8_t*)>& fn) {
  const std::size_t rb = detail::record_bytes_for(n);
  if (n == 0) {
    const uint8_t zero = 0x00, one = 0x80;
    fn(&zero);
    fn(&one);
    return;
  }
  const std::vector<uint64_t> level = monotone_level(n - 1);
  const auto ranges = chunk_ranges(level.size(), resolve_threads(opts));
  const uint32_t half = uint32_t{1} << (n - 1);

  auto work = [&](std::size_t t, spill_buffer& buf, run_stats& stats) {
    uint8_t entry[16];
    for (std::size_t gi = ranges[t].first; gi < ranges[t].second; ++gi) {
      const uint64_t g = level[gi];
      for (const uint64_t h : level) {
        ++stats.pairs;
        if ((g & ~h) != 0) continue;
        if (n <= 6) {
          const uint64_t w = g | (h >> half);
          pack_words(&w, rb, entry);
        } else {
          const uint64_t w[2] = {g, h};
          pack_words(w, rb, entry);
        }
        buf.add(entry);
        ++stats.emitted;
      }
    }
  };
  replay_tasks_to(run_tasks(ranges.size(), n, false, opts, work), rb, fn);
}

/* ---- unate generation ---- */

void check_unate_range(int n, const enumerate_options& opts) {
  if (n < 0 || n > 7) throw std::invalid_argument("unate enumeration supports 0 <= n <= 7");
  if (n > 5 && !opts.allow_large)
    throw resource_limit_error("unate enumeration beyond n = 5 requires the allow-large override");
}

struct unate_rec {
  uint64_t fn;
  uint16_t alpha; // weak-increase mask, bit m-1 is x_1; all ones for constants
  uint16_t deg;   // degenerate-variable mask; all ones for constants
  uint8_t tag;    // 0 z, 1 o, 2 vec
};

/* Admission test for g||h: every variable needs a common weak direction,
   and the halves must be comparable. Strict directions are compared only
   where both halves are strict; degenerate variables run both ways. */
inline bool admit(const unate_rec& g, const unate_rec& h) {
  if ((g.alpha ^ h.alpha) & ~g.deg & ~h.deg) return false;
  return (g.fn & ~h.fn) == 0 || (h.fn & ~g.fn) == 0;
}

inline unate_rec child(const unate_rec& g, const unate_rec& h, int m) {
  unate_rec f;
  f.fn = m < 6 ? (g.fn | (h.fn >> (uint32_t{1} << m))) : 0; // two-word results keep (g, h) apart
  const uint16_t incr1 = (g.fn & ~h.fn) == 0 ? uint16_t{1} : uint16_t{0};
  const uint16_t deg1 = g.fn == h.fn ? uint16_t{1} : uint16_t{0};
  f.alpha = static_cast<uint16_t>((incr1 << m) | (g.alpha & h.alpha));
  f.deg = static_cast<uint16_t>((deg1 << m) | (g.deg & h.deg));
  f.tag = (g.tag != 2 && g.tag == h.tag) ? g.tag : 2;
  return f;
}

std::vector<unate_rec> unate_base_level() {
  return {
      {0x0000000000000000ull, 1, 1, 0},
      {0x4000000000000000ull, 1, 0, 2},
      {0x8000000000000000ull, 0, 0, 2},
      {0xC000000000000000ull, 1, 1, 1},
  };
}

struct unate_level_index {
  std::map<uint16_t, std::vector<uint32_t>> strict; // alpha -> indices, ascending
  std::vector<uint32_t> degenerate;                 // non-constant recs with deg != 0
};

unate_level_index index_level(const std::vector<unate_rec>& level) {
  unate_level_index ix;
  for (uint32_t i = 0; i < level.size(); ++i) {
    const auto& r = level[i];
    if (r.tag != 2) continue;
    if (r.deg == 0)
      ix.strict[r.alpha].push_back(i);
    else
      ix.degenerate.push_back(i);
  }
  return ix;
}

/* Visits every admissible ordered pair with the given outer index range,
   inner index ascending. Constants pair with everything; a strict outer
   half only needs its own strict alpha bucket, the degenerate records,
   and the two constants. */
template <class Emit>
void for_each_admissible(const std::vector<unate_rec>& level, const unate_level_index& ix,
                         std::size_t outer_begin, std::size_t outer_end, uint64_t& pairs,
                         Emit&& emit) {
  const uint32_t last = static_cast<uint32_t>(level.size() - 1);
  for (std::size_t gi = outer_begin; gi < outer_end; ++gi) {
    const unate_rec& g = level[gi];
    if (g.tag != 2 || g.deg != 0) {
      for (uint32_t hi = 0; hi < level.size(); ++hi) {
        ++pairs;
        if (admit(g, level[hi])) emit(g, level[hi]);
      }
      continue;
    }
    const auto bucket_it = ix.strict.find(g.alpha);
    const std::vector<uint32_t>* bucket = bucket_it == ix.strict.end() ? nullptr : &bucket_it->second;
    ++pairs;
    emit(g, level[0]); // constant 0, always admissible
    std::size_t bi = 0, di = 0;
    const std::size_t bs = bucket ? bucket->size() : 0, ds = ix.degenerate.size();
    while (bi < bs || di < ds) {
      uint32_t hi;
      if (bi < bs && (di >= ds || (*bucket)[bi] < ix.degenerate[di]))
        hi = (*bucket)[bi++];
      else
        hi = ix.degenerate[di++];
      ++pairs;
      if (admit(g, level[hi])) emit(g, level[hi]);
    }
    ++pairs;
    emit(g, level[last]); // constant 1, always admissible
  }
}

std::vector<unate_rec> next_unate_level(const std::vector<unate_rec>& level, int m) {
  const unate_level_index ix = index_level(level);
  std::vector<unate_rec> next;
  next.reserve(level.size() * 2);
  uint64_t pairs = 0;
  for_each_admissible(level, ix, 0, level.size(), pairs,
                      [&](const unate_rec& g, const unate_rec& h) { next.push_back(child(g, h, m)); });
  return next;
}

/* m-variable level list, m >= 1, built from the four base pairs. */
std::vector<unate_rec> unate_level(int m) {
  std::vector<unate_rec> level = unate_base_level();
  for (int j = 1; j < m; ++j) level = next_unate_level(level, j);
  return level;
}

void fill_signed_entry(uint8_t* entry, const uint64_t* fn_words, std::size_t rb, uint8_t tag,
                       uint16_t alpha, int n) {
  pack_words(fn_words, rb, entry);
  entry[rb] = tag;
  std::memset(entry + rb + 1, 0, sig_bytes_for(n));
  if (tag == 2)
    for (int v = 0; v < n; ++v)
      if ((alpha >> (n - 1 - v)) & 1) entry[rb + 1 + v / 8] |= uint8_t{1} << (7 - v % 8);
}

void enumerate_unate_stream_impl(int n, const enumerate_options& opts,
                                 const std::function<void(const uint8_t*)>& fn) {
  const std::size_t rb = detail::record_bytes_for(n);
  const std::size_t eb = rb + 1 + sig_bytes_for(n);
  std::vector<uint8_t> entry(eb);
  if (n == 0) {
    const uint64_t zero = 0, one = uint64_t{1} << 63;
    fill_signed_entry(entry.data(), &zero, rb, 0, 0, n);
    fn(entry.data());
    fill_signed_entry(entry.data(), &one, rb, 1, 0, n);
    fn(entry.data());
    return;
  }
  if (n == 1) {
    for (const auto& r : unate_base_level()) {
      fill_signed_entry(entry.data(), &r.fn, rb, r.tag, r.alpha, n);
      fn(entry.data());
    }
    return;
  }
  const std::vector<unate_rec> level = unate_level(n - 1);
  const unate_level_index ix = index_level(level);
  const auto ranges = chunk_ranges(level.size(), resolve_threads(opts));
  const int m = n - 1;

  auto work = [&](std::size_t t, spill_buffer& buf, run_stats& stats) {
    std::vector<uint8_t> e(eb);
    for_each_admissible(level, ix, ranges[t].first, ranges[t].second, stats.pairs,
                        [&](const unate_rec& g, const unate_rec& h) {
                          const unate_rec f = child(g, h, m);
                          if (n <= 6) {
                            fill_signed_entry(e.data(), &f.fn, rb, f.tag, f.alpha, n);
                          } else {
                            const uint64_t w[2] = {g.fn, h.fn};
                            fill_signed_entry(e.data(), w, rb, f.tag, f.alpha, n);
                          }
                          buf.add(e.data());
                          ++stats.emitted;
                        });
  };
  replay_tasks_to(run_tasks(ranges.size(), n, true, opts, work), eb, fn);
}

/* ---- balanced monotone via weight buckets ---- */

void check_balanced_range(int n, const enumerate_options& opts) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("balanced monotone enumeration supports 0 <= n <= 7");
  if (n == 7 && !opts.allow_large)
    throw resource_limit_error("balanced monotone enumeration at n = 7 requires the allow-large override");
}

void buckets_stream_impl(const weight_buckets& buckets, const enumerate_options& opts,
                         const std::function<void(const uint8_t*)>& fn) {
  if (buckets.parent_origin != set_origin::monotone)
    throw std::invalid_argument(
        "weight-bucket pairing needs buckets of a complete monotone set; it consumes the whole "
        "level below and cannot be chained on a balanced set");
  const int m = buckets.n;
  if (m > 6) throw std::invalid_argument("weight-bucket pairing supports source levels up to n = 6");
  const int n = m + 1;
  const std::size_t rb = detail::record_bytes_for(n);
  const uint32_t num_weights = (uint32_t{1} << m) + 1;
  const uint32_t half = uint32_t{1} << m;

  std::vector<std::vector<uint64_t>> words(num_weights);
  for (uint32_t w = 0; w < num_weights; ++w) words[w] = buckets.buckets[w].as_words();

  struct task {
    uint32_t w;
    std::size_t begin, end;
  };
  std::vector<task> tasks;
  const int threads = resolve_threads(opts);
  for (uint32_t w = 0; w < num_weights; ++w)
    for (const auto& [b, e] : chunk_ranges(words[w].size(), threads))
      if (b < e) tasks.push_back({w, b, e});

  auto work = [&](std::size_t t, spill_buffer& buf, run_stats& stats) {
    uint8_t entry[16];
    const auto& [w, begin, end] = tasks[t];
    const auto& lo = words[w];
    const auto& hi = words[num_weights - 1 - w];
    for (std::size_t gi = begin; gi < end; ++gi) {
      const uint64_t g = lo[gi];
      for (const uint64_t h : hi) {
        ++stats.pairs;
        if ((g & ~h) != 0) continue;
        if (n <= 6) {
          const uint64_t out = g | (h >> half);
          pack_words(&out, rb, entry);
        } else {
          const uint64_t out[2] = {g, h};
          pack_words(out, rb, entry);
        }
        buf.add(entry);
        ++stats.emitted;
      }
    }
  };
  auto results = run_tasks(tasks.size(), n, false, opts, work);

  /* One ordered logical stream per weight (its chunks concatenate in
     order); the per-weight streams interleave, so merge them. */
  std::vector<entry_stream> streams;
  streams.reserve(num_weights);
  for (uint32_t w = 0; w < num_weights; ++w) {
    std::vector<segment> segs;
    for (std::size_t t = 0; t < tasks.size(); ++t)
      if (tasks[t].w == w)
        for (auto& s : results[t]) segs.push_back(std::move(s));
    streams.emplace_back(std::move(segs), rb);
  }
  merge_streams(streams, rb, rb, fn);
}

class sink_guard {
public:
  sink_guard(const enumerate_options& opts, std::size_t entry_bytes)
      : budget_(opts.memory_budget), allow_(opts.allow_large), eb_(entry_bytes) {}
  void count() {
    bytes_ += eb_;
    if (!allow_ && bytes_ > budget_)
      throw resource_limit_error("materialized result exceeds the memory budget; use the "
                                 "allow-large override or stream to a file");
  }

private:
  std::size_t budget_;
  bool allow_;
  std::size_t eb_;
  std::size_t bytes_ = 0;
};

} // namespace

void enumerate_monotone_stream(int n, const enumerate_options& opts, fn_sink& sink) {
  check_monotone_range(n, opts);
  enumerate_monotone_stream_impl(n, opts, [&](const uint8_t* rec) {
    sink.accept({rec, detail::record_bytes_for(n)});
  });
}

function_set enumerate_monotone(int n, const enumerate_options& opts) {
  check_monotone_range(n, opts);
  function_set out(n, set_origin::monotone);
  sink_guard guard(opts, detail::record_bytes_for(n));
  enumerate_monotone_stream_impl(n, opts, [&](const uint8_t* rec) {
    guard.count();
    out.push_record({rec, detail::record_bytes_for(n)});
  });
  return out;
}

void enumerate_balanced_monotone_stream(int n, const enumerate_options& opts, fn_sink& sink) {
  check_balanced_range(n, opts);
  const std::size_t rb = detail::record_bytes_for(n);
  if (n == 7) {
    const weight_buckets buckets = bucket_by_weight(enumerate_monotone(6, opts));
    buckets_stream_impl(buckets, opts, [&](const uint8_t* rec) { sink.accept({rec, rb}); });
    return;
  }
  if (n == 0) return; // no balanced 0-variable functions
  const uint32_t target = uint32_t{1} << (n - 1);
  enumerate_monotone_stream_impl(n, opts, [&](const uint8_t* rec) {
    uint32_t w = 0;
    for (std::size_t k = 0; k < rb; ++k) w += static_cast<uint32_t>(std::popcount(rec[k]));
    if (w == target) sink.accept({rec, rb});
  });
}

function_set enumerate_balanced_monotone(int n, const enumerate_options& opts) {
  check_balanced_range(n, opts);
  set_collector c(n, set_origin::balanced_monotone);
  enumerate_balanced_monotone_stream(n, opts, c);
  return c.take();
}

void enumerate_unate_stream(int n, const enumerate_options& opts, signed_sink& sink) {
  check_unate_range(n, opts);
  const std::size_t rb = detail::record_bytes_for(n);
  enumerate_unate_stream_impl(n, opts, [&](const uint8_t* entry) {
    sink.accept({entry, rb}, entry_signature(n, {entry, rb + 1 + sig_bytes_for(n)}));
  });
}

std::vector<signed_fn> enumerate_unate(int n, const enumerate_options& opts) {
  check_unate_range(n, opts);
  std::vector<signed_fn> out;
  sink_guard guard(opts, sizeof(signed_fn) + detail::record_bytes_for(n));
  const std::size_t rb = detail::record_bytes_for(n);
  const std::size_t eb = rb + 1 + sig_bytes_for(n);
  enumerate_unate_stream_impl(n, opts, [&](const uint8_t* entry) {
    guard.count();
    out.push_back({bool_fn::unpack(n, {entry, rb}), entry_signature(n, {entry, eb})});
  });
  return out;
}

function_set enumerate_unate_set(int n, const enumerate_options& opts) {
  check_unate_range(n, opts);
  function_set out(n, set_origin::unate);
  sink_guard guard(opts, detail::record_bytes_for(n));
  enumerate_unate_stream_impl(n, opts, [&](const uint8_t* entry) {
    guard.count();
    out.push_record({entry, detail::record_bytes_for(n)});
  });
  return out;
}

void balanced_monotone_from_buckets_stream(const weight_buckets& buckets,
                                           const enumerate_options& opts, fn_sink& sink) {
  if (buckets.n == 6 && !opts.allow_large)
    throw resource_limit_error("balanced monotone enumeration at n = 7 requires the allow-large override");
  buckets_stream_impl(buckets, opts, [&](const uint8_t* rec) {
    sink.accept({rec, detail::record_bytes_for(buckets.n + 1)});
  });
}

function_set balanced_monotone_from_buckets(const weight_buckets& buckets,
                                            const enumerate_options& opts) {
  set_collector c(buckets.n + 1, set_origin::balanced_monotone);
  balanced_monotone_from_buckets_stream(buckets, opts, c);
  return c.take();
}

weight_buckets bucket_by_weight(const function_set& s) {
  weight_buckets out;
  out.n = s.vars();
  out.parent_origin = s.origin();
  const uint32_t num_weights = (uint32_t{1} << s.vars()) + 1;
  out.buckets.assign(num_weights, function_set(s.vars(), s.origin()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto rec = s.record(i);
    uint32_t w = 0;
    for (const uint8_t b : rec) w += static_cast<uint32_t>(std::popcount(b));
    out.buckets[w].push_record(rec);
  }
  return out;
}

function_set filter_balanced(const function_set& s) {
  const set_origin origin =
      s.origin() == set_origin::monotone ? set_origin::balanced_monotone : s.origin();
  function_set out(s.vars(), origin);
  if (s.vars() == 0) return out;
  const uint32_t target = uint32_t{1} << (s.vars() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto rec = s.record(i);
    uint32_t w = 0;
    for (const uint8_t b : rec) w += static_cast<uint32_t>(std::popcount(b));
    if (w == target) out.push_record(rec);
  }
  return out;
}

function_set filter_nondegenerate(const function_set& s) {
  function_set out(s.vars(), s.origin());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (is_nondegenerate(s.at(i))) out.push_record(s.record(i));
  return out;
}

} // namespace bfcensus
