#include "bfcensus/store.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <queue>
#include <unistd.h>

#include "bfcensus/errors.hpp"

namespace bfcensus {

namespace {

constexpr char magic[6] = {'B', 'F', 'S', 'E', 'T', '\0'};
constexpr uint8_t format_version = 1;
constexpr uint8_t flag_sorted = 1;
constexpr uint8_t flag_signatures = 2;
constexpr std::streamoff count_offset = 9;

void put_u64_le(std::ostream& out, uint64_t v) {
  uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

uint64_t get_u64_le(std::istream& in) {
  uint8_t b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{b[i]} << (8 * i);
  return v;
}

int compare_records(const uint8_t* a, const uint8_t* b, std::size_t rb) {
  return std::memcmp(a, b, rb);
}

} // namespace

std::filesystem::path scratch_dir() {
  if (const char* env = std::getenv("BFCENSUS_TMPDIR"); env && *env) return env;
  return std::filesystem::temp_directory_path();
}

std::filesystem::path make_scratch_file(std::string_view stem) {
  static std::atomic<uint64_t> counter{0};
  const uint64_t id = counter.fetch_add(1);
  return scratch_dir() / (std::string(stem) + "-" + std::to_string(::getpid()) + "-" +
                          std::to_string(id) + ".fset");
}

std::size_t sig_bytes_for(int n) { return (static_cast<std::size_t>(n) + 7) / 8; }

fset_writer::fset_writer(const std::filesystem::path& path, int n, bool sorted, bool with_signatures)
    : path_(path),
      n_(n),
      sorted_(sorted),
      with_sigs_(with_signatures),
      rec_(detail::record_bytes_for(n)),
      entry_bytes_(rec_ + (with_signatures ? 1 + sig_bytes_for(n) : 0)) {
  if (n < 0 || n > max_vars) throw std::invalid_argument("variable count out of range");
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) throw format_error("cannot open " + path.string() + " for writing");
  out_.write(magic, 6);
  out_.put(static_cast<char>(format_version));
  out_.put(static_cast<char>(n));
  out_.put(static_cast<char>((sorted ? flag_sorted : 0) | (with_signatures ? flag_signatures : 0)));
  put_u64_le(out_, 0);
  last_.assign(rec_, 0);
}

fset_writer::~fset_writer() {
  if (!closed_) {
    try {
      close();
    } catch (...) {
    }
  }
}

void fset_writer::check_order(std::span<const uint8_t> record) {
  if (record.size() != rec_) throw std::invalid_argument("record size mismatch");
  if (sorted_ && count_ > 0 && compare_records(last_.data(), record.data(), rec_) >= 0)
    throw order_violation_error("sorted .fset stream produced out-of-order record");
  if (sorted_) std::memcpy(last_.data(), record.data(), rec_);
}

void fset_writer::add(std::span<const uint8_t> record) {
  if (with_sigs_) throw std::invalid_argument("writer expects signatures");
  check_order(record);
  out_.write(reinterpret_cast<const char*>(record.data()), static_cast<std::streamsize>(rec_));
  ++count_;
}

void fset_writer::add(std::span<const uint8_t> record, const signature& sig) {
  if (!with_sigs_) throw std::invalid_argument("writer carries no signatures");
  check_order(record);
  out_.write(reinterpret_cast<const char*>(record.data()), static_cast<std::streamsize>(rec_));
  const auto tag = static_cast<uint8_t>(sig.tag());
  out_.put(static_cast<char>(tag));
  if (sig.tag() == signature::kind::vec) {
    const std::size_t sb = sig_bytes_for(n_);
    std::vector<uint8_t> alpha(sb, 0);
    for (int v = 0; v < n_; ++v)
      if (sig.increasing_in(v)) alpha[v / 8] |= uint8_t{1} << (7 - v % 8);
    out_.write(reinterpret_cast<const char*>(alpha.data()), static_cast<std::streamsize>(sb));
  }
  ++count_;
}

void fset_writer::add_entry(std::span<const uint8_t> entry) {
  if (entry.size() != entry_bytes_) throw std::invalid_argument("entry size mismatch");
  if (!with_sigs_) {
    add(entry);
    return;
  }
  check_order(entry.subspan(0, rec_));
  out_.write(reinterpret_cast<const char*>(entry.data()), static_cast<std::streamsize>(rec_ + 1));
  if (entry[rec_] == 2)
    out_.write(reinterpret_cast<const char*>(entry.data() + rec_ + 1),
               static_cast<std::streamsize>(sig_bytes_for(n_)));
  ++count_;
}

uint64_t fset_writer::close() {
  if (closed_) return count_;
  closed_ = true;
  out_.seekp(count_offset);
  put_u64_le(out_, count_);
  out_.flush();
  if (!out_) throw format_error("write failure on " + path_.string());
  out_.close();
  return count_;
}

fset_reader::fset_reader(const std::filesystem::path& path) {
  in_.open(path, std::ios::binary);
  if (!in_) throw format_error("cannot open " + path.string());
  char m[6];
  in_.read(m, 6);
  if (!in_ || std::memcmp(m, magic, 6) != 0) throw format_error("bad .fset magic in " + path.string());
  const int version = in_.get();
  if (version != format_version) throw format_error("unsupported .fset version");
  info_.n = in_.get();
  if (info_.n < 0 || info_.n > max_vars) throw format_error("bad variable count in .fset header");
  const int flags = in_.get();
  info_.sorted = flags & flag_sorted;
  info_.has_signatures = flags & flag_signatures;
  info_.count = get_u64_le(in_);
  if (!in_) throw format_error("truncated .fset header");
  rec_ = detail::record_bytes_for(info_.n);
  entry_bytes_ = rec_ + (info_.has_signatures ? 1 + sig_bytes_for(info_.n) : 0);
}

bool fset_reader::next_entry(std::vector<uint8_t>& entry) {
  if (read_ >= info_.count) return false;
  entry.assign(entry_bytes_, 0);
  in_.read(reinterpret_cast<char*>(entry.data()), static_cast<std::streamsize>(rec_));
  if (info_.has_signatures) {
    const int tag = in_.get();
    if (tag < 0 || tag > 2) throw format_error("bad signature tag");
    entry[rec_] = static_cast<uint8_t>(tag);
    if (tag == 2)
      in_.read(reinterpret_cast<char*>(entry.data() + rec_ + 1),
               static_cast<std::streamsize>(sig_bytes_for(info_.n)));
  }
  if (!in_) throw format_error("truncated .fset record");
  ++read_;
  return true;
}

bool fset_reader::next(bool_fn& f) {
  std::vector<uint8_t> entry;
  if (!next_entry(entry)) return false;
  f = bool_fn::unpack(info_.n, std::span<const uint8_t>(entry.data(), rec_));
  return true;
}

bool fset_reader::next(bool_fn& f, std::optional<signature>& sig) {
  std::vector<uint8_t> entry;
  if (!next_entry(entry)) return false;
  f = bool_fn::unpack(info_.n, std::span<const uint8_t>(entry.data(), rec_));
  sig = info_.has_signatures ? std::optional<signature>(entry_signature(info_.n, entry)) : std::nullopt;
  return true;
}

signature entry_signature(int n, std::span<const uint8_t> entry) {
  const std::size_t rec = detail::record_bytes_for(n);
  switch (entry[rec]) {
    case 0: return signature::zero(n);
    case 1: return signature::one(n);
    default: break;
  }
  uint32_t dirs = 0;
  for (int v = 0; v < n; ++v)
    if ((entry[rec + 1 + v / 8] >> (7 - v % 8)) & 1) dirs |= uint32_t{1} << (n - 1 - v);
  return signature::vec(n, dirs);
}

void write_fset(const function_set& s, const std::filesystem::path& path) {
  fset_writer w(path, s.vars(), true, false);
  for (std::size_t i = 0; i < s.size(); ++i) w.add(s.record(i));
  w.close();
}

void write_fset(std::span<const signed_fn> fns, int n, const std::filesystem::path& path) {
  fset_writer w(path, n, true, true);
  std::vector<uint8_t> rec(detail::record_bytes_for(n));
  for (const auto& sf : fns) {
    sf.fn.pack(rec);
    w.add(rec, sf.sig);
  }
  w.close();
}

function_set read_fset(const std::filesystem::path& path, set_origin origin) {
  fset_reader r(path);
  if (r.info().sorted) {
    function_set s(r.info().n, origin);
    s.reserve(r.info().count);
    std::vector<uint8_t> entry;
    while (r.next_entry(entry)) s.push_record(std::span<const uint8_t>(entry.data(), r.record_bytes()));
    return s;
  }
  std::vector<bool_fn> fns;
  fns.reserve(r.info().count);
  bool_fn f;
  while (r.next(f)) fns.push_back(f);
  return function_set::from_functions(r.info().n, origin, std::move(fns));
}

std::vector<signed_fn> read_fset_signed(const std::filesystem::path& path) {
  fset_reader r(path);
  if (!r.info().has_signatures) throw format_error("file carries no signatures");
  std::vector<signed_fn> out;
  out.reserve(r.info().count);
  std::vector<uint8_t> entry;
  while (r.next_entry(entry))
    out.push_back({bool_fn::unpack(r.info().n, std::span<const uint8_t>(entry.data(), r.record_bytes())),
                   entry_signature(r.info().n, entry)});
  return out;
}

fset_info read_fset_info(const std::filesystem::path& path) { return fset_reader(path).info(); }

uint64_t merge_sorted(std::span<const std::filesystem::path> inputs, const std::filesystem::path& out) {
  if (inputs.empty()) throw std::invalid_argument("merge needs at least one input");
  std::vector<std::unique_ptr<fset_reader>> readers;
  readers.reserve(inputs.size());
  for (const auto& p : inputs) readers.push_back(std::make_unique<fset_reader>(p));
  const int n = readers[0]->info().n;
  const bool sigs = readers[0]->info().has_signatures;
  for (const auto& r : readers) {
    if (r->info().n != n) throw std::invalid_argument("merge inputs mix variable counts");
    if (r->info().has_signatures != sigs) throw std::invalid_argument("merge inputs mix signature presence");
    if (!r->info().sorted) throw order_violation_error("merge input not sorted");
  }
  const std::size_t rb = readers[0]->record_bytes();

  struct head {
    std::vector<uint8_t> entry;
    std::size_t src;
  };
  auto cmp = [rb](const head& a, const head& b) {
    const int c = std::memcmp(a.entry.data(), b.entry.data(), rb);
    return c != 0 ? c > 0 : a.src > b.src;
  };
  std::priority_queue<head, std::vector<head>, decltype(cmp)> heap(cmp);
  std::vector<std::vector<uint8_t>> last(inputs.size());
  for (std::size_t k = 0; k < readers.size(); ++k) {
    std::vector<uint8_t> e;
    if (readers[k]->next_entry(e)) heap.push({std::move(e), k});
  }

  fset_writer w(out, n, true, sigs);
  std::vector<uint8_t> prev;
  while (!heap.empty()) {
    head h = heap.top();
    heap.pop();
    if (!last[h.src].empty() && std::memcmp(last[h.src].data(), h.entry.data(), rb) >= 0)
      throw order_violation_error("merge input not sorted");
    last[h.src] = h.entry;
    if (prev.empty() || std::memcmp(prev.data(), h.entry.data(), rb) != 0) {
      w.add_entry(h.entry);
      prev = h.entry;
    }
    std::vector<uint8_t> e;
    if (readers[h.src]->next_entry(e)) heap.push({std::move(e), h.src});
  }
  return w.close();
}

uint64_t external_sort(const std::filesystem::path& in, const std::filesystem::path& out,
                       std::size_t mem_budget, const std::filesystem::path& scratch) {
  fset_reader r(in);
  const std::size_t eb = r.entry_bytes();
  const std::size_t rb = r.record_bytes();
  const std::size_t chunk_entries = std::max<std::size_t>(1, mem_budget / std::max<std::size_t>(eb, 1));

  std::vector<std::filesystem::path> shards;
  std::vector<uint8_t> buf;
  std::vector<uint8_t> entry;
  bool more = true;
  while (more) {
    buf.clear();
    std::size_t count = 0;
    while (count < chunk_entries && (more = r.next_entry(entry))) {
      buf.insert(buf.end(), entry.begin(), entry.end());
      ++count;
    }
    if (count == 0) break;
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::memcmp(buf.data() + a * eb, buf.data() + b * eb, rb) < 0;
    });
    auto shard = make_scratch_file("bfcensus-sort");
    if (!scratch.empty()) shard = scratch / shard.filename();
    fset_writer w(shard, r.info().n, true, r.info().has_signatures);
    const uint8_t* prev = nullptr;
    for (const std::size_t i : idx) {
      const uint8_t* e = buf.data() + i * eb;
      if (prev && std::memcmp(prev, e, rb) == 0) continue;
      w.add_entry({e, eb});
      prev = e;
    }
    w.close();
    shards.push_back(shard);
  }

  if (shards.empty()) {
    fset_writer w(out, r.info().n, true, r.info().has_signatures);
    return w.close();
  }
  const uint64_t total = merge_sorted(shards, out);
  for (const auto& p : shards) std::filesystem::remove(p);
  return total;
}

} // namespace bfcensus
