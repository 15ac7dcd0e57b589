#include "bfcensus/function_set.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "bfcensus/errors.hpp"

namespace bfcensus {

std::string_view to_string(set_origin o) {
  switch (o) {
    case set_origin::monotone: return "monotone";
    case set_origin::balanced_monotone: return "balanced-monotone";
    case set_origin::unate: return "unate";
    case set_origin::brute_force: return "brute-force";
  }
  return "?";
}

function_set::function_set(int n, set_origin origin)
    : n_(n), origin_(origin), rec_(detail::record_bytes_for(n)) {
  if (n < 0 || n > max_vars) throw std::invalid_argument("variable count out of range");
}

function_set function_set::from_functions(int n, set_origin origin, std::vector<bool_fn> fns) {
  for (const auto& f : fns)
    if (f.vars() != n) throw std::invalid_argument("mixed variable counts in set");
  std::sort(fns.begin(), fns.end());
  fns.erase(std::unique(fns.begin(), fns.end()), fns.end());
  function_set s(n, origin);
  s.reserve(fns.size());
  std::vector<uint8_t> rec(s.rec_);
  for (const auto& f : fns) {
    f.pack(rec);
    s.push_record(rec);
  }
  return s;
}

function_set function_set::from_words(int n, set_origin origin, std::span<const uint64_t> words) {
  if (n > 6) throw std::invalid_argument("single-word sets need n <= 6");
  function_set s(n, origin);
  s.reserve(words.size());
  for (const uint64_t w : words) s.push_word(w);
  return s;
}

std::vector<uint64_t> function_set::as_words() const {
  if (n_ > 6) throw std::invalid_argument("as_words needs n <= 6");
  std::vector<uint64_t> out(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    uint64_t w = 0;
    const uint8_t* p = data_.data() + i * rec_;
    for (std::size_t k = 0; k < rec_; ++k) w |= uint64_t{p[k]} << (56 - 8 * k);
    out[i] = w;
  }
  return out;
}

bool function_set::contains(std::span<const uint8_t> rec) const {
  if (rec.size() != rec_) throw std::invalid_argument("record size mismatch");
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int c = std::memcmp(data_.data() + mid * rec_, rec.data(), rec_);
    if (c < 0)
      lo = mid + 1;
    else if (c > 0)
      hi = mid;
    else
      return true;
  }
  return false;
}

bool function_set::contains(const bool_fn& f) const {
  if (f.vars() != n_) return false;
  std::vector<uint8_t> rec(rec_);
  f.pack(rec);
  return contains(rec);
}

void function_set::push_record(std::span<const uint8_t> rec) {
  if (rec.size() != rec_) throw std::invalid_argument("record size mismatch");
  if (count_ > 0 && std::memcmp(data_.data() + (count_ - 1) * rec_, rec.data(), rec_) >= 0)
    throw order_violation_error("set records must strictly increase");
  data_.insert(data_.end(), rec.begin(), rec.end());
  ++count_;
}

void function_set::push_word(uint64_t w) {
  uint8_t rec[8];
  for (std::size_t k = 0; k < rec_; ++k) rec[k] = static_cast<uint8_t>(w >> (56 - 8 * k));
  push_record({rec, rec_});
}

function_set function_set::with_origin(set_origin o) const {
  function_set s = *this;
  s.origin_ = o;
  return s;
}

} // namespace bfcensus
