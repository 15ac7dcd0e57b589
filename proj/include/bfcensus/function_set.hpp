/*!
  \file function_set.hpp
  \brief Sorted, deduplicated collections of equal-width Boolean functions.

  Functions are held as packed fixed-size byte records in one contiguous
  buffer, in strictly ascending record order. Record bytes compare like
  the table strings, so memcmp order is the set order.
*/
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfcensus/bool_fn.hpp"

namespace bfcensus {

enum class set_origin : uint8_t { monotone, balanced_monotone, unate, brute_force };

std::string_view to_string(set_origin o);

class function_set {
public:
  explicit function_set(int n = 0, set_origin origin = set_origin::brute_force);

  /* Sorts and deduplicates; all functions must share the set's n. */
  static function_set from_functions(int n, set_origin origin, std::vector<bool_fn> fns);

  /* Packs a strictly ascending word list (n <= 6 only). */
  static function_set from_words(int n, set_origin origin, std::span<const uint64_t> words);

  int vars() const { return n_; }
  set_origin origin() const { return origin_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::size_t record_bytes() const { return rec_; }

  std::span<const uint8_t> record(std::size_t i) const { return {data_.data() + i * rec_, rec_}; }
  std::span<const uint8_t> data() const { return data_; }
  bool_fn at(std::size_t i) const { return bool_fn::unpack(n_, record(i)); }

  /* Single word per record (n <= 6 only), in set order. */
  std::vector<uint64_t> as_words() const;

  bool contains(const bool_fn& f) const;
  bool contains(std::span<const uint8_t> rec) const;

  /* Append a record strictly greater than the current last one. */
  void push_record(std::span<const uint8_t> rec);
  void push_word(uint64_t w);

  void reserve(std::size_t count) { data_.reserve(count * rec_); }

  /* Re-tag a set whose members are known to satisfy another origin. */
  function_set with_origin(set_origin o) const;

  friend bool operator==(const function_set& a, const function_set& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

private:
  int n_;
  set_origin origin_;
  std::size_t rec_;
  std::size_t count_ = 0;
  std::vector<uint8_t> data_;
};

/*! \brief Partition of a set by weight; bucket w keeps the members of
    weight w in set order. */
struct weight_buckets {
  int n = 0;
  set_origin parent_origin = set_origin::brute_force;
  std::vector<function_set> buckets; // indexed by w = 0 .. 2^n
};

/*! \brief Function paired with its signature. */
struct signed_fn {
  bool_fn fn;
  signature sig;
};

} // namespace bfcensus
