/*!
  \file enumerate.hpp
  \brief Generators for the complete sets of monotone, balanced monotone,
         and unate functions, built by half-table concatenation, plus the
         weight-bucket pairing route to balanced sets one level higher.

  All generators emit functions in strictly ascending table order: the
  outer half g is the high part of g||h, so iterating sorted g outside
  and sorted admissible h inside is already globally sorted. Parallel
  runs split the outer range into contiguous chunks and hand buffers to
  the sink in chunk order, so output bytes never depend on the thread
  count.
*/
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>

#include "bfcensus/function_set.hpp"

namespace bfcensus {

struct enumerate_options {
  bool allow_large = false;
  int threads = 0; // 0: hardware concurrency
  std::size_t memory_budget = std::size_t{2} << 30;
  std::filesystem::path scratch; // empty: BFCENSUS_TMPDIR or system temp
  /* Called with (pairs considered, functions emitted) at a coarse rate. */
  std::function<void(uint64_t, uint64_t)> progress;
};

class fn_sink {
public:
  virtual ~fn_sink() = default;
  virtual void accept(std::span<const uint8_t> record) = 0;
};

class signed_sink {
public:
  virtual ~signed_sink() = default;
  virtual void accept(std::span<const uint8_t> record, const signature& sig) = 0;
};

/* Collects records into a function_set. */
class set_collector final : public fn_sink {
public:
  explicit set_collector(int n, set_origin origin) : set_(n, origin) {}
  void accept(std::span<const uint8_t> record) override { set_.push_record(record); }
  function_set take() { return std::move(set_); }

private:
  function_set set_;
};

/* Counts without retaining, optionally per weight. */
class count_collector final : public fn_sink {
public:
  explicit count_collector(int n, bool with_weights = false)
      : weights_(with_weights ? (std::size_t{1} << n) + 1 : 0, 0) {}
  void accept(std::span<const uint8_t> record) override;
  uint64_t total() const { return total_; }
  const std::vector<uint64_t>& weights() const { return weights_; }

private:
  uint64_t total_ = 0;
  std::vector<uint64_t> weights_;
};

/*! \brief All M_n monotone functions of n variables. Guarded to n <= 6;
    n = 7 needs allow_large. */
function_set enumerate_monotone(int n, const enumerate_options& opts = {});
void enumerate_monotone_stream(int n, const enumerate_options& opts, fn_sink& sink);

/*! \brief All BM_n balanced monotone functions: filtered enumeration for
    n <= 6, the weight-bucket pairing of 6-variable functions for n = 7
    (allow_large). */
function_set enumerate_balanced_monotone(int n, const enumerate_options& opts = {});
void enumerate_balanced_monotone_stream(int n, const enumerate_options& opts, fn_sink& sink);

/*! \brief All U_n unate functions with their signatures. Guarded to
    n <= 5; n = 6 and 7 need allow_large. */
std::vector<signed_fn> enumerate_unate(int n, const enumerate_options& opts = {});
void enumerate_unate_stream(int n, const enumerate_options& opts, signed_sink& sink);

/*! \brief Unate set without signatures (records only). */
function_set enumerate_unate_set(int n, const enumerate_options& opts = {});

/*! \brief Balanced functions one level above the bucketed set, by pairing
    bucket w with bucket 2^n - w under the leq test. The buckets must come
    from a complete monotone set; a balanced-monotone parent is rejected,
    since the pairing consumes the full level below and cannot be chained. */
function_set balanced_monotone_from_buckets(const weight_buckets& buckets,
                                            const enumerate_options& opts = {});
void balanced_monotone_from_buckets_stream(const weight_buckets& buckets,
                                           const enumerate_options& opts, fn_sink& sink);

weight_buckets bucket_by_weight(const function_set& s);

/*! \brief Members of weight 2^(n-1), order preserved. Empty for n = 0. */
function_set filter_balanced(const function_set& s);

/*! \brief Members depending on every variable, order preserved. */
function_set filter_nondegenerate(const function_set& s);

} // namespace bfcensus
