/*!
  \file oracle.hpp
  \brief Exhaustive ground truth: scans all 2^(2^n) truth tables and
         censuses every property directly from the predicates, never
         through the generators or the count transforms.
*/
#pragma once

#include <map>
#include <string>

#include "bfcensus/equiv.hpp"
#include "bfcensus/function_set.hpp"
#include "bfcensus/known_constants.hpp"
#include "bfcensus/transforms.hpp"

namespace bfcensus {

struct oracle_census {
  int n = 0;
  std::map<count_label, uint64_t> counts;
  /* weight histograms for the base properties A, B, M, BM, U, BU */
  std::map<count_label, std::vector<uint64_t>> by_weight;
  std::map<count_label, uint64_t> class_counts; // keyed by the cls/ndCls labels
  std::map<count_label, function_set> sets;     // when materialized

  uint64_t count(count_label l) const { return counts.at(l); }
};

/*! \brief Scans every n-variable function; n <= 4, n = 5 behind the flag.
    Class counts come from filter_classes and are cross-checked against the
    canonical-form route. With materialize the property sets are kept. */
oracle_census brute_force_census(int n, bool materialize = true, bool allow_large = false);

struct verify_report {
  struct row {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
  };
  std::vector<row> rows;

  bool all_pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct verify_options {
  int n_max = 4;
  bool allow_large = false;
  int threads = 0;
};

/*! \brief Compares the oracle against the generators, the transform
    chains, the class-count routes, and every embedded table entry within
    reach of n_max. Failures are report rows, not exceptions. */
verify_report verify_all(const verify_options& opts,
                         const known_constants& constants = default_constants());

} // namespace bfcensus
