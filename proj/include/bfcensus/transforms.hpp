/*!
  \file transforms.hpp
  \brief Exact count algebra over arbitrary-precision integers: binomial
         transforms between full and non-degenerate censuses, the
         unate-from-monotone scalings, equivalence-class prefix sums,
         and the count-relation checker.

  Every sequence is indexed by n starting at 0; index 0 carries the
  0-variable conventions (two constant functions, unbalanced, two
  equivalence classes).
*/
#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfcensus {

using big_int = boost::multiprecision::cpp_int;

enum class count_label {
  m, bm, u, bu, a, b,
  nd_m, nd_bm, nd_u, nd_bu, nd_a, nd_b,
  cls_m, cls_bm, cls_u, cls_bu, cls_a, cls_b,
  nd_cls_m, nd_cls_bm, nd_cls_u, nd_cls_bu, nd_cls_a, nd_cls_b,
};

std::string_view to_string(count_label l);
count_label label_from_string(std::string_view s);

/* The non-degenerate counterpart of a label, and back. */
count_label nd_label(count_label l);
count_label full_label(count_label l);

struct count_sequence {
  count_label label;
  std::vector<big_int> values; // index n from 0

  const big_int& at(std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }

  std::string to_csv() const;  // "n,value" rows
  std::string to_json() const; // values as decimal strings
  static count_sequence from_json(const std::string& text);

  friend bool operator==(const count_sequence&, const count_sequence&) = default;
};

/* Binomial coefficients C(n, 0..n) in exact arithmetic. */
std::vector<big_int> binomial_row(std::size_t n);

/*! \brief P_n = sum_i C(n,i) * nd_i. */
count_sequence binomial_transform(const count_sequence& nd);

/*! \brief nd_n = sum_i (-1)^(n-i) C(n,i) P_i; throws negative_result_error
    when the input cannot be a property census. */
count_sequence inverse_binomial_transform(const count_sequence& p);

/*! \brief nd-U_n = 2^n * nd-M_n. */
count_sequence unate_from_monotone(const count_sequence& nd_monotone);

/*! \brief nd-BU_n = 2^n * nd-BM_n. */
count_sequence balanced_unate_from_balanced_monotone(const count_sequence& nd_balanced_monotone);

/*! \brief Class counts from non-degenerate class counts: prefix sums. */
count_sequence class_counts_from_nondegenerate(const count_sequence& nd_classes);

/*! \brief First differences, the inverse of the prefix sums. */
count_sequence nondegenerate_class_counts(const count_sequence& classes);

struct inequality_report {
  struct row {
    std::string relation;
    int n;
    big_int lhs;
    big_int rhs;
    big_int slack; // rhs - lhs
  };
  std::vector<row> rows;
};

/*! \brief Checks every count relation available in the given sequences:
    nd-U = 2^n nd-M and nd-BU = 2^n nd-BM as equalities, and the
    2^n-scaling upper bounds for U, BU and the class counts. Throws
    inequality_violation_error on any violation. */
inequality_report check_inequalities(const std::map<count_label, count_sequence>& seqs);

} // namespace bfcensus
