/*!
  \file equiv.hpp
  \brief Variable-permutation equivalence: precomputed table-index
         permutations, equivalence testing by array reindexing, the
         sorted-list filtering procedure, and the canonical-form route.

  A variable permutation pi induces a permutation of table indices: index
  i with bits (i_1, ..., i_n) maps to the index whose bits are
  (i_pi(1), ..., i_pi(n)). Applying pi to a function is then one array
  reindex through the precomputed table.
*/
#pragma once

#include <cstdint>
#include <filesystem>

#include "bfcensus/function_set.hpp"

namespace bfcensus {

struct perm_index {
  int n = 0;
  std::vector<int> perm;       // variable permutation, 0-based
  std::vector<uint32_t> table; // table[i] = induced index permutation
};

/*! \brief Builds the induced index table; perm must be a permutation of
    0..n-1 (x_1 is variable 0). */
perm_index build_perm_index(std::span<const int> perm, int n);

/*! \brief Composition: apply_perm(apply_perm(f, p), q) equals
    apply_perm(f, compose(p, q)). */
perm_index compose(const perm_index& p, const perm_index& q);

/*! \brief Reindex: bit i of the result is bit p.table[i] of f. */
bool_fn apply_perm(const bool_fn& f, const perm_index& p);

/*! \brief All n! index tables in lexicographic order of the permutation. */
std::vector<perm_index> all_perm_indexes(int n);

struct class_census {
  function_set representatives;
  uint64_t class_count = 0;
  uint64_t source_size = 0;
};

struct equiv_options {
  int threads = 0;
};

/*! \brief One representative per equivalence class: walks the sorted set,
    keeps a function when none of its n! reindexings is already kept, with
    membership tested by binary search over the growing result. */
class_census filter_classes(const function_set& s);

/*! \brief Minimum of f over all variable permutations; two functions are
    equivalent exactly when their canonical forms coincide. */
bool_fn canonical_form(const bool_fn& f);

/*! \brief Class count as the number of distinct canonical forms; agrees
    with filter_classes on any input. The mapping step runs in parallel. */
class_census class_census_by_canonical(const function_set& s, const equiv_options& opts = {});

/*! \brief Representatives as .fset plus a JSON sidecar at <path>.json with
    {property, n, classCount, sourceSize}. */
void write_class_census(const class_census& census, std::string_view property,
                        const std::filesystem::path& fset_path);

} // namespace bfcensus
