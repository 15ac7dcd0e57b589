/*!
  \file known_constants.hpp
  \brief Read-only reference counts: the Dedekind numbers, the monotone
         class totals, and the published census tables this artifact
         reproduces. Each entry carries a provenance note.
*/
#pragma once

#include <map>
#include <string>

#include "bfcensus/transforms.hpp"

namespace bfcensus {

struct table_entry {
  count_sequence seq;
  std::string source;
};

struct known_constants {
  /* A000372, n = 0..9. */
  std::vector<big_int> dedekind;
  /* A003182, n = 0..9: inequivalent monotone functions. */
  std::vector<big_int> monotone_class_totals;
  std::map<count_label, table_entry> tables;

  const count_sequence& table(count_label l) const;
  bool has_table(count_label l) const { return tables.count(l) != 0; }
};

const known_constants& default_constants();

} // namespace bfcensus
