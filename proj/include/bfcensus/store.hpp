/*!
  \file store.hpp
  \brief On-disk .fset format: streaming writer, reader, k-way sorted
         merge with deduplication, and external sort.

  Layout: magic "BFSET\0", version byte (1), n byte, flags byte
  (bit 0 sorted, bit 1 has-signatures), count as 8-byte little-endian,
  then count records. A record is ceil(2^n / 8) bytes with f_0 in the
  most significant bit of byte 0; when signatures are present each record
  is followed by a tag byte (0 = z, 1 = o, 2 = vec) and, for tag 2,
  ceil(n / 8) direction bytes in the same bit convention.
*/
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <vector>

#include "bfcensus/function_set.hpp"

namespace bfcensus {

struct fset_info {
  int n = 0;
  bool sorted = false;
  bool has_signatures = false;
  uint64_t count = 0;
};

/* Scratch directory for spill files: BFCENSUS_TMPDIR when set, else the
   system temp directory. */
std::filesystem::path scratch_dir();
std::filesystem::path make_scratch_file(std::string_view stem);

std::size_t sig_bytes_for(int n);

class fset_writer {
public:
  fset_writer(const std::filesystem::path& path, int n, bool sorted, bool with_signatures);
  ~fset_writer();
  fset_writer(const fset_writer&) = delete;
  fset_writer& operator=(const fset_writer&) = delete;

  void add(std::span<const uint8_t> record);
  void add(std::span<const uint8_t> record, const signature& sig);

  /* Fixed-width in-memory entry: record bytes, then tag and direction
     bytes when signatures are on. */
  void add_entry(std::span<const uint8_t> entry);
  std::size_t entry_bytes() const { return entry_bytes_; }

  /* Patches the header count and flushes; returns the record count. */
  uint64_t close();

private:
  void check_order(std::span<const uint8_t> record);

  std::ofstream out_;
  std::filesystem::path path_;
  int n_;
  bool sorted_;
  bool with_sigs_;
  std::size_t rec_;
  std::size_t entry_bytes_;
  uint64_t count_ = 0;
  bool closed_ = false;
  std::vector<uint8_t> last_;
};

class fset_reader {
public:
  explicit fset_reader(const std::filesystem::path& path);

  const fset_info& info() const { return info_; }
  std::size_t record_bytes() const { return rec_; }
  std::size_t entry_bytes() const { return entry_bytes_; }

  /* Reads the next record into the first record_bytes() of entry and the
     normalized signature bytes after it (zero-padded); false at EOF. */
  bool next_entry(std::vector<uint8_t>& entry);

  bool next(bool_fn& f);
  bool next(bool_fn& f, std::optional<signature>& sig);

private:
  std::ifstream in_;
  fset_info info_;
  std::size_t rec_;
  std::size_t entry_bytes_;
  uint64_t read_ = 0;
};

signature entry_signature(int n, std::span<const uint8_t> entry);

void write_fset(const function_set& s, const std::filesystem::path& path);
void write_fset(std::span<const signed_fn> fns, int n, const std::filesystem::path& path);

/* Loads a whole file; sorts unsorted files on the fly. */
function_set read_fset(const std::filesystem::path& path, set_origin origin = set_origin::brute_force);
std::vector<signed_fn> read_fset_signed(const std::filesystem::path& path);

fset_info read_fset_info(const std::filesystem::path& path);

/* Sorted union with duplicates removed; inputs must be sorted and agree
   on width and signature presence. Returns the output record count. */
uint64_t merge_sorted(std::span<const std::filesystem::path> inputs, const std::filesystem::path& out);

/* Sorts and deduplicates a file of any order, spilling sorted chunks of
   at most mem_budget bytes to scratch files. */
uint64_t external_sort(const std::filesystem::path& in, const std::filesystem::path& out,
                       std::size_t mem_budget = std::size_t{256} << 20,
                       const std::filesystem::path& scratch = {});

} // namespace bfcensus
