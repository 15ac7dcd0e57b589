/*!
  \file bool_fn.hpp
  \brief Truth-table representation of Boolean functions and the
         per-function predicates and transformations built on it.

  An n-variable function is stored as its 2^n-bit truth table. Bit i of
  the table is the value of the function on the n-bit binary expansion
  of i, with x_1 as the most significant input bit. The table string
  f_0 f_1 ... f_{2^n-1} is packed MSB-first into 64-bit words: f_i lives
  at bit 63 - (i mod 64) of word i / 64, and unused low bits of the last
  word stay zero. Under this packing, comparing words lexicographically
  equals comparing the table strings as binary numbers, and concatenation
  of two tables is plain word/byte concatenation.
*/
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfcensus {

inline constexpr int max_vars = 16;

namespace detail {

inline constexpr uint64_t all_ones = ~uint64_t{0};

constexpr std::size_t words_for(int n) {
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

/* Valid-bit mask of the single-word case. */
constexpr uint64_t used_mask(int n) {
  return n >= 6 ? all_ones : all_ones << (64 - (1u << n));
}

constexpr std::size_t record_bytes_for(int n) {
  return n <= 3 ? 1 : (std::size_t{1} << (n - 3));
}

/* Bit positions whose table index has the 2^t bit clear. Index i sits at
   position 63 - (i mod 64), so "index bit clear" means "position bit set". */
inline constexpr uint64_t index_bit0_mask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

struct dir_masks {
  uint32_t inc; // bit n-1-v set: weakly increasing in variable v (0-based)
  uint32_t dec;
};

/* Weak monotone directions of a single-word table, one strided
   half-table comparison per variable. */
inline dir_masks directions_word(uint64_t w, int n) {
  dir_masks d{0, 0};
  for (int t = 0; t < n; ++t) {
    const uint64_t s = uint64_t{1} << t;
    const uint64_t m = index_bit0_mask[t];
    if ((w & m & ~(w << s)) == 0) d.inc |= uint32_t{1} << t;
    if ((~w & m & (w << s)) == 0) d.dec |= uint32_t{1} << t;
  }
  return d;
}

inline bool is_monotone_word(uint64_t w, int n) {
  for (int t = 0; t < n; ++t) {
    const uint64_t s = uint64_t{1} << t;
    if ((w & index_bit0_mask[t] & ~(w << s)) != 0) return false;
  }
  return true;
}

inline bool is_nondegenerate_word(uint64_t w, int n) {
  for (int t = 0; t < n; ++t) {
    const uint64_t s = uint64_t{1} << t;
    if (((w ^ (w << s)) & index_bit0_mask[t]) == 0) return false;
  }
  return true;
}

} // namespace detail

/*! \brief Truth table of an n-variable Boolean function, 0 <= n <= 16.

  Immutable in spirit: every operation below is a pure function returning
  a fresh value, so instances can be shared freely across threads.
*/
class bool_fn {
public:
  /* Constant-0 function of n variables. */
  explicit bool_fn(int n = 0);

  static bool_fn constant(int n, bool value);

  /* Accepts a raw bitstring ("00010111") or, for n >= 5, hexadecimal with
     a "0x" prefix; the most significant bit is f_0 in both forms. */
  static bool_fn parse(std::string_view text);

  static bool_fn from_words(int n, std::vector<uint64_t> words);

  int vars() const { return n_; }
  uint32_t num_bits() const { return uint32_t{1} << n_; }
  std::span<const uint64_t> words() const { return w_; }
  uint64_t word0() const { return w_[0]; }

  bool get(uint32_t i) const { return (w_[i >> 6] >> (63 - (i & 63))) & 1; }
  void set(uint32_t i, bool v) {
    const uint64_t bit = uint64_t{1} << (63 - (i & 63));
    if (v)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }

  /* Bitstring for 2^n <= 16, "0x..." hex otherwise. */
  std::string str() const;

  /* Packed byte record: bit j of the table is bit 7 - (j mod 8) of byte
     j / 8, so byte-lexicographic record order equals numeric table order. */
  std::size_t record_bytes() const { return detail::record_bytes_for(n_); }
  void pack(std::span<uint8_t> out) const;
  static bool_fn unpack(int n, std::span<const uint8_t> record);

  friend std::strong_ordering operator<=>(const bool_fn& a, const bool_fn& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      if (a.w_[k] != b.w_[k]) return a.w_[k] <=> b.w_[k];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const bool_fn& a, const bool_fn& b) = default;

private:
  int n_;
  std::vector<uint64_t> w_;
};

/*! \brief Per-variable monotone direction record of a unate function.

  Tag zero/one marks the two constant functions; vec carries an n-bit
  direction word with the bit for x_1 at position n-1. A direction bit is
  1 when the function is weakly increasing in that variable (degenerate
  variables are weakly increasing, so their bit is 1).
*/
class signature {
public:
  enum class kind : uint8_t { zero, one, vec };

  static signature zero(int n) { return signature(kind::zero, n, 0); }
  static signature one(int n) { return signature(kind::one, n, 0); }
  static signature vec(int n, uint32_t dirs) { return signature(kind::vec, n, dirs); }

  kind tag() const { return k_; }
  int vars() const { return n_; }
  uint32_t dirs() const { return dirs_; }
  bool increasing_in(int v) const { return (dirs_ >> (n_ - 1 - v)) & 1; }

  /* "z", "o", or the direction bits as a string, x_1 first. */
  std::string str() const;

  friend bool operator==(const signature&, const signature&) = default;

private:
  signature(kind k, int n, uint32_t dirs) : k_(k), n_(static_cast<uint8_t>(n)), dirs_(dirs) {}
  kind k_;
  uint8_t n_;
  uint32_t dirs_;
};

struct var_directions {
  bool can_increase;
  bool can_decrease;
  friend bool operator==(const var_directions&, const var_directions&) = default;
};

/*! \brief Evaluate f on an input point; x must have exactly n entries. */
bool evaluate(const bool_fn& f, std::span<const bool> x);
bool evaluate(const bool_fn& f, std::initializer_list<bool> x);

/*! \brief Size of the support (number of 1 bits). */
uint32_t weight(const bool_fn& f);

bool_fn negate(const bool_fn& f);

/*! \brief Reverse of the table string; equals f(~x_1, ..., ~x_n). */
bool_fn reverse(const bool_fn& f);

/*! \brief negate(reverse(f)); maps monotone functions to monotone functions. */
bool_fn dual(const bool_fn& f);

/*! \brief The (n+1)-variable function g||h whose table is the table of g
    followed by the table of h. Requires g.vars() == h.vars(). */
bool_fn concat(const bool_fn& g, const bool_fn& h);

/*! \brief Split an (n+1)-variable function back into its two halves. */
std::pair<bool_fn, bool_fn> split(const bool_fn& f);

/*! \brief Pointwise g <= h on tables of equal n. */
bool leq(const bool_fn& g, const bool_fn& h);

/*! \brief Input translation: result(x) = f(x xor alpha). */
bool_fn shift(const bool_fn& f, std::span<const bool> alpha);
bool_fn shift(const bool_fn& f, std::initializer_list<bool> alpha);
bool_fn shift(const bool_fn& f, uint32_t alpha_index);

/*! \brief Per-variable weak monotone directions, x_1 first. A variable with
    both flags set is degenerate. */
std::vector<var_directions> monotone_directions(const bool_fn& f);

bool is_monotone(const bool_fn& f);

/*! \brief Signature of f, or nullopt when some variable is neither weakly
    increasing nor weakly decreasing (f not unate). */
std::optional<signature> signature_of(const bool_fn& f);

bool is_unate(const bool_fn& f);

/*! \brief True when the output depends on every variable. Constants with
    n = 0 are non-degenerate. */
bool is_nondegenerate(const bool_fn& f);

/*! \brief weight(f) == 2^(n-1). Undefined for n = 0 (throws). */
bool is_balanced(const bool_fn& f);

} // namespace bfcensus
