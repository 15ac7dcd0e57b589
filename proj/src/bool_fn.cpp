#include "bfcensus/bool_fn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bfcensus/errors.hpp"

namespace bfcensus {

namespace {

uint64_t bitrev64(uint64_t w) {
  w = ((w >> 1) & 0x5555555555555555ull) | ((w & 0x5555555555555555ull) << 1);
  w = ((w >> 2) & 0x3333333333333333ull) | ((w & 0x3333333333333333ull) << 2);
  w = ((w >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((w & 0x0F0F0F0F0F0F0F0Full) << 4);
  w = ((w >> 8) & 0x00FF00FF00FF00FFull) | ((w & 0x00FF00FF00FF00FFull) << 8);
  w = ((w >> 16) & 0x0000FFFF0000FFFFull) | ((w & 0x0000FFFF0000FFFFull) << 16);
  return (w >> 32) | (w << 32);
}

void check_vars(int n) {
  if (n < 0 || n > max_vars) throw std::invalid_argument("variable count out of range");
}

uint32_t index_of(int n, std::span<const bool> x) {
  uint32_t i = 0;
  for (int k = 0; k < n; ++k)
    if (x[k]) i |= uint32_t{1} << (n - 1 - k);
  return i;
}

} // namespace

bool_fn::bool_fn(int n) : n_(n), w_(detail::words_for(n), 0) { check_vars(n); }

bool_fn bool_fn::constant(int n, bool value) {
  bool_fn f(n);
  if (value) {
    for (auto& w : f.w_) w = detail::all_ones;
    if (f.w_.size() == 1) f.w_[0] = detail::used_mask(n);
  }
  return f;
}

bool_fn bool_fn::from_words(int n, std::vector<uint64_t> words) {
  check_vars(n);
  if (words.size() != detail::words_for(n)) throw std::invalid_argument("word count mismatch");
  if (n < 6 && (words[0] & ~detail::used_mask(n)) != 0)
    throw std::invalid_argument("unused table bits must be zero");
  bool_fn f(n);
  f.w_ = std::move(words);
  return f;
}

bool_fn bool_fn::parse(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    const std::string_view digits = text.substr(2);
    const std::size_t nd = digits.size();
    if (nd < 8 || !std::has_single_bit(nd)) throw format_error("hex table must have 2^k digits, k >= 3");
    const int n = std::countr_zero(nd) + 2;
    if (n > max_vars) throw format_error("function too wide");
    bool_fn f(n);
    for (std::size_t k = 0; k < nd; ++k) {
      const char c = digits[k];
      uint32_t v = 0;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = 10 + (c - 'a');
      else if (c >= 'A' && c <= 'F')
        v = 10 + (c - 'A');
      else
        throw format_error("bad hex digit");
      for (int b = 0; b < 4; ++b)
        if ((v >> (3 - b)) & 1) f.set(static_cast<uint32_t>(4 * k + b), true);
    }
    return f;
  }
  const std::size_t len = text.size();
  if (len == 0 || !std::has_single_bit(len)) throw format_error("bitstring length must be a power of two");
  const int n = std::countr_zero(len);
  if (n > max_vars) throw format_error("function too wide");
  bool_fn f(n);
  for (std::size_t i = 0; i < len; ++i) {
    if (text[i] == '1')
      f.set(static_cast<uint32_t>(i), true);
    else if (text[i] != '0')
      throw format_error("bitstring may contain only 0 and 1");
  }
  return f;
}

std::string bool_fn::str() const {
  const uint32_t m = num_bits();
  if (m <= 16) {
    std::string s(m, '0');
    for (uint32_t i = 0; i < m; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }
  static const char* hexd = "0123456789abcdef";
  std::string s = "0x";
  for (uint32_t k = 0; k < m / 4; ++k) {
    uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | (get(4 * k + b) ? 1 : 0);
    s += hexd[v];
  }
  return s;
}

void bool_fn::pack(std::span<uint8_t> out) const {
  const std::size_t rb = record_bytes();
  if (out.size() < rb) throw std::invalid_argument("record buffer too small");
  for (std::size_t k = 0; k < rb; ++k)
    out[k] = static_cast<uint8_t>(w_[k / 8] >> (56 - 8 * (k % 8)));
}

bool_fn bool_fn::unpack(int n, std::span<const uint8_t> record) {
  check_vars(n);
  const std::size_t rb = detail::record_bytes_for(n);
  if (record.size() < rb) throw std::invalid_argument("record too short");
  bool_fn f(n);
  for (std::size_t k = 0; k < rb; ++k)
    f.w_[k / 8] |= uint64_t{record[k]} << (56 - 8 * (k % 8));
  if (n < 3) f.w_[0] &= detail::used_mask(n);
  return f;
}

bool evaluate(const bool_fn& f, std::span<const bool> x) {
  if (static_cast<int>(x.size()) != f.vars()) throw std::invalid_argument("input width mismatch");
  return f.get(index_of(f.vars(), x));
}

bool evaluate(const bool_fn& f, std::initializer_list<bool> x) {
  return evaluate(f, std::span<const bool>(x.begin(), x.size()));
}

uint32_t weight(const bool_fn& f) {
  uint32_t w = 0;
  for (uint64_t word : f.words()) w += static_cast<uint32_t>(std::popcount(word));
  return w;
}

bool_fn negate(const bool_fn& f) {
  std::vector<uint64_t> w(f.words().begin(), f.words().end());
  for (auto& word : w) word = ~word;
  if (f.vars() < 6) w[0] &= detail::used_mask(f.vars());
  return bool_fn::from_words(f.vars(), std::move(w));
}

bool_fn reverse(const bool_fn& f) {
  const auto in = f.words();
  std::vector<uint64_t> w(in.size());
  if (in.size() == 1) {
    w[0] = bitrev64(in[0]) << (64 - f.num_bits());
  } else {
    for (std::size_t k = 0; k < in.size(); ++k) w[k] = bitrev64(in[in.size() - 1 - k]);
  }
  return bool_fn::from_words(f.vars(), std::move(w));
}

bool_fn dual(const bool_fn& f) { return negate(reverse(f)); }

bool_fn concat(const bool_fn& g, const bool_fn& h) {
  if (g.vars() != h.vars()) throw std::invalid_argument("concat requires equal variable counts");
  const int m = g.vars();
  if (m >= max_vars) throw std::invalid_argument("concat result too wide");
  if (m <= 5) {
    return bool_fn::from_words(m + 1, {g.word0() | (h.word0() >> (uint32_t{1} << m))});
  }
  std::vector<uint64_t> w;
  w.reserve(2 * detail::words_for(m));
  w.insert(w.end(), g.words().begin(), g.words().end());
  w.insert(w.end(), h.words().begin(), h.words().end());
  return bool_fn::from_words(m + 1, std::move(w));
}

std::pair<bool_fn, bool_fn> split(const bool_fn& f) {
  const int n = f.vars();
  if (n == 0) throw std::invalid_argument("cannot split a 0-variable function");
  const int m = n - 1;
  if (n <= 6) {
    const uint32_t half = uint32_t{1} << m;
    const uint64_t w = f.word0();
    return {bool_fn::from_words(m, {w & detail::used_mask(m)}),
            bool_fn::from_words(m, {(w << half) & detail::used_mask(m)})};
  }
  const auto w = f.words();
  const std::size_t half_words = w.size() / 2;
  return {bool_fn::from_words(m, {w.begin(), w.begin() + half_words}),
          bool_fn::from_words(m, {w.begin() + half_words, w.end()})};
}

bool leq(const bool_fn& g, const bool_fn& h) {
  if (g.vars() != h.vars()) throw std::invalid_argument("leq requires equal variable counts");
  const auto gw = g.words(), hw = h.words();
  for (std::size_t k = 0; k < gw.size(); ++k)
    if (gw[k] & ~hw[k]) return false;
  return true;
}

bool_fn shift(const bool_fn& f, uint32_t alpha_index) {
  if (alpha_index >= f.num_bits()) throw std::invalid_argument("translation index out of range");
  if (alpha_index == 0) return f;
  bool_fn out(f.vars());
  for (uint32_t i = 0; i < f.num_bits(); ++i)
    if (f.get(i ^ alpha_index)) out.set(i, true);
  return out;
}

bool_fn shift(const bool_fn& f, std::span<const bool> alpha) {
  if (static_cast<int>(alpha.size()) != f.vars()) throw std::invalid_argument("translation width mismatch");
  return shift(f, index_of(f.vars(), alpha));
}

bool_fn shift(const bool_fn& f, std::initializer_list<bool> alpha) {
  return shift(f, std::span<const bool>(alpha.begin(), alpha.size()));
}

std::vector<var_directions> monotone_directions(const bool_fn& f) {
  const int n = f.vars();
  std::vector<var_directions> out(n, {true, true});
  const auto w = f.words();
  if (w.size() == 1) {
    const auto d = detail::directions_word(w[0], n);
    for (int v = 0; v < n; ++v) {
      const int t = n - 1 - v;
      out[v] = {((d.inc >> t) & 1) != 0, ((d.dec >> t) & 1) != 0};
    }
    return out;
  }
  for (int v = 0; v < n; ++v) {
    const int t = n - 1 - v;
    bool inc = true, dec = true;
    if (t >= 6) {
      const std::size_t wph = std::size_t{1} << (t - 6);
      for (std::size_t base = 0; base < w.size(); base += 2 * wph)
        for (std::size_t j = 0; j < wph; ++j) {
          const uint64_t lo = w[base + j], hi = w[base + j + wph];
          if (lo & ~hi) inc = false;
          if (~lo & hi) dec = false;
        }
    } else {
      const uint64_t s = uint64_t{1} << t;
      const uint64_t m = detail::index_bit0_mask[t];
      for (const uint64_t ww : w) {
        if (ww & m & ~(ww << s)) inc = false;
        if (~ww & m & (ww << s)) dec = false;
      }
    }
    out[v] = {inc, dec};
  }
  return out;
}

bool is_monotone(const bool_fn& f) {
  const auto w = f.words();
  if (w.size() == 1) return detail::is_monotone_word(w[0], f.vars());
  for (const auto& d : monotone_directions(f))
    if (!d.can_increase) return false;
  return true;
}

std::optional<signature> signature_of(const bool_fn& f) {
  const int n = f.vars();
  const uint64_t full = f.words().size() == 1 ? detail::used_mask(n) : detail::all_ones;
  bool all0 = true, all1 = true;
  for (const uint64_t w : f.words()) {
    if (w != 0) all0 = false;
    if (w != full) all1 = false;
  }
  if (all0) return signature::zero(n);
  if (all1) return signature::one(n);
  uint32_t dirs = 0;
  const auto d = monotone_directions(f);
  for (int v = 0; v < n; ++v) {
    if (d[v].can_increase)
      dirs |= uint32_t{1} << (n - 1 - v);
    else if (!d[v].can_decrease)
      return std::nullopt;
  }
  return signature::vec(n, dirs);
}

bool is_unate(const bool_fn& f) { return signature_of(f).has_value(); }

bool is_nondegenerate(const bool_fn& f) {
  const auto w = f.words();
  if (w.size() == 1) return detail::is_nondegenerate_word(w[0], f.vars());
  for (const auto& d : monotone_directions(f))
    if (d.can_increase && d.can_decrease) return false;
  return true;
}

bool is_balanced(const bool_fn& f) {
  if (f.vars() == 0) throw std::invalid_argument("balancedness is undefined for 0-variable functions");
  return 2 * weight(f) == f.num_bits();
}

std::string signature::str() const {
  switch (k_) {
    case kind::zero: return "z";
    case kind::one: return "o";
    case kind::vec: break;
  }
  std::string s(n_, '0');
  for (int v = 0; v < n_; ++v)
    if (increasing_in(v)) s[v] = '1';
  return s;
}

} // namespace bfcensus
