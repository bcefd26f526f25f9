#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaincalc {

enum class Errc {
  NotCoprime,
  OutOfRange,
  Overflow,
  EmptyChain,
  InvalidEntry,
  NotMinusOne,
  IndexOutOfRange,
  NotClassW,
  UnderlineNotLast,
  AllTwos,
  NoMinusOne,
  MultipleMinusOnes,
  DisagreementWithFormula,
  ParseError,
};

const char* errc_name(Errc code);

/// Exception carrying a machine-checkable error code and a one-line message.
class CalcError : public std::runtime_error {
 public:
  CalcError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

/// Reduced integer fraction. Continuant evaluation yields coprime (num, den)
/// by construction; den >= 0, and num == 0 is normalized to 0/1.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

std::string to_string(const Fraction& f);

class GeneralChain;

/// Linear chain [b_1,...,b_r], every entry >= 2: the exceptional chain of the
/// minimal resolution of a cyclic quotient singularity 1/n(1,a).
class HJChain {
 public:
  explicit HJChain(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t at(std::size_t i) const { return entries_.at(i); }

  GeneralChain to_general() const;

  friend bool operator==(const HJChain&, const HJChain&) = default;
  friend bool operator<(const HJChain& a, const HJChain& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
};

struct ReductionTrace;

/// Weighted chain for blow-up/blow-down calculus. Entry b stands for a curve
/// of self-intersection -b; entry 1 marks a (-1)-curve. Entries are >= 0. The
/// empty chain exists only as the terminal value of a total blow-down and is
/// never produced by the public constructor.
class GeneralChain {
 public:
  explicit GeneralChain(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::int64_t at(std::size_t i) const { return entries_.at(i); }

  friend bool operator==(const GeneralChain&, const GeneralChain&) = default;

 private:
  struct unchecked_tag {};
  GeneralChain(unchecked_tag, std::vector<std::int64_t> e)
      : entries_(std::move(e)) {}

  std::vector<std::int64_t> entries_;

  friend GeneralChain blow_down(const GeneralChain& chain, std::size_t k);
  friend struct ReductionTrace;
  friend ReductionTrace reduce_zero(const GeneralChain& chain);
};

/// Hirzebruch-Jung expansion of n/a (1 <= a < n, coprime) with all entries >= 2.
HJChain expand(std::int64_t n, std::int64_t a);

/// Value of a chain as a reduced fraction, by the division-free backward
/// continuant recursion P_i = b_i*P_{i+1} - P_{i+2}. Safe on entries 0 and 1.
Fraction evaluate(const GeneralChain& chain);
Fraction evaluate(const HJChain& chain);

/// Chain of n/(n-a) for a chain of value n/a.
HJChain dual_chain(const HJChain& chain);

/// Contract the (-1)-curve at index k (0-based): interior [x,1,y] -> [x-1,y-1],
/// left end [1,y,..] -> [y-1,..], right end [..,x,1] -> [..,x-1], singleton
/// [1] -> empty.
GeneralChain blow_down(const GeneralChain& chain, std::size_t k);

/// Exact inverse of blow_down: insert a 1 in the gap before entry `pos`
/// (0 <= pos <= size) and increment the adjacent entries.
GeneralChain blow_up(const GeneralChain& chain, std::size_t pos);

HJChain reverse_chain(const HJChain& chain);

struct ReductionTrace {
  GeneralChain initial;
  std::vector<std::size_t> steps;  // 0-based position of each blow-down
  GeneralChain final_chain;
  bool is_zero = false;  // final chain == [0]
};

/// Blow down the leftmost (-1)-entry until none remains. Terminates because
/// every step shortens the chain.
ReductionTrace reduce_zero(const GeneralChain& chain);

}  // namespace chaincalc
