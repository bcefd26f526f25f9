#include "chaincalc/chain.hpp"

#include <numeric>
#include <utility>

namespace chaincalc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Overflow: return "Overflow";
    case Errc::EmptyChain: return "EmptyChain";
    case Errc::InvalidEntry: return "InvalidEntry";
    case Errc::NotMinusOne: return "NotMinusOne";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotClassW: return "NotClassW";
    case Errc::UnderlineNotLast: return "UnderlineNotLast";
    case Errc::AllTwos: return "AllTwos";
    case Errc::NoMinusOne: return "NoMinusOne";
    case Errc::MultipleMinusOnes: return "MultipleMinusOnes";
    case Errc::DisagreementWithFormula: return "DisagreementWithFormula";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& msg) {
  throw CalcError(code, std::string(errc_name(code)) + ": " + msg);
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

HJChain::HJChain(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::EmptyChain, "chain must be nonempty");
  for (std::int64_t b : entries_) {
    if (b < 2)
      fail(Errc::InvalidEntry,
           "chain entry " + std::to_string(b) + " is below 2");
  }
}

GeneralChain HJChain::to_general() const { return GeneralChain(entries_); }

GeneralChain::GeneralChain(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::EmptyChain, "chain must be nonempty");
  for (std::int64_t b : entries_) {
    if (b < 0)
      fail(Errc::InvalidEntry,
           "chain entry " + std::to_string(b) + " is negative");
  }
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(Errc::Overflow, "continuant exceeds the 64-bit integer range");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    fail(Errc::Overflow, "continuant exceeds the 64-bit integer range");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    fail(Errc::Overflow, "value exceeds the 64-bit integer range");
  return out;
}

Fraction evaluate_entries(const std::vector<std::int64_t>& entries) {
  if (entries.empty()) fail(Errc::EmptyChain, "cannot evaluate an empty chain");
  // P_i = b_i * P_{i+1} - P_{i+2}, right to left. Consecutive continuants are
  // coprime, so (P_1, P_2) is already reduced.
  std::int64_t p1 = 1;  // P_{i+1}
  std::int64_t p2 = 0;  // P_{i+2}
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    std::int64_t next = checked_sub(checked_mul(*it, p1), p2);
    p2 = p1;
    p1 = next;
  }
  Fraction f{p1, p2};
  if (f.den < 0 || (f.den == 0 && f.num < 0)) {
    f.num = -f.num;
    f.den = -f.den;
  }
  if (f.num == 0) f.den = 1;
  return f;
}

// In-place blow-down at position k; assumes v[k] == 1.
void apply_blow_down(std::vector<std::int64_t>& v, std::size_t k) {
  if (v.size() == 1) {
    v.clear();
    return;
  }
  if (k == 0) {
    v.erase(v.begin());
    v.front() -= 1;
    if (v.front() < 0)
      fail(Errc::InvalidEntry, "blow-down would create a negative weight");
    return;
  }
  if (k + 1 == v.size()) {
    v.pop_back();
    v.back() -= 1;
    if (v.back() < 0)
      fail(Errc::InvalidEntry, "blow-down would create a negative weight");
    return;
  }
  v[k - 1] -= 1;
  v[k + 1] -= 1;
  if (v[k - 1] < 0 || v[k + 1] < 0)
    fail(Errc::InvalidEntry, "blow-down would create a negative weight");
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace

HJChain expand(std::int64_t n, std::int64_t a) {
  if (n < 2 || a < 1 || a >= n)
    fail(Errc::OutOfRange,
         "need 1 <= a < n, got n=" + std::to_string(n) +
             " a=" + std::to_string(a));
  if (std::gcd(n, a) != 1)
    fail(Errc::NotCoprime,
         std::to_string(n) + " and " + std::to_string(a) + " share a factor");
  std::vector<std::int64_t> entries;
  while (a > 0) {
    std::int64_t b = (n + a - 1) / a;  // ceil(n/a); no overflow: a < n
    entries.push_back(b);
    std::int64_t next_a = checked_sub(checked_mul(b, a), n);
    n = a;
    a = next_a;
  }
  return HJChain(std::move(entries));
}

Fraction evaluate(const GeneralChain& chain) {
  return evaluate_entries(chain.entries());
}

Fraction evaluate(const HJChain& chain) {
  return evaluate_entries(chain.entries());
}

HJChain dual_chain(const HJChain& chain) {
  Fraction v = evaluate(chain);
  return expand(v.num, checked_sub(v.num, v.den));
}

GeneralChain blow_down(const GeneralChain& chain, std::size_t k) {
  if (k >= chain.size())
    fail(Errc::IndexOutOfRange,
         "index " + std::to_string(k) + " out of range for chain of length " +
             std::to_string(chain.size()));
  if (chain.at(k) != 1)
    fail(Errc::NotMinusOne,
         "entry at index " + std::to_string(k) + " is " +
             std::to_string(chain.at(k)) + ", not 1");
  std::vector<std::int64_t> v = chain.entries();
  apply_blow_down(v, k);
  return GeneralChain(GeneralChain::unchecked_tag{}, std::move(v));
}

GeneralChain blow_up(const GeneralChain& chain, std::size_t pos) {
  if (pos > chain.size())
    fail(Errc::IndexOutOfRange,
         "insertion point " + std::to_string(pos) +
             " out of range for chain of length " +
             std::to_string(chain.size()));
  std::vector<std::int64_t> v = chain.entries();
  if (pos > 0) v[pos - 1] = checked_add(v[pos - 1], 1);
  if (pos < v.size()) v[pos] = checked_add(v[pos], 1);
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), 1);
  return GeneralChain(std::move(v));
}

HJChain reverse_chain(const HJChain& chain) {
  std::vector<std::int64_t> v(chain.entries().rbegin(),
                              chain.entries().rend());
  return HJChain(std::move(v));
}

ReductionTrace reduce_zero(const GeneralChain& chain) {
  std::vector<std::int64_t> v = chain.entries();
  std::vector<std::size_t> steps;
  // Entries left of `scan` are >= 2 and stay untouched: a blow-down at p only
  // alters positions p-1 and p, so restarting the scan at p-1 is exact.
  std::size_t scan = 0;
  for (;;) {
    std::size_t pos = scan;
    while (pos < v.size() && v[pos] != 1) ++pos;
    if (pos >= v.size()) break;
    steps.push_back(pos);
    apply_blow_down(v, pos);
    scan = pos == 0 ? 0 : pos - 1;
  }
  bool is_zero = v.size() == 1 && v[0] == 0;
  return ReductionTrace{chain, std::move(steps),
                        GeneralChain(GeneralChain::unchecked_tag{}, std::move(v)),
                        is_zero};
}

}  // namespace chaincalc
