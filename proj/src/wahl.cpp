#include "chaincalc/wahl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace chaincalc {

namespace {

// Largest p with p*p representable in int64.
constexpr std::int64_t kMaxP = 3'037'000'499;

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  if (r > kMaxP) r = kMaxP;  // keep r*r inside int64
  while (r > 0 && r * r > n) --r;
  while ((r + 1) <= kMaxP && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

ClassWResult classify_class_w(const HJChain& chain) {
  Fraction v = evaluate(chain);
  const std::int64_t n = v.num;
  const std::int64_t a = v.den;
  const std::int64_t p = isqrt(n);
  if (p * p != n)
    return NotClassW{"value " + to_string(v) + ": " + std::to_string(n) +
                     " is not a perfect square"};
  if ((a + 1) % p != 0)
    return NotClassW{"value " + to_string(v) + ": a+1 = " +
                     std::to_string(a + 1) + " is not divisible by p = " +
                     std::to_string(p)};
  const std::int64_t q = (a + 1) / p;
  if (q < 1 || q >= p)
    return NotClassW{"value " + to_string(v) + ": q = " + std::to_string(q) +
                     " is outside [1, p)"};
  if (std::gcd(p, q) != 1)
    return NotClassW{"value " + to_string(v) + ": p = " + std::to_string(p) +
                     " and q = " + std::to_string(q) + " share a factor"};
  return WahlParams{p, q, chain};
}

bool is_class_w(const HJChain& chain) {
  return std::holds_alternative<WahlParams>(classify_class_w(chain));
}

WahlParams require_class_w(const HJChain& chain) {
  ClassWResult r = classify_class_w(chain);
  if (auto* w = std::get_if<WahlParams>(&r)) return *w;
  fail(Errc::NotClassW, std::get<NotClassW>(r).reason);
}

HJChain wahl_chain(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 1 || q >= p)
    fail(Errc::OutOfRange, "need p >= 2 and 1 <= q < p, got p=" +
                               std::to_string(p) + " q=" + std::to_string(q));
  if (p > kMaxP) fail(Errc::Overflow, "p^2 exceeds the 64-bit integer range");
  if (std::gcd(p, q) != 1)
    fail(Errc::NotCoprime,
         std::to_string(p) + " and " + std::to_string(q) + " share a factor");
  return expand(p * p, p * q - 1);
}

HJChain wahl_move_l(const HJChain& chain) {
  std::vector<std::int64_t> e = chain.entries();
  if (e.back() == INT64_MAX) fail(Errc::Overflow, "entry overflow in move");
  e.back() += 1;
  e.insert(e.begin(), 2);
  return HJChain(std::move(e));
}

HJChain wahl_move_r(const HJChain& chain) {
  std::vector<std::int64_t> e = chain.entries();
  if (e.front() == INT64_MAX) fail(Errc::Overflow, "entry overflow in move");
  e.front() += 1;
  e.push_back(2);
  return HJChain(std::move(e));
}

std::vector<WahlParams> generate_class_w(std::int64_t max_p) {
  if (max_p < 2) fail(Errc::OutOfRange, "max_p must be at least 2");
  if (max_p > kMaxP)
    fail(Errc::Overflow, "max_p^2 exceeds the 64-bit integer range");

  std::set<HJChain> seen;
  std::vector<WahlParams> out;
  std::deque<WahlParams> work;

  HJChain base({4});
  WahlParams base_params = require_class_w(base);
  if (base_params.p <= max_p) {
    seen.insert(base);
    out.push_back(base_params);
    work.push_back(std::move(base_params));
  }

  while (!work.empty()) {
    WahlParams cur = std::move(work.front());
    work.pop_front();
    for (HJChain next : {wahl_move_l(cur.chain), wahl_move_r(cur.chain)}) {
      ClassWResult r = classify_class_w(next);
      auto* params = std::get_if<WahlParams>(&r);
      if (params == nullptr)
        fail(Errc::DisagreementWithFormula,
             "class-W move produced a non-W chain: " +
                 std::get<NotClassW>(r).reason);
      if (params->p <= cur.p)
        fail(Errc::DisagreementWithFormula,
             "class-W move did not increase p");
      if (params->p > max_p) continue;
      if (!seen.insert(next).second) continue;
      out.push_back(*params);
      work.push_back(std::move(*params));
    }
  }

  std::sort(out.begin(), out.end(), [](const WahlParams& a, const WahlParams& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  return out;
}

Bn1Report bn1_kind(std::int64_t n) {
  if (n < 3) fail(Errc::OutOfRange, "bn1 classification needs n >= 3");
  Bn1Report report;
  report.n = n;
  const std::string bn = "B_{" + std::to_string(n) + ",1}";
  if (n % 2 != 0) {
    report.kind = NeighborhoodKind::Flipping;
    report.statement = "flipping: " + bn +
                       " embeds in a regular neighborhood of a (-4)-sphere";
  } else {
    report.kind = NeighborhoodKind::Divisorial;
    report.statement = "divisorial: " + bn +
                       " embeds in B_{2,1} blown up once";
  }
  return report;
}

}  // namespace chaincalc
