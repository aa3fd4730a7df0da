#include "a2kl/muclosed.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "a2kl/cells.hpp"
#include "a2kl/hecke.hpp"
#include "a2kl/weights.hpp"

namespace a2kl {

std::string to_string(MuRule rule) {
  static const char* const names[] = {"E-CASE", "PARITY", "LEN1",  "L3.1a", "L3.1b",    "T4.8",
                                      "T4.6",   "C4.7-ZERO", "T5.12", "T6.11", "CELL-ZERO"};
  return names[static_cast<int>(rule)];
}

const std::vector<UTriple>& u_set() {
  static const std::vector<UTriple> triples = [] {
    std::vector<UTriple> out;
    const ExtElement w0(longest_finite());
    for (const Element& u : finite_weyl_group())
      for (const Element& up : finite_weyl_group())
        for (const auto& [z, h] : c_product(w0 * d_elem(u).inverse(), d_elem(up) * w0)) {
          if (gamma_delta_of(h, a_fn(z)).delta != 1) continue;
          const auto lambda = dominant_translation_weight(z * w0.inverse());
          if (!lambda) throw ConsistencyError("delta = 1 off the z w0 family at " + z.str());
          out.push_back({d_elem(u), d_elem(up), *lambda});
        }
    return out;
  }();
  return triples;
}

namespace {

// Both u, w in c_0 and in the same left cell: u = d_a lambda w0 d_v^-1, w = d_a' lambda' w0 d_v^-1.
std::int64_t lowest_cell_mu(const Element& u, const Element& w) {
  const auto fu = factor_c0(ExtElement(u));
  const auto fw = factor_c0(ExtElement(w));
  if (!fu || !fw || !(fu->v == fw->v))
    throw ConsistencyError("left cell of c_0 without a shared factor: " + u.str() + ", " +
                           w.str());
  const ExtElement d = d_elem(fu->u);
  const ExtElement dp = d_elem(fw->u);
  std::int64_t value = 0;
  for (const UTriple& t : u_set())
    if (t.d == d && t.d_prime == dp) value += minuscule_mult(t.z, fw->lambda, fu->lambda);
  return value;
}

}  // namespace

MuVerdict predict(const Element& u, const Element& w) {
  if (u == w || !bruhat_leq(u, w))
    throw std::invalid_argument("predict: " + u.str() + " < " + w.str() + " fails");
  const std::size_t gap = w.length() - u.length();
  if (gap % 2 == 0) return {0, MuRule::PARITY};
  if (gap == 1) return {1, MuRule::LEN1};
  if (u.is_identity()) return {w.length() == 1 ? 1 : 0, MuRule::E_CASE};

  const TwoSidedCell cu = two_sided(u);
  const TwoSidedCell cw = two_sided(w);
  if (cu == TwoSidedCell::c1 && cw == TwoSidedCell::c1) {
    if (u.descents(Side::Left) != w.descents(Side::Left) ||
        u.descents(Side::Right) != w.descents(Side::Right))
      return {0, MuRule::L3_1a};
    return {gap == 3 ? 1 : 0, MuRule::L3_1b};
  }
  if (cu == TwoSidedCell::c1 && cw == TwoSidedCell::c0) return {0, MuRule::T4_8};
  if (cu == TwoSidedCell::c0 && cw == TwoSidedCell::c0) {
    if (gap != 3) return {0, MuRule::C4_7_ZERO};
    const bool left = same_cell(u, w, Side::Left);
    const bool right = same_cell(u, w, Side::Right);
    if (!left && !right) return {0, MuRule::CELL_ZERO};
    const std::int64_t value =
        left ? lowest_cell_mu(u, w) : lowest_cell_mu(u.inverse(), w.inverse());
    if (left && right && lowest_cell_mu(u.inverse(), w.inverse()) != value)
      throw ConsistencyError("left and right cell routes disagree at " + u.str() + ", " +
                             w.str());
    return {value, MuRule::T4_6};
  }
  if (cu == TwoSidedCell::c0 && cw == TwoSidedCell::c1) {
    if (gap == 3) return {cond54(u, w) ? 1 : 0, MuRule::T5_12};
    return {0, MuRule::T6_11};
  }
  throw std::logic_error("predict: UNREACHABLE for " + u.str() + ", " + w.str());
}

MuVerdict predict(const ExtElement& u, const ExtElement& w) {
  if (u.omega() != w.omega())
    throw std::invalid_argument("predict: Omega-parts differ for " + u.str() + ", " + w.str());
  return predict(u.body(), w.body());
}

namespace {

// Runs body(i) for i in [0, n) on `jobs` threads; results are written by index.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < n; i += jobs) body(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<Element> column_members(const Element& w) {
  std::vector<Element> out;
  for (const auto& [key, p] : kl_table().column(w)->polys)
    if (key != w.letters()) out.push_back(Element::parse(key.empty() ? "e" : key));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<MuRow> mu_table(std::size_t max_len, unsigned jobs) {
  const std::vector<Element> all = enumerate(max_len);
  std::vector<std::vector<MuRow>> per(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    const Element& w = all[i];
    for (const Element& u : column_members(w)) {
      const MuVerdict verdict = predict(u, w);
      const std::int64_t direct = kl_table().mu(u, w);
      if (verdict.value != 0 || direct != 0)
        per[i].push_back({u, w, verdict.value, verdict.rule, direct});
    }
  });
  std::vector<MuRow> rows;
  for (auto& chunk : per) rows.insert(rows.end(), chunk.begin(), chunk.end());
  return rows;
}

ScanResult mu_scan(std::size_t max_len, unsigned jobs) {
  const std::vector<Element> all = enumerate(max_len);
  struct Partial {
    std::size_t pairs = 0;
    std::vector<MuRow> bad;
  };
  std::vector<Partial> per(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    const Element& w = all[i];
    for (const Element& u : column_members(w)) {
      // Every Omega-component of the extended group gives the same pair of bodies.
      for (int k = 0; k < 3; ++k) {
        const ExtElement eu(k, u);
        const ExtElement ew(k, w);
        const MuVerdict verdict = predict(eu, ew);
        const std::int64_t direct = mu_direct(eu, ew);
        ++per[i].pairs;
        if (verdict.value != direct) per[i].bad.push_back({u, w, verdict.value, verdict.rule, direct});
      }
    }
  });
  ScanResult out;
  for (const Partial& p : per) {
    out.pairs += p.pairs;
    out.mismatches += p.bad.size();
    for (const MuRow& row : p.bad)
      if (out.first_mismatches.size() < 20) out.first_mismatches.push_back(row);
  }
  return out;
}

}  // namespace a2kl
