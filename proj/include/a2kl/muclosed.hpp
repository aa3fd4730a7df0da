#pragma once

// Closed-form evaluation of mu(u, w) on affine A2, with the clause that decided it.

#include <cstdint>
#include <string>
#include <vector>

#include "a2kl/coxeter.hpp"
#include "a2kl/extended.hpp"

namespace a2kl {

enum class MuRule { E_CASE, PARITY, LEN1, L3_1a, L3_1b, T4_8, T4_6, C4_7_ZERO, T5_12, T6_11, CELL_ZERO };

/// Wire labels: "E-CASE", "PARITY", "LEN1", "L3.1a", ...
std::string to_string(MuRule rule);

struct MuVerdict {
  std::int64_t value = 0;
  MuRule rule = MuRule::PARITY;
  friend bool operator==(const MuVerdict&, const MuVerdict&) = default;
};

/// Triples (d_u, d_u', z) with delta_{w0 d_u^-1, d_u' w0, z w0} = 1, computed from
/// C-basis products.
const std::vector<UTriple>& u_set();

/// Requires u < w in the Bruhat order; throws std::invalid_argument otherwise.
MuVerdict predict(const Element& u, const Element& w);
/// Requires equal Omega-parts; the bodies are compared.
MuVerdict predict(const ExtElement& u, const ExtElement& w);

struct MuRow {
  Element u;
  Element w;
  std::int64_t mu_closed;
  MuRule rule;
  std::int64_t mu_direct;
};

/// Every pair u < w with l(w) <= max_len and a nonzero mu from either method,
/// ordered by (w, u).  Runs on `jobs` threads.
std::vector<MuRow> mu_table(std::size_t max_len, unsigned jobs = 1);

struct ScanResult {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::vector<MuRow> first_mismatches;
};

/// predict against mu_direct over every Bruhat pair u < w with l(w) <= max_len.
ScanResult mu_scan(std::size_t max_len, unsigned jobs = 1);

}  // namespace a2kl
