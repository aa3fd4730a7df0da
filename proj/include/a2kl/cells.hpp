#pragma once

// Cells of affine A2: the two-sided cells c_e = {e}, c_1 (elements with a
// unique reduced word) and the lowest cell c_0, and the ten left cells.

#include <string>
#include <string_view>
#include <vector>

#include "a2kl/coxeter.hpp"
#include "a2kl/extended.hpp"

namespace a2kl {

enum class TwoSidedCell { ce, c1, c0 };

enum class LeftCell { C_empty, B_r, B_s, B_t, A_r, A_s, A_t, A_rs, A_st, A_rt };

std::string to_string(TwoSidedCell c);
std::string to_string(LeftCell c);

struct CellLabel {
  TwoSidedCell two_sided;
  LeftCell left;
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

TwoSidedCell two_sided(const Element& w);
/// Lusztig's a-function: 0, 1, 3 on c_e, c_1, c_0.
int a_fn(const Element& w);
/// Left multiplication by Omega does not move an element between two-sided cells.
int a_fn(const ExtElement& w);

/// The left-cell label; subscripts record R(w).
CellLabel left_cell(const Element& w);
/// Left: equal left cells.  Right: equal left cells of the inverses.
bool same_cell(const Element& u, const Element& w, Side side);

/// For w in c_1 with reduced word s_1...s_n and u in c_0 with l(w) - l(u) = 3:
/// |L(u)| = |R(u)| = 2, s_1 in L(u), s_n in R(u), s_2 not in L(u), s_(n-1) not in R(u).
/// Throws std::invalid_argument when the preconditions fail.
bool cond54(const Element& u, const Element& w);

/// "word,length,two_sided,left_cell" rows for every element up to max_len.
std::vector<std::string> cell_report(std::size_t max_len);

}  // namespace a2kl
