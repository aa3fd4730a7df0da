#include "a2kl/cells.hpp"

#include <stdexcept>

namespace a2kl {

std::string to_string(TwoSidedCell c) {
  switch (c) {
    case TwoSidedCell::ce:
      return "c_e";
    case TwoSidedCell::c1:
      return "c_1";
    case TwoSidedCell::c0:
      return "c_0";
  }
  return "?";
}

std::string to_string(LeftCell c) {
  static const char* const names[] = {"C_empty", "B_r", "B_s", "B_t", "A_r",
                                      "A_s",     "A_t", "A_rs", "A_st", "A_rt"};
  return names[static_cast<int>(c)];
}

TwoSidedCell two_sided(const Element& w) {
  if (w.is_identity()) return TwoSidedCell::ce;
  return reduced_word_count(w) == 1 ? TwoSidedCell::c1 : TwoSidedCell::c0;
}

int a_fn(const Element& w) {
  switch (two_sided(w)) {
    case TwoSidedCell::ce:
      return 0;
    case TwoSidedCell::c1:
      return 1;
    case TwoSidedCell::c0:
      return 3;
  }
  return -1;
}

int a_fn(const ExtElement& w) { return a_fn(w.body()); }

namespace {

LeftCell single(Generator g, bool lowest) {
  switch (g) {
    case Generator::r:
      return lowest ? LeftCell::A_r : LeftCell::B_r;
    case Generator::s:
      return lowest ? LeftCell::A_s : LeftCell::B_s;
    case Generator::t:
      return lowest ? LeftCell::A_t : LeftCell::B_t;
  }
  return LeftCell::C_empty;
}

LeftCell pair(GenSet set) {
  if (!set.contains(Generator::t)) return LeftCell::A_rs;
  if (!set.contains(Generator::r)) return LeftCell::A_st;
  return LeftCell::A_rt;
}

// The left cell of c_0 indexed by v is the one containing w0 d_v^-1.
LeftCell lowest_cell_by_factor(const Element& w) {
  const auto f = factor_c0(ExtElement(w));
  if (!f) throw std::logic_error("element of c_0 without factorization: " + w.str());
  const GenSet r = (ExtElement(longest_finite()) * d_elem(f->v).inverse()).descents(Side::Right);
  return r.size() == 1 ? single(r.members().front(), true) : pair(r);
}

}  // namespace

CellLabel left_cell(const Element& w) {
  const TwoSidedCell two = two_sided(w);
  if (two == TwoSidedCell::ce) return {two, LeftCell::C_empty};
  const GenSet r = w.descents(Side::Right);
  switch (r.size()) {
    case 1:
      return {two, single(r.members().front(), two == TwoSidedCell::c0)};
    case 2:
      return {two, pair(r)};
    default:
      return {two, lowest_cell_by_factor(w)};
  }
}

bool same_cell(const Element& u, const Element& w, Side side) {
  if (side == Side::Left) return left_cell(u) == left_cell(w);
  return left_cell(u.inverse()) == left_cell(w.inverse());
}

bool cond54(const Element& u, const Element& w) {
  if (two_sided(w) != TwoSidedCell::c1)
    throw std::invalid_argument("cond54: " + w.str() + " is not in c_1");
  if (w.length() != u.length() + 3)
    throw std::invalid_argument("cond54: length gap must be 3");
  if (two_sided(u) != TwoSidedCell::c0)
    throw std::invalid_argument("cond54: " + u.str() + " is not in c_0");
  const Word s = w.word();
  const std::size_t n = s.size();
  const GenSet left = u.descents(Side::Left);
  const GenSet right = u.descents(Side::Right);
  return left.size() == 2 && right.size() == 2 && left.contains(s[0]) &&
         right.contains(s[n - 1]) && !left.contains(s[1]) && !right.contains(s[n - 2]);
}

std::vector<std::string> cell_report(std::size_t max_len) {
  std::vector<std::string> rows;
  for (const Element& w : enumerate(max_len)) {
    const CellLabel label = left_cell(w);
    rows.push_back(w.str() + "," + std::to_string(w.length()) + "," +
                   to_string(label.two_sided) + "," + to_string(label.left));
  }
  return rows;
}

}  // namespace a2kl
