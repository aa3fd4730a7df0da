#pragma once

// Kazhdan-Lusztig polynomials and the C-basis of the Hecke algebra of the
// extended group.  Conventions: q = v^2, T~_w = v^-l(w) T_w and
// C_w = sum_u v^(l(u)-l(w)) P_{u,w}(v^2) T~_u (the positive canonical basis).

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "a2kl/coxeter.hpp"
#include "a2kl/extended.hpp"
#include "a2kl/laurent.hpp"

namespace a2kl {

/// Largest l(w) for which a KL column is computed.
inline constexpr std::size_t kMaxKLLength = 48;
/// Largest l(u) + l(w) accepted by c_product.
inline constexpr std::size_t kMaxProductLength = 40;

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// All P_{u,w} for a fixed w, keyed by the canonical letters of u <= w.
struct KLColumn {
  std::unordered_map<std::string, KLPoly> polys;
  /// Elements z < w with mu(z, w) != 0, with that mu.
  std::vector<std::pair<Element, std::int64_t>> mu_partners;
};

/// Memo of KL columns shared across threads.  Columns are immutable once published.
class KLTable {
 public:
  std::shared_ptr<const KLColumn> column(const Element& w);

  KLPoly kl_poly(const Element& u, const Element& w);
  std::int64_t mu(const Element& u, const Element& w);

  std::size_t size() const;
  void clear();

  /// One line per pair: "u<TAB>w<TAB>c0,c1,..." (coefficients low to high in q).
  void save(const std::string& path) const;
  /// Loads records written by save(); returns the number of columns installed.
  std::size_t load(const std::string& path);

 private:
  std::shared_ptr<const KLColumn> lookup(const std::string& key) const;
  std::shared_ptr<const KLColumn> publish(const std::string& key,
                                          std::shared_ptr<const KLColumn> column);
  std::shared_ptr<const KLColumn> compute(const Element& w);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const KLColumn>> columns_;
};

/// The process-wide table used by the free functions below.
KLTable& kl_table();

KLPoly kl_poly(const ExtElement& u, const ExtElement& w);
/// Coefficient of q^((l(w)-l(u)-1)/2) in P_{u,w}; 0 at even gaps or when u is not below w.
std::int64_t mu_direct(const ExtElement& u, const ExtElement& w);
/// mu(u, w) if u <= w, mu(w, u) if w <= u, else 0.
std::int64_t mu_tilde(const ExtElement& u, const ExtElement& w);
/// v^(l(u)-l(w)) P_{u,w}(v^2).
LaurentPoly normalized_p(const ExtElement& u, const ExtElement& w);

/// An element of the Hecke algebra of the extended group, in either the
/// T~-basis or the C-basis depending on context.
using HeckeElem = std::map<ExtElement, LaurentPoly>;
using CExpansion = HeckeElem;

/// C_w written in the T~-basis.
HeckeElem c_to_t(const ExtElement& w);
/// Product of two T~-basis expressions.
HeckeElem t_product(const HeckeElem& a, const HeckeElem& b);
/// Rewrites a T~-basis expression in the C-basis; throws ConsistencyError if a
/// coefficient fails to be bar-invariant when `expect_bar_invariant` is set.
CExpansion t_to_c(HeckeElem f, bool expect_bar_invariant = true);

/// C_u C_w = sum_z h_{u,w,z} C_z.
CExpansion c_product(const ExtElement& u, const ExtElement& w);
/// Product of C-basis expressions (sum of c_product over the supports).
CExpansion c_product(const CExpansion& a, const CExpansion& b);

struct GammaDelta {
  std::int64_t gamma = 0;
  std::int64_t delta = 0;
  friend bool operator==(const GammaDelta&, const GammaDelta&) = default;
};

/// Coefficients of v^a(z) and v^(a(z)-1) in h_{u,w,z}; throws ConsistencyError when
/// h_{u,w,z} has a term above v^a(z).
GammaDelta gamma_delta(const ExtElement& u, const ExtElement& w, const ExtElement& z);
GammaDelta gamma_delta_of(const LaurentPoly& h, int a);

}  // namespace a2kl
