#include "a2kl/hecke.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "a2kl/cells.hpp"

namespace a2kl {

std::shared_ptr<const KLColumn> KLTable::lookup(const std::string& key) const {
  std::shared_lock lock(mutex_);
  const auto it = columns_.find(key);
  return it == columns_.end() ? nullptr : it->second;
}

std::shared_ptr<const KLColumn> KLTable::publish(const std::string& key,
                                                 std::shared_ptr<const KLColumn> column) {
  std::unique_lock lock(mutex_);
  return columns_.try_emplace(key, std::move(column)).first->second;
}

std::shared_ptr<const KLColumn> KLTable::column(const Element& w) {
  if (auto hit = lookup(w.letters())) return hit;
  if (w.length() > kMaxKLLength)
    throw ResourceLimitError("KL column requested for length " + std::to_string(w.length()) +
                             " > " + std::to_string(kMaxKLLength));
  return publish(w.letters(), compute(w));
}

// P_{u,w} = q^(1-c) P_{gu,v} + q^c P_{u,v} - sum_{z : gz < z} mu(z,v) q^((l(w)-l(z))/2) P_{u,z}
// with w = g v > v and c = [gu < u].
std::shared_ptr<const KLColumn> KLTable::compute(const Element& w) {
  auto out = std::make_shared<KLColumn>();
  if (w.is_identity()) {
    out->polys.emplace("", KLPoly::one());
    return out;
  }
  const Generator g = w.descents(Side::Left).members().front();
  const Element v = w.left_mul(g);
  const auto cv = column(v);

  std::vector<std::pair<std::shared_ptr<const KLColumn>, std::pair<std::int64_t, int>>> corr;
  for (const auto& [z, m] : cv->mu_partners)
    if (z.has_descent(g, Side::Left))
      corr.push_back({column(z), {m, static_cast<int>(w.length() - z.length()) / 2}});

  auto poly_in = [](const KLColumn& col, const std::string& key) -> const KLPoly* {
    const auto it = col.polys.find(key);
    return it == col.polys.end() ? nullptr : &it->second;
  };

  std::vector<Element> ideal;
  ideal.reserve(2 * cv->polys.size());
  for (const auto& [key, p] : cv->polys) {
    const Element u = Element::parse(key.empty() ? "e" : key);
    ideal.push_back(u);
    const Element gu = u.left_mul(g);
    if (!cv->polys.count(gu.letters())) ideal.push_back(gu);
  }

  for (const Element& u : ideal) {
    const Element gu = u.left_mul(g);
    const int c = u.has_descent(g, Side::Left) ? 1 : 0;
    KLPoly p;
    if (const KLPoly* a = poly_in(*cv, gu.letters())) p.add_scaled(*a, 1, 1 - c);
    if (const KLPoly* b = poly_in(*cv, u.letters())) p.add_scaled(*b, 1, c);
    for (const auto& [cz, coef] : corr)
      if (const KLPoly* pz = poly_in(*cz, u.letters())) p.add_scaled(*pz, -coef.first, coef.second);
    for (std::int64_t x : p.coeffs())
      if (x < 0) throw ConsistencyError("negative KL coefficient at " + u.str() + ", " + w.str());
    if (p.is_zero() || p.coeff(0) != 1)
      throw ConsistencyError("KL polynomial without constant term 1 at " + u.str() + ", " +
                             w.str());
    const std::size_t gap = w.length() - u.length();
    if (gap % 2 == 1) {
      const std::int64_t m = p.coeff(static_cast<int>(gap - 1) / 2);
      if (m != 0) out->mu_partners.emplace_back(u, m);
    }
    out->polys.emplace(u.letters(), std::move(p));
  }
  return out;
}

KLPoly KLTable::kl_poly(const Element& u, const Element& w) {
  if (u.length() > w.length()) return {};
  const auto col = column(w);
  const auto it = col->polys.find(u.letters());
  return it == col->polys.end() ? KLPoly() : it->second;
}

std::int64_t KLTable::mu(const Element& u, const Element& w) {
  if (u.length() >= w.length() || (w.length() - u.length()) % 2 == 0) return 0;
  return kl_poly(u, w).coeff(static_cast<int>(w.length() - u.length() - 1) / 2);
}

std::size_t KLTable::size() const {
  std::shared_lock lock(mutex_);
  return columns_.size();
}

void KLTable::clear() {
  std::unique_lock lock(mutex_);
  columns_.clear();
}

void KLTable::save(const std::string& path) const {
  std::map<std::string, std::shared_ptr<const KLColumn>> sorted;
  {
    std::shared_lock lock(mutex_);
    sorted.insert(columns_.begin(), columns_.end());
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write KL cache " + path);
  auto name = [](const std::string& key) { return key.empty() ? std::string("e") : key; };
  for (const auto& [wkey, col] : sorted) {
    std::map<std::string, const KLPoly*> rows;
    for (const auto& [ukey, p] : col->polys) rows.emplace(ukey, &p);
    for (const auto& [ukey, p] : rows) {
      out << name(ukey) << '\t' << name(wkey) << '\t';
      for (std::size_t i = 0; i < p->coeffs().size(); ++i)
        out << (i ? "," : "") << p->coeffs()[i];
      out << '\n';
    }
  }
}

std::size_t KLTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read KL cache " + path);
  std::map<std::string, std::shared_ptr<KLColumn>> pending;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string us, ws, cs;
    if (!std::getline(fields, us, '\t') || !std::getline(fields, ws, '\t') ||
        !std::getline(fields, cs))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed record");
    std::vector<std::int64_t> coeffs;
    std::istringstream cstream(cs);
    for (std::string tok; std::getline(cstream, tok, ',');) coeffs.push_back(std::stoll(tok));
    KLPoly p(std::move(coeffs));
    if (p.coeff(0) != 1)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": constant term is not 1");
    const Element u = Element::parse(us);
    const Element w = Element::parse(ws);
    auto& col = pending[w.letters()];
    if (!col) col = std::make_shared<KLColumn>();
    const std::size_t gap = w.length() - u.length();
    if (u.length() < w.length() && gap % 2 == 1) {
      const std::int64_t m = p.coeff(static_cast<int>(gap - 1) / 2);
      if (m != 0) col->mu_partners.emplace_back(u, m);
    }
    col->polys.emplace(u.letters(), std::move(p));
  }
  for (auto& [key, col] : pending) {
    const Element w = Element::parse(key.empty() ? "e" : key);
    if (col->polys.size() != lower_ideal(w).size())
      throw std::runtime_error(path + ": incomplete column for " + w.str());
    publish(key, col);
  }
  return pending.size();
}

KLTable& kl_table() {
  static KLTable table;
  return table;
}

KLPoly kl_poly(const ExtElement& u, const ExtElement& w) {
  if (u.omega() != w.omega()) return {};
  return kl_table().kl_poly(u.body(), w.body());
}

std::int64_t mu_direct(const ExtElement& u, const ExtElement& w) {
  if (u.omega() != w.omega()) return 0;
  return kl_table().mu(u.body(), w.body());
}

std::int64_t mu_tilde(const ExtElement& u, const ExtElement& w) {
  return u.length() <= w.length() ? mu_direct(u, w) : mu_direct(w, u);
}

LaurentPoly normalized_p(const ExtElement& u, const ExtElement& w) {
  return kl_poly(u, w).in_v().shifted(static_cast<int>(u.length()) -
                                      static_cast<int>(w.length()));
}

HeckeElem c_to_t(const ExtElement& w) {
  HeckeElem out;
  const auto col = kl_table().column(w.body());
  for (const auto& [key, p] : col->polys) {
    const ExtElement u(w.omega(), Element::parse(key.empty() ? "e" : key));
    out.emplace(u, p.in_v().shifted(static_cast<int>(u.length()) -
                                    static_cast<int>(w.length())));
  }
  return out;
}

namespace {

void accumulate(HeckeElem& f, const ExtElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

// T~_g T~_x = T~_gx if gx > x, else T~_gx + (v - v^-1) T~_x.
HeckeElem left_mul_gen(const HeckeElem& f, Generator g) {
  static const LaurentPoly kDiff = LaurentPoly::from_terms({{1, 1}, {-1, -1}});
  HeckeElem out;
  for (const auto& [x, c] : f) {
    accumulate(out, x.left_mul(g), c);
    if (x.descents(Side::Left).contains(g)) accumulate(out, x, c * kDiff);
  }
  return out;
}

// T~_y f for a single basis element y = w^k * body.
HeckeElem left_mul_basis(const ExtElement& y, const HeckeElem& f) {
  HeckeElem out = f;
  const Word word = y.body().word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = left_mul_gen(out, *it);
  if (y.omega() == 0) return out;
  HeckeElem rotated;
  const ExtElement omega = ExtElement::omega_power(y.omega());
  for (const auto& [x, c] : out) rotated.emplace(omega * x, c);
  return rotated;
}

}  // namespace

HeckeElem t_product(const HeckeElem& a, const HeckeElem& b) {
  HeckeElem out;
  for (const auto& [y, c] : a)
    for (const auto& [x, d] : left_mul_basis(y, b)) accumulate(out, x, c * d);
  return out;
}

CExpansion t_to_c(HeckeElem f, bool expect_bar_invariant) {
  CExpansion out;
  while (!f.empty()) {
    const auto top = std::prev(f.end());
    const ExtElement x = top->first;
    const LaurentPoly c = top->second;
    if (expect_bar_invariant && !(c.bar() == c))
      throw ConsistencyError("C-basis coefficient of " + x.str() +
                             " is not bar-invariant: " + c.str());
    out.emplace(x, c);
    for (const auto& [u, p] : c_to_t(x)) accumulate(f, u, -(c * p));
  }
  return out;
}

CExpansion c_product(const ExtElement& u, const ExtElement& w) {
  if (u.length() + w.length() > kMaxProductLength)
    throw ResourceLimitError("c_product: l(u) + l(w) exceeds " +
                             std::to_string(kMaxProductLength));
  return t_to_c(t_product(c_to_t(u), c_to_t(w)));
}

CExpansion c_product(const CExpansion& a, const CExpansion& b) {
  CExpansion out;
  for (const auto& [u, cu] : a)
    for (const auto& [w, cw] : b)
      for (const auto& [z, h] : c_product(u, w)) accumulate(out, z, cu * cw * h);
  return out;
}

GammaDelta gamma_delta_of(const LaurentPoly& h, int a) {
  if (h.is_zero()) return {};
  if (h.high_degree() > a)
    throw ConsistencyError("h has degree " + std::to_string(h.high_degree()) + " > a = " +
                           std::to_string(a));
  return {h.coeff(a), h.coeff(a - 1)};
}

GammaDelta gamma_delta(const ExtElement& u, const ExtElement& w, const ExtElement& z) {
  const CExpansion h = c_product(u, w);
  const auto it = h.find(z);
  return gamma_delta_of(it == h.end() ? LaurentPoly() : it->second, a_fn(z));
}

}  // namespace a2kl
