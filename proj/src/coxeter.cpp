#include "a2kl/coxeter.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace a2kl {

namespace {

using Matrix = Element::Matrix;

constexpr Matrix kIdentity = {1, 0, 0, 0, 1, 0, 0, 0, 1};

// Reflection s_g on the simple-root basis: alpha_g -> -alpha_g and
// alpha_h -> alpha_h + alpha_g for h != g (all Cartan off-diagonals are -1).
Matrix reflection(Generator g) {
  Matrix m = kIdentity;
  const int c = static_cast<int>(g);
  for (int h = 0; h < 3; ++h) m[c * 3 + h] = (h == c) ? -1 : 1;
  return m;
}

const std::array<Matrix, 3>& reflections() {
  static const std::array<Matrix, 3> refl = {reflection(Generator::r), reflection(Generator::s),
                                             reflection(Generator::t)};
  return refl;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const std::int64_t aik = a[i * 3 + k];
      if (aik == 0) continue;
      for (int j = 0; j < 3; ++j) c[i * 3 + j] += aik * b[k * 3 + j];
    }
  return c;
}

// Roots are sign-coherent, so one nonzero coordinate decides the sign.
bool column_negative(const Matrix& m, int col) {
  for (int i = 0; i < 3; ++i) {
    const std::int64_t x = m[i * 3 + col];
    if (x != 0) return x < 0;
  }
  return false;
}

}  // namespace

char to_char(Generator g) { return "rst"[static_cast<int>(g)]; }

Generator generator_from_char(char c) {
  switch (c) {
    case 'r':
      return Generator::r;
    case 's':
      return Generator::s;
    case 't':
      return Generator::t;
    default:
      throw std::invalid_argument(std::string("not a generator: '") + c + "'");
  }
}

Generator twist(Generator g, int k) {
  const int shift = ((k % 3) + 3) % 3;
  return static_cast<Generator>((static_cast<int>(g) + shift) % 3);
}

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  out.reserve(word.size());
  for (Generator g : word) out.push_back(to_char(g));
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  if (text == "e" || text.empty()) return word;
  word.reserve(text.size());
  for (char c : text) word.push_back(generator_from_char(c));
  return word;
}

GenSet::GenSet(std::initializer_list<Generator> gens) {
  for (Generator g : gens) insert(g);
}

int GenSet::size() const { return __builtin_popcount(mask_); }

std::vector<Generator> GenSet::members() const {
  std::vector<Generator> out;
  for (Generator g : kGenerators)
    if (contains(g)) out.push_back(g);
  return out;
}

std::string GenSet::str() const {
  std::string out = "{";
  for (Generator g : members()) out.push_back(to_char(g));
  out.push_back('}');
  return out;
}

Element::Element() : mat_(kIdentity), inv_(kIdentity) {}

Element::Element(const Matrix& mat, const Matrix& inv) : mat_(mat), inv_(inv) { canonicalize(); }

// Strip the least left descent until the identity is reached.
void Element::canonicalize() {
  letters_.clear();
  Matrix m = mat_;
  Matrix inv = inv_;
  const auto& refl = reflections();
  for (;;) {
    int g = 0;
    while (g < 3 && !column_negative(inv, g)) ++g;
    if (g == 3) break;
    letters_.push_back("rst"[g]);
    m = multiply(refl[g], m);
    inv = multiply(inv, refl[g]);
  }
}

Element Element::from_word(const Word& word) {
  Matrix m = kIdentity;
  Matrix inv = kIdentity;
  const auto& refl = reflections();
  for (Generator g : word) {
    m = multiply(m, refl[static_cast<int>(g)]);
    inv = multiply(refl[static_cast<int>(g)], inv);
  }
  return Element(m, inv);
}

Element Element::generator(Generator g) { return from_word({g}); }

Element Element::parse(std::string_view text) { return from_word(parse_word(text)); }

Word Element::word() const { return parse_word(letters_); }

std::string Element::str() const { return letters_.empty() ? std::string("e") : letters_; }

GenSet Element::descents(Side side) const {
  GenSet out;
  const Matrix& m = side == Side::Left ? inv_ : mat_;
  for (Generator g : kGenerators)
    if (column_negative(m, static_cast<int>(g))) out.insert(g);
  return out;
}

bool Element::has_descent(Generator g, Side side) const {
  return column_negative(side == Side::Left ? inv_ : mat_, static_cast<int>(g));
}

Element Element::left_mul(Generator g) const {
  const Matrix& refl = reflections()[static_cast<int>(g)];
  return Element(multiply(refl, mat_), multiply(inv_, refl));
}

Element Element::right_mul(Generator g) const {
  const Matrix& refl = reflections()[static_cast<int>(g)];
  return Element(multiply(mat_, refl), multiply(refl, inv_));
}

Element Element::inverse() const { return Element(inv_, mat_); }

Element Element::twisted(int k) const {
  Word w = word();
  for (Generator& g : w) g = twist(g, k);
  return from_word(w);
}

bool operator<(const Element& a, const Element& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  return a.letters_ < b.letters_;
}

Element operator*(const Element& a, const Element& b) {
  return Element(multiply(a.mat_, b.mat_), multiply(b.inv_, a.inv_));
}

Element mul(const Element& a, const Element& b) { return a * b; }

std::size_t length(const Element& w) { return w.length(); }

GenSet descents(const Element& w, Side side) { return w.descents(side); }

namespace {

class BruhatMemo {
 public:
  std::optional<bool> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void publish(std::string key, bool value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> table_;
};

BruhatMemo& bruhat_memo() {
  static BruhatMemo memo;
  return memo;
}

Generator least_descent(GenSet set) { return set.members().front(); }

}  // namespace

bool bruhat_leq(const Element& u, const Element& w) {
  if (u.length() > w.length()) return false;
  if (u.length() == w.length()) return u == w;
  if (u.is_identity()) return true;
  std::string key = u.letters() + '|' + w.letters();
  if (auto hit = bruhat_memo().find(key)) return *hit;
  const Generator g = least_descent(w.descents(Side::Left));
  const Element gw = w.left_mul(g);
  const bool result =
      u.has_descent(g, Side::Left) ? bruhat_leq(u.left_mul(g), gw) : bruhat_leq(u, gw);
  bruhat_memo().publish(std::move(key), result);
  return result;
}

std::vector<Word> reduced_words(const Element& w) {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (Generator g : w.descents(Side::Left).members()) {
    for (Word& tail : reduced_words(w.left_mul(g))) {
      Word word;
      word.reserve(tail.size() + 1);
      word.push_back(g);
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::uint64_t reduced_word_count(const Element& w) {
  std::unordered_map<Element, std::uint64_t, ElementHash> memo;
  std::function<std::uint64_t(const Element&)> count = [&](const Element& x) -> std::uint64_t {
    if (x.is_identity()) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (Generator g : x.descents(Side::Left).members()) total += count(x.left_mul(g));
    memo.emplace(x, total);
    return total;
  };
  return count(w);
}

std::optional<Element> star(const Element& w, Generator a, Generator b, Side side) {
  if (a == b) throw std::invalid_argument("star: the pair must consist of distinct generators");
  const GenSet d = w.descents(side);
  if (d.contains(a) == d.contains(b)) return std::nullopt;
  for (Generator g : {a, b}) {
    const Element candidate = side == Side::Left ? w.left_mul(g) : w.right_mul(g);
    const GenSet dc = candidate.descents(side);
    if (dc.contains(a) != dc.contains(b)) return candidate;
  }
  return std::nullopt;
}

std::vector<Element> enumerate(std::size_t max_len) {
  if (max_len > kMaxEnumerationLength)
    throw ResourceLimitError("enumerate: max_len " + std::to_string(max_len) +
                             " exceeds the ceiling " + std::to_string(kMaxEnumerationLength));
  std::vector<Element> out{Element()};
  std::vector<Element> frontier{Element()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> next;
    for (const Element& w : frontier)
      for (Generator g : kGenerators) {
        if (w.has_descent(g, Side::Right)) continue;
        Element wg = w.right_mul(g);
        if (seen.insert(wg).second) next.push_back(std::move(wg));
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<Element> lower_ideal(const Element& w) {
  // [e, w] = [e, gw] union g[e, gw] for any left descent g of w.
  std::vector<Element> ideal{Element()};
  std::unordered_set<Element, ElementHash> seen{Element()};
  const Word word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::size_t n = ideal.size();
    for (std::size_t i = 0; i < n; ++i) {
      Element x = ideal[i].left_mul(*it);
      if (seen.insert(x).second) ideal.push_back(std::move(x));
    }
  }
  std::sort(ideal.begin(), ideal.end());
  return ideal;
}

}  // namespace a2kl
