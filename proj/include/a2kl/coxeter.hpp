#pragma once

// The Coxeter system of type affine A2: three involutions r, s, t with every
// pairwise product of order 3.  Elements are stored through the (faithful)
// geometric representation on the simple-root basis, together with their
// ShortLex-least reduced word, which doubles as the canonical serialization.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace a2kl {

enum class Generator : std::uint8_t { r = 0, s = 1, t = 2 };

inline constexpr std::array<Generator, 3> kGenerators = {Generator::r, Generator::s,
                                                         Generator::t};

char to_char(Generator g);
Generator generator_from_char(char c);

/// Cyclic relabelling r -> s -> t -> r applied `k` times.
Generator twist(Generator g, int k = 1);

using Word = std::vector<Generator>;

std::string to_string(const Word& word);
Word parse_word(std::string_view text);

enum class Side { Left, Right };

/// A subset of {r, s, t}.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint8_t mask) : mask_(mask & 7u) {}
  GenSet(std::initializer_list<Generator> gens);

  bool contains(Generator g) const { return (mask_ >> static_cast<int>(g)) & 1u; }
  void insert(Generator g) { mask_ |= static_cast<std::uint8_t>(1u << static_cast<int>(g)); }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool subset_of(GenSet other) const { return (mask_ & ~other.mask_) == 0; }
  std::uint8_t mask() const { return mask_; }
  std::vector<Generator> members() const;
  std::string str() const;

  friend bool operator==(GenSet a, GenSet b) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// Hard limit on enumeration depth.
inline constexpr std::size_t kMaxEnumerationLength = 20;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Element {
 public:
  using Matrix = std::array<std::int64_t, 9>;

  /// The identity.
  Element();

  static Element from_word(const Word& word);
  static Element generator(Generator g);
  /// Accepts "e" or any (possibly non-reduced) word over {r,s,t}.
  static Element parse(std::string_view text);

  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// ShortLex-least reduced word.
  Word word() const;
  /// Canonical word as letters; empty for the identity.
  const std::string& letters() const { return letters_; }
  /// Canonical serialization; "e" for the identity.
  std::string str() const;

  GenSet descents(Side side) const;
  bool has_descent(Generator g, Side side) const;

  Element left_mul(Generator g) const;
  Element right_mul(Generator g) const;
  Element inverse() const;
  /// Image under the diagram automorphism r -> s -> t -> r applied k times.
  Element twisted(int k) const;

  /// Action on the simple-root basis (columns are images of alpha_r, alpha_s, alpha_t).
  const Matrix& matrix() const { return mat_; }

  friend bool operator==(const Element& a, const Element& b) { return a.letters_ == b.letters_; }
  /// ShortLex order on canonical words.
  friend bool operator<(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);

 private:
  Element(const Matrix& mat, const Matrix& inv);
  void canonicalize();

  Matrix mat_;
  Matrix inv_;
  std::string letters_;
};

Element operator*(const Element& a, const Element& b);

struct ElementHash {
  std::size_t operator()(const Element& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};

Element mul(const Element& a, const Element& b);
std::size_t length(const Element& w);
GenSet descents(const Element& w, Side side);

/// Bruhat order via the lifting property, memoized process-wide.
bool bruhat_leq(const Element& u, const Element& w);

/// All reduced words of w in ShortLex order.
std::vector<Word> reduced_words(const Element& w);
/// Number of reduced words, without listing them.
std::uint64_t reduced_word_count(const Element& w);

/// Star operation for the pair {a, b}; empty when w is outside its domain.
std::optional<Element> star(const Element& w, Generator a, Generator b, Side side);

/// Every element of length <= max_len, grouped by length and ShortLex inside a stratum.
std::vector<Element> enumerate(std::size_t max_len);

/// The Bruhat interval [e, w].
std::vector<Element> lower_ideal(const Element& w);

}  // namespace a2kl
