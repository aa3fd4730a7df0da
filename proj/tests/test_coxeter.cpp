#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "printers.hpp"
#include "a2kl/coxeter.hpp"
#include "oracle.hpp"

using namespace a2kl;

namespace {

oracle::Window window(const Element& w) { return oracle::from_word(w.letters()); }

}  // namespace

TEST(Coxeter, StrataHaveSizeThreeN) {
  const auto all = enumerate(12);
  std::map<std::size_t, std::size_t> per;
  for (const Element& w : all) ++per[w.length()];
  EXPECT_EQ(per[0], 1u);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(per[n], 3 * n) << "length " << n;
}

TEST(Coxeter, EnumerationMatchesAffinePermutations) {
  // Breadth-first search in the permutation model.
  std::map<oracle::Window, std::int64_t> dist{{oracle::identity(), 0}};
  std::vector<oracle::Window> frontier{oracle::identity()};
  for (int len = 1; len <= 10; ++len) {
    std::vector<oracle::Window> next;
    for (const auto& w : frontier)
      for (char g : {'r', 's', 't'}) {
        const auto wg = oracle::right_mul(w, g);
        if (dist.emplace(wg, len).second) next.push_back(wg);
      }
    frontier = next;
  }
  const auto all = enumerate(10);
  ASSERT_EQ(all.size(), dist.size());
  std::set<oracle::Window> images;
  for (const Element& w : all) {
    const auto win = window(w);
    images.insert(win);
    ASSERT_TRUE(dist.count(win)) << w.str();
    EXPECT_EQ(static_cast<std::int64_t>(w.length()), dist[win]) << w.str();
    EXPECT_EQ(static_cast<std::int64_t>(w.length()), oracle::length(win)) << w.str();
  }
  EXPECT_EQ(images.size(), all.size());
}

TEST(Coxeter, CanonicalWordIsShortLexLeast) {
  for (const Element& w : enumerate(8)) {
    const auto words = oracle::braid_class(w.letters());
    EXPECT_EQ(*words.begin(), w.letters());
  }
}

TEST(Coxeter, ParseReducesWords) {
  EXPECT_EQ(Element::parse("rr").str(), "e");
  EXPECT_EQ(Element::parse("tst").str(), "sts");
  EXPECT_EQ(Element::parse("rsrs").str(), "sr");
  EXPECT_EQ(Element::parse("e").length(), 0u);
  EXPECT_THROW(Element::parse("rqs"), std::invalid_argument);
}

TEST(Coxeter, DescentsMatchPermutationModel) {
  for (const Element& w : enumerate(9))
    for (Generator g : kGenerators) {
      const char c = to_char(g);
      EXPECT_EQ(w.has_descent(g, Side::Right), oracle::right_descent(window(w), c)) << w.str();
      const Element inv = w.inverse();
      EXPECT_EQ(w.has_descent(g, Side::Left), inv.has_descent(g, Side::Right)) << w.str();
    }
}

TEST(Coxeter, ReducedWordsAreTheBraidClass) {
  for (const Element& w : enumerate(9)) {
    if (w.is_identity()) continue;
    const auto expected = oracle::braid_class(w.letters());
    std::set<std::string> got;
    for (const Word& word : reduced_words(w)) got.insert(to_string(word));
    EXPECT_EQ(got, expected) << w.str();
    EXPECT_EQ(reduced_word_count(w), expected.size()) << w.str();
  }
}

TEST(Coxeter, BruhatOrderIsTheSubwordOrder) {
  const auto all = enumerate(7);
  for (const Element& w : all) {
    const auto ideal = oracle::lower_ideal(w.letters());
    for (const Element& u : all)
      EXPECT_EQ(bruhat_leq(u, w), ideal.count(window(u)) > 0) << u.str() << " <= " << w.str();
    EXPECT_EQ(lower_ideal(w).size(), ideal.size()) << w.str();
  }
}

TEST(Coxeter, InverseAndTwist) {
  for (const Element& w : enumerate(8)) {
    EXPECT_TRUE((w * w.inverse()).is_identity());
    EXPECT_EQ(w.twisted(3), w);
    std::string rotated = w.letters();
    for (char& c : rotated) c = c == 'r' ? 's' : c == 's' ? 't' : 'r';
    EXPECT_EQ(w.twisted(1), Element::parse(rotated.empty() ? "e" : rotated));
  }
}

TEST(Coxeter, StarExamples) {
  EXPECT_EQ(star(Element::parse("s"), Generator::s, Generator::t, Side::Left)->str(), "ts");
  EXPECT_EQ(star(Element::parse("sr"), Generator::s, Generator::t, Side::Left)->str(), "tsr");
  EXPECT_FALSE(star(Element(), Generator::s, Generator::t, Side::Left));
  EXPECT_FALSE(star(Element::parse("sts"), Generator::s, Generator::t, Side::Left));
}

TEST(Coxeter, StarIsAnInvolution) {
  for (const Element& w : enumerate(9))
    for (Side side : {Side::Left, Side::Right})
      for (auto [a, b] : {std::pair{Generator::r, Generator::s}, std::pair{Generator::s, Generator::t},
                          std::pair{Generator::r, Generator::t}}) {
        const auto once = star(w, a, b, side);
        if (!once) continue;
        const auto twice = star(*once, a, b, side);
        ASSERT_TRUE(twice) << w.str();
        EXPECT_EQ(*twice, w) << w.str();
        EXPECT_EQ(std::max(once->length(), w.length()) - std::min(once->length(), w.length()), 1u);
      }
}

TEST(Coxeter, EnumerationCeiling) {
  EXPECT_THROW(enumerate(kMaxEnumerationLength + 1), ResourceLimitError);
}
