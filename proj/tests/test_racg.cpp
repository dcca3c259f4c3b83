#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vtwin/racg.hpp"

using namespace vtwin;
using racg::LetterSet;
using racg::RacgPresentation;
using racg::Word;

namespace {

Word random_word(std::mt19937_64& rng, const RacgPresentation& p, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> letter(0, p.size() - 1);
  Word w;
  int l = len(rng);
  for (int t = 0; t < l; ++t) w.push_back(letter(rng));
  return w;
}

}  // namespace

TEST_CASE("kt presentation shape") {
  for (int n = 2; n <= 6; ++n) {
    RacgPresentation p = RacgPresentation::kt(n);
    CHECK(p.size() == n * (n - 1));
    for (int id = 0; id < p.size(); ++id) {
      auto [i, j] = racg::kt_letter_pair(n, id);
      CHECK(racg::kt_letter_id(n, i, j) == id);
    }
  }
  RacgPresentation p4 = RacgPresentation::kt(4);
  CHECK(p4.commutes(racg::kt_letter_id(4, 1, 2), racg::kt_letter_id(4, 3, 4)));
  CHECK(!p4.commutes(racg::kt_letter_id(4, 1, 2), racg::kt_letter_id(4, 2, 3)));
  CHECK(p4.names[racg::kt_letter_id(4, 1, 4)] == "a1,4");

  RacgPresentation t5 = RacgPresentation::twin(5);
  CHECK(t5.size() == 4);
  CHECK(t5.commutes(0, 2));
  CHECK(!t5.commutes(1, 2));
}

TEST_CASE("normalize matches the rewriting-closure oracle") {
  RacgPresentation p = RacgPresentation::kt(4);
  SUBCASE("pinned values") {
    Word w = racg::parse_word(p, "a1,2 a3,4 a1,2");
    CHECK(racg::normalize(p, w) == racg::parse_word(p, "a3,4"));
    CHECK(oracle::closure_normal_form(p, w) == racg::parse_word(p, "a3,4"));

    Word dihedral = racg::parse_word(p, "a1,2 a2,1 a1,2 a2,1");
    CHECK(racg::normalize(p, dihedral) == dihedral);
    CHECK(oracle::closure_normal_form(p, dihedral) == dihedral);

    CHECK(racg::normalize(p, {}).empty());
  }
  SUBCASE("exhaustive short words over a four-letter subset") {
    std::vector<int> sub{racg::kt_letter_id(4, 1, 2), racg::kt_letter_id(4, 2, 1),
                         racg::kt_letter_id(4, 1, 3), racg::kt_letter_id(4, 3, 4)};
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier)
        for (int x : sub) {
          Word v = w;
          v.push_back(x);
          next.push_back(v);
        }
      for (const Word& w : next) CHECK(racg::normalize(p, w) == oracle::closure_normal_form(p, w));
      frontier = std::move(next);
    }
  }
  SUBCASE("random longer words") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
      Word w = random_word(rng, p, 8);
      CHECK(racg::normalize(p, w) == oracle::closure_normal_form(p, w));
    }
  }
  SUBCASE("exhaustive universe over a commutation-rich KT_5 subset") {
    RacgPresentation p5 = RacgPresentation::kt(5);
    std::vector<int> sub{racg::kt_letter_id(5, 1, 2), racg::kt_letter_id(5, 2, 1),
                         racg::kt_letter_id(5, 3, 4), racg::kt_letter_id(5, 4, 5),
                         racg::kt_letter_id(5, 3, 5)};
    std::sort(sub.begin(), sub.end());
    oracle::WordUniverse universe(p5, sub, 6);
    for (long long r = 0; r < universe.size(); ++r)
      CHECK(racg::normalize(p5, universe.word_at(r)) == universe.canonical_of(r));
  }
}

TEST_CASE("normalize is idempotent and non-increasing") {
  RacgPresentation p = RacgPresentation::kt(5);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(rng, p, 14);
    Word nf = racg::normalize(p, w);
    CHECK(nf.size() <= w.size());
    CHECK(racg::normalize(p, nf) == nf);
  }
}

TEST_CASE("equality") {
  RacgPresentation p = RacgPresentation::kt(4);
  CHECK(racg::equal(p, racg::parse_word(p, "a1,2 a3,4"), racg::parse_word(p, "a3,4 a1,2")));
  CHECK(racg::equal(p, racg::parse_word(p, "a1,2 a1,2"), {}));
  CHECK(!racg::equal(p, racg::parse_word(p, "a1,2"), racg::parse_word(p, "a2,1")));
  CHECK_THROWS_AS(racg::normalize(p, {99}), std::invalid_argument);
}

TEST_CASE("cyclic reduction") {
  RacgPresentation p = RacgPresentation::kt(4);
  auto [conj1, core1] = racg::cyclically_reduce(p, racg::parse_word(p, "a1,2 a3,4 a1,2"));
  CHECK(conj1 == racg::parse_word(p, "a1,2"));
  CHECK(core1 == racg::parse_word(p, "a3,4"));

  auto [conj2, core2] = racg::cyclically_reduce(p, racg::parse_word(p, "a1,2 a2,1"));
  CHECK(conj2.empty());
  CHECK(core2 == racg::parse_word(p, "a1,2 a2,1"));

  auto [conj3, core3] = racg::cyclically_reduce(p, {});
  CHECK(conj3.empty());
  CHECK(core3.empty());

  // recomposition: w = conj . core . conj^{-1}
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(rng, p, 10);
    auto [conj, core] = racg::cyclically_reduce(p, w);
    Word back = conj;
    back.insert(back.end(), core.begin(), core.end());
    back.insert(back.end(), conj.rbegin(), conj.rend());
    CHECK(racg::equal(p, back, w));
  }
}

TEST_CASE("involutions") {
  RacgPresentation p = RacgPresentation::kt(4);
  CHECK(racg::is_involution(p, racg::parse_word(p, "a1,2 a3,4")));
  CHECK(!racg::is_involution(p, racg::parse_word(p, "a1,2 a2,1")));
  CHECK(!racg::is_involution(p, {}));

  // cross-check by direct squaring on a radius-5 ball
  RacgPresentation p3 = RacgPresentation::kt(3);
  for (const Word& w : racg::ball(p3, racg::full_letter_set(p3), 5)) {
    Word sq = w;
    sq.insert(sq.end(), w.begin(), w.end());
    bool direct = !w.empty() && racg::normalize(p3, sq).empty();
    CHECK(racg::is_involution(p3, w) == direct);
  }
  for (const Word& w : racg::ball(p, racg::full_letter_set(p), 3)) {
    Word sq = w;
    sq.insert(sq.end(), w.begin(), w.end());
    bool direct = !w.empty() && racg::normalize(p, sq).empty();
    CHECK(racg::is_involution(p, w) == direct);
  }
  // and on random longer KT_5 words
  RacgPresentation p5 = RacgPresentation::kt(5);
  std::mt19937_64 rng(71);
  for (int t = 0; t < 400; ++t) {
    Word w = random_word(rng, p5, 10);
    Word sq = w;
    sq.insert(sq.end(), w.begin(), w.end());
    bool direct = !racg::normalize(p5, w).empty() && racg::normalize(p5, sq).empty();
    CHECK(racg::is_involution(p5, w) == direct);
  }
}

TEST_CASE("support and parabolic membership") {
  RacgPresentation p = RacgPresentation::kt(4);
  LetterSet X34{racg::kt_letter_id(4, 3, 4)};
  CHECK(racg::parabolic_member(p, racg::parse_word(p, "a1,2 a1,2 a3,4"), X34));
  CHECK(!racg::parabolic_member(p, racg::parse_word(p, "a1,2"), X34));
  CHECK(racg::parabolic_member(p, {}, {}));

  LetterSet X = {0, 2, 5};
  CHECK(racg::parabolic_intersect(X, X) == X);
  CHECK(racg::parabolic_intersect(X, {}).empty());

  // X_1 and X_2 of KT_4 share no letter: nothing avoids both {1,2} and {2,3}
  LetterSet X1, X2;
  for (int id = 0; id < p.size(); ++id) {
    auto [i, j] = racg::kt_letter_pair(4, id);
    if (i != 1 && i != 2 && j != 1 && j != 2) X1.push_back(id);
    if (i != 2 && i != 3 && j != 2 && j != 3) X2.push_back(id);
  }
  CHECK(racg::parabolic_intersect(X1, X2).empty());
}

TEST_CASE("coset decomposition") {
  RacgPresentation p = RacgPresentation::kt(4);
  LetterSet H{racg::kt_letter_id(4, 3, 4)};
  std::sort(H.begin(), H.end());

  auto d1 = racg::coset_decompose(p, racg::parse_word(p, "a3,4"), H);
  CHECK(d1.rep.empty());
  CHECK(d1.h == racg::parse_word(p, "a3,4"));

  auto d2 = racg::coset_decompose(p, racg::parse_word(p, "a1,2"), H);
  CHECK(d2.rep == racg::parse_word(p, "a1,2"));
  CHECK(d2.h.empty());

  auto d3 = racg::coset_decompose(p, racg::parse_word(p, "a1,2 a3,4"), H);
  CHECK(d3.rep == racg::parse_word(p, "a1,2"));
  CHECK(d3.h == racg::parse_word(p, "a3,4"));

  // recomposition + minimality against brute force over the coset
  LetterSet H2{racg::kt_letter_id(4, 1, 2), racg::kt_letter_id(4, 2, 1), racg::kt_letter_id(4, 3, 4)};
  std::sort(H2.begin(), H2.end());
  std::vector<Word> hball = racg::ball(p, H2, 6);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    Word g = racg::normalize(p, random_word(rng, p, 6));
    auto [rep, h] = racg::coset_decompose(p, g, H2);
    Word back = rep;
    back.insert(back.end(), h.begin(), h.end());
    CHECK(racg::equal(p, back, g));
    CHECK(racg::parabolic_member(p, h, H2));
    CHECK(rep.empty() == racg::parabolic_member(p, g, H2));
    std::size_t best = g.size() + 7;
    Word best_word;
    for (const Word& hh : hball) {
      Word cand = g;
      cand.insert(cand.end(), hh.rbegin(), hh.rend());
      Word nf = racg::normalize(p, cand);
      if (nf.size() < best) {
        best = nf.size();
        best_word = nf;
      }
    }
    CHECK(best == rep.size());
    CHECK(best_word == rep);  // the minimal representative is unique
  }
}

TEST_CASE("amalgam factorization") {
  RacgPresentation p = RacgPresentation::kt(4);
  SUBCASE("free product of two involutions") {
    std::vector<LetterSet> factors{{racg::kt_letter_id(4, 1, 2)}, {racg::kt_letter_id(4, 2, 1)}};
    Word g = racg::parse_word(p, "a1,2 a2,1 a1,2");
    auto f = racg::amalgam_factorize(p, g, factors, {});
    REQUIRE(f.syllables.size() == 3);
    CHECK(f.syllables[0].first == 1);
    CHECK(f.syllables[1].first == 2);
    CHECK(f.syllables[2].first == 1);
    CHECK(f.tail.empty());

    auto fe = racg::amalgam_factorize(p, {}, factors, {});
    CHECK(fe.syllables.empty());
    CHECK(fe.tail.empty());
  }
  SUBCASE("three factors over U inside KT_4") {
    LetterSet U;
    for (int id = 0; id < p.size(); ++id) {
      auto [i, j] = racg::kt_letter_pair(4, id);
      if (j == 4 && i <= 3) continue;
      U.push_back(id);
    }
    std::vector<LetterSet> factors;
    for (int row = 1; row <= 3; ++row) {
      LetterSet f = U;
      f.push_back(racg::kt_letter_id(4, row, 4));
      std::sort(f.begin(), f.end());
      factors.push_back(f);
    }
    Word g = racg::parse_word(p, "a1,4 a3,4 a2,4");
    auto f = racg::amalgam_factorize(p, g, factors, U);
    REQUIRE(f.syllables.size() == 3);
    CHECK(f.syllables[0].first == 1);
    CHECK(f.syllables[1].first == 3);
    CHECK(f.syllables[2].first == 2);
    CHECK(f.syllables[0].second == racg::parse_word(p, "a1,4"));
    CHECK(f.syllables[1].second == racg::parse_word(p, "a3,4"));
    CHECK(f.syllables[2].second == racg::parse_word(p, "a2,4"));
    CHECK(f.tail.empty());
  }
  SUBCASE("hypothesis violations are reported") {
    // a1,2 and a3,4 commute, so they cannot span a free amalgam
    std::vector<LetterSet> bad{{racg::kt_letter_id(4, 1, 2)}, {racg::kt_letter_id(4, 3, 4)}};
    try {
      racg::amalgam_factorize(p, {}, bad, {});
      FAIL("expected precondition failure");
    } catch (const std::invalid_argument& e) {
      std::string msg = e.what();
      CHECK(msg.find("a1,2") != std::string::npos);
      CHECK(msg.find("a3,4") != std::string::npos);
    }
  }
}

TEST_CASE("irreducibility") {
  for (int n = 2; n <= 8; ++n) CHECK(racg::is_irreducible(RacgPresentation::kt(n)));
  RacgPresentation split;
  split.names = {"x", "y"};
  split.comm = {0, 1, 1, 0};
  CHECK(!racg::is_irreducible(split));
  RacgPresentation single;
  single.names = {"x"};
  single.comm = {0};
  CHECK(racg::is_irreducible(single));
}

TEST_CASE("ball enumeration") {
  RacgPresentation p2 = RacgPresentation::kt(2);
  LetterSet all2 = racg::full_letter_set(p2);
  CHECK(racg::ball(p2, all2, 0).size() == 1);
  // infinite dihedral growth 2r+1
  for (int r = 0; r <= 10; ++r)
    CHECK(racg::ball(p2, all2, r).size() == static_cast<std::size_t>(2 * r + 1));

  RacgPresentation p4 = RacgPresentation::kt(4);
  LetterSet single{racg::kt_letter_id(4, 1, 2)};
  CHECK(racg::ball(p4, single, 3).size() == 2);

  LetterSet dihedral{racg::kt_letter_id(4, 1, 2), racg::kt_letter_id(4, 2, 1)};
  std::sort(dihedral.begin(), dihedral.end());
  CHECK(racg::ball(p4, dihedral, 2).size() == 5);

  SUBCASE("counts match the closed-form growth") {
    // KT_3 has no commuting letters, so it is a free product of six
    // involutions: |sphere(r)| = 6 * 5^{r-1}
    RacgPresentation p3 = RacgPresentation::kt(3);
    std::size_t expect = 1, pow = 6;
    for (int r = 1; r <= 5; ++r) {
      expect += pow;
      CHECK(racg::ball(p3, racg::full_letter_set(p3), r).size() == expect);
      pow *= 5;
    }
    // |sphere(2)| = L(L-1-c) + Lc/2 with L letters and c commuting
    // partners per letter
    for (int n = 4; n <= 6; ++n) {
      RacgPresentation pn = RacgPresentation::kt(n);
      std::size_t L = static_cast<std::size_t>(n) * (n - 1);
      std::size_t c = static_cast<std::size_t>(n - 2) * (n - 3);
      std::size_t sphere2 = L * (L - 1 - c) + L * c / 2;
      CHECK(racg::ball(pn, racg::full_letter_set(pn), 2).size() == 1 + L + sphere2);
    }
  }

  SUBCASE("parallel agrees with the serial reference") {
    LetterSet all4 = racg::full_letter_set(p4);
    CHECK(racg::ball(p4, all4, 3) == racg::ball_serial(p4, all4, 3));
    CHECK(racg::ball(p4, dihedral, 8) == racg::ball_serial(p4, dihedral, 8));
  }

  SUBCASE("ball-level parabolic intersection") {
    auto as_set = [](const std::vector<Word>& v) { return std::set<Word>(v.begin(), v.end()); };
    std::vector<LetterSet> sets;
    LetterSet X1, X2;
    for (int id = 0; id < p4.size(); ++id) {
      auto [i, j] = racg::kt_letter_pair(4, id);
      if (i != 1 && i != 2 && j != 1 && j != 2) X1.push_back(id);
      if (i != 2 && i != 3 && j != 2 && j != 3) X2.push_back(id);
    }
    sets.push_back(racg::full_letter_set(p4));
    sets.push_back(X1);
    sets.push_back(X2);
    for (const LetterSet& X : sets)
      for (const LetterSet& Y : sets)
        for (int r = 0; r <= 4; ++r) {
          auto bx = as_set(racg::ball(p4, X, r));
          auto by = as_set(racg::ball(p4, Y, r));
          std::set<Word> inter;
          for (const Word& w : bx)
            if (by.count(w)) inter.insert(w);
          CHECK(inter == as_set(racg::ball(p4, racg::parabolic_intersect(X, Y), r)));
        }
  }
}
