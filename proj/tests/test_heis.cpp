#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "braidrep/heisenberg.hpp"
#include "braidrep/numtheory.hpp"
#include "braidrep/words.hpp"

using namespace braidrep;

namespace {

// Independent normal-form computation straight from the presentation:
// bubble-sort the letters using x_a^s x_b^t = c^{-omega(b,a) s t} x_b^t x_a^s
// for a > b, then reduce exponents mod p.
struct BruteNormal {
  std::vector<long> exps;
  long c;
};

BruteNormal brute_normalize(long p, int ng, const Word& w) {
  std::vector<std::pair<int, int>> ls;  // (letter, +-1)
  long c = 0;
  for (int l : w) ls.push_back({std::abs(l), l > 0 ? 1 : -1});
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      int a = ls[i].first, b = ls[i + 1].first;
      if (a > b) {
        long omega = (a - b == 1) ? 1 : 0;
        c -= omega * ls[i].second * ls[i + 1].second;
        std::swap(ls[i], ls[i + 1]);
        moved = true;
      }
    }
  }
  BruteNormal out;
  out.exps.assign(ng, 0);
  for (const auto& [letter, s] : ls) out.exps[letter - 1] += s;
  for (auto& e : out.exps) e = smod(e, p);
  out.c = smod(c, p);
  return out;
}

Word random_x_word(std::mt19937& rng, int ng, int maxlen) {
  Word w(rng() % (maxlen + 1));
  for (auto& l : w) {
    int letter = 1 + static_cast<int>(rng() % ng);
    l = (rng() % 2) ? letter : -letter;
  }
  return w;
}

Word random_y_word(std::mt19937& rng, int nletters, int maxlen) {
  Word w(rng() % (maxlen + 1));
  for (auto& l : w) l = 1 + static_cast<int>(rng() % nletters);
  return w;
}

}  // namespace

TEST_CASE("normal form encoding round trips", "[heis]") {
  HeisGroup grp(5, 4);
  std::vector<long> n{1, 4, 0, 3};
  std::uint32_t a = grp.encode(n, 2);
  for (int i = 1; i <= 4; ++i) REQUIRE(grp.x_exp(a, i) == n[i - 1]);
  REQUIRE(grp.c_exp(a) == 2);
  REQUIRE(grp.gen(2) == grp.encode({0, 1, 0, 0}, 0));
  REQUIRE(grp.central() == grp.encode({0, 0, 0, 0}, 1));
  REQUIRE(grp.mul(a, grp.inv(a)) == grp.id);
  REQUIRE(grp.mul(grp.inv(a), a) == grp.id);
}

TEST_CASE("multiplication agrees with presentation rewriting", "[heis]") {
  std::mt19937 rng(2024);
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    HeisGroup grp(p, 2 * g);
    for (int trial = 0; trial < 200; ++trial) {
      Word w = random_x_word(rng, 2 * g, 20);
      BruteNormal bn = brute_normalize(p, 2 * g, w);
      std::uint32_t a = grp.eval_x_word(w);
      for (int i = 1; i <= 2 * g; ++i) REQUIRE(grp.x_exp(a, i) == bn.exps[i - 1]);
      REQUIRE(grp.c_exp(a) == bn.c);
    }
    // Associativity and inverses on random triples.
    for (int trial = 0; trial < 100; ++trial) {
      std::uint32_t a = rng() % grp.size(), b = rng() % grp.size(),
                    c = rng() % grp.size();
      REQUIRE(grp.mul(grp.mul(a, b), c) == grp.mul(a, grp.mul(b, c)));
      REQUIRE(grp.mul(a, grp.inv(a)) == grp.id);
    }
  }
}

TEST_CASE("defining relations and exponent", "[heis]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    HeisGroup grp(p, 2 * g);
    std::uint32_t c = grp.central();
    for (int i = 1; i <= 2 * g; ++i) {
      REQUIRE(grp.pow(grp.gen(i), p) == grp.id);
      REQUIRE(grp.mul(grp.gen(i), c) == grp.mul(c, grp.gen(i)));
      for (int j = 1; j <= 2 * g; ++j) {
        std::uint32_t comm = grp.mul(grp.mul(grp.gen(i), grp.gen(j)),
                                     grp.mul(grp.inv(grp.gen(i)), grp.inv(grp.gen(j))));
        long omega = (j - i == 1) ? 1 : (i - j == 1) ? -1 : 0;
        REQUIRE(comm == grp.pow(c, omega));
      }
    }
    for (std::uint32_t a = 0; a < grp.size(); ++a)
      REQUIRE(grp.pow(a, p) == grp.id);
  }
}

TEST_CASE("order and conjugacy class census", "[heis]") {
  struct Case {
    long p;
    int g;
    long order, classes;
  };
  for (auto [p, g, order, classes] :
       {Case{3, 1, 27, 11}, Case{5, 1, 125, 29}, Case{3, 2, 243, 83}}) {
    HeisGroup grp(p, 2 * g);
    REQUIRE(static_cast<long>(grp.size()) == order);
    REQUIRE(grp.conjugacy_class_count() == classes);
    // p^{2g} - 1 + p.
    long expect = 1;
    for (int i = 0; i < 2 * g; ++i) expect *= p;
    REQUIRE(classes == expect - 1 + p);
  }
}

TEST_CASE("section words evaluate back to their element", "[heis]") {
  HeisGroup grp(3, 2);
  for (std::uint32_t a = 0; a < grp.size(); ++a)
    REQUIRE(grp.eval_x_word(heis_section_word(grp, a)) == a);
}

TEST_CASE("extension: involution and lifted generators", "[heis]") {
  std::mt19937 rng(7);
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {3, 2}, {5, 1}}) {
    HeisGroup base(p, 2 * g);
    ExtGroup ext(base);
    REQUIRE(ext.size() == 2 * base.size());
    // sigma is an involutive automorphism fixing c.
    REQUIRE(ext.sigma(base.central()) == base.central());
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t a = rng() % base.size(), b = rng() % base.size();
      REQUIRE(ext.sigma(ext.sigma(a)) == a);
      REQUIRE(ext.sigma(base.mul(a, b)) == base.mul(ext.sigma(a), ext.sigma(b)));
    }
    // Lifts square to 1 and multiply to the base generators.
    for (int j = 1; j <= 2 * g + 1; ++j) {
      REQUIRE(ext.eps(ext.rho_y(j)) == 1);
      REQUIRE(ext.mul(ext.rho_y(j), ext.rho_y(j)) == ext.id);
    }
    for (int j = 1; j <= 2 * g; ++j)
      REQUIRE(ext.mul(ext.rho_y(j), ext.rho_y(j + 1)) ==
              ext.from_base(base.gen(j), 0));
    // Group axioms across the extension.
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t a = rng() % ext.size(), b = rng() % ext.size(),
                    c = rng() % ext.size();
      REQUIRE(ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c)));
      REQUIRE(ext.mul(a, ext.inv(a)) == ext.id);
    }
  }
}

TEST_CASE("half twist squares to a central element", "[heis]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {3, 2}, {5, 1}}) {
    HeisGroup base(p, 2 * g);
    ExtGroup ext(base);
    std::uint32_t delta = ext.eval_y_word(delta_y_word(g));
    REQUIRE(ext.eps(delta) == 1);
    std::uint32_t d2 = ext.mul(delta, delta);
    REQUIRE(ext.eps(d2) == 0);
    std::uint32_t b = ext.base_part(d2);
    REQUIRE(base.is_central_power(b));
    REQUIRE(base.c_exp(b) == smod(-g, p));
    REQUIRE(base.c_exp(b) != 0);
    // Same element via the boundary word in x-letters.
    REQUIRE(b == base.eval_x_word(delta_sq_word(g)));
  }
}

TEST_CASE("braid substitution is an action on the involutive quotient", "[heis]") {
  for (int g = 1; g <= 3; ++g) {
    int n = 2 * g + 1;
    std::mt19937 rng(11 + g);
    std::vector<Word> samples;
    for (int t = 0; t < 30; ++t) samples.push_back(random_y_word(rng, n, 16));
    for (int j = 1; j <= n; ++j) samples.push_back({j});
    for (const Word& w : samples) {
      for (int l = 1; l + 1 <= n - 1; ++l) {
        // sigma_l sigma_{l+1} sigma_l = sigma_{l+1} sigma_l sigma_{l+1}
        Word lhs = braid_sub_y(braid_sub_y(braid_sub_y(w, l), l + 1), l);
        Word rhs = braid_sub_y(braid_sub_y(braid_sub_y(w, l + 1), l), l + 1);
        REQUIRE(lhs == rhs);
      }
      for (int l = 1; l <= n - 1; ++l) {
        for (int m = l + 2; m <= n - 1; ++m) {
          Word lhs = braid_sub_y(braid_sub_y(w, l), m);
          Word rhs = braid_sub_y(braid_sub_y(w, m), l);
          REQUIRE(lhs == rhs);
        }
        REQUIRE(braid_sub_y(braid_sub_y(w, l), l, true) == h_reduce(w));
        REQUIRE(braid_sub_y(braid_sub_y(w, l, true), l) == h_reduce(w));
      }
    }
    REQUIRE(h_reduce(delta_y_word(g)) == delta_y_word(g));
    for (int l = 1; l <= n - 1; ++l)
      REQUIRE(braid_sub_y(delta_y_word(g), l) == delta_y_word(g));
  }
}

TEST_CASE("braid automorphism tables", "[heis]") {
  std::mt19937 rng(23);
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {3, 2}}) {
    HeisGroup base(p, 2 * g);
    ExtGroup ext(base);
    int n = 2 * g + 1;
    std::vector<std::vector<std::uint32_t>> fwd, bwd;
    for (int l = 1; l <= n - 1; ++l) {
      fwd.push_back(ext.braid_table(l));
      bwd.push_back(ext.braid_table(l, true));
    }
    auto compose = [&](const std::vector<std::uint32_t>& f,
                       const std::vector<std::uint32_t>& h) {
      std::vector<std::uint32_t> out(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[h[i]];
      return out;
    };
    for (int l = 0; l < n - 1; ++l) {
      // Automorphism property on random pairs.
      for (int t = 0; t < 100; ++t) {
        std::uint32_t a = rng() % ext.size(), b = rng() % ext.size();
        REQUIRE(fwd[l][ext.mul(a, b)] == ext.mul(fwd[l][a], fwd[l][b]));
      }
      // Inverse tables.
      auto idt = compose(fwd[l], bwd[l]);
      for (std::size_t i = 0; i < idt.size(); ++i) REQUIRE(idt[i] == i);
      // Generator images match the word substitution.
      for (int j = 1; j <= n; ++j)
        REQUIRE(fwd[l][ext.rho_y(j)] ==
                ext.eval_y_word(braid_sub_y({j}, l + 1)));
    }
    for (int l = 0; l + 1 < n - 1; ++l) {
      auto lhs = compose(fwd[l], compose(fwd[l + 1], fwd[l]));
      auto rhs = compose(fwd[l + 1], compose(fwd[l], fwd[l + 1]));
      REQUIRE(lhs == rhs);
    }
    for (int l = 0; l < n - 1; ++l)
      for (int m = l + 2; m < n - 1; ++m)
        REQUIRE(compose(fwd[l], fwd[m]) == compose(fwd[m], fwd[l]));
    // The braid action fixes the half twist and the central element.
    std::uint32_t delta = ext.eval_y_word(delta_y_word(g));
    std::uint32_t c = ext.from_base(base.central(), 0);
    for (int l = 0; l < n - 1; ++l) {
      REQUIRE(fwd[l][delta] == delta);
      REQUIRE(fwd[l][c] == c);
    }
  }
}
