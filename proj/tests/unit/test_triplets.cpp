#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phylocompat/constructions.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/formats.hpp"
#include "phylocompat/newick.hpp"
#include "phylocompat/quartet_compat.hpp"
#include "phylocompat/sampling.hpp"
#include "phylocompat/tree_ops.hpp"
#include "phylocompat/triplet_compat.hpp"

using namespace phylocompat;

namespace {

std::vector<Triplet> random_set(std::mt19937_64& rng, Taxa& taxa, std::size_t max_labels) {
  const std::size_t n = 3 + rng() % (max_labels - 2);
  LabelSet l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(taxa.intern("x" + std::to_string(i)));
  const std::size_t triples = n * (n - 1) * (n - 2) / 6;
  const std::size_t count = 1 + rng() % std::min(n + 2, triples);
  if (rng() % 2 == 0) return random_displayed_triplets(rng, random_rooted_binary(rng, l), count);
  return random_triplets(rng, l, count);
}

// Exhaustive check of every proper subset via the rooted brute force.
bool every_proper_subset_compatible(const std::vector<Triplet>& r) {
  const std::size_t n = r.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<Triplet> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(r[i]);
    }
    if (!compat_triplets_brute(sub).compatible()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("triplets are stored with a sorted cherry") {
  Taxa taxa;
  const auto l = oracle::labels(taxa, "a b c");
  CHECK(Triplet(l[1], l[0], l[2]) == Triplet(l[0], l[1], l[2]));
  CHECK(Triplet(l[0], l[1], l[2]) != Triplet(l[0], l[2], l[1]));
  CHECK_THROWS_AS(Triplet(l[0], l[0], l[1]), std::invalid_argument);
}

TEST_CASE("the rooted example's triplets are compatible") {
  // The rooted example witnesses ab|c, de|b, ef|c, ec|b.
  Taxa taxa;
  const auto r = parse_triplets("a b | c\nd e | b\ne f | c\ne c | b\n", taxa);
  const auto tree = parse_newick("((a,b),((c,d),(e,f)));", taxa);
  for (const auto& t : r) CHECK(displays_triplet(tree, t));
  const auto built = build_compat(r);
  REQUIRE(built.compatible());
  for (const auto& t : r) CHECK(oracle::rooted_cherry(*built.witness, t));
  CHECK(compat_triplets_subset_sweep(r).compatible());
  CHECK(compat_triplets_brute(r).compatible());
}

TEST_CASE("the [R,S] graph") {
  Taxa taxa;
  const auto r = parse_triplets("a b | c\nc d | a\nd e | f\n", taxa);
  const auto all = rs_graph(r, label_set(r));
  CHECK(all.edges.size() == 3);
  const auto comps = all.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == oracle::labels(taxa, "a b"));
  CHECK(comps[1] == oracle::labels(taxa, "c d e"));
  CHECK(comps[2] == oracle::labels(taxa, "f"));
  // Triplets with a label outside S contribute nothing.
  const auto part = rs_graph(r, oracle::labels(taxa, "a b d e"));
  CHECK(part.edges.empty());
  CHECK_FALSE(part.connected());
  const auto cyc = parse_triplets("a b | c\nb c | a\n", taxa);
  CHECK(rs_graph(cyc, label_set(cyc)).connected());
}

TEST_CASE("three decision routes agree") {
  std::mt19937_64 rng(37);
  std::size_t compatible = 0, incompatible = 0;
  for (int round = 0; round < 400; ++round) {
    Taxa taxa;
    const auto r = random_set(rng, taxa, 7);
    const auto built = build_compat(r);
    const auto swept = compat_triplets_subset_sweep(r);
    const auto brute = compat_triplets_brute(r);
    REQUIRE(built.compatible() == swept.compatible());
    REQUIRE(built.compatible() == brute.compatible());
    if (built.compatible()) {
      ++compatible;
      for (const auto& t : r) {
        CHECK(oracle::rooted_cherry(*built.witness, t));
        CHECK(oracle::rooted_cherry(*brute.witness, t));
      }
      CHECK(oracle::binary(*brute.witness));
    } else {
      ++incompatible;
      // Certificates are incompatible subsets of the input.
      for (const auto* cert : {&*built.certificate, &*swept.certificate}) {
        CHECK_FALSE(cert->empty());
        for (const auto& t : *cert) CHECK(std::find(r.begin(), r.end(), t) != r.end());
        CHECK_FALSE(compat_triplets_brute(*cert).compatible());
        CHECK(rs_graph(*cert, label_set(*cert)).connected());
      }
    }
  }
  CHECK(compatible > 50);
  CHECK(incompatible > 50);
}

TEST_CASE("caps and bad input") {
  Taxa taxa;
  const auto big = gen_cyclic_triplets(taxa, 7);  // 8 labels
  CHECK_THROWS_AS(compat_triplets_brute(big), LimitExceeded);
  CHECK_FALSE(compat_triplets_brute(big, BruteOptions{8}).compatible());
  CHECK_FALSE(compat_triplets_subset_sweep(big).compatible());
  Taxa t2;
  const auto huge = gen_tight_triplets(t2, 13);
  CHECK_THROWS_AS(compat_triplets_subset_sweep(huge), LimitExceeded);
  CHECK_FALSE(build_compat(huge).compatible());
  CHECK_FALSE(compat_triplets_subset_sweep(huge, 13).compatible());
  Taxa t3;
  CHECK_THROWS_AS(compat_triplets_subset_sweep(gen_tight_triplets(t3, 40), 64), LimitExceeded);
  CHECK_THROWS_AS(build_compat(std::vector<Triplet>{}), std::invalid_argument);
  const auto one = parse_triplets("a b | c\n", taxa);
  const std::vector<Triplet> dup{one[0], one[0]};
  CHECK_THROWS_AS(build_compat(dup), std::invalid_argument);
}

TEST_CASE("extraction of a minimal incompatible subset") {
  SUBCASE("all three resolutions of one triple") {
    // Golden value from exhaustive subset checks: every pair is incompatible, so a pair is
    // returned; dropping in canonical order removes ab|c first.
    Taxa taxa;
    const auto r = parse_triplets("a b | c\nb c | a\nc a | b\n", taxa);
    std::size_t incompatible_pairs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const std::vector<Triplet> pair{r[i], r[j]};
        if (!compat_triplets_brute(pair).compatible()) ++incompatible_pairs;
      }
    }
    CHECK(incompatible_pairs == 3);
    const auto sub = extract_incompatible_subset(r);
    CHECK(format_lines(sub, taxa) == "a c | b\nb c | a\n");
  }
  SUBCASE("tight sets come back unchanged") {
    for (std::size_t n = 3; n <= 9; ++n) {
      Taxa taxa;
      auto r = gen_tight_triplets(taxa, n);
      std::sort(r.begin(), r.end());
      CHECK(extract_incompatible_subset(r) == r);
    }
  }
  SUBCASE("an extra triplet is removed again") {
    Taxa taxa;
    auto tight = gen_tight_triplets(taxa, 5);
    auto padded = tight;
    padded.emplace_back(taxa.at("a1"), taxa.at("b1"), taxa.intern("z"));
    std::sort(tight.begin(), tight.end());
    const auto sub = extract_incompatible_subset(padded);
    CHECK(sub.size() == 4);
    CHECK(sub == tight);
  }
  SUBCASE("random incompatible sets") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 60) {
      Taxa taxa;
      auto r = random_set(rng, taxa, 6);
      if (build_compat(r).compatible()) continue;
      ++done;
      const auto sub = extract_incompatible_subset(r);
      CHECK_FALSE(compat_triplets_brute(sub).compatible());
      CHECK(sub.size() + 1 <= label_set(sub).size());
      CHECK(rs_graph(sub, label_set(sub)).connected());
      if (sub.size() <= 10) CHECK(every_proper_subset_compatible(sub));
    }
  }
  Taxa taxa;
  CHECK_THROWS_AS(extract_incompatible_subset(parse_triplets("a b | c\n", taxa)), std::invalid_argument);
}

TEST_CASE("quartets through a shared label correspond to triplets") {
  Taxa taxa;
  const Label ell = taxa.intern("ell");
  const auto q = parse_quartets("a b | c ell\nell d | a c\n", taxa);
  const auto r = triplets_of_quartets(q, ell);
  CHECK(format_lines(r, taxa) == "a b | c\na c | d\n");
  CHECK(quartets_of_triplets(r, ell) == q);
  CHECK_THROWS_AS(triplets_of_quartets(parse_quartets("a b | c d\n", taxa), ell), std::invalid_argument);
  CHECK_THROWS_AS(quartets_of_triplets(r, taxa.at("a")), std::invalid_argument);

  std::mt19937_64 rng(43);
  std::size_t compatible = 0;
  for (int round = 0; round < 200; ++round) {
    Taxa t2;
    const auto trip = random_set(rng, t2, 6);
    const auto lifted = quartets_of_triplets(trip, t2.intern("ell"));
    const bool by_triplets = build_compat(trip).compatible();
    REQUIRE(by_triplets == compat_quartets_brute(lifted).compatible());
    REQUIRE(by_triplets == compat_quartets(lifted, QuartetMethod::unification).compatible());
    if (by_triplets) ++compatible;
  }
  CHECK(compatible > 30);
}

TEST_CASE("cyclic triplets") {
  // R_2 = {ab2|b1, ab1|b2}.
  Taxa taxa;
  const auto r2 = gen_cyclic_triplets(taxa, 2);
  CHECK(format_lines(r2, taxa) == "a b2 | b1\na b1 | b2\n");
  for (std::size_t r = 2; r <= 6; ++r) {
    Taxa t;
    const auto rr = gen_cyclic_triplets(t, r);
    CHECK(rr.size() == r);
    CHECK(label_set(rr).size() == r + 1);
    CHECK(is_minimally_incompatible_triplets(rr).minimal());
    CHECK(is_minimally_incompatible_triplets(rr, TripletMethod::brute).minimal());
    CHECK(is_minimally_incompatible_triplets(rr, TripletMethod::subset_sweep).minimal());
  }
  CHECK_THROWS_AS(gen_cyclic_triplets(taxa, 1), std::invalid_argument);
}
