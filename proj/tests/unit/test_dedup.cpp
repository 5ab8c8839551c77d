#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "oracle.hpp"
#include "rpys/dedup.hpp"
#include "rpys/disjoint_set.hpp"
#include "rpys/error.hpp"
#include "rpys/levenshtein.hpp"
#include "rpys/utf8.hpp"
#include "synth.hpp"

using namespace rpys;

namespace {

const ImportWindow kAny{0, 9999, true};

CitedRefVariant variant_of(const std::string& raw, std::uint64_t cites = 1, int citing_year = 2000) {
  CitedRefVariant v = *parse_cr(raw, kAny);
  v.add_occurrence(citing_year, cites);
  return v;
}

std::u32string u32(const std::string& s) { return utf8::decode(s); }

std::string random_text(synth::Rng& rng, std::size_t max_len, const std::string& alphabet) {
  std::string s(rng.below(max_len + 1), ' ');
  for (char& c : s) c = alphabet[rng.below(alphabet.size())];
  return s;
}

}  // namespace

// ---- Edit distance ---------------------------------------------------------

TEST(Levenshtein, KnownValues) {
  EXPECT_EQ(levenshtein(u32("kitten"), u32("sitting")), 3u);
  EXPECT_EQ(levenshtein(u32(""), u32("abc")), 3u);
  EXPECT_EQ(levenshtein(u32("abc"), u32("abc")), 0u);
  EXPECT_EQ(levenshtein(u32("M\xC3\x9CLLER"), u32("MULLER")), 1u);  // one code point, two bytes
}

TEST(Levenshtein, MatchesTextbookTable) {
  synth::Rng rng(3);
  for (int i = 0; i < 3000; ++i) {
    const auto a = u32(random_text(rng, 12, "ABCD "));
    const auto b = u32(random_text(rng, 12, "ABCD "));
    const std::size_t d = oracle::textbook_levenshtein(a, b);
    ASSERT_EQ(levenshtein(a, b), d);
    const std::size_t bound = rng.below(8);
    const std::size_t banded = levenshtein_bounded(a, b, bound);
    if (d <= bound) {
      ASSERT_EQ(banded, d);
    } else {
      ASSERT_GT(banded, bound);
    }
  }
}

// ---- Key and similarity ----------------------------------------------------

TEST(ComparisonKey, UppercasesAndCollapsesBlanks) {
  EXPECT_EQ(comparison_key(variant_of("  White  hd , 1981,  j am\tsoc , V32, P163")), "WHITE HD J AM SOC");
  EXPECT_EQ(comparison_key(variant_of("GIDDENS A, 1984, CONSTITUTION SOC")), "GIDDENS A CONSTITUTION SOC");
  EXPECT_EQ(comparison_key(variant_of(", 1984, SOURCE ONLY")), "SOURCE ONLY");
  EXPECT_EQ(comparison_key(variant_of("")), "");
}

TEST(ComparisonKey, MatchesIndependentConstruction) {
  synth::Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto v = variant_of(random_text(rng, 25, "abXY ,\t19V0P"));
    EXPECT_EQ(u32(comparison_key(v)), oracle::key_of(v));
  }
}

TEST(Similarity, Examples) {
  EXPECT_DOUBLE_EQ(similarity(variant_of("WHITE HD, 1981, J, V32"), variant_of("WHITE HD, 1981, J, V32")), 1.0);
  EXPECT_NEAR(similarity(variant_of("ABC"), variant_of("ABD")), 1.0 - 1.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(similarity(variant_of(""), variant_of("ABC")), 0.0);
  EXPECT_DOUBLE_EQ(similarity(variant_of(""), variant_of(", 1990")), 1.0);
}

TEST(Similarity, SymmetricReflexiveAndEqualToFormula) {
  synth::Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    const auto a = variant_of(random_text(rng, 20, "ABCDE "));
    const auto b = variant_of(random_text(rng, 20, "ABCDE "));
    EXPECT_EQ(similarity(a, b), similarity(b, a));
    EXPECT_EQ(similarity(a, a), 1.0);
    const auto ka = oracle::key_of(a);
    const auto kb = oracle::key_of(b);
    const std::size_t len = std::max(ka.size(), kb.size());
    const double expected =
        len ? 1.0 - static_cast<double>(oracle::textbook_levenshtein(ka, kb)) / static_cast<double>(len) : 1.0;
    EXPECT_DOUBLE_EQ(similarity(a, b), expected);
  }
}

TEST(MaxEditDistance, FloorOfSlack) {
  EXPECT_EQ(max_edit_distance(4, Fraction(3, 4)), 1u);
  EXPECT_EQ(max_edit_distance(3, Fraction(3, 4)), 0u);
  EXPECT_EQ(max_edit_distance(50, Fraction(3, 4)), 12u);
  EXPECT_EQ(max_edit_distance(10, Fraction(1)), 0u);
  EXPECT_EQ(max_edit_distance(10, Fraction(0)), 10u);
}

// ---- Pair rule -------------------------------------------------------------

TEST(PairMatches, VolumeGate) {
  const ClusterConfig cfg;
  EXPECT_FALSE(pair_matches(variant_of("WHITE HD, 1981, J AM SOC, V32, P163"), variant_of("WHITE HD, 1981, J AM SOC, V33, P163"), cfg));
  ClusterConfig no_volume = cfg;
  no_volume.require_volume = false;
  EXPECT_TRUE(pair_matches(variant_of("WHITE HD, 1981, J AM SOC, V32, P163"), variant_of("WHITE HD, 1981, J AM SOC, V33, P163"),
                           no_volume));
}

TEST(PairMatches, MissingValuesAreCompatible) {
  const ClusterConfig cfg;
  EXPECT_TRUE(pair_matches(variant_of("ROGERS EM, 1983, DIFFUSION INNOVATION"), variant_of("ROGERS EM, 1983, DIFFUSION INNOVATION, V1"), cfg));
  EXPECT_TRUE(pair_matches(variant_of("ROGERS EM, 1983, DIFFUSION INNOVATION, P5"), variant_of("ROGERS EM, 1983, DIFFUSION INNOVATION"), cfg));
}

TEST(PairMatches, DoiGateOnlyWhenEnabled) {
  ClusterConfig cfg;
  const auto a = variant_of("LEE K, 2001, NATURE, DOI 10.1/a");
  const auto b = variant_of("LEE K, 2001, NATURE, DOI 10.1/b");
  EXPECT_TRUE(pair_matches(a, b, cfg));
  cfg.require_doi = true;
  EXPECT_FALSE(pair_matches(a, b, cfg));
}

TEST(PairMatches, ThresholdIsInclusive) {
  const ClusterConfig cfg;  // 0.75
  // 4-character keys at distance 1: similarity exactly 0.75.
  EXPECT_TRUE(pair_matches(variant_of("ABCD"), variant_of("ABCE"), cfg));
  // 50-character keys at distance 13: similarity 0.74.
  const std::string base(50, 'A');
  std::string other = base;
  for (int i = 0; i < 13; ++i) other[static_cast<std::size_t>(i)] = 'B';
  EXPECT_NEAR(similarity(variant_of(base), variant_of(other)), 0.74, 1e-12);
  EXPECT_FALSE(pair_matches(variant_of(base), variant_of(other), cfg));
  other[12] = 'A';
  EXPECT_TRUE(pair_matches(variant_of(base), variant_of(other), cfg));
}

TEST(PairMatches, AgreesWithLiteralRule) {
  synth::Rng rng(41);
  for (int i = 0; i < 3000; ++i) {
    ClusterConfig cfg;
    cfg.threshold = Fraction(static_cast<std::int64_t>(rng.below(101)), 100);
    cfg.require_volume = rng.chance(0.5);
    cfg.require_page = rng.chance(0.5);
    cfg.require_doi = rng.chance(0.5);
    auto make = [&] {
      std::string raw = random_text(rng, 10, "ABC ") + ", 1990, " + random_text(rng, 10, "ABC ");
      if (rng.chance(0.5)) raw += ", V" + std::to_string(rng.below(2));
      if (rng.chance(0.5)) raw += ", P" + std::to_string(rng.below(2));
      if (rng.chance(0.5)) raw += ", DOI 10.1/" + std::to_string(rng.below(2));
      return variant_of(raw);
    };
    const auto a = make();
    const auto b = make();
    ASSERT_EQ(pair_matches(a, b, cfg), oracle::literal_match(a, b, cfg)) << a.raw << " | " << b.raw;
  }
}

// ---- Clustering ------------------------------------------------------------

TEST(Cluster, EmptyInput) { EXPECT_TRUE(cluster({}, ClusterConfig{}).empty()); }

TEST(Cluster, ChainIsTransitive) {
  // ABCD~ABCE and ABCE~ABFE at 0.75, while ABCD vs ABFE is only 0.5.
  const auto a = variant_of("ABCD, 1990");
  const auto b = variant_of("ABCE, 1990");
  const auto c = variant_of("ABFE, 1990");
  ASSERT_FALSE(pair_matches(a, c, ClusterConfig{}));
  const Partition p = cluster({a, b, c}, ClusterConfig{});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].members.size(), 3u);
}

TEST(Cluster, NeverCrossesReferenceYears) {
  const Partition p = cluster({variant_of("SAME, 1990, X"), variant_of("SAME, 1991, X"), variant_of("SAME, X")}, ClusterConfig{});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_FALSE(p[0].rpy);  // undated block first
  EXPECT_EQ(p[1].rpy, 1990);
  EXPECT_EQ(p[2].rpy, 1991);
}

TEST(Cluster, PartitionLawsAndOrderIndependence) {
  synth::Rng rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    auto variants = synth::typo_variants(rng, 120);
    const Partition p = cluster(variants, ClusterConfig{});
    std::multiset<std::string> covered;
    for (const Cluster& c : p) {
      ASSERT_FALSE(c.members.empty());
      EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end(),
                                 [](const auto& x, const auto& y) { return x.raw < y.raw; }));
      for (const auto& m : c.members) {
        EXPECT_EQ(m.rpy, c.rpy);
        covered.insert(m.raw);
      }
    }
    std::multiset<std::string> all;
    for (const auto& v : variants) all.insert(v.raw);
    EXPECT_EQ(covered, all);

    std::vector<CitedRefVariant> shuffled = variants;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    EXPECT_EQ(merge(cluster(shuffled, ClusterConfig{})), merge(p));
  }
}

TEST(Cluster, MatchesBruteForceClosure) {
  synth::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    ClusterConfig cfg;
    cfg.threshold = Fraction(static_cast<std::int64_t>(rng.between(60, 95)), 100);
    const auto variants = synth::typo_variants(rng, 150);
    EXPECT_EQ(oracle::partition_sets(cluster(variants, cfg)), oracle::brute_partition(variants, cfg));
  }
}

TEST(Cluster, SerialAndParallelKernelsAgree) {
  synth::Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    ClusterConfig cfg;
    cfg.threshold = Fraction(static_cast<std::int64_t>(rng.between(0, 100)), 100);
    cfg.require_page = rng.chance(0.5);
    const auto variants = synth::typo_variants(rng, 200);
    EXPECT_EQ(kernels::match_edges_serial(variants, cfg), kernels::match_edges_parallel(variants, cfg));
    EXPECT_EQ(merge(cluster(variants, cfg, Exec::serial)), merge(cluster(variants, cfg, Exec::parallel)));
  }
}

TEST(Cluster, RaisingThresholdRefines) {
  synth::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto variants = synth::typo_variants(rng, 100);
    ClusterConfig lo;
    lo.threshold = Fraction(static_cast<std::int64_t>(rng.between(50, 90)), 100);
    ClusterConfig hi = lo;
    hi.threshold = Fraction(lo.threshold.num() * 100 / lo.threshold.den() + static_cast<std::int64_t>(rng.between(0, 10)), 100);
    std::map<std::string, std::size_t> coarse;
    const Partition p_lo = cluster(variants, lo);
    for (std::size_t i = 0; i < p_lo.size(); ++i) {
      for (const auto& m : p_lo[i].members) coarse[m.raw] = i;
    }
    for (const Cluster& c : cluster(variants, hi)) {
      for (const auto& m : c.members) EXPECT_EQ(coarse[m.raw], coarse[c.members.front().raw]);
    }
  }
}

// ---- Merge -----------------------------------------------------------------

TEST(Merge, SingletonIsIdentity) {
  const auto v = variant_of("GIDDENS A, 1984, CONSTITUTION SOC", 3, 1999);
  const auto merged = merge(cluster({v}, ClusterConfig{}));
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].canonical_raw, v.raw);
  EXPECT_EQ(merged[0].rpy, 1984);
  EXPECT_EQ(merged[0].member_count, 1u);
  EXPECT_EQ(merged[0].n_cr, 3u);
  EXPECT_EQ(merged[0].counts_by_year, v.counts_by_year);
}

TEST(Merge, LargestTotalBecomesCanonical) {
  const auto merged =
      merge(cluster({variant_of("ROGERS EM, 1983, DIFFUSION INNOVATION", 3, 1990), variant_of("ROGERS E, 1983, DIFFUSION INNOVATION", 5, 1991)},
                    ClusterConfig{}));
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].canonical_raw, "ROGERS E, 1983, DIFFUSION INNOVATION");
  EXPECT_EQ(merged[0].n_cr, 8u);
  EXPECT_EQ(merged[0].member_count, 2u);
  EXPECT_EQ(merged[0].counts_by_year.at(1990), 3u);
  EXPECT_EQ(merged[0].counts_by_year.at(1991), 5u);
}

TEST(Merge, TieGoesToSmallestRawString) {
  const auto merged = merge(cluster({variant_of("ROGERS EM, 1983, DIFFUSION INNOVATIONS", 2), variant_of("ROGERS EM, 1983, DIFFUSION INNOVATION", 2)},
                                    ClusterConfig{}));
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].canonical_raw, "ROGERS EM, 1983, DIFFUSION INNOVATION");
}

TEST(Merge, CountsAreElementWiseSums) {
  synth::Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto variants = synth::typo_variants(rng, 150);
    std::uint64_t occurrences = 0;
    for (const auto& v : variants) occurrences += v.total_count();
    const Partition p = cluster(variants, ClusterConfig{});
    const auto merged = merge(p);
    ASSERT_EQ(merged.size(), p.size());
    std::uint64_t n_cr = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::map<int, std::uint64_t> sum;
      for (const auto& m : p[i].members) {
        for (const auto& yc : m.counts_by_year) sum[yc.year] += yc.count;
      }
      std::map<int, std::uint64_t> got;
      for (const auto& yc : merged[i].counts_by_year) got[yc.year] = yc.count;
      EXPECT_EQ(got, sum);
      EXPECT_EQ(merged[i].member_count, p[i].members.size());
      n_cr += merged[i].n_cr;
    }
    EXPECT_EQ(n_cr, occurrences);
  }
}

TEST(Merge, ClusterMergeIsIdempotent) {
  synth::Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    // Each merged record re-clusters as a singleton of itself.
    auto merged = merge(cluster(synth::typo_variants(rng, 150), ClusterConfig{}));
    auto again = merge(cluster(as_variants(merged), ClusterConfig{}));
    for (auto& m : merged) m.member_count = 1;
    const auto by_raw = [](const MergedCR& a, const MergedCR& b) { return a.canonical_raw < b.canonical_raw; };
    std::sort(merged.begin(), merged.end(), by_raw);
    std::sort(again.begin(), again.end(), by_raw);
    EXPECT_EQ(again, merged);
  }
}

TEST(Merge, ClusterDumpLines) {
  const auto merged = merge(cluster({variant_of("A, 1990, X", 2), variant_of("A, 1990, X, V1", 1), variant_of("B, Y", 1)}, ClusterConfig{}));
  std::ostringstream out;
  write_cluster_dump(out, merged);
  EXPECT_EQ(out.str(), "\t1\tB, Y\n1990\t2\tA, 1990, X\n");
}

TEST(ClusterConfig, Validation) {
  ClusterConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.threshold = Fraction(11, 10);
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.threshold = Fraction(-1, 10);
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(DisjointSet, UnionsAndFinds) {
  DisjointSet ds(6);
  ds.unite(0, 1);
  ds.unite(2, 3);
  ds.unite(1, 3);
  EXPECT_EQ(ds.find(0), ds.find(2));
  EXPECT_NE(ds.find(0), ds.find(4));
  EXPECT_NE(ds.find(4), ds.find(5));
}
