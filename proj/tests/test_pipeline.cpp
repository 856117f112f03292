#include "nagell/pipeline.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace nagell;

namespace {

Evidence full_evidence() {
  Evidence ev;
  ev.sieve_bound = ev.level98 = ev.small_exponents = ev.n7_external = true;
  ev.classes_nonzero = std::set<int>{13, 17, 19, 23};
  ev.classes_zero = std::set<int>{5, 7, 13, 23};
  return ev;
}

// Reduced bounds so a report runs in seconds.
RunConfig quick() {
  RunConfig c;
  c.box = 100;
  c.tm_box = 20;
  c.k_max = 3;
  c.n_max = 20;
  c.k_max_pow2 = 4;
  c.lambda_max = 1;
  return c;
}

}  // namespace

TEST(Config, ParsesKeysAndComments) {
  std::istringstream in("# test\nbox = 500\nkmax=4 # inline\n\ndata = /tmp/x.tsv\njobs=2\n");
  const RunConfig c = parse_config(in);
  EXPECT_EQ(c.box, 500);
  EXPECT_EQ(c.k_max, 4);
  EXPECT_EQ(c.data_path, "/tmp/x.tsv");
  EXPECT_EQ(c.jobs, 2);
  EXPECT_EQ(c.l_max, 31);
}

TEST(Config, RejectsBadInput) {
  std::istringstream unknown("colour = red\n"), neg("box=-1\n"), small("lmax=2\n"), junk("box\n");
  EXPECT_THROW(parse_config(unknown), std::invalid_argument);
  EXPECT_THROW(parse_config(neg), std::invalid_argument);
  EXPECT_THROW(parse_config(small), std::invalid_argument);
  EXPECT_THROW(parse_config(junk), std::invalid_argument);
}

TEST(Theorem, Examples) {
  const Evidence ev = full_evidence();
  EXPECT_EQ(theorem_check(13, 0, ev).status, Status::Excluded);
  const auto v5 = theorem_check(5, 0, ev);
  EXPECT_EQ(v5.status, Status::SolvedListed);
  ASSERT_EQ(v5.solutions.size(), 2u);
  EXPECT_EQ(v5.solutions[0].x, 5);
  EXPECT_EQ(v5.solutions[1].x, 181);
  EXPECT_EQ(theorem_check(11, 0, ev).status, Status::Open);
  // k = 1: i = 0, so 5 | n and 7 | n are excluded.
  EXPECT_EQ(theorem_check(35, 1, ev).status, Status::Excluded);
  EXPECT_EQ(theorem_check(35, 0, ev).status, Status::Open);
  EXPECT_EQ(theorem_check(17, 1, ev).status, Status::Open);
  EXPECT_EQ(theorem_check(17, 0, ev).status, Status::Excluded);
}

TEST(Theorem, NotesTheUnlistedCubicFamily) {
  const auto v = theorem_check(3, 0, full_evidence());
  ASSERT_FALSE(v.notes.empty());
  EXPECT_NE(v.notes.back().find("181"), std::string::npos);
}

TEST(Theorem, NoEvidenceNoExclusion) {
  for (int n = 3; n <= 60; ++n)
    for (int k = 0; k < 6; ++k) EXPECT_NE(theorem_check(n, k, Evidence{}).status, Status::Excluded);
}

TEST(Theorem, MonotoneInEvidence) {
  // Every subset of the evidence flags: adding one never turns excluded into not excluded.
  auto build = [](unsigned mask) {
    Evidence ev;
    ev.sieve_bound = mask & 1;
    ev.level98 = mask & 2;
    ev.small_exponents = mask & 4;
    ev.n7_external = mask & 8;
    if (mask & 16) ev.classes_nonzero = std::set<int>{13, 17, 19, 23};
    if (mask & 32) ev.classes_zero = std::set<int>{5, 7, 13, 23};
    return ev;
  };
  for (unsigned mask = 0; mask < 64; ++mask)
    for (unsigned bit = 1; bit < 64; bit <<= 1) {
      if (mask & bit) continue;
      const Evidence lo = build(mask), hi = build(mask | bit);
      for (int n = 3; n <= 80; ++n)
        for (int k = 0; k < 3; ++k)
          if (theorem_check(n, k, lo).status == Status::Excluded) {
            EXPECT_EQ(theorem_check(n, k, hi).status, Status::Excluded) << n << " " << k;
          }
    }
}

TEST(Theorem, ExcludedCarriesNoFamilySolution) {
  const Evidence ev = full_evidence();
  for (int n = 3; n <= 200; ++n)
    for (int k = 0; k <= 15; ++k) {
      const auto v = theorem_check(n, k, ev);
      if (v.status == Status::Excluded) {
        EXPECT_TRUE(v.solutions.empty()) << n << " " << k;
        EXPECT_FALSE(v.witnesses.empty());
      }
    }
}

TEST(Report, SkipsSieveWithoutData) {
  RunConfig c = quick();
  c.data_path = "";
  const Report r = run_report(c);
  EXPECT_EQ(r.doc["sieve"]["status"], "skipped: data unavailable");
  EXPECT_EQ(r.doc["data_gaps"].size(), 1u);
  EXPECT_TRUE(r.doc["level_98"].contains("checks"));
}

TEST(Report, Deterministic) {
  RunConfig c = quick();
  c.data_path = NAGELL_DATA;
  const std::string a = run_report(c).doc.dump(), b = run_report(c).doc.dump();
  EXPECT_EQ(a, b);
  EXPECT_TRUE(run_report(c).doc["sieve"].contains("pairs"));
}

TEST(Report, FamilyCountFollowsLambda) {
  RunConfig c = quick();
  c.lambda_max = 5;
  const Report r = run_report(c);
  EXPECT_EQ(r.doc["families"]["checks"][0]["observed"]["identities"], 60);
}
