#include "nagell/newforms.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace nagell;

TEST(Newforms, Builtin) {
  const NewformDatabase db = builtin_database();
  ASSERT_EQ(db.newforms(14).size(), 1u);
  EXPECT_EQ(af_ell(db.newforms(14)[0], 3).coords()[0], -2);
  const auto& l98 = db.newforms(98);
  ASSERT_EQ(l98.size(), 2u);
  const NewformRecord* irr = db.find("98-i1");
  ASSERT_NE(irr, nullptr);
  EXPECT_EQ(irr->degree(), 2);
  EXPECT_EQ(af_ell(*irr, 3).coords(), (std::vector<Rational>{-1, 1}));
  EXPECT_THROW(af_ell(*irr, 37), CoefficientUnavailable);
  EXPECT_THROW(db.newforms(54), std::out_of_range);
}

TEST(Newforms, BundledFile) {
  NewformDatabase db = builtin_database();
  const auto issues = db.ingest_file(NAGELL_DATA);
  EXPECT_TRUE(issues.empty());
  EXPECT_EQ(db.levels(), (std::vector<int>{14, 54, 98, 882, 2646}));
  const NewformRecord* b = db.find("54b1");
  ASSERT_NE(b, nullptr);
  ASSERT_TRUE(b->curve.has_value());
  EXPECT_EQ(b->curve->a(), WeierstrassCurve(1, -1, 1, 1, -1).a());
}

TEST(Newforms, StoredTracesMatchPointCounts) {
  // Independent route: count a_l from the curve and compare with the table.
  NewformDatabase db = builtin_database();
  db.ingest_file(NAGELL_DATA);
  for (int level : db.levels())
    for (const auto& r : db.newforms(level)) {
      if (!r.curve) continue;
      for (const auto& [l, c] : r.coeffs)
        if (level % l != 0) {
          EXPECT_EQ(c.coords()[0], ap(*r.curve, l)) << r.label << " l=" << l;
        }
    }
}

TEST(Newforms, RejectsInvalidRecords) {
  NewformDatabase db;
  std::istringstream in(
      "11\tw\t1\t-\t3:4\n"                        // |a_3| > 2 sqrt(3)
      "14\tc\t1\t-\t3:-2\tE=0,-1,1,-10,-20\n"     // conductor 11
      "15\tm\t1\n"                                  // too few columns
      "17\tz\t2\t1,0,-2\t3:1\n"                     // too few coordinates
      "19\tok\t1\t-\t2:0;3:-2\n");
  const auto issues = db.ingest(in);
  ASSERT_EQ(issues.size(), 4u);
  EXPECT_EQ(issues[0].line, 1);
  EXPECT_NE(issues[0].message.find("Weil"), std::string::npos);
  EXPECT_EQ(issues[1].line, 2);
  EXPECT_NE(issues[1].message.find("conductor"), std::string::npos);
  EXPECT_EQ(issues[2].line, 3);
  EXPECT_EQ(issues[3].line, 4);
  EXPECT_TRUE(db.has_level(19));
  EXPECT_FALSE(db.has_level(11));
}

TEST(Newforms, IrrationalWeilBoundUsesEveryEmbedding) {
  // theta = sqrt(2): a_3 = 2 theta is 2.83 in absolute value, under 2 sqrt(3); 3 theta is not.
  NewformDatabase db;
  std::istringstream in("20\tok\t2\t1,0,-2\t3:0,2\n21\tbad\t2\t1,0,-2\t3:0,3\n");
  const auto issues = db.ingest(in);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].line, 2);
}
