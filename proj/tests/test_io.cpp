#include <gtest/gtest.h>

#include <string>

#include "superstab/superstab.hpp"
#include "support.hpp"

using namespace superstab;
using namespace superstab::testing;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseError(0, 0, "none");
}

}  // namespace

TEST(Parse, EmptyInstance) {
  const Instance inst = parse_instance("doctors:\nhospitals:\n");
  EXPECT_EQ(inst.num_doctors(), 0u);
  EXPECT_EQ(inst.num_hospitals(), 0u);
  EXPECT_EQ(inst.num_edges(), 0u);
}

TEST(Parse, CommentsBlankLinesAndSpacing) {
  const Instance inst = parse_instance(
      "# header\n"
      "\n"
      "doctors:   d1    d2   # trailing\n"
      "hospitals: h1 h2\n"
      "pref d1: ( h1 h2 )\n"
      "pref d2:(h1)h2\n"
      "pref h1: d1 d2\n"
      "pref h2: (d1 d2)\n");
  EXPECT_EQ(inst.num_edges(), 4u);
  EXPECT_EQ(inst.doctor_rank(*inst.find_edge("d1", "h1")), inst.doctor_rank(*inst.find_edge("d1", "h2")));
  EXPECT_LT(inst.doctor_rank(*inst.find_edge("d2", "h1")), inst.doctor_rank(*inst.find_edge("d2", "h2")));
}

TEST(Parse, EmptyPreferenceList) {
  const Instance inst = parse_instance("doctors: d1\nhospitals: h1\npref d1:\npref h1:\n");
  EXPECT_EQ(inst.num_edges(), 0u);
}

TEST(Parse, AsymmetricListing) {
  auto e = parse_error("doctors: d1\nhospitals: h1\npref d1: h1\npref h1:\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 10u);
  EXPECT_NE(std::string(e.what()).find("does not list"), std::string::npos);

  auto r = parse_error("doctors: d1\nhospitals: h1\npref d1:\npref h1: d1\n");
  EXPECT_EQ(r.line(), 4u);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  auto unclosed = parse_error("doctors: d1\nhospitals: h1\npref d1: (h1\npref h1: d1\n");
  EXPECT_EQ(unclosed.line(), 3u);
  EXPECT_EQ(unclosed.column(), 10u);

  auto stray = parse_error("doctors: d1\nhospitals: h1\npref d1: h1)\npref h1: d1\n");
  EXPECT_EQ(stray.line(), 3u);
  EXPECT_EQ(stray.column(), 12u);

  auto nested = parse_error("doctors: d1\nhospitals: h1\npref d1: ((h1))\npref h1: d1\n");
  EXPECT_EQ(nested.column(), 11u);

  auto empty_group = parse_error("doctors: d1\nhospitals: h1\npref d1: () h1\npref h1: d1\n");
  EXPECT_EQ(empty_group.line(), 3u);

  auto junk = parse_error("doctors: d1\nhospitals: h1\nwhat is this\n");
  EXPECT_EQ(junk.line(), 3u);
  EXPECT_EQ(junk.column(), 1u);

  auto directive = parse_error("doctors: d1\nhospitals: h1\nprefs d1: h1\n");
  EXPECT_EQ(directive.line(), 3u);
}

TEST(Parse, DuplicateNames) {
  auto same_side = parse_error("doctors: d1 d1\nhospitals: h1\n");
  EXPECT_EQ(same_side.line(), 1u);
  EXPECT_EQ(same_side.column(), 13u);

  auto both_sides = parse_error("doctors: x\nhospitals: x\npref x:\n");
  EXPECT_EQ(both_sides.line(), 2u);
}

TEST(Parse, DuplicateEntryInList) {
  auto e = parse_error("doctors: d1\nhospitals: h1\npref d1: h1 (h1)\npref h1: d1\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 14u);
}

TEST(Parse, MissingAndRepeatedLines) {
  parse_error("hospitals: h1\npref h1:\n");
  parse_error("doctors: d1\n");
  parse_error("doctors: d1\nhospitals: h1\npref d1:\n");  // h1 has no pref line
  parse_error("doctors: d1\nhospitals: h1\npref d1:\npref d1:\npref h1:\n");
  parse_error("doctors: d1\ndoctors: d2\nhospitals:\n");
}

TEST(Parse, UnknownOrWrongSideNames) {
  parse_error("doctors: d1\nhospitals: h1\npref d9:\n");
  parse_error("doctors: d1 d2\nhospitals: h1\npref d1: d2\npref d2:\npref h1:\n");
  parse_error("doctors: d1\nhospitals: h1\npref d1: h7\npref h1:\n");
}

TEST(Serialize, CanonicalForm) {
  EXPECT_EQ(serialize_instance(tie_instance()), kTieText);
  EXPECT_EQ(serialize_instance(strict_instance()), kStrictText);
  EXPECT_EQ(serialize_instance(parse_instance("doctors:\nhospitals:\n")), "doctors:\nhospitals:\n");
}

TEST(Serialize, RoundTripOnGeneratedInstances) {
  for (const auto& inst : random_instances(300, 6, 6, 21)) {
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(back, inst) << text;
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(Transpose, Involution) {
  const Instance strict = strict_instance();
  EXPECT_EQ(serialize_instance(transpose(transpose(strict))), serialize_instance(strict));
  for (const auto& inst : random_instances(100, 5, 5, 22))
    EXPECT_EQ(serialize_instance(transpose(transpose(inst))), serialize_instance(inst));
}

TEST(Transpose, SwapsSides) {
  const Instance one_by_two = parse_instance("doctors: d1\nhospitals: h1 h2\npref d1: h1 h2\npref h1: d1\npref h2: d1\n");
  const Instance t = transpose(one_by_two);
  EXPECT_EQ(t.num_doctors(), 2u);
  EXPECT_EQ(t.num_hospitals(), 1u);
  EXPECT_EQ(serialize_instance(t), "doctors: h1 h2\nhospitals: d1\npref h1: d1\npref h2: d1\npref d1: h1 h2\n");

  const Instance empty = parse_instance("doctors:\nhospitals:\n");
  EXPECT_EQ(transpose(empty), empty);
}
