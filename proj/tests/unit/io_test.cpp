#include <gtest/gtest.h>

#include "rcsim/circulant.hpp"
#include "rcsim/io.hpp"
#include "rcsim/presets.hpp"

namespace rcsim {
namespace {

using io::json;

TEST(IoTest, ScheduleRoundTrip) {
  const auto s = make_partitioned_circulant_schedule(15, 7, {{1, 2, 3}, {4, 5}, {6, 7}}, 4, 2);
  const auto back = io::schedule_from_json(io::parse_json_text(io::to_json(s).dump()));
  EXPECT_EQ(back, s);
}

TEST(IoTest, DigraphRejectsBadIds) {
  EXPECT_THROW(io::digraph_from_json(json{{"n", 3}, {"in_neighbors", {{"1", {4}}}}}), io::ValidationError);
  EXPECT_THROW(io::digraph_from_json(json{{"n", 3}, {"in_neighbors", {{"2", {2}}}}}), io::ValidationError);
}

TEST(IoTest, UnknownFieldRejected) {
  auto doc = preset_document("sim1");
  doc["bogus"] = 1;
  try {
    io::scenario_from_json(doc);
    FAIL() << "expected ValidationError";
  } catch (const io::ValidationError& e) {
    EXPECT_EQ(e.field(), "bogus");
  }
}

TEST(IoTest, MissingFieldNamed) {
  auto doc = preset_document("sim1");
  doc.erase("F");
  try {
    io::scenario_from_json(doc);
    FAIL() << "expected ValidationError";
  } catch (const io::ValidationError& e) {
    EXPECT_EQ(e.field(), "F");
    EXPECT_NE(std::string(e.what()).find("F"), std::string::npos);
  }
}

TEST(IoTest, ParseErrorCarriesLine) {
  try {
    io::parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}");
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
}

TEST(IoTest, PresetDocumentsParse) {
  for (const auto& name : preset_names()) {
    const auto cfg = io::scenario_from_json(preset_document(name));
    EXPECT_EQ(cfg.name, name);
    EXPECT_TRUE(cfg.claim.has_value());
  }
}

TEST(IoTest, AgentSetForms) {
  EXPECT_EQ(io::parse_agent_set("4-8"), (AgentSet{4, 5, 6, 7, 8}));
  EXPECT_EQ(io::parse_agent_set("1,3,5"), (AgentSet{1, 3, 5}));
  EXPECT_EQ(io::parse_agent_set("1-3,7"), (AgentSet{1, 2, 3, 7}));
  EXPECT_THROW(io::parse_agent_set("3-1"), DomainError);
  EXPECT_THROW(io::parse_agent_set("x"), DomainError);
  EXPECT_EQ(io::format_agent_set({1, 2, 3, 7, 9}), "{1,2,3,7,9}");
}

}  // namespace
}  // namespace rcsim
