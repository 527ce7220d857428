#include <gtest/gtest.h>

#include "ncp/json_io.hpp"

using namespace ncp;

namespace {

const BaseField Q = BaseField::rationals();
const BaseField F7 = BaseField::function_field(7);

}  // namespace

TEST(JsonIo, PlaceRoundTrip) {
  for (const Place& P : enumerate_places(Q, 50)) EXPECT_EQ(place_from_json(to_json(P), Q), P);
  for (const Place& P : enumerate_places(F7, 49)) EXPECT_EQ(place_from_json(to_json(P), F7), P);
  EXPECT_EQ(place_from_json(to_json(Place::infinity(7)), F7), Place::infinity(7));
}

TEST(JsonIo, ParsePlace) {
  EXPECT_EQ(parse_place("7", Q), Place::prime(7));
  EXPECT_EQ(parse_place("real", Q), Place::real());
  EXPECT_EQ(parse_place("inf", F7), Place::infinity(7));
  EXPECT_EQ(parse_place("t-3", F7), Place::polynomial(7, {4, 1}));
  EXPECT_EQ(parse_place("(t+3)", F7), Place::polynomial(7, {3, 1}));
  EXPECT_EQ(parse_places("3,7,real", Q), (std::vector<Place>{Place::prime(3), Place::prime(7), Place::real()}));
  EXPECT_THROW(parse_place("8", Q), InvalidArgument);
  EXPECT_THROW(parse_place("7x", Q), InvalidArgument);
  EXPECT_THROW(parse_place("inf", Q), InvalidArgument);
}

TEST(JsonIo, PlaceErrors) {
  EXPECT_THROW(place_from_json(json{{"type", "prime"}}, Q), InvalidArgument);
  EXPECT_THROW(place_from_json(json{{"type", "prime"}, {"p", 9}}, Q), InvalidArgument);
  EXPECT_THROW(place_from_json(json{{"type", "poly"}, {"coeffs", {0, 1}}}, Q), InvalidArgument);
  EXPECT_THROW(place_from_json(json{{"type", "circle"}}, Q), InvalidArgument);
  EXPECT_THROW(place_from_json(json{{"type", "prime"}, {"p", "seven"}}, Q), InvalidArgument);
  EXPECT_THROW(place_from_json(json::array(), Q), InvalidArgument);
}

TEST(JsonIo, ExtensionRoundTrip) {
  const std::vector<json> specs = {
      json::parse(R"({"base":"Q","n":2,"radicands":[3,-7]})"),
      json::parse(R"({"base":"Q","n":2,"radicands":[-1,2,17]})"),
      json::parse(R"({"base":"Fq","q":7,"n":3,"radicands":[[["t",1]],{"const":1,"factors":[["t-1",1],["t-2",1]]}]})"),
      json::parse(R"({"base":"Fq","q":7,"n":6,"radicands":["t","t+3"]})")};
  for (const auto& j : specs) {
    const AbExt M = ext_from_json(j);
    const AbExt again = ext_from_json(ext_spec_json(M));
    EXPECT_EQ(again.degree(), M.degree());
    EXPECT_EQ(again.radicands(), M.radicands());
    EXPECT_EQ(again.str(), M.str());
    const json summary = field_summary_json(M);
    EXPECT_EQ(summary.at("degree").get<std::int64_t>(), M.degree());
    EXPECT_EQ(summary.at("ramified").size(), ramified_places(M).size());
  }
}

TEST(JsonIo, ExtensionErrors) {
  EXPECT_THROW(ext_from_json(json::parse(R"({"base":"R","n":2,"radicands":[3]})")), InvalidArgument);
  EXPECT_THROW(ext_from_json(json::parse(R"({"base":"Q","radicands":[3]})")), InvalidArgument);
  EXPECT_THROW(ext_from_json(json::parse(R"({"base":"Q","n":2,"radicands":[[3]]})")), InvalidArgument);
  EXPECT_THROW(ext_from_json(json::parse(R"({"base":"Fq","q":7,"n":3,"radicands":[[["t",true]]]})")),
               InvalidArgument);
  EXPECT_THROW(ext_from_json(json::parse(R"({"base":"Q","n":2,"radicands":[0]})")), InvalidArgument);
}

TEST(JsonIo, ClassRoundTrip) {
  const BrauerClass a = make_class(Q, {{Place::prime(3), QZ(7, 8)}, {Place::prime(7), QZ(1, 8)}});
  const BrauerClass b = class_from_json(to_json(a), Q);
  EXPECT_EQ(b.invariants(), a.invariants());
  const BrauerClass c = make_class(F7, {{Place::polynomial(7, {0, 1}), QZ(1, 3)}, {Place::infinity(7), QZ(2, 3)}});
  EXPECT_EQ(class_from_json(to_json(c), F7).invariants(), c.invariants());
}

TEST(JsonIo, ClassErrors) {
  EXPECT_THROW(class_from_json(json::parse(R"({"invariants":[{"place":{"type":"prime","p":3},"inv":"1/2"}]})"), Q),
               InvalidArgument);
  EXPECT_THROW(class_from_json(json::parse(R"({"invariants":[{"place":{"type":"prime","p":3},"inv":"x"}]})"), Q),
               InvalidArgument);
  EXPECT_THROW(
      class_from_json(json::parse(R"({"invariants":[{"place":{"type":"prime","p":3},"inv":"1/2"},
                                                    {"place":{"type":"prime","p":3},"inv":"1/2"}]})"),
                      Q),
      InvalidArgument);
  EXPECT_THROW(class_from_json(json::object(), Q), InvalidArgument);
}

TEST(JsonIo, GroupExtRoundTrip) {
  const CentralExt Q8 = CentralExt::build(2, 1, {2, 2}, {1, 1}, {{0, 1}, {0, 0}});
  const CentralExt E = groupext_from_json(to_json(Q8));
  EXPECT_EQ(E.str(), Q8.str());
  EXPECT_EQ(E.order(), 8);
  const CentralExt A = groupext_from_json(json::parse(R"({"p":3,"a":1,"b":[3,3]})"));
  EXPECT_EQ(A.order(), 27);
  EXPECT_THROW(groupext_from_json(json::parse(R"({"p":2,"a":1,"b":[2,2],"t":[1]})")), InvalidArgument);
  EXPECT_THROW(groupext_from_json(json::parse(R"({"p":4,"a":1,"b":[4]})")), InvalidArgument);
}

TEST(JsonIo, ReportsSerialize) {
  const json r = to_json(run_property_suite(3, SuiteSizes::quick()));
  EXPECT_TRUE(r.contains("batteries"));
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), InvalidArgument);
}
