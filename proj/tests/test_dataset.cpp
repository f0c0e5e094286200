#include "adtk/dataset.hpp"

#include <cmath>
#include <sstream>

#include "adtk/random.hpp"
#include "adtk/text.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace adtk;
using namespace adtk::testing;

namespace {

Dataset parse(const std::string& text, const Schema& schema) {
  std::istringstream in(text);
  return parse_csv(in, schema);
}

}  // namespace

TEST_CASE("parse_csv types cells per schema") {
  Schema schema = make_schema({num_feature("Pulse")});
  Dataset ds = parse("Pulse,Dengue\n89,YES\n", schema);
  REQUIRE(ds.n() == 1);
  CHECK(ds.cell(0, 0).number() == 89.0);
  CHECK(ds.cell(0, 1).category() == 0);
}

TEST_CASE("parse_csv missing tokens") {
  Schema schema = make_schema({num_feature("Pulse")});
  Dataset ds = parse("Pulse,Dengue\n?,YES\n,NO\n", schema);
  CHECK(ds.cell(0, 0).is_missing());
  CHECK(ds.cell(1, 0).is_missing());
  CHECK(ds.cell(1, 1).category() == 1);
}

TEST_CASE("parse_csv error cases") {
  Schema schema = make_schema({num_feature("Pulse")});
  CHECK_THROWS_WITH_AS(parse("Pulse,Dengue\nabc,YES\n", schema), doctest::Contains("abc"), Error);
  try {
    parse("Pulse,Dengue\nabc,YES\n", schema);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonNumericCell);
  }
  CHECK_THROWS_AS(parse("Pulse,Dengue\n89\n", schema), Error);          // MalformedRow
  CHECK_THROWS_AS(parse("Pulse,Dengue\n89,MAYBE\n", schema), Error);    // UnknownCategory
  CHECK_THROWS_AS(parse("Rate,Dengue\n89,YES\n", schema), Error);       // HeaderMismatch
  CHECK_THROWS_AS(parse("Pulse,Pulse\n89,YES\n", schema), Error);       // duplicate header
  CHECK_THROWS_AS(parse("", schema), Error);                            // no header
}

TEST_CASE("parse_csv header is order-insensitive") {
  Schema schema = make_schema({num_feature("Pulse"), num_feature("HB")});
  Dataset ds = parse("Dengue,HB,Pulse\nYES,12.5,89\n", schema);
  CHECK(ds.cell(0, ds.schema.require("Pulse")).number() == 89.0);
  CHECK(ds.cell(0, ds.schema.require("HB")).number() == 12.5);
}

TEST_CASE("parse_csv quoted fields") {
  Schema schema = make_schema({nom_feature("Sym", {"A", "B"})});
  Dataset ds = parse("\"Sym\",\"Dengue\"\n\"A\",\"YES\"\n", schema);
  CHECK(ds.cell(0, 0).category() == 0);
  // embedded separator inside quotes is not a delimiter
  CHECK_THROWS_AS(parse("Sym,Dengue\n\"A,B\",YES\n", schema), Error);  // UnknownCategory "A,B"
}

TEST_CASE("schema invariants are enforced") {
  CHECK_THROWS_AS(Schema({{"x", AttrKind::Numeric, AttrRole::Feature, {}}}), Error);  // no target
  CHECK_THROWS_AS(make_schema({{"T2", AttrKind::Nominal, AttrRole::Target, {"a", "b"}}}), Error);
  CHECK_THROWS_AS(make_schema({nom_feature("s", {"a", "a"})}), Error);  // duplicate category
  CHECK_THROWS_AS(make_schema({nom_feature("s", {""})}), Error);        // empty category
  CHECK_THROWS_AS(make_schema({num_feature("bad name")}), Error);       // space in identifier
  CHECK_THROWS_AS(
      Schema({{"D", AttrKind::Nominal, AttrRole::Target, {"YES", "NO", "DSS"}}}), Error);
}

TEST_CASE("schema sidecar round-trip") {
  Schema schema = make_schema({num_feature("Pulse"), nom_feature("Headache", {"YES", "NO"}),
                               {"IgM", AttrKind::Numeric, AttrRole::Ignored, {}}});
  std::string text = write_schema(schema);
  std::istringstream in(text);
  Schema back = parse_schema(in);
  CHECK(back.fingerprint() == schema.fingerprint());
  CHECK(write_schema(back) == text);

  std::istringstream bad("Pulse,integer,feature\n");
  CHECK_THROWS_AS(parse_schema(bad), Error);
}

TEST_CASE("impute_means hand example") {
  Schema schema = make_schema({num_feature("x")});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::number(1.0), Cell::category(0)},
                  {Cell::missing(), Cell::category(0)},
                  {Cell::number(3.0), Cell::category(1)}};
  auto [imputed, report] = impute_means(ds);
  CHECK(imputed.cell(1, 0).number() == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].attribute == "x");
  CHECK(report.rows[0].imputed_count == 1);
  CHECK(report.rows[0].mean == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("impute_means reproduces a Table-2-shaped report row") {
  // 58 observed values, all 12.0224, plus 7 missing: the imputed value is the
  // column mean and the report row carries (name, count, mean).
  Schema schema = make_schema({num_feature("HB")});
  Dataset ds;
  ds.schema = schema;
  for (int i = 0; i < 58; ++i) ds.instances.push_back({Cell::number(12.0224), Cell::category(0)});
  for (int i = 0; i < 7; ++i) ds.instances.push_back({Cell::missing(), Cell::category(1)});
  auto [imputed, report] = impute_means(ds);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].attribute == "HB");
  CHECK(report.rows[0].imputed_count == 7);
  CHECK(report.rows[0].mean == doctest::Approx(12.0224).epsilon(1e-12));
  for (size_t r = 58; r < 65; ++r)
    CHECK(imputed.cell(r, 0).number() == doctest::Approx(12.0224).epsilon(1e-12));
}

TEST_CASE("impute_means no-op column stays out of the report") {
  Schema schema = make_schema({num_feature("a"), num_feature("b")});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::number(1), Cell::missing(), Cell::category(0)},
                  {Cell::number(2), Cell::number(4), Cell::category(1)}};
  auto [imputed, report] = impute_means(ds);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].attribute == "b");
  CHECK(imputed.cell(0, 0).number() == 1.0);
}

TEST_CASE("impute_means leaves ignored and nominal columns alone") {
  Schema schema = make_schema({{"IgM", AttrKind::Numeric, AttrRole::Ignored, {}},
                               nom_feature("Headache", {"YES", "NO"})});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::missing(), Cell::category(0), Cell::category(0)},
                  {Cell::number(3), Cell::category(1), Cell::category(1)}};
  auto [imputed, report] = impute_means(ds);
  CHECK(report.rows.empty());
  CHECK(imputed.cell(0, 0).is_missing());
}

TEST_CASE("impute_means all-missing column errors") {
  Schema schema = make_schema({num_feature("x")});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::missing(), Cell::category(0)}, {Cell::missing(), Cell::category(1)}};
  CHECK_THROWS_AS(impute_means(ds), Error);
}

TEST_CASE("impute_means is idempotent and preserves column means") {
  Rng rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    Dataset ds = random_dataset(rng, 3 + rng.index(40), 3, 1, 0.3);
    // keep at least one observed value per column
    for (size_t col = 0; col < 3; ++col) {
      bool any = false;
      for (auto& inst : ds.instances) any = any || !inst[col].is_missing();
      if (!any) ds.instances[0][col] = Cell::number(1.0);
    }
    auto [once, report1] = impute_means(ds);
    auto [twice, report2] = impute_means(once);
    CHECK(report2.rows.empty());
    CHECK(twice.instances == once.instances);
    for (size_t col = 0; col < 3; ++col) {
      double sum = 0;
      size_t count = 0;
      for (auto& inst : ds.instances) {
        if (!inst[col].is_missing()) {
          sum += inst[col].number();
          ++count;
        }
      }
      const double before = sum / static_cast<double>(count);
      double after_sum = 0;
      for (auto& inst : once.instances) after_sum += inst[col].number();
      const double after = after_sum / static_cast<double>(once.n());
      CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }
  }
}

TEST_CASE("discretize pulse rule boundaries") {
  Schema schema = make_schema({num_feature("Pulse")});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::number(89.6719), Cell::category(0)},
                  {Cell::number(100.0), Cell::category(0)},
                  {Cell::number(99.999), Cell::category(1)}};
  Dataset out = discretize(ds, "Pulse", {100.0}, {"L", "H"});
  const auto& cats = out.schema[0].categories;
  CHECK(cats[static_cast<size_t>(out.cell(0, 0).category())] == "L");
  CHECK(cats[static_cast<size_t>(out.cell(1, 0).category())] == "H");
  CHECK(cats[static_cast<size_t>(out.cell(2, 0).category())] == "L");
  CHECK(out.schema[0].kind == AttrKind::Nominal);
}

TEST_CASE("discretize multi-cutpoint mapping") {
  Schema schema = make_schema({num_feature("v")});
  Dataset ds;
  ds.schema = schema;
  for (double v : {5.0, 10.0, 15.0, 20.0, 25.0})
    ds.instances.push_back({Cell::number(v), Cell::category(0)});
  Dataset out = discretize(ds, "v", {10.0, 20.0}, {"lo", "mid", "hi"});
  std::vector<int> want = {0, 1, 1, 2, 2};
  for (size_t r = 0; r < want.size(); ++r) CHECK(out.cell(r, 0).category() == want[r]);
}

TEST_CASE("discretize error cases") {
  Schema schema = make_schema({num_feature("v"), nom_feature("s", {"A", "B"})});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::number(1), Cell::category(0), Cell::category(0)},
                  {Cell::missing(), Cell::category(1), Cell::category(1)}};
  CHECK_THROWS_AS(discretize(ds, "v", {1.0}, {"a", "b"}), Error);       // MissingCell
  CHECK_THROWS_AS(discretize(ds, "s", {1.0}, {"a", "b"}), Error);      // AttrNotNumeric
  CHECK_THROWS_AS(discretize(ds, "v", {1.0}, {"a"}), Error);           // LabelArity
  CHECK_THROWS_AS(discretize(ds, "nope", {1.0}, {"a", "b"}), Error);   // UnknownAttribute
  CHECK_THROWS_AS(discretize(ds, "v", {2.0, 1.0}, {"a", "b", "c"}), Error);
}

TEST_CASE("class_distribution") {
  Schema schema = make_schema({});
  Dataset ds;
  ds.schema = schema;
  ds.instances = {{Cell::category(0)}, {Cell::category(0)}, {Cell::category(0)}};
  auto [pos, neg] = class_distribution(ds);
  CHECK(pos == 3);
  CHECK(neg == 0);

  Rng rng(7);
  Dataset rand = random_dataset(rng, 37, 1, 1);
  auto [p, n] = class_distribution(rand);
  CHECK(p + n == rand.n());
}

TEST_CASE("discretize commutes with class_distribution") {
  Rng rng(99);
  Dataset ds = random_dataset(rng, 25, 2, 0);
  auto before = class_distribution(ds);
  Dataset out = discretize(ds, "x0", {0.0}, {"L", "H"});
  CHECK(class_distribution(out) == before);
}

TEST_CASE("csv round-trips cell-for-cell") {
  Rng rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    Dataset ds = random_dataset(rng, 1 + rng.index(30), 2, 2, 0.2);
    // exercise awkward doubles
    ds.instances[0][0] = Cell::number(-1.25e-17);
    ds.instances[0][1] = Cell::number(1e300);
    std::string text = serialize_csv(ds);
    std::istringstream in(text);
    Dataset back = parse_csv(in, ds.schema);
    REQUIRE(back.n() == ds.n());
    for (size_t r = 0; r < ds.n(); ++r) CHECK(back.instances[r] == ds.instances[r]);
    CHECK(serialize_csv(back) == text);
  }
}

TEST_CASE("format_double round-trips exactly") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    double v = rng.normal() * std::pow(10.0, static_cast<double>(rng.index(40)) - 20.0);
    auto parsed = parse_double(format_double(v));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == v);
  }
}
