#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "adtk/errors.hpp"

namespace adtk {

enum class AttrKind { Numeric, Nominal };
enum class AttrRole { Feature, Target, Ignored };

struct Attribute {
  std::string name;
  AttrKind kind = AttrKind::Numeric;
  AttrRole role = AttrRole::Feature;
  std::vector<std::string> categories;  // nominal only, fixed by schema
};

// Attribute list with exactly one binary nominal target. The positive class
// is the first target category. Names and category labels are identifiers:
// non-empty, no whitespace, ',' or '|' (they appear bare in the sidecar and
// model-document grammars).
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<Attribute> attributes);

  size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }
  const Attribute& operator[](size_t i) const { return attrs_[i]; }
  const std::vector<Attribute>& attributes() const { return attrs_; }

  // -1 when absent
  int index_of(const std::string& name) const;
  // throws UnknownAttribute
  size_t require(const std::string& name) const;

  size_t target_index() const { return target_; }
  const Attribute& target() const { return attrs_[target_]; }
  const std::string& positive_label() const { return target().categories[0]; }
  const std::string& negative_label() const { return target().categories[1]; }

  // FNV-1a over the canonical schema text; recorded in model documents
  uint64_t fingerprint() const;

  auto begin() const { return attrs_.begin(); }
  auto end() const { return attrs_.end(); }

 private:
  std::vector<Attribute> attrs_;
  size_t target_ = 0;
};

// One table cell: a number, a category index, or missing.
class Cell {
 public:
  static Cell missing() { return Cell(); }
  static Cell number(double v) {
    Cell c;
    c.tag_ = Tag::Number;
    c.num_ = v;
    return c;
  }
  static Cell category(int idx) {
    Cell c;
    c.tag_ = Tag::Category;
    c.cat_ = idx;
    return c;
  }

  bool is_missing() const { return tag_ == Tag::Missing; }
  bool is_number() const { return tag_ == Tag::Number; }
  bool is_category() const { return tag_ == Tag::Category; }

  double number() const {
    if (!is_number()) fail(ErrorCode::Internal, "cell is not numeric");
    return num_;
  }
  int category() const {
    if (!is_category()) fail(ErrorCode::Internal, "cell is not nominal");
    return cat_;
  }

  bool operator==(const Cell& o) const {
    if (tag_ != o.tag_) return false;
    if (tag_ == Tag::Number) return num_ == o.num_;
    if (tag_ == Tag::Category) return cat_ == o.cat_;
    return true;
  }

 private:
  enum class Tag : uint8_t { Missing, Number, Category };
  Tag tag_ = Tag::Missing;
  double num_ = 0;
  int cat_ = 0;
};

using Instance = std::vector<Cell>;

// Immutable-by-convention tabular data: every operation returns a new
// Dataset and never mutates its input.
struct Dataset {
  Schema schema;
  std::vector<Instance> instances;

  size_t n() const { return instances.size(); }
  const Cell& cell(size_t row, size_t col) const { return instances[row][col]; }
};

struct ImputationRow {
  std::string attribute;
  size_t imputed_count = 0;
  double mean = 0;
};

struct ImputationReport {
  std::vector<ImputationRow> rows;
};

// --- CSV and schema sidecar -------------------------------------------------

// RFC-4180-style CSV with a header row; header names must be a permutation of
// the schema names. Empty cells and "?" are missing.
Dataset parse_csv(std::istream& in, const Schema& schema);
void serialize_csv(const Dataset& ds, std::ostream& out);
std::string serialize_csv(const Dataset& ds);

// Sidecar grammar, one attribute per line:
//   name,kind,role[,cat1|cat2|...]
Schema parse_schema(std::istream& in);
void write_schema(const Schema& schema, std::ostream& out);
std::string write_schema(const Schema& schema);

// --- Operations -------------------------------------------------------------

// Replaces missing cells of numeric feature columns with the column mean of
// the observed values. Nominal and ignored columns are untouched.
std::pair<Dataset, ImputationReport> impute_means(const Dataset& ds);

// Turns a numeric attribute into a nominal one. Value v gets the label whose
// index is the count of cutpoints c with v >= c, so a value equal to a
// cutpoint takes the upper label.
Dataset discretize(const Dataset& ds, const std::string& attr,
                   const std::vector<double>& cutpoints,
                   const std::vector<std::string>& labels);

// (positives, negatives) by the target column
std::pair<size_t, size_t> class_distribution(const Dataset& ds);

// Shared validation helpers for the learners: feature/target cells only,
// ignored columns may hold anything.
void check_instances_match_schema(const Dataset& ds);
void check_no_missing_features(const Dataset& ds);
void check_no_missing_targets(const Dataset& ds);

}  // namespace adtk
