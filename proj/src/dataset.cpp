#include "adtk/dataset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "adtk/text.hpp"

namespace adtk {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || c == '|' || c == '"' || c == ' ' || c == '\t' || c == '\r' || c == '\n')
      return false;
  }
  return true;
}

const char* kind_name(AttrKind k) { return k == AttrKind::Numeric ? "numeric" : "nominal"; }

const char* role_name(AttrRole r) {
  switch (r) {
    case AttrRole::Feature: return "feature";
    case AttrRole::Target: return "target";
    case AttrRole::Ignored: return "ignored";
  }
  return "?";
}

}  // namespace

Schema::Schema(std::vector<Attribute> attributes) : attrs_(std::move(attributes)) {
  std::set<std::string> names;
  int target = -1;
  for (size_t i = 0; i < attrs_.size(); ++i) {
    const Attribute& a = attrs_[i];
    if (!valid_identifier(a.name))
      fail(ErrorCode::SchemaInvalid, "attribute name '" + a.name + "' is not an identifier");
    if (!names.insert(a.name).second)
      fail(ErrorCode::SchemaInvalid, "duplicate attribute name '" + a.name + "'");
    if (a.kind == AttrKind::Nominal) {
      if (a.categories.empty())
        fail(ErrorCode::SchemaInvalid, "nominal attribute '" + a.name + "' has no categories");
      std::set<std::string> cats;
      for (const std::string& c : a.categories) {
        if (!valid_identifier(c))
          fail(ErrorCode::SchemaInvalid, "category '" + c + "' of '" + a.name + "' is not an identifier");
        if (!cats.insert(c).second)
          fail(ErrorCode::SchemaInvalid, "duplicate category '" + c + "' in '" + a.name + "'");
      }
    } else if (!a.categories.empty()) {
      fail(ErrorCode::SchemaInvalid, "numeric attribute '" + a.name + "' lists categories");
    }
    if (a.role == AttrRole::Target) {
      if (target >= 0) fail(ErrorCode::SchemaInvalid, "more than one target attribute");
      if (a.kind != AttrKind::Nominal || a.categories.size() != 2)
        fail(ErrorCode::SchemaInvalid,
             "target '" + a.name + "' must be nominal with exactly 2 categories");
      target = static_cast<int>(i);
    }
  }
  if (target < 0) fail(ErrorCode::SchemaInvalid, "no target attribute");
  target_ = static_cast<size_t>(target);
}

int Schema::index_of(const std::string& name) const {
  for (size_t i = 0; i < attrs_.size(); ++i)
    if (attrs_[i].name == name) return static_cast<int>(i);
  return -1;
}

size_t Schema::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) fail(ErrorCode::UnknownAttribute, "no attribute named '" + name + "'");
  return static_cast<size_t>(i);
}

uint64_t Schema::fingerprint() const {
  uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const Attribute& a : attrs_) {
    feed(a.name);
    feed(kind_name(a.kind));
    feed(role_name(a.role));
    for (const std::string& c : a.categories) feed(c);
    feed("\x1e");
  }
  return h;
}

// --- CSV ---------------------------------------------------------------------

namespace {

// quote-aware record reader; supports embedded commas, quotes and newlines
std::vector<std::vector<std::string>> read_csv_records(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool any_char = false;

  auto end_field = [&]() {
    record.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&]() {
    end_field();
    // skip genuinely blank lines
    if (!(record.size() == 1 && record[0].empty())) records.push_back(record);
    record.clear();
    any_char = false;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_was_quoted) {
          in_quotes = true;
          field_was_quoted = true;
        } else {
          fail(ErrorCode::MalformedRow, "stray quote in unquoted field");
        }
        break;
      case ',':
        end_field();
        any_char = true;
        break;
      case '\r':
        break;
      case '\n':
        if (any_char || !field.empty() || field_was_quoted || !record.empty()) end_record();
        break;
      default:
        field.push_back(c);
        any_char = true;
        break;
    }
  }
  if (in_quotes) fail(ErrorCode::MalformedRow, "unterminated quoted field");
  if (any_char || !field.empty() || field_was_quoted || !record.empty()) end_record();
  return records;
}

bool is_missing_token(const std::string& s) { return s.empty() || s == "?"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Dataset parse_csv(std::istream& in, const Schema& schema) {
  auto records = read_csv_records(in);
  if (records.empty()) fail(ErrorCode::HeaderMismatch, "empty input, no header row");

  const auto& header = records[0];
  if (header.size() != schema.size())
    fail(ErrorCode::HeaderMismatch, "header has " + std::to_string(header.size()) +
                                        " columns, schema has " + std::to_string(schema.size()));
  // column j of the file -> schema index perm[j]
  std::vector<size_t> perm(header.size());
  std::vector<bool> seen(schema.size(), false);
  for (size_t j = 0; j < header.size(); ++j) {
    int idx = schema.index_of(std::string(trim(header[j])));
    if (idx < 0) fail(ErrorCode::HeaderMismatch, "header column '" + header[j] + "' not in schema");
    if (seen[idx]) fail(ErrorCode::HeaderMismatch, "duplicate header column '" + header[j] + "'");
    seen[idx] = true;
    perm[j] = static_cast<size_t>(idx);
  }

  Dataset ds;
  ds.schema = schema;
  ds.instances.reserve(records.size() - 1);
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      fail(ErrorCode::MalformedRow, "row " + std::to_string(r) + " has " +
                                        std::to_string(rec.size()) + " cells, expected " +
                                        std::to_string(header.size()));
    Instance inst(schema.size());
    for (size_t j = 0; j < rec.size(); ++j) {
      const Attribute& attr = schema[perm[j]];
      const std::string& tok = rec[j];
      if (is_missing_token(tok)) {
        inst[perm[j]] = Cell::missing();
        continue;
      }
      if (attr.kind == AttrKind::Numeric) {
        auto v = parse_double(tok);
        if (!v)
          fail(ErrorCode::NonNumericCell,
               "row " + std::to_string(r) + ", attribute '" + attr.name + "': '" + tok + "'");
        inst[perm[j]] = Cell::number(*v);
      } else {
        auto it = std::find(attr.categories.begin(), attr.categories.end(), tok);
        if (it == attr.categories.end())
          fail(ErrorCode::UnknownCategory,
               "row " + std::to_string(r) + ", attribute '" + attr.name + "': '" + tok + "'");
        inst[perm[j]] = Cell::category(static_cast<int>(it - attr.categories.begin()));
      }
    }
    ds.instances.push_back(std::move(inst));
  }
  return ds;
}

void serialize_csv(const Dataset& ds, std::ostream& out) {
  const Schema& s = ds.schema;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(s[i].name);
  }
  out << '\n';
  for (const Instance& inst : ds.instances) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      const Cell& c = inst[i];
      if (c.is_missing()) out << '?';
      else if (c.is_number()) out << format_double(c.number());
      else out << csv_escape(s[i].categories[static_cast<size_t>(c.category())]);
    }
    out << '\n';
  }
}

std::string serialize_csv(const Dataset& ds) {
  std::ostringstream os;
  serialize_csv(ds, os);
  return os.str();
}

// --- schema sidecar ----------------------------------------------------------

Schema parse_schema(std::istream& in) {
  std::vector<Attribute> attrs;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty()) continue;
    auto parts = split(t, ',');
    if (parts.size() != 3 && parts.size() != 4)
      fail(ErrorCode::FormatError, "schema line '" + line + "': expected name,kind,role[,cats]");
    Attribute a;
    a.name = parts[0];
    if (parts[1] == "numeric") a.kind = AttrKind::Numeric;
    else if (parts[1] == "nominal") a.kind = AttrKind::Nominal;
    else fail(ErrorCode::FormatError, "schema line '" + line + "': unknown kind '" + parts[1] + "'");
    if (parts[2] == "feature") a.role = AttrRole::Feature;
    else if (parts[2] == "target") a.role = AttrRole::Target;
    else if (parts[2] == "ignored") a.role = AttrRole::Ignored;
    else fail(ErrorCode::FormatError, "schema line '" + line + "': unknown role '" + parts[2] + "'");
    if (parts.size() == 4) a.categories = split(parts[3], '|');
    attrs.push_back(std::move(a));
  }
  return Schema(std::move(attrs));
}

void write_schema(const Schema& schema, std::ostream& out) {
  for (const Attribute& a : schema) {
    out << a.name << ',' << kind_name(a.kind) << ',' << role_name(a.role);
    if (a.kind == AttrKind::Nominal) out << ',' << join(a.categories, '|');
    out << '\n';
  }
}

std::string write_schema(const Schema& schema) {
  std::ostringstream os;
  write_schema(schema, os);
  return os.str();
}

// --- operations ----------------------------------------------------------------

std::pair<Dataset, ImputationReport> impute_means(const Dataset& ds) {
  Dataset out = ds;
  ImputationReport report;
  const Schema& s = ds.schema;
  for (size_t col = 0; col < s.size(); ++col) {
    const Attribute& a = s[col];
    if (a.kind != AttrKind::Numeric || a.role != AttrRole::Feature) continue;
    double sum = 0;
    size_t observed = 0, missing = 0;
    for (const Instance& inst : ds.instances) {
      const Cell& c = inst[col];
      if (c.is_missing()) {
        ++missing;
      } else {
        sum += c.number();
        ++observed;
      }
    }
    if (missing == 0) continue;
    if (observed == 0)
      fail(ErrorCode::AllMissingColumn, "attribute '" + a.name + "' has no observed value");
    const double mean = sum / static_cast<double>(observed);
    for (Instance& inst : out.instances) {
      if (inst[col].is_missing()) inst[col] = Cell::number(mean);
    }
    report.rows.push_back({a.name, missing, mean});
  }
  return {std::move(out), std::move(report)};
}

Dataset discretize(const Dataset& ds, const std::string& attr,
                   const std::vector<double>& cutpoints,
                   const std::vector<std::string>& labels) {
  const size_t col = ds.schema.require(attr);
  const Attribute& a = ds.schema[col];
  if (a.kind != AttrKind::Numeric)
    fail(ErrorCode::AttrNotNumeric, "attribute '" + attr + "' is not numeric");
  if (labels.size() != cutpoints.size() + 1)
    fail(ErrorCode::LabelArity, std::to_string(cutpoints.size()) + " cutpoints need " +
                                    std::to_string(cutpoints.size() + 1) + " labels, got " +
                                    std::to_string(labels.size()));
  for (size_t i = 1; i < cutpoints.size(); ++i)
    if (!(cutpoints[i - 1] < cutpoints[i]))
      fail(ErrorCode::InvalidArgument, "cutpoints must be strictly ascending");

  std::vector<Attribute> attrs = ds.schema.attributes();
  attrs[col].kind = AttrKind::Nominal;
  attrs[col].categories = labels;

  Dataset out;
  out.schema = Schema(std::move(attrs));
  out.instances = ds.instances;
  for (size_t r = 0; r < out.instances.size(); ++r) {
    const Cell& c = ds.instances[r][col];
    if (c.is_missing())
      fail(ErrorCode::MissingCell, "attribute '" + attr + "' row " + std::to_string(r));
    const double v = c.number();
    // index = count of cutpoints <= v, so v == cutpoint takes the upper label
    const auto it = std::upper_bound(cutpoints.begin(), cutpoints.end(), v);
    const size_t idx = static_cast<size_t>(it - cutpoints.begin());
    out.instances[r][col] = Cell::category(static_cast<int>(idx));
  }
  return out;
}

std::pair<size_t, size_t> class_distribution(const Dataset& ds) {
  const size_t t = ds.schema.target_index();
  size_t pos = 0, neg = 0;
  for (size_t r = 0; r < ds.instances.size(); ++r) {
    const Cell& c = ds.instances[r][t];
    if (c.is_missing()) fail(ErrorCode::MissingCell, "target missing in row " + std::to_string(r));
    if (c.category() == 0) ++pos;
    else ++neg;
  }
  return {pos, neg};
}

// --- validation helpers --------------------------------------------------------

void check_instances_match_schema(const Dataset& ds) {
  const Schema& s = ds.schema;
  for (size_t r = 0; r < ds.instances.size(); ++r) {
    const Instance& inst = ds.instances[r];
    if (inst.size() != s.size())
      fail(ErrorCode::SchemaMismatch, "row " + std::to_string(r) + " has " +
                                          std::to_string(inst.size()) + " cells, schema has " +
                                          std::to_string(s.size()));
    for (size_t col = 0; col < s.size(); ++col) {
      const Cell& c = inst[col];
      if (c.is_missing()) continue;
      if (s[col].kind == AttrKind::Numeric && !c.is_number())
        fail(ErrorCode::SchemaMismatch, "row " + std::to_string(r) + ", '" + s[col].name +
                                            "': expected numeric cell");
      if (s[col].kind == AttrKind::Nominal) {
        if (!c.is_category())
          fail(ErrorCode::SchemaMismatch, "row " + std::to_string(r) + ", '" + s[col].name +
                                              "': expected nominal cell");
        if (c.category() < 0 || static_cast<size_t>(c.category()) >= s[col].categories.size())
          fail(ErrorCode::SchemaMismatch, "row " + std::to_string(r) + ", '" + s[col].name +
                                              "': category index out of range");
      }
    }
  }
}

void check_no_missing_features(const Dataset& ds) {
  const Schema& s = ds.schema;
  for (size_t r = 0; r < ds.instances.size(); ++r) {
    for (size_t col = 0; col < s.size(); ++col) {
      if (s[col].role != AttrRole::Feature) continue;
      if (ds.instances[r][col].is_missing())
        fail(ErrorCode::MissingCell,
             "attribute '" + s[col].name + "' missing in row " + std::to_string(r));
    }
  }
}

void check_no_missing_targets(const Dataset& ds) {
  const size_t t = ds.schema.target_index();
  for (size_t r = 0; r < ds.instances.size(); ++r) {
    if (ds.instances[r][t].is_missing())
      fail(ErrorCode::MissingCell, "target missing in row " + std::to_string(r));
  }
}

}  // namespace adtk
