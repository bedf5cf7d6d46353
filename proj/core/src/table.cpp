#include "reductlab/table.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "parse_util.hpp"
#include "reductlab/rational.hpp"
#include "reductlab/rng.hpp"

namespace reductlab {

namespace {

bool valid_token(std::string_view token) {
  if (token.empty() || token == "->") return false;
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  }
  return true;
}

}  // namespace

// ---- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw Error("alphabet needs at least two symbols (k >= 2)");
  }
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (!valid_token(s)) {
      throw Error("invalid alphabet symbol '" + s + "'");
    }
    if (!seen.insert(s).second) {
      throw Error("duplicate alphabet symbol '" + s + "'");
    }
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::signs() { return Alphabet({"-1", "0", "+1"}); }

Alphabet Alphabet::numeric(int k) {
  std::vector<std::string> symbols;
  symbols.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) symbols.push_back(std::to_string(i));
  return Alphabet(std::move(symbols));
}

std::optional<int> Alphabet::index_of(std::string_view token) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == token) return static_cast<int>(i);
  }
  return std::nullopt;
}

// ---- AttributeSet -----------------------------------------------------------

AttributeSet::AttributeSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) {
      throw Error("negative attribute index");
    }
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      throw Error("duplicate attribute index " + std::to_string(indices_[i]));
    }
  }
}

AttributeSet AttributeSet::full(int dim) {
  std::vector<int> all(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i;
  return AttributeSet(std::move(all));
}

bool AttributeSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void AttributeSet::validate_for_dim(int dim) const {
  if (!indices_.empty() && indices_.back() >= dim) {
    throw Error("attribute index " + std::to_string(indices_.back()) +
                " out of range for dimension " + std::to_string(dim));
  }
}

AttributeSet AttributeSet::without(int index) const {
  std::vector<int> rest;
  rest.reserve(indices_.size());
  for (int i : indices_) {
    if (i != index) rest.push_back(i);
  }
  return AttributeSet(std::move(rest));
}

std::string AttributeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(indices_[i]);
  }
  return out + "}";
}

// ---- DecisionSpec -----------------------------------------------------------

DecisionSpec DecisionSpec::distinct() { return DecisionSpec{}; }

DecisionSpec DecisionSpec::constant(Decision value) {
  DecisionSpec spec;
  spec.kind = Kind::constant;
  spec.constant_value = value;
  return spec;
}

DecisionSpec DecisionSpec::random_classes(std::uint64_t classes) {
  if (classes == 0) throw Error("random decision mode needs at least one class");
  DecisionSpec spec;
  spec.kind = Kind::random_classes;
  spec.num_classes = classes;
  return spec;
}

DecisionSpec DecisionSpec::explicit_list(std::vector<Decision> values) {
  DecisionSpec spec;
  spec.kind = Kind::explicit_list;
  spec.values = std::move(values);
  return spec;
}

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw Error(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

DecisionSpec DecisionSpec::parse(std::string_view token) {
  if (token == "distinct") return distinct();
  if (token.starts_with("constant:")) {
    return constant(parse_u64(token.substr(9), "decision"));
  }
  if (token.starts_with("random:")) {
    return random_classes(parse_u64(token.substr(7), "class count"));
  }
  throw Error("unknown decision mode '" + std::string(token) +
              "' (expected distinct, constant:<d> or random:<c>)");
}

// ---- DecisionTable ----------------------------------------------------------

DecisionTable::DecisionTable(Alphabet alphabet, std::vector<std::string> attributes,
                             std::vector<TableRow> rows)
    : alphabet_(std::move(alphabet)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)) {
  std::set<std::string_view> names;
  for (const auto& name : attributes_) {
    if (!valid_token(name)) {
      throw Error("invalid attribute name '" + name + "'");
    }
    if (!names.insert(name).second) {
      throw Error("duplicate attribute name '" + name + "'");
    }
  }
  const int d = dim();
  const int k = alphabet_.k();
  std::set<const Pattern*, decltype([](const Pattern* a, const Pattern* b) {
             return *a < *b;
           })>
      seen;
  for (const auto& row : rows_) {
    if (static_cast<int>(row.values.size()) != d) {
      throw Error("row width " + std::to_string(row.values.size()) +
                  " does not match dimension " + std::to_string(d));
    }
    for (auto v : row.values) {
      if (v < 0 || v >= k) {
        throw Error("cell value index " + std::to_string(v) + " outside alphabet");
      }
    }
    if (!seen.insert(&row.values).second) {
      throw Error("duplicate rows");
    }
  }
}

int DecisionTable::class_count() const {
  std::set<Decision> decisions;
  for (const auto& row : rows_) decisions.insert(row.decision);
  return static_cast<int>(decisions.size());
}

std::vector<Pattern> DecisionTable::patterns() const {
  std::vector<Pattern> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.values);
  return out;
}

bool DecisionTable::operator==(const DecisionTable& other) const {
  if (!(alphabet_ == other.alphabet_) || attributes_ != other.attributes_ ||
      rows_.size() != other.rows_.size()) {
    return false;
  }
  auto sorted_rows = [](const std::vector<TableRow>& rows) {
    std::vector<std::pair<Pattern, Decision>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(r.values, r.decision);
    std::sort(out.begin(), out.end());
    return out;
  };
  return sorted_rows(rows_) == sorted_rows(other.rows_);
}

TableStats stats(const DecisionTable& table) {
  return TableStats{table.row_count(), table.class_count(), table.dim()};
}

// ---- closure operations -----------------------------------------------------

DecisionTable project(const DecisionTable& table, const AttributeSet& selection,
                      MergePolicy policy) {
  selection.validate_for_dim(table.dim());
  std::vector<std::string> names;
  for (int i : selection) names.push_back(table.attributes()[static_cast<std::size_t>(i)]);

  std::vector<TableRow> merged;
  std::map<Pattern, std::size_t> group_of;
  for (const auto& row : table.rows()) {
    Pattern projected;
    projected.reserve(selection.indices().size());
    for (int i : selection) projected.push_back(row.values[static_cast<std::size_t>(i)]);
    auto [it, inserted] = group_of.try_emplace(std::move(projected), merged.size());
    if (inserted) {
      merged.push_back(TableRow{it->first, row.decision});
    } else if (policy == MergePolicy::min_decision) {
      auto& kept = merged[it->second].decision;
      kept = std::min(kept, row.decision);
    }
    // keep_first: the first row of the group already holds the decision.
  }
  return DecisionTable(table.alphabet(), std::move(names), std::move(merged));
}

DecisionTable relabel_decisions(const DecisionTable& table,
                                std::span<const Decision> decisions) {
  if (decisions.size() != static_cast<std::size_t>(table.row_count())) {
    throw Error("decision map must cover every row");
  }
  std::vector<TableRow> rows = table.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].decision = decisions[i];
  return DecisionTable(table.alphabet(), table.attributes(), std::move(rows));
}

bool closure_contains(const DecisionTable& outer, const DecisionTable& candidate) {
  if (!(outer.alphabet() == candidate.alphabet())) {
    throw Error("alphabet mismatch between tables");
  }
  // Candidate attributes must appear in outer in the same relative order.
  std::vector<int> indices;
  std::size_t pos = 0;
  for (const auto& name : candidate.attributes()) {
    while (pos < outer.attributes().size() && outer.attributes()[pos] != name) ++pos;
    if (pos == outer.attributes().size()) return false;
    indices.push_back(static_cast<int>(pos));
    ++pos;
  }
  std::set<Pattern> projected;
  for (const auto& row : outer.rows()) {
    Pattern p;
    p.reserve(indices.size());
    for (int i : indices) p.push_back(row.values[static_cast<std::size_t>(i)]);
    projected.insert(std::move(p));
  }
  std::set<Pattern> candidate_rows;
  for (const auto& row : candidate.rows()) candidate_rows.insert(row.values);
  return projected == candidate_rows;
}

// ---- generators -------------------------------------------------------------

namespace {

std::vector<Decision> assign_decisions(std::size_t rows, const DecisionSpec& spec,
                                       SeededRng& rng) {
  std::vector<Decision> out(rows, 0);
  switch (spec.kind) {
    case DecisionSpec::Kind::distinct:
      for (std::size_t i = 0; i < rows; ++i) out[i] = i;
      break;
    case DecisionSpec::Kind::constant:
      for (auto& d : out) d = spec.constant_value;
      break;
    case DecisionSpec::Kind::random_classes:
      for (auto& d : out) d = rng.below(spec.num_classes);
      break;
    case DecisionSpec::Kind::explicit_list:
      if (spec.values.size() != rows) {
        throw Error("decision list must cover every row");
      }
      out = spec.values;
      break;
  }
  return out;
}

std::vector<Pattern> enumerate_tuples(int k, int dim, std::uint64_t count) {
  std::vector<Pattern> out;
  out.reserve(count);
  Pattern current(static_cast<std::size_t>(dim), 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    out.push_back(current);
    for (int i = dim - 1; i >= 0; --i) {
      auto& cell = current[static_cast<std::size_t>(i)];
      if (++cell < k) break;
      cell = 0;
    }
  }
  return out;
}

}  // namespace

DecisionTable random_table(const Alphabet& alphabet, int dim,
                           std::uint64_t target_rows, const DecisionSpec& decisions,
                           std::uint64_t seed) {
  if (dim < 0) throw Error("negative dimension");
  const BigInt total = alphabet_power(alphabet.k(), dim);
  if (BigInt(static_cast<unsigned long>(target_rows)) > total) {
    throw Error("target rows exceeds k^dim");
  }
  SeededRng rng(seed);
  std::vector<Pattern> tuples;
  const BigInt small_cap = std::max<BigInt>(BigInt(4) * static_cast<unsigned long>(target_rows),
                                            BigInt(4096));
  if (total <= small_cap) {
    tuples = enumerate_tuples(alphabet.k(), dim, total.get_ui());
    rng.shuffle(tuples);
    tuples.resize(target_rows);
  } else {
    std::set<Pattern> seen;
    while (seen.size() < target_rows) {
      Pattern p(static_cast<std::size_t>(dim));
      for (auto& cell : p) {
        cell = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(alphabet.k())));
      }
      if (seen.insert(p).second) tuples.push_back(std::move(p));
    }
  }
  auto labels = assign_decisions(tuples.size(), decisions, rng);
  std::vector<TableRow> rows;
  rows.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    rows.push_back(TableRow{std::move(tuples[i]), labels[i]});
  }
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("f" + std::to_string(i));
  return DecisionTable(alphabet, std::move(names), std::move(rows));
}

DecisionTable complete_table(const Alphabet& alphabet, int dim,
                             const DecisionSpec& decisions, std::uint64_t seed,
                             std::uint64_t max_cells) {
  if (dim < 0) throw Error("negative dimension");
  const BigInt total = alphabet_power(alphabet.k(), dim);
  if (total > BigInt(static_cast<unsigned long>(max_cells))) {
    throw Error("k^dim exceeds the complete-table cap");
  }
  SeededRng rng(seed);
  auto tuples = enumerate_tuples(alphabet.k(), dim, total.get_ui());
  auto labels = assign_decisions(tuples.size(), decisions, rng);
  std::vector<TableRow> rows;
  rows.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    rows.push_back(TableRow{std::move(tuples[i]), labels[i]});
  }
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("f" + std::to_string(i));
  return DecisionTable(alphabet, std::move(names), std::move(rows));
}

// ---- .dtab text format ------------------------------------------------------

std::string serialize_table(const DecisionTable& table) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& s : table.alphabet().symbols()) out << ' ' << s;
  out << "\nattributes:";
  for (const auto& a : table.attributes()) out << ' ' << a;
  out << '\n';
  std::vector<TableRow> rows = table.rows();
  std::sort(rows.begin(), rows.end(),
            [](const TableRow& a, const TableRow& b) { return a.values < b.values; });
  for (const auto& row : rows) {
    for (auto v : row.values) out << table.alphabet().symbol(v) << ' ';
    out << "-> " << row.decision << '\n';
  }
  return std::move(out).str();
}

DecisionTable parse_table(std::string_view text) {
  const auto lines = detail::split_lines(text);

  std::optional<Alphabet> alphabet;
  std::vector<std::string> attributes;
  bool have_attributes = false;
  std::vector<TableRow> rows;
  std::set<Pattern> seen_rows;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    auto tokens = detail::tokenize_line(lines[li]);
    if (tokens.empty()) continue;

    if (!alphabet) {
      if (tokens[0].text != "alphabet:") {
        throw ParseError("expected 'alphabet:' header", line_no, tokens[0].column);
      }
      std::vector<std::string> symbols;
      for (std::size_t t = 1; t < tokens.size(); ++t) symbols.push_back(tokens[t].text);
      if (symbols.size() < 2) {
        throw ParseError("alphabet needs at least two symbols (k >= 2)", line_no);
      }
      try {
        alphabet.emplace(std::move(symbols));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }

    if (!have_attributes) {
      if (tokens[0].text != "attributes:") {
        throw ParseError("expected 'attributes:' header", line_no, tokens[0].column);
      }
      std::set<std::string> names;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!names.insert(tokens[t].text).second) {
          throw ParseError("duplicate attribute name '" + tokens[t].text + "'", line_no,
                           tokens[t].column);
        }
        attributes.push_back(tokens[t].text);
      }
      have_attributes = true;
      continue;
    }

    // Row line: dim symbols, "->", decision.
    const std::size_t dim = attributes.size();
    if (tokens.size() != dim + 2) {
      throw ParseError("expected " + std::to_string(dim) + " values, '->' and a decision",
                       line_no, tokens[0].column);
    }
    Pattern values;
    values.reserve(dim);
    for (std::size_t t = 0; t < dim; ++t) {
      auto idx = alphabet->index_of(tokens[t].text);
      if (!idx) {
        throw ParseError("value '" + tokens[t].text + "' outside declared alphabet",
                         line_no, tokens[t].column);
      }
      values.push_back(*idx);
    }
    if (tokens[dim].text != "->") {
      throw ParseError("expected '->'", line_no, tokens[dim].column);
    }
    const auto& dec_tok = tokens[dim + 1];
    Decision decision = 0;
    {
      const char* first = dec_tok.text.data();
      const char* last = first + dec_tok.text.size();
      auto [ptr, ec] = std::from_chars(first, last, decision);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError("malformed decision '" + dec_tok.text + "'", line_no,
                         dec_tok.column);
      }
    }
    if (!seen_rows.insert(values).second) {
      throw ParseError("duplicate rows", line_no, tokens[0].column);
    }
    rows.push_back(TableRow{std::move(values), decision});
  }

  if (!alphabet) throw ParseError("missing 'alphabet:' header", 1);
  if (!have_attributes) {
    throw ParseError("missing 'attributes:' header", static_cast<int>(lines.size()));
  }
  try {
    return DecisionTable(std::move(*alphabet), std::move(attributes), std::move(rows));
  } catch (const Error& e) {
    throw ParseError(e.what(), static_cast<int>(lines.size()));
  }
}

// ---- JSON -------------------------------------------------------------------

std::string table_to_json(const DecisionTable& table) {
  nlohmann::json j;
  j["alphabet"] = table.alphabet().symbols();
  j["attributes"] = table.attributes();
  auto rows = nlohmann::json::array();
  std::vector<TableRow> sorted = table.rows();
  std::sort(sorted.begin(), sorted.end(),
            [](const TableRow& a, const TableRow& b) { return a.values < b.values; });
  for (const auto& row : sorted) {
    nlohmann::json r;
    auto values = nlohmann::json::array();
    for (auto v : row.values) values.push_back(table.alphabet().symbol(v));
    r["values"] = std::move(values);
    r["decision"] = row.decision;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

DecisionTable table_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid table JSON: ") + e.what());
  }
  try {
    Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
    auto attributes = j.at("attributes").get<std::vector<std::string>>();
    std::vector<TableRow> rows;
    for (const auto& r : j.at("rows")) {
      TableRow row;
      for (const auto& token : r.at("values")) {
        auto idx = alphabet.index_of(token.get<std::string>());
        if (!idx) {
          throw Error("value '" + token.get<std::string>() + "' outside declared alphabet");
        }
        row.values.push_back(*idx);
      }
      const auto& d = r.at("decision");
      if (d.is_number_unsigned()) {
        row.decision = d.get<Decision>();
      } else if (d.is_number_integer()) {
        const auto v = d.get<std::int64_t>();
        if (v < 0) throw Error("negative decision");
        row.decision = static_cast<Decision>(v);
      } else {
        throw Error("malformed decision in table JSON");
      }
      rows.push_back(std::move(row));
    }
    return DecisionTable(std::move(alphabet), std::move(attributes), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid table JSON: ") + e.what());
  }
}

}  // namespace reductlab
