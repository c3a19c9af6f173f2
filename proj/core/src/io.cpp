#include "vstab/io.hpp"

#include <charconv>
#include <limits>
#include "json.hpp"

#include "vstab/error.hpp"

namespace vstab {

using json = nlohmann::json;

namespace {

void append_word(std::string& out, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(w[i]);
  }
}

std::string format_pairs(std::span<const Pair> table) {
  std::string out;
  for (const Pair& p : table) {
    out += '\n';
    out += format_address(p.dom);
    out += " -> ";
    out += format_address(p.ran);
  }
  return out;
}

// Line/column-tracking reader over the full input text.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  void advance() {
    if (eof()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, line_, column_); }
  [[noreturn]] void invalid(std::size_t line, std::size_t column, const std::string& what) const {
    fail(ErrorCode::validation,
         "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }

  void skip_blanks() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r') advance();
  }
  void skip_whitespace() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n') advance();
  }

  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'" + found());
    advance();
  }
  void expect(std::string_view token) {
    for (char c : token) expect(c);
  }

  int integer() {
    if (peek() < '0' || peek() > '9') error("expected a number" + found());
    const std::size_t start = pos_;
    while (!eof() && peek() >= '0' && peek() <= '9') advance();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) error("number out of range");
    return value;
  }

  Word word() {
    Word w;
    if (peek() < '0' || peek() > '9') return w;
    w.push_back(integer());
    while (peek() == '.') {
      advance();
      w.push_back(integer());
    }
    return w;
  }

  std::string found() const {
    if (eof()) return ", found end of input";
    if (peek() == '\n') return ", found end of line";
    return std::string(", found '") + peek() + "'";
  }

  void finish() {
    skip_whitespace();
    if (!eof()) error("unexpected trailing input" + found());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

Address read_address(Cursor& in, const Space& space) {
  const std::size_t line = in.line();
  const std::size_t column = in.column();
  const int root = in.integer();
  in.expect(':');
  Word w = in.word();
  try {
    return make_address(space, root, std::move(w));
  } catch (const Error& e) {
    in.invalid(line, column, e.what());
  }
}

RationalPoint read_point(Cursor& in, const Space& space) {
  const std::size_t line = in.line();
  const std::size_t column = in.column();
  const int root = in.integer();
  in.expect(':');
  Word pre = in.word();
  in.expect('(');
  if (in.peek() < '0' || in.peek() > '9') in.error("expected a nonempty period" + in.found());
  Word per = in.word();
  in.expect(')');
  try {
    Word all = pre;
    all.insert(all.end(), per.begin(), per.end());
    make_address(space, root, std::move(all));
    return canonical_point(space, root, std::move(pre), std::move(per));
  } catch (const Error& e) {
    in.invalid(line, column, e.what());
  }
}

template <class Item, class Read>
std::vector<Item> read_braced(Cursor& in, Read&& read) {
  std::vector<Item> items;
  in.skip_whitespace();
  in.expect('{');
  in.skip_whitespace();
  if (in.peek() == '}') {
    in.advance();
    return items;
  }
  for (;;) {
    items.push_back(read(in));
    in.skip_whitespace();
    if (in.peek() == '}') {
      in.advance();
      return items;
    }
    in.expect(',');
    in.skip_whitespace();
  }
}

struct TableText {
  Space dom_space;
  Space ran_space;
  std::vector<Pair> pairs;
};

Space read_space_numbers(Cursor& in, int& n) {
  in.skip_blanks();
  n = in.integer();
  in.skip_blanks();
  return Space{n, in.integer()};
}

TableText read_table(std::string_view text, char tag) {
  Cursor in(text);
  in.skip_whitespace();
  in.expect(tag);
  TableText out;
  int n = 0;
  const std::size_t line = in.line();
  const std::size_t column = in.column();
  out.dom_space = read_space_numbers(in, n);
  out.ran_space = out.dom_space;
  if (tag == 'M') {
    in.skip_blanks();
    out.ran_space = Space{n, in.integer()};
  }
  try {
    check_space(out.dom_space);
    check_space(out.ran_space);
  } catch (const Error& e) {
    in.invalid(line, column, e.what());
  }
  in.skip_blanks();
  while (!in.eof()) {
    in.expect('\n');
    in.skip_blanks();
    if (in.eof()) break;
    if (in.peek() == '\n') continue;
    Address dom = read_address(in, out.dom_space);
    in.skip_blanks();
    in.expect("->");
    in.skip_blanks();
    Address ran = read_address(in, out.ran_space);
    out.pairs.push_back({std::move(dom), std::move(ran)});
    in.skip_blanks();
  }
  return out;
}

// nlohmann byte offsets to line/column.
[[noreturn]] void rethrow_json(std::string_view text, const json::parse_error& e) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError("malformed JSON", line, column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    rethrow_json(text, e);
  }
}

// Field access with parse errors naming the missing or mistyped field.
template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(ErrorCode::parse, std::string("missing JSON field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::parse, std::string("JSON field \"") + name + "\" has the wrong type");
  }
}

json pairs_json(std::span<const Pair> table) {
  json pairs = json::array();
  for (const Pair& p : table) pairs.push_back({format_address(p.dom), format_address(p.ran)});
  return pairs;
}

std::vector<Pair> pairs_from(const json& j, const Space& dom_space, const Space& ran_space) {
  std::vector<Pair> out;
  for (const auto& entry : field<std::vector<std::vector<std::string>>>(j, "pairs")) {
    if (entry.size() != 2) fail(ErrorCode::parse, "JSON pair must have two entries");
    out.push_back({parse_address(dom_space, entry[0]), parse_address(ran_space, entry[1])});
  }
  return out;
}

json element_json(const Element& g) {
  return json{{"n", g.space().n}, {"r", g.space().r}, {"pairs", pairs_json(g.table())}};
}

Element element_from(const json& j) {
  const Space space{field<int>(j, "n"), field<int>(j, "r")};
  check_space(space);
  return make_element(space, pairs_from(j, space, space));
}

json partial_map_json(const PartialMap& g) {
  return json{{"n", g.dom_space().n},
              {"q", g.dom_space().r},
              {"r", g.ran_space().r},
              {"pairs", pairs_json(g.table())}};
}

PartialMap partial_map_from(const json& j) {
  const int n = field<int>(j, "n");
  const Space dom_space{n, field<int>(j, "q")};
  const Space ran_space{n, field<int>(j, "r")};
  check_space(dom_space);
  check_space(ran_space);
  return PartialMap::make(dom_space, ran_space, pairs_from(j, dom_space, ran_space));
}

json set_json(const RationalSet& set) {
  return json{{"n", set.space().n}, {"r", set.space().r}, {"points", format_set(set)}};
}

RationalSet set_from(const json& j) {
  const Space space{field<int>(j, "n"), field<int>(j, "r")};
  check_space(space);
  return parse_set(space, field<std::string>(j, "points"));
}

void check_schema(const json& j, std::string_view kind) {
  if (field<int>(j, "schema_version") != kSchemaVersion) {
    fail(ErrorCode::validation, "unsupported schema_version");
  }
  if (field<std::string>(j, "kind") != kind) {
    fail(ErrorCode::validation, "expected a bundle of kind \"" + std::string(kind) + "\"");
  }
}

std::vector<std::string> address_strings(const std::vector<Address>& cones) {
  std::vector<std::string> out;
  for (const Address& a : cones) out.push_back(format_address(a));
  return out;
}

}  // namespace

std::string format_word(const Word& w) {
  std::string out;
  append_word(out, w);
  return out;
}

std::string format_address(const Address& a) {
  std::string out = std::to_string(a.root) + ':';
  append_word(out, a.word);
  return out;
}

std::string format_point(const RationalPoint& p) {
  std::string out = std::to_string(p.root) + ':';
  append_word(out, p.pre);
  out += '(';
  append_word(out, p.per);
  out += ')';
  return out;
}

std::string format_clopen(const ClopenSet& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_address(e.cones()[i]);
  }
  return out + "}";
}

std::string format_set(const RationalSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_point(set.points()[i]);
  }
  return out + "}";
}

std::string format_element(const Element& g) {
  return "V " + std::to_string(g.space().n) + ' ' + std::to_string(g.space().r) +
         format_pairs(g.table());
}

std::string format_partial_map(const PartialMap& g) {
  return "M " + std::to_string(g.dom_space().n) + ' ' + std::to_string(g.dom_space().r) + ' ' +
         std::to_string(g.ran_space().r) + format_pairs(g.table());
}

Address parse_address(const Space& space, std::string_view text) {
  Cursor in(text);
  in.skip_whitespace();
  Address a = read_address(in, space);
  in.finish();
  return a;
}

RationalPoint parse_point(const Space& space, std::string_view text) {
  Cursor in(text);
  in.skip_whitespace();
  RationalPoint p = read_point(in, space);
  in.finish();
  return p;
}

Word parse_word(std::string_view text) {
  Cursor in(text);
  in.skip_whitespace();
  Word w = in.word();
  in.finish();
  for (Letter c : w) {
    if (c < 1) fail(ErrorCode::validation, "letters are 1-based");
  }
  return w;
}

ClopenSet parse_clopen(const Space& space, std::string_view text) {
  Cursor in(text);
  std::vector<Address> cones =
      read_braced<Address>(in, [&](Cursor& c) { return read_address(c, space); });
  in.finish();
  return normalize(space, std::move(cones));
}

RationalSet parse_set(const Space& space, std::string_view text) {
  Cursor in(text);
  std::vector<RationalPoint> points =
      read_braced<RationalPoint>(in, [&](Cursor& c) { return read_point(c, space); });
  in.finish();
  return RationalSet(space, std::move(points));
}

Element parse_element(std::string_view text) {
  TableText t = read_table(text, 'V');
  return make_element(t.dom_space, std::move(t.pairs));
}

PartialMap parse_partial_map(std::string_view text) {
  TableText t = read_table(text, 'M');
  return PartialMap::make(t.dom_space, t.ran_space, std::move(t.pairs));
}

Space parse_space(std::string_view text) {
  Cursor in(text);
  in.skip_whitespace();
  const std::size_t line = in.line();
  const std::size_t column = in.column();
  const int n = in.integer();
  in.expect(',');
  const int r = in.integer();
  in.finish();
  try {
    check_space(Space{n, r});
  } catch (const Error& e) {
    in.invalid(line, column, e.what());
  }
  return Space{n, r};
}

std::string element_to_json(const Element& g) { return element_json(g).dump(); }

Element element_from_json(std::string_view text) { return element_from(parse_json(text)); }

std::string partial_map_to_json(const PartialMap& g) { return partial_map_json(g).dump(); }

PartialMap partial_map_from_json(std::string_view text) {
  return partial_map_from(parse_json(text));
}

std::string hnn_to_json(const HnnData& data) {
  const json j{{"schema_version", kSchemaVersion},
               {"kind", "hnn"},
               {"set", set_json(data.set)},
               {"s", format_point(data.s)},
               {"q", data.q},
               {"f", element_json(data.f)},
               {"alpha", format_address(data.alpha)},
               {"beta", format_word(data.beta)},
               {"trap", format_clopen(data.trap)}};
  return j.dump();
}

HnnData hnn_from_json(std::string_view text) {
  const json j = parse_json(text);
  check_schema(j, "hnn");
  RationalSet set = set_from(field<json>(j, "set"));
  const Space space = set.space();
  HnnData data{set,
               parse_point(space, field<std::string>(j, "s")),
               field<int>(j, "q"),
               element_from(field<json>(j, "f")),
               parse_address(space, field<std::string>(j, "alpha")),
               parse_word(field<std::string>(j, "beta")),
               parse_clopen(space, field<std::string>(j, "trap"))};
  if (data.f.space() != space) fail(ErrorCode::validation, "stable letter in the wrong space");
  try {
    check_hnn_data(data);
  } catch (const Error& e) {
    fail(ErrorCode::validation, std::string("invalid HNN bundle: ") + e.what());
  }
  return data;
}

std::string conjugator_to_json(const ConjugatorData& data) {
  const json j{{"schema_version", kSchemaVersion},
               {"kind", "conjugator"},
               {"set", set_json(data.set)},
               {"set_prime", set_json(data.set_prime)},
               {"phi", data.phi},
               {"f", element_json(data.f)},
               {"cones", address_strings(data.cones)},
               {"e", format_clopen(data.e)},
               {"f_prime", element_json(data.f_prime)},
               {"cones_prime", address_strings(data.cones_prime)},
               {"e_prime", format_clopen(data.e_prime)},
               {"h0", partial_map_json(data.h0)},
               {"h1", partial_map_json(data.h1)},
               {"options",
                {{"layer_cap", data.options.layer_cap},
                 {"exhaust_depth", data.options.exhaust_depth}}}};
  return j.dump();
}

ConjugatorData conjugator_from_json(std::string_view text) {
  const json j = parse_json(text);
  check_schema(j, "conjugator");
  const json options = field<json>(j, "options");
  const RationalSet set = set_from(field<json>(j, "set"));
  const RationalSet set_prime = set_from(field<json>(j, "set_prime"));
  const auto read_cones = [&](const char* name, const Space& space) {
    std::vector<Address> out;
    for (const std::string& a : field<std::vector<std::string>>(j, name)) {
      out.push_back(parse_address(space, a));
    }
    return out;
  };
  ConjugatorData data{set,
                      set_prime,
                      field<std::vector<std::size_t>>(j, "phi"),
                      element_from(field<json>(j, "f")),
                      read_cones("cones", set.space()),
                      parse_clopen(set.space(), field<std::string>(j, "e")),
                      element_from(field<json>(j, "f_prime")),
                      read_cones("cones_prime", set_prime.space()),
                      parse_clopen(set_prime.space(), field<std::string>(j, "e_prime")),
                      partial_map_from(field<json>(j, "h0")),
                      partial_map_from(field<json>(j, "h1")),
                      ConjugatorOptions{field<int>(options, "layer_cap"),
                                        field<int>(options, "exhaust_depth")}};
  // The construction is deterministic, so a valid bundle is exactly its rebuild.
  const ConjugatorData rebuilt = conjugator(set, set_prime, data.phi, data.options);
  const bool same = rebuilt.f == data.f && rebuilt.cones == data.cones && rebuilt.e == data.e &&
                    rebuilt.f_prime == data.f_prime && rebuilt.cones_prime == data.cones_prime &&
                    rebuilt.e_prime == data.e_prime && rebuilt.h0 == data.h0 &&
                    rebuilt.h1 == data.h1;
  if (!same) fail(ErrorCode::validation, "conjugator bundle does not match its construction");
  return data;
}

}  // namespace vstab
