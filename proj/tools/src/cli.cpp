#include "vstab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vstab/vstab.hpp"

namespace vstab::cli {

namespace {

using json = nlohmann::json;

// Every verb fills both renderings so text and JSON modes stay in step.
struct Output {
  std::string text;
  json data;
};

struct Context {
  std::istream& in;
  bool stdin_used = false;
};

std::string read_source(Context& ctx, const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    if (ctx.stdin_used) fail(ErrorCode::domain, "standard input can be read only once");
    ctx.stdin_used = true;
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::domain, "cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::domain, "cannot write " + path);
  file << content << '\n';
}

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

Element element_text(std::string_view text) {
  return looks_like_json(text) ? element_from_json(text) : parse_element(text);
}

// "path" or "path^k"
Element load_element(Context& ctx, const std::string& arg) {
  const auto caret = arg.rfind('^');
  if (caret != std::string::npos && caret > 0) {
    const std::string_view exponent(arg.data() + caret + 1, arg.size() - caret - 1);
    long long k = 0;
    const auto [ptr, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), k);
    if (ec == std::errc() && ptr == exponent.data() + exponent.size() && !exponent.empty()) {
      return power(element_text(read_source(ctx, arg.substr(0, caret))), k);
    }
  }
  return element_text(read_source(ctx, arg));
}

std::vector<std::size_t> parse_phi(const std::string& text, std::size_t size) {
  std::vector<std::size_t> phi;
  if (text.empty()) {
    for (std::size_t i = 0; i < size; ++i) phi.push_back(i);
    return phi;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw ParseError("phi must be comma-separated indices", 1, start + 1);
    }
    phi.push_back(value);
    start = end + 1;
  }
  return phi;
}

Output element_output(const Element& g) {
  return {format_element(g), json::parse(element_to_json(g))};
}

std::string signed_text(long long k) { return (k > 0 ? "+" : "") + std::to_string(k); }

json checks_json(const HnnReport& report) {
  json checks = json::array();
  for (const CriterionCheck& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"universal", c.universal}, {"detail", c.detail}});
  }
  return checks;
}

std::string tuple_text(const std::vector<GermExponent>& germs) {
  std::string out = "(";
  for (std::size_t i = 0; i < germs.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(germs[i]);
  }
  return out + ")";
}

struct Options {
  bool json_mode = false;
  std::optional<std::uint64_t> seed;
  std::string space_text = "2,1";
  std::optional<int> depth;
  std::string target_space_text;
  std::string phi_text;
  std::string h_out;
  std::string f_out;
  int q = 1;
  int samples = 20;
  std::vector<std::string> operands;
};

void require_operands(const Options& opt, std::size_t count, const char* usage) {
  if (opt.operands.size() != count) {
    throw ParseError(std::string("expected arguments: ") + usage, 1, 1);
  }
}

Space target_space(const Options& opt) {
  if (opt.target_space_text.empty()) throw ParseError("--target-space n,r is required", 1, 1);
  return parse_space(opt.target_space_text);
}

using Verb = std::function<Output(Context&, const Options&)>;

std::vector<std::pair<std::string, Verb>> verbs() {
  std::vector<std::pair<std::string, Verb>> table;

  table.emplace_back("canon", [](Context& ctx, const Options& opt) -> Output {
    if (opt.operands.size() == 2) {
      const Space space = parse_space(opt.space_text);
      const std::string& kind = opt.operands[0];
      const std::string& value = opt.operands[1];
      if (kind == "point") {
        const std::string t = format_point(parse_point(space, value));
        return {t, {{"point", t}}};
      }
      if (kind == "address") {
        const std::string t = format_address(parse_address(space, value));
        return {t, {{"address", t}}};
      }
      if (kind == "clopen") {
        const std::string t = format_clopen(parse_clopen(space, value));
        return {t, {{"clopen", t}}};
      }
      if (kind == "set") {
        const std::string t = format_set(parse_set(space, value));
        return {t, {{"set", t}}};
      }
      throw ParseError("unknown value kind " + kind, 1, 1);
    }
    require_operands(opt, 1, "FILE | (point|address|clopen|set) VALUE");
    const std::string text = read_source(ctx, opt.operands[0]);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == 'M') {
      const PartialMap m = parse_partial_map(text);
      return {format_partial_map(m), json::parse(partial_map_to_json(m))};
    }
    return element_output(element_text(text));
  });

  table.emplace_back("mul", [](Context& ctx, const Options& opt) -> Output {
    if (opt.operands.empty()) throw ParseError("mul needs at least one element", 1, 1);
    Element product = load_element(ctx, opt.operands.back());
    for (auto it = opt.operands.rbegin() + 1; it != opt.operands.rend(); ++it) {
      product = compose(load_element(ctx, *it), product);
    }
    return element_output(product);
  });

  table.emplace_back("inv", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 1, "FILE");
    return element_output(invert(load_element(ctx, opt.operands[0])));
  });

  table.emplace_back("eval", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 2, "FILE POINT");
    const Element g = load_element(ctx, opt.operands[0]);
    const std::string t = format_point(evaluate(g, parse_point(g.space(), opt.operands[1])));
    return {t, {{"point", t}}};
  });

  table.emplace_back("germ", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 2, "FILE POINT");
    const Element g = load_element(ctx, opt.operands[0]);
    const GermExponent k = germ_exponent(g, parse_point(g.space(), opt.operands[1]));
    return {signed_text(k), {{"germ", k}}};
  });

  table.emplace_back("abel", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 2, "FILE SET");
    const Element g = load_element(ctx, opt.operands[0]);
    const AbelImage image = abelianize(parse_set(g.space(), opt.operands[1]), g);
    return {"germs " + tuple_text(image.germ_part) + "\nparity " +
                std::to_string(image.parity_part.value),
            {{"germs", image.germ_part}, {"parity", image.parity_part.value}}};
  });

  table.emplace_back("commutator-test", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 2, "FILE SET");
    const Element g = load_element(ctx, opt.operands[0]);
    const bool member = in_commutator(parse_set(g.space(), opt.operands[1]), g);
    return {member ? "true" : "false", {{"in_commutator", member}}};
  });

  table.emplace_back("attract", [](Context&, const Options& opt) -> Output {
    if (opt.operands.empty() || opt.operands.size() > 2) {
      throw ParseError("expected arguments: SET [POINT]", 1, 1);
    }
    const RationalSet set = parse_set(parse_space(opt.space_text), opt.operands[0]);
    if (opt.operands.size() == 2) {
      return element_output(attracting_element(set, parse_point(set.space(), opt.operands[1])));
    }
    return element_output(attracting_all(set));
  });

  table.emplace_back("order-two", [](Context&, const Options& opt) -> Output {
    require_operands(opt, 1, "SET");
    return element_output(order_two_element(parse_set(parse_space(opt.space_text), opt.operands[0])));
  });

  table.emplace_back("same-type", [](Context&, const Options& opt) -> Output {
    require_operands(opt, 2, "CLOPEN CLOPEN_PRIME");
    const ClopenSet e = parse_clopen(parse_space(opt.space_text), opt.operands[0]);
    const ClopenSet e_prime = parse_clopen(target_space(opt), opt.operands[1]);
    const PartialMap m = same_type_homeo(e, e_prime);
    return {format_partial_map(m), json::parse(partial_map_to_json(m))};
  });

  table.emplace_back("random", [](Context&, const Options& opt) -> Output {
    require_operands(opt, 0, "none");
    if (!opt.seed) throw ParseError("random requires --seed", 1, 1);
    return element_output(random_element(parse_space(opt.space_text), opt.depth.value_or(4), *opt.seed));
  });

  table.emplace_back("hnn-build", [](Context&, const Options& opt) -> Output {
    require_operands(opt, 2, "SET POINT");
    const RationalSet set = parse_set(parse_space(opt.space_text), opt.operands[0]);
    const std::string bundle = hnn_to_json(hnn_data(set, parse_point(set.space(), opt.operands[1]), opt.q));
    return {bundle, json::parse(bundle)};
  });

  table.emplace_back("hnn-decompose", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 2, "BUNDLE FILE");
    const HnnData data = hnn_from_json(read_source(ctx, opt.operands[0]));
    const Element g = load_element(ctx, opt.operands[1]);
    const HnnDecomposition dec = hnn_decompose(data, g);
    if (!opt.h_out.empty()) write_file(opt.h_out, format_element(dec.h));
    if (!opt.f_out.empty()) write_file(opt.f_out, format_element(data.f));
    return {"i " + std::to_string(dec.i) + "\nj " + std::to_string(dec.j) + "\n" + format_element(dec.h),
            {{"i", dec.i}, {"j", dec.j}, {"h", json::parse(element_to_json(dec.h))}}};
  });

  table.emplace_back("conjugate", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 3, "FILE SET SET_PRIME");
    const Element g = load_element(ctx, opt.operands[0]);
    const RationalSet set = parse_set(g.space(), opt.operands[1]);
    const RationalSet set_prime = parse_set(target_space(opt), opt.operands[2]);
    ConjugatorOptions options;
    if (opt.depth) options.layer_cap = *opt.depth;
    const ConjugatorData data = conjugator(set, set_prime, parse_phi(opt.phi_text, set.size()), options);
    return element_output(conjugate(data, g));
  });

  table.emplace_back("verify", [](Context& ctx, const Options& opt) -> Output {
    require_operands(opt, 1, "BUNDLE");
    const HnnData data = hnn_from_json(read_source(ctx, opt.operands[0]));
    const HnnReport report = verify_hnn_criterion(data, opt.samples, opt.seed.value_or(1));
    std::string text;
    for (const CriterionCheck& c : report.checks) {
      text += std::string(c.passed ? "PASS" : "FAIL") + (c.universal ? " [universal] " : " [sampled] ") +
              c.name + ": " + c.detail + "\n";
    }
    text += report.all_passed() ? "all passed" : "failed";
    return {text, {{"checks", checks_json(report)}, {"all_passed", report.all_passed()}}};
  });

  return table;
}

int exit_code(ErrorCode code) { return code == ErrorCode::parse ? kExitParse : kExitError; }

void report_error(std::ostream& out, std::ostream& err, bool json_mode, std::string_view code,
                  const std::string& message) {
  if (json_mode) {
    out << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
  } else {
    err << "error: " << code << ": " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Stabilizers of finite sets of rational points in Higman-Thompson groups", "vstab");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::uint64_t seed = 0;
  int depth = 0;
  app.add_flag("--json", opt.json_mode, "Emit JSON instead of text");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed");
  app.add_option("--space", opt.space_text, "Space n,r of set, point and clopen arguments");
  auto* depth_opt = app.add_option("--depth", depth, "Layer cap for conjugate; caret budget for random");
  app.add_option("--target-space", opt.target_space_text, "Space n,r of S' or E'");
  app.add_option("--phi", opt.phi_text, "Bijection S -> S' as comma-separated indices");
  app.add_option("--q", opt.q, "Target root count for hnn-build");
  app.add_option("--samples", opt.samples, "Sample count for verify");
  app.add_option("--h-out", opt.h_out, "hnn-decompose: write h to this file");
  app.add_option("--f-out", opt.f_out, "hnn-decompose: write f to this file");

  const auto table = verbs();
  const Verb* chosen = nullptr;
  for (const auto& [name, verb] : table) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("operands", opt.operands, "Verb arguments");
    sub->callback([&chosen, &verb] { chosen = &verb; });
  }

  const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(out, err, json_requested, code_name(ErrorCode::parse), e.what());
    return kExitParse;
  }
  if (*seed_opt) opt.seed = seed;
  if (*depth_opt) opt.depth = depth;

  Context ctx{in};
  try {
    const Output result = (*chosen)(ctx, opt);
    out << (opt.json_mode ? result.data.dump() : result.text) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    report_error(out, err, opt.json_mode, code_name(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    report_error(out, err, opt.json_mode, code_name(ErrorCode::internal), e.what());
    return kExitError;
  }
}

}  // namespace vstab::cli
