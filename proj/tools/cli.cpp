#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "heis/heis.hpp"

namespace heis::cli {

double parse_angle(const std::string& text) {
  std::string s;
  std::remove_copy_if(text.begin(), text.end(), std::back_inserter(s),
                      [](unsigned char ch) { return std::isspace(ch); });
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) {
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad angle: " + text);
    return value;
  }
  // [sign][coef]pi[/denom]
  std::string coef = s.substr(0, pi_at);
  std::string rest = s.substr(pi_at + 2);
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    if (coef.back() == '*') coef.pop_back();
    std::size_t used = 0;
    factor = std::stod(coef, &used);
    if (used != coef.size()) throw std::invalid_argument("bad angle: " + text);
  }
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("bad angle: " + text);
    std::size_t used = 0;
    denom = std::stod(rest.substr(1), &used);
    if (used != rest.size() - 1 || denom == 0.0) throw std::invalid_argument("bad angle: " + text);
  }
  return factor * kPi / denom;
}

namespace {

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// A single JSON document (object or array of objects) or JSON lines.
std::vector<Json> parse_documents(const std::string& text) {
  std::vector<Json> docs;
  try {
    Json whole = Json::parse(text);
    if (whole.is_array()) {
      for (auto& item : whole) docs.push_back(std::move(item));
    } else {
      docs.push_back(std::move(whole));
    }
    return docs;
  } catch (const Json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    docs.push_back(Json::parse(line));
  }
  if (docs.empty()) throw std::runtime_error("no input documents");
  return docs;
}

Json verify_report(const Triple& P, double tol) {
  const std::array<double, 3> d{distance(P[0], P[1]), distance(P[1], P[2]),
                                distance(P[2], P[0])};
  const double spread = distance_spread(P);
  const bool equidistant = spread <= tol;
  Json report = {
      {"distances", d},
      {"spread", spread},
      {"tol", tol},
      {"equidistant", equidistant},
      {"cartan", cartan_invariant(P[0], P[1], P[2])},
  };
  if (equidistant) {
    const EquidistantTriple checked(P, tol);
    const SurfacePoint s = abc_from_triple(checked);
    report["abc"] = s;
    report["residual"] = s.residual();
    report["class"] = std::string(to_string(classify_triple(checked)));
    report["two_to_one"] = on_c_circle_locus(s);
  } else {
    report["abc"] = nullptr;
    report["residual"] = nullptr;
    report["class"] = nullptr;
  }
  return report;
}

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_verify(const std::string& input, double tol, Io io) {
  const auto docs = parse_documents(read_all(input, io.in));
  bool all = true;
  for (const Json& doc : docs) {
    const Json report = verify_report(triple_from_json(doc), tol);
    all = all && report["equidistant"].get<bool>();
    io.out << report.dump() << '\n';
  }
  return all ? kSuccess : kVerificationFailed;
}

int cmd_abc(const std::string& input, double tol, Io io) {
  const auto docs = parse_documents(read_all(input, io.in));
  for (const Json& doc : docs) {
    const Triple P = triple_from_json(doc);
    try {
      io.out << Json(abc_from_triple(P, tol)).dump() << '\n';
    } catch (const NotEquidistantError& e) {
      io.err << "heistri abc: " << e.what() << '\n';
      return kVerificationFailed;
    }
  }
  return kSuccess;
}

Json triple_output(const EquidistantTriple& P) {
  Json j = triple_to_json(P.points());
  j["class"] = std::string(to_string(classify_triple(P)));
  return j;
}

int cmd_triple(const SurfacePoint& s, double tol, Io io) {
  try {
    io.out << triple_output(triple_from_abc(s, tol)).dump() << '\n';
  } catch (const OffSurfaceError& e) {
    io.err << "heistri triple: " << e.what() << '\n';
    io.out << Json{{"error", "off-surface"}, {"residual", e.residual()}}.dump() << '\n';
    return kInputError;
  }
  return kSuccess;
}

int cmd_random(int count, std::uint64_t seed, bool with_similarity, Io io) {
  std::mt19937_64 rng(seed);
  RandomTripleOptions options;
  options.with_similarity = with_similarity;
  for (int i = 0; i < count; ++i) {
    io.out << triple_to_json(random_equidistant_triple(rng, options).points()).dump() << '\n';
  }
  return kSuccess;
}

std::array<int, 3> parse_component(const std::string& text) {
  std::array<int, 3> out{0, 0, 0};
  std::vector<int> values;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    values.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad component: " + text);
  }
  if (values.size() == 1 && values[0] == 0) return out;
  if (values.size() != 3) {
    throw std::invalid_argument("component must be 0 or three integers n1,n2,n3");
  }
  std::copy(values.begin(), values.end(), out.begin());
  return out;
}

int cmd_sample(const SampleOptions& options, const std::string& format,
               const std::string& output, Io io) {
  const SurfaceMesh mesh = sample_surface(options);
  std::ofstream file;
  std::ostream* sink = &io.out;
  if (output != "-") {
    file.open(output);
    if (!file) throw std::runtime_error("cannot write " + output);
    sink = &file;
  }
  if (format == "csv") {
    write_csv(*sink, mesh);
  } else {
    write_obj(*sink, mesh);
  }
  sink->flush();
  if (!*sink) throw std::runtime_error("failed writing " + output);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Equidistant triples in the Heisenberg group", "heistri"};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::string input = "-";

  auto* verify = app.add_subcommand("verify", "Check equidistance of JSON triples and report invariants");
  verify->add_option("input", input, "Triple file (JSON or JSON lines), - for stdin");
  verify->add_option("--tol", tol, "Relative tolerance on the distance spread")->capture_default_str();

  auto* abc = app.add_subcommand("abc", "Angle triple (a,b,c) of equidistant JSON triples");
  abc->add_option("input", input, "Triple file (JSON or JSON lines), - for stdin");
  abc->add_option("--tol", tol, "Relative tolerance on the distance spread")->capture_default_str();

  std::string a_text, b_text, c_text, from;
  double surface_tol = kSurfaceTolerance;
  auto* triple = app.add_subcommand("triple", "Construct an equidistant triple from (a,b,c)");
  triple->add_option("-a,--a", a_text, "Angle a (radians; 'pi/3' style accepted)");
  triple->add_option("-b,--b", b_text, "Angle b");
  triple->add_option("-c,--c", c_text, "Angle c");
  triple->add_option("--input", from, "Surface point JSON {\"a\",\"b\",\"c\"} instead of flags");
  triple->add_option("--tol", surface_tol, "Tolerance on |cos a + cos b + cos c - 3/2|")
      ->capture_default_str();

  int count = 1;
  std::uint64_t seed = 0;
  bool no_similarity = false;
  auto* random = app.add_subcommand("random", "Random equidistant triples as JSON lines");
  random->add_option("--count", count, "Number of triples")->check(CLI::PositiveNumber)->capture_default_str();
  random->add_option("--seed", seed, "Generator seed")->capture_default_str();
  random->add_flag("--no-similarity", no_similarity, "Skip the random similarity (p2 = origin)");

  SampleOptions sample_options;
  std::string format = "csv";
  std::string output = "-";
  std::string component = "0";
  auto* sample = app.add_subcommand("sample", "Sample the equidistant surface to CSV or OBJ");
  sample->add_option("--resolution", sample_options.resolution, "Grid nodes per axis")
      ->check(CLI::Range(8, 1 << 14))
      ->capture_default_str();
  sample->add_option("--format", format, "csv or obj")
      ->check(CLI::IsMember({"csv", "obj"}))
      ->capture_default_str();
  sample->add_option("--output", output, "Output path, - for stdout")->capture_default_str();
  sample->add_option("--component", component, "0 or n1,n2,n3 (translation by 2pi n)")
      ->capture_default_str();
  sample->add_option("--threads", sample_options.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Io io{in, out, err};
  try {
    if (verify->parsed()) return cmd_verify(input, tol, io);
    if (abc->parsed()) return cmd_abc(input, tol, io);
    if (triple->parsed()) {
      SurfacePoint s;
      if (!from.empty()) {
        const auto docs = parse_documents(read_all(from, in));
        s = docs.front().get<SurfacePoint>();
      } else {
        if (a_text.empty() || b_text.empty() || c_text.empty()) {
          err << "heistri triple: give --a, --b and --c, or --input\n";
          return kInputError;
        }
        s = {parse_angle(a_text), parse_angle(b_text), parse_angle(c_text)};
      }
      return cmd_triple(s, surface_tol, io);
    }
    if (random->parsed()) return cmd_random(count, seed, !no_similarity, io);
    if (sample->parsed()) {
      sample_options.component = parse_component(component);
      return cmd_sample(sample_options, format, output, io);
    }
  } catch (const std::exception& e) {
    err << "heistri: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace heis::cli
