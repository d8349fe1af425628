#include "oddkh/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "oddkh/acceptance.hpp"
#include "oddkh/cache.hpp"
#include "oddkh/complex.hpp"
#include "oddkh/cone.hpp"
#include "oddkh/error.hpp"
#include "oddkh/oracle.hpp"
#include "oddkh/serialize.hpp"
#include "oddkh/spectral.hpp"

namespace oddkh {

namespace {

struct Options {
  std::string coefficients;
  int basepoint = 0;
  std::string flavor = "x";
  int page = 0;
  int crossing = 0;
  std::string format = "json";
  std::string cache;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> pd;
  std::vector<std::string> files;
};

struct Input {
  std::string where;
  std::string text;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Input> collect_inputs(const Options& o) {
  std::vector<Input> out;
  for (std::size_t k = 0; k < o.pd.size(); ++k) {
    out.push_back({"--pd #" + std::to_string(k + 1), o.pd[k]});
  }
  for (const std::string& f : o.files) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (f != "-") {
      file.open(f);
      if (!file) throw Error(ErrorKind::Io, "cannot open " + f);
      in = &file;
    }
    std::string line;
    int number = 0;
    while (std::getline(*in, line)) {
      ++number;
      const auto hash = line.find('#');
      const std::string body = line.substr(0, hash);
      if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back({f + ":" + std::to_string(number), line});
    }
  }
  return out;
}

Flavor parse_flavor(const std::string& s) {
  if (s == "x" || s == "X") return Flavor::X;
  if (s == "y" || s == "Y") return Flavor::Y;
  throw UsageError("--flavor must be x or y");
}

BigradedComplex build(const Diagram& d, const Options& o) {
  const Flavor f = parse_flavor(o.flavor);
  if (o.seed) return assemble(d, solve(d, f, *o.seed));
  return assemble(d, f);
}

std::string options_key(const std::string& op, const Options& o) {
  std::ostringstream s;
  s << op << ";c=" << o.coefficients << ";f=" << o.flavor << ";p=" << o.page
    << ";x=" << o.crossing << ";fmt=" << o.format << ";seed=" << (o.seed ? std::to_string(*o.seed) : "-");
  return s.str();
}

// One diagram's output: JSON lines, or CSV rows without the header.
std::string compute(const std::string& op, const Diagram& d, const Options& o) {
  const bool csv = o.format == "csv";
  if (op == "validate") return csv ? validate_csv(d, false) : validate_json(d).dump() + "\n";
  if (op == "homology") {
    const Coefficients coeffs = parse_coefficients(o.coefficients.empty() ? "z" : o.coefficients);
    const BigradedComplex c = build(d, o);
    const HomologySummary h = homology(c, coeffs);
    return csv ? homology_csv(d, h, false) : homology_json(d, c, h).dump() + "\n";
  }
  if (op == "pages") {
    const std::string cf = o.coefficients.empty() ? "f2" : o.coefficients;
    if (cf != "f2" && cf != "q") throw UsageError("pages need --coefficients f2 or q");
    const Field field = cf == "f2" ? Field::F2 : Field::Q;
    SpectralResult r = pages(filtered_from(build(d, o), field), o.page);
    if (o.page > 0) {
      std::vector<SSPage> only;
      for (auto& p : r.pages) {
        if (p.r == o.page) only.push_back(std::move(p));
      }
      r.pages = std::move(only);
    }
    return csv ? pages_csv(d, r, false) : pages_json(d, field, r).dump() + "\n";
  }
  if (op == "euler") {
    const LaurentPoly chi = euler_characteristic(build(d, o));
    if (csv) return euler_csv(d, chi, false);
    return euler_json(d, chi, kauffman_bracket(mirror(d)), determinant(d)).dump() + "\n";
  }
  if (op == "skein") {
    std::string out;
    const Flavor f = parse_flavor(o.flavor);
    const int n = d.crossing_count();
    if (o.crossing < 0 || o.crossing > n) throw Error(ErrorKind::InvalidArgument, "no such crossing");
    for (int i = 0; i < n; ++i) {
      if (o.crossing && i != o.crossing - 1) continue;
      const SkeinReport r = skein_check(d, i, f);
      out += csv ? skein_csv(d, r, false) : skein_json(d, r).dump() + "\n";
    }
    return out;
  }
  if (op == "cube") {
    if (csv) throw UsageError("cube output is JSON only");
    return cube_json(d).dump() + "\n";
  }
  throw UsageError("unknown subcommand " + op);
}

std::string csv_header(const std::string& op) {
  if (op == "validate") return "diagram,crossings,components,writhe,hash\n";
  if (op == "homology") return "diagram,h,q,rank,torsion\n";
  if (op == "pages") return "diagram,r,p,degree,q,rank\n";
  if (op == "euler") return "diagram,q,coefficient\n";
  if (op == "skein") {
    return "diagram,crossing,field,total,part0,part1,resolved0,resolved1,les_exact,inequality\n";
  }
  return {};
}

int run_selftest(const Options& o, bool json, std::ostream& out) {
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, o.seed.value_or(1));
    all = all && r.pass;
    if (json) {
      out << Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds},
                  {"detail", r.detail}}
                 .dump()
          << "\n";
    } else {
      out << format_line(r) << "\n";
    }
    out.flush();
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd Khovanov homology, spectral pages and skein checks for planar diagrams",
               "oddkh"};
  app.set_version_flag("--version", kCacheVersion);
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool inputs) {
    sub->add_option("--coefficients", o.coefficients, "z, q or f2")
        ->check(CLI::IsMember({"z", "q", "f2"}));
    sub->add_option("--basepoint", o.basepoint, "arc carrying the basepoint");
    sub->add_option("--flavor", o.flavor, "edge assignment flavor")
        ->check(CLI::IsMember({"x", "y", "X", "Y"}));
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cache", o.cache, "result cache directory");
    sub->add_option("--seed", o.seed, "seed for free edge signs; corpus seed for selftest");
    if (inputs) {
      sub->add_option("--pd", o.pd, "a diagram given inline");
      sub->add_option("files", o.files, "files with one diagram per line ('-' for stdin)");
    }
  };
  common(app.add_subcommand("validate", "check diagrams and print their canonical form"), true);
  common(app.add_subcommand("homology", "bigraded homology table"), true);
  auto* pg = app.add_subcommand("pages", "spectral sequence pages of the homological filtration");
  common(pg, true);
  pg->add_option("--page", o.page, "print only page R");
  common(app.add_subcommand("euler", "graded Euler characteristic against the Jones oracle"), true);
  auto* sk = app.add_subcommand("skein", "cone decomposition at a crossing");
  common(sk, true);
  sk->add_option("--crossing", o.crossing, "crossing index from 1; default all");
  common(app.add_subcommand("cube", "resolutions, edges and faces as JSON"), true);
  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  common(st, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_json("Usage", e.what()).dump() << "\n";
    err << app.help();
    return 2;
  }
  const std::string op = app.get_subcommands().front()->get_name();
  if (op == "selftest") return run_selftest(o, st->count("--format") > 0 && o.format == "json", out);

  int status = 0;
  try {
    const std::vector<Input> inputs = collect_inputs(o);
    if (inputs.empty()) throw UsageError("no input: give --pd or a file");
    std::unique_ptr<ResultCache> cache;
    if (!o.cache.empty()) cache = std::make_unique<ResultCache>(o.cache);
    if (o.format == "csv") out << csv_header(op);
    for (const Input& in : inputs) {
      try {
        Diagram d = parse_pd(in.text);
        if (o.basepoint) d = with_basepoint(d, o.basepoint);
        std::string result;
        std::string key;
        if (cache) {
          key = cache->key(d, op, options_key(op, o));
          if (auto hit = cache->get(key)) result = std::move(*hit);
        }
        if (result.empty()) {
          result = compute(op, d, o);
          if (cache) cache->put(key, result);
        }
        out << result;
      } catch (const Error& e) {
        Json j = error_json(std::string(to_string(e.kind())), e.what());
        j["error"]["input"] = in.where;
        out << j.dump() << "\n";
        status = 1;
      }
    }
  } catch (const UsageError& e) {
    out << error_json("Usage", e.what()).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_json(std::string(to_string(e.kind())), e.what()).dump() << "\n";
    return 1;
  }
  return status;
}

}  // namespace oddkh
