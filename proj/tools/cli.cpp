#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hsp/algebra/confluence.hpp"
#include "hsp/errors.hpp"
#include "hsp/text/parser.hpp"
#include "hsp/text/presentation_io.hpp"
#include "hsp/verify/suites.hpp"
#include "json.hpp"

namespace hsp::cli {

namespace {

struct Source {
  std::string presentation;
  std::string file;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* p = cmd->add_option("--presentation,-p", src.presentation, "catalog presentation")
                ->check(CLI::IsMember(Catalog::presentation_names()));
  auto* f = cmd->add_option("--file,-f", src.file, "presentation file")->check(CLI::ExistingFile);
  p->excludes(f);
}

PresentationPtr load(const Source& src, const Catalog& catalog) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    std::stringstream text;
    text << in.rdbuf();
    return read_presentation(text.str());
  }
  if (src.presentation.empty()) throw Error("--presentation or --file is required");
  return catalog.presentation(src.presentation);
}

std::string render_pairs(const Presentation& pres, const ConfluenceReport& report, std::size_t max_len,
                         bool structured) {
  std::ostringstream out;
  const Alphabet& al = *pres.alphabet();
  if (structured) {
    for (const auto& f : report.failures) {
      nlohmann::ordered_json j;
      j["presentation"] = pres.name();
      j["word"] = to_string(al, f.pair.word);
      j["positions"] = {f.pair.first_pos, f.pair.second_pos};
      j["residual"] = to_string(f.residual);
      out << j.dump() << "\n";
    }
    nlohmann::ordered_json s;
    s["presentation"] = pres.name();
    s["record"] = "summary";
    s["max_len"] = max_len;
    s["pairs_checked"] = report.pairs_checked;
    s["non_joinable"] = report.failures.size();
    out << s.dump() << "\n";
    return out.str();
  }
  out << "presentation " << pres.name() << ": " << report.pairs_checked << " critical pairs up to length " << max_len
      << ", " << report.failures.size() << " non-joinable\n";
  for (const auto& f : report.failures)
    out << "  " << to_string(al, f.pair.word) << " at " << f.pair.first_pos << "," << f.pair.second_pos
        << "  residual " << to_string(f.residual) << "\n";
  return out.str();
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, relation checks and verification suites for the h-deformed superplane calculus",
               "hsp"};
  app.require_subcommand(1);
  std::size_t fuel = kDefaultFuel;
  std::optional<std::size_t> fuel_override;
  std::string format = "text";
  const std::vector<std::string> formats{"text", "structured"};

  Source reduce_src;
  std::string expression;
  auto* reduce = app.add_subcommand("reduce", "print the normal form of an expression");
  reduce->add_option("expression", expression, "expression to reduce")->required();
  add_source(reduce, reduce_src);
  reduce->add_option("--fuel", fuel_override, "rewrite budget per call")->check(CLI::PositiveNumber);

  std::string suite = "all";
  std::string suite_flag;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "run a verification suite, or all of them");
  auto* pos = verify->add_option("name", suite, "suite name or all")->check(CLI::IsMember(suites));
  verify->add_option("--suite,-s", suite_flag, "suite name or all")->check(CLI::IsMember(suites))->excludes(pos);
  verify->add_option("--format", format, "text or structured")->check(CLI::IsMember(formats));
  verify->add_option("--fuel", fuel_override, "rewrite budget per call")->check(CLI::PositiveNumber);

  Source rules_src;
  auto* rules = app.add_subcommand("rules", "print a presentation in the file format");
  add_source(rules, rules_src);

  Source cp_src;
  std::size_t max_len = 4;
  auto* cp = app.add_subcommand("critical-pairs", "check local confluence");
  add_source(cp, cp_src);
  cp->add_option("--max-len", max_len, "longest ambiguity word")->check(CLI::Range(3, 8));
  cp->add_option("--format", format, "text or structured")->check(CLI::IsMember(formats));
  cp->add_option("--fuel", fuel_override, "rewrite budget per call")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsage;
  }

  try {
    Catalog catalog = Catalog::standard();
    const bool structured = format == "structured";
    if (reduce->parsed()) {
      PresentationPtr pres = load(reduce_src, catalog);
      out << to_string(normal_form(pres, parse_expression(expression, pres->alphabet()), fuel_override.value_or(fuel)))
          << "\n";
      return kAllPass;
    }
    if (verify->parsed()) {
      if (!suite_flag.empty()) suite = suite_flag;
      SuiteOptions options;
      if (fuel_override) options.fuel = *fuel_override;
      std::vector<SuiteReport> reports;
      if (suite == "all")
        reports = run_all(catalog, options);
      else
        reports.push_back(run_suite(suite, catalog, options));
      bool failed = false;
      for (const auto& r : reports) {
        out << (structured ? render_structured(r) : render_text(r));
        failed = failed || r.failed();
      }
      return failed ? kFailure : kAllPass;
    }
    if (rules->parsed()) {
      out << write_presentation(*load(rules_src, catalog));
      return kAllPass;
    }
    PresentationPtr pres = load(cp_src, catalog);
    ConfluenceReport report = check_local_confluence(pres, max_len, fuel_override.value_or(fuel));
    out << render_pairs(*pres, report, max_len, structured);
    return report.confluent() ? kAllPass : kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hsp::cli
