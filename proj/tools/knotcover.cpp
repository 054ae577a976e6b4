// Command-line front end. Every subcommand parses its inputs, calls one
// report builder and prints the result; exit status is 0 on pass, 1 on
// fail or indeterminate, 2 on errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotcover/report.hpp"

namespace {

  using namespace knotcover;

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  // One word per line; blank lines and # comments are skipped.
  std::vector<Word> read_words(std::string const& path) {
    std::vector<Word>  out;
    std::istringstream in(read_file(path));
    std::string        line;
    while (std::getline(in, line)) {
      line = detail::trim(line.substr(0, line.find('#')));
      if (!line.empty()) {
        out.push_back(parse_word(line));
      }
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcover: presentations, homomorphisms to A5, coset enumeration "
               "and homology for knot-space groups"};
  app.require_subcommand(1);
  app.fallthrough();

  bool        as_json    = false;
  std::string seed_order = "fixed";
  std::size_t cap        = default_coset_cap;
  app.add_flag("--json", as_json, "emit the versioned JSON report");
  app.add_option("--seed-order", seed_order, "enumeration order (only 'fixed')")
      ->check(CLI::IsMember({"fixed"}));
  app.add_option("--cap", cap, "limit on live cosets")->check(CLI::PositiveNumber);

  std::string kind = "kj";
  unsigned    j    = 1;
  auto*       pres_cmd = app.add_subcommand("presentation", "print a built-in presentation");
  pres_cmd->add_option("--kind", kind)->check(CLI::IsMember({"trefoil", "kj", "kjss"}));
  pres_cmd->add_option("--j", j);

  auto* tables_cmd = app.add_subcommand("verify-tables", "check the table assignment on K_j");
  tables_cmd->add_option("--j", j)->required();

  std::string pres_file, assign_file, subgroup_file, mode;
  auto*       check_cmd = app.add_subcommand("check-hom", "check an assignment against relators");
  check_cmd->add_option("--pres", pres_file)->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--assign", assign_file)->required()->check(CLI::ExistingFile);

  std::size_t limit      = 1;
  auto*       search_cmd = app.add_subcommand("search-hom", "search for surjections onto A5");
  search_cmd->add_option("--pres", pres_file)->required()->check(CLI::ExistingFile);
  search_cmd->add_option("--limit", limit);

  auto* sternfeld_cmd = app.add_subcommand("reproduce-sternfeld-error",
                                           "evaluate the inconsistent table fragment");

  std::size_t k          = 2;
  auto*       cosets_cmd = app.add_subcommand("cosets", "enumerate a coset table");
  cosets_cmd->add_option("--pres", pres_file)->required()->check(CLI::ExistingFile);
  cosets_cmd->add_option("--mode", mode)->required()->check(
      CLI::IsMember({"kernel", "cyclic", "subgroup"}));
  cosets_cmd->add_option("--assign", assign_file)->check(CLI::ExistingFile);
  cosets_cmd->add_option("--k", k);
  cosets_cmd->add_option("--subgroup", subgroup_file)->check(CLI::ExistingFile);

  auto* abel_cmd = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abel_cmd->add_option("--pres", pres_file)->required()->check(CLI::ExistingFile);

  auto* quotient_cmd = app.add_subcommand("cover-quotient",
                                          "trefoil cyclic cover modulo its boundary");
  quotient_cmd->add_option("--fold", k)->required();

  bool  force       = false;
  auto* kernel_cmd  = app.add_subcommand("kernel-homology", "homology of ker Phi_j");
  kernel_cmd->add_option("--j", j)->required();
  kernel_cmd->add_flag("--force", force, "allow j above the default limit");

  std::int64_t m = 0, index = 1;
  auto*        bound_cmd = app.add_subcommand("rank-bound", "Schreier rank bound");
  bound_cmd->add_option("--m", m)->required();
  bound_cmd->add_option("--i", index)->required();

  unsigned jmax    = 5;
  auto*    all_cmd = app.add_subcommand("run-all", "run every check and aggregate");
  all_cmd->add_option("--jmax", jmax);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    VerificationReport r;
    if (*pres_cmd) {
      r = report_presentation(kind, j);
      if (!as_json) {
        std::cout << r.results["text"].get<std::string>();
        return 0;
      }
    } else if (*tables_cmd) {
      r = report_verify_tables(j);
    } else if (*check_cmd) {
      r = report_check_hom(parse_presentation(read_file(pres_file)),
                           parse_assignment(read_file(assign_file)));
    } else if (*search_cmd) {
      r = report_search_hom(parse_presentation(read_file(pres_file)), limit);
    } else if (*sternfeld_cmd) {
      r = report_sternfeld();
    } else if (*cosets_cmd) {
      CosetRequest req;
      req.mode = mode;
      req.cap  = cap;
      if (!assign_file.empty()) {
        req.assignment = parse_assignment(read_file(assign_file));
      }
      if (cosets_cmd->count("--k") > 0) {
        req.k = k;
      }
      if (!subgroup_file.empty()) {
        req.subgroup = read_words(subgroup_file);
      }
      r = report_cosets(parse_presentation(read_file(pres_file)), req);
      if (as_json) {
        // the coset table itself, in its own schema
        std::cout << r.results.dump(2) << "\n";
        return 0;
      }
    } else if (*abel_cmd) {
      r = report_abelianize(parse_presentation(read_file(pres_file)));
      if (as_json) {
        std::cout << r.results.dump(2) << "\n";
        return 0;
      }
    } else if (*quotient_cmd) {
      r = report_cover_quotient(k, cap);
    } else if (*kernel_cmd) {
      r = report_kernel_homology(j, force);
    } else if (*bound_cmd) {
      r = report_rank_bound(m, index);
    } else if (*all_cmd) {
      r = run_all(jmax);
    }
    std::cout << emit(r, as_json ? Format::json : Format::text);
    return r.status == Status::pass ? 0 : 1;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
