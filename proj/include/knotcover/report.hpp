#pragma once

// Verification reports: each command of the command-line tool builds one by
// calling the library and recording what it checked.

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <optional>
#include <string>   // for string
#include <vector>   // for vector

#include <json.hpp>

#include "assignment.hpp"
#include "cosets.hpp"
#include "error.hpp"
#include "fpgroup.hpp"
#include "homcheck.hpp"
#include "perm.hpp"
#include "presentations.hpp"
#include "smith.hpp"
#include "subgroups.hpp"

namespace knotcover {

  using json = nlohmann::ordered_json;

  inline constexpr char const* report_schema = "knotcover.report/1";

  enum class Status { pass, fail, indeterminate };

  inline char const* to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::indeterminate:
        return "indeterminate";
    }
    return "?";
  }

  inline Status status_from_string(std::string const& s) {
    if (s == "pass") {
      return Status::pass;
    } else if (s == "fail") {
      return Status::fail;
    } else if (s == "indeterminate") {
      return Status::indeterminate;
    }
    throw ParseError("unknown status '" + s + "'");
  }

  struct VerificationReport {
    std::string              command;
    json                     inputs  = json::object();
    json                     results = json::object();
    Status                   status  = Status::pass;
    std::vector<std::string> claims;  // identifiers of the claims exercised
    std::vector<std::string> lines;   // human-readable findings, one per line

    friend bool operator==(VerificationReport const&, VerificationReport const&) = default;
  };

  // Records one asserted check and folds it into the status.
  inline void record_check(VerificationReport& r,
                           std::string const&  id,
                           std::string const&  claim,
                           bool                passed,
                           std::string const&  detail) {
    r.results["checks"].push_back(
        json{{"id", id}, {"claim", claim}, {"passed", passed}, {"detail", detail}});
    r.lines.push_back(std::string(passed ? "PASS " : "FAIL ") + id + ": " + detail);
    if (!passed) {
      r.status = Status::fail;
    }
    if (std::find(r.claims.begin(), r.claims.end(), claim) == r.claims.end()) {
      r.claims.push_back(claim);
    }
  }

  inline json to_json(Integer const& x) {
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max()) {
      return json(static_cast<std::int64_t>(x));
    }
    return json(x.str());
  }

  inline json to_json(AbelianInvariants const& a) {
    json t = json::array();
    for (auto const& d : a.torsion) {
      t.push_back(to_json(d));
    }
    return json{{"free_rank", a.free_rank}, {"torsion", t}};
  }

  // {"index": n, "action": {gen: [images...]}}, cosets numbered from 1.
  inline json to_json(Presentation const& p, CosetTable const& t) {
    json action = json::object();
    for (std::size_t g = 0; g < t.generator_count(); ++g) {
      json row = json::array();
      for (auto y : t.action()[g]) {
        row.push_back(y + 1);
      }
      action[p.generators()[g].name()] = row;
    }
    return json{{"index", t.index()}, {"action", action}};
  }

  inline json to_json(CheckReport const& c) {
    json v = json::array();
    for (auto const& x : c.violated) {
      v.push_back(json{{"index", x.index + 1},
                       {"name", x.name},
                       {"relator", x.relator.to_string()},
                       {"value", x.value.to_string()}});
    }
    return json{{"violated", v},
                {"image_order", c.image_order},
                {"surjective_onto_A5", c.surjective_onto_A5}};
  }

  inline json to_json(VerificationReport const& r) {
    return json{{"schema", report_schema},
                {"command", r.command},
                {"inputs", r.inputs},
                {"status", to_string(r.status)},
                {"claims", r.claims},
                {"results", r.results},
                {"lines", r.lines}};
  }

  inline VerificationReport report_from_json(json const& j) {
    if (j.at("schema").get<std::string>() != report_schema) {
      throw ParseError("unsupported report schema '" + j.at("schema").get<std::string>()
                       + "'");
    }
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs  = j.at("inputs");
    r.status  = status_from_string(j.at("status").get<std::string>());
    r.claims  = j.at("claims").get<std::vector<std::string>>();
    r.results = j.at("results");
    r.lines   = j.at("lines").get<std::vector<std::string>>();
    return r;
  }

  enum class Format { text, json };

  inline Format parse_format(std::string const& s) {
    if (s == "text") {
      return Format::text;
    } else if (s == "json") {
      return Format::json;
    }
    throw DomainError("unknown output format '" + s + "'");
  }

  inline std::string emit(VerificationReport const& r, Format f) {
    if (f == Format::json) {
      return to_json(r).dump(2) + "\n";
    }
    std::string out = r.command + ": " + to_string(r.status) + "\n";
    for (auto const& line : r.lines) {
      out += "  " + line + "\n";
    }
    return out;
  }

  inline std::string emit(VerificationReport const& r, std::string const& format) {
    return emit(r, parse_format(format));
  }

  ////////////////////////////////////////////////////////////////////////
  // Per-command reports
  ////////////////////////////////////////////////////////////////////////

  namespace claim {
    inline constexpr char const* knot_space_presentation = "knot-space-presentation";
    inline constexpr char const* tables_compatible = "table-homomorphism-respects-relators";
    inline constexpr char const* tables_image      = "table-homomorphism-image";
    inline constexpr char const* sternfeld_error   = "sternfeld-table-violates-sewing-relator";
    inline constexpr char const* trefoil_onto_a5   = "trefoil-group-maps-onto-A5";
    inline constexpr char const* cover_homology    = "cyclic-cover-homology";
    inline constexpr char const* two_fold_quotient = "two-fold-cover-mod-boundary-is-Z3";
    inline constexpr char const* three_fold_rank   = "three-fold-cover-mod-boundary-rank";
    inline constexpr char const* boundary_connected = "cyclic-cover-boundary-connected";
    inline constexpr char const* knot_homology     = "knot-group-abelianizes-to-Z";
    inline constexpr char const* rank_bound        = "schreier-rank-bound";
    inline constexpr char const* rank_growth       = "kernel-rank-growth";
  }  // namespace claim

  inline VerificationReport report_presentation(std::string const& kind, unsigned j) {
    VerificationReport r;
    r.command = "presentation";
    r.inputs  = json{{"kind", kind}, {"j", j}};
    Presentation p;
    if (kind == "trefoil") {
      p = trefoil_presentation();
    } else if (kind == "kj") {
      p = kj_presentation(j);
    } else if (kind == "kjss") {
      p = kjss_presentation(j);
    } else {
      throw DomainError("unknown presentation kind '" + kind + "'");
    }
    std::string text = print_presentation(p);
    r.results        = json{{"label", p.label()},
                     {"generators", p.generators().size()},
                     {"relators", p.relators().size()},
                     {"text", text}};
    r.claims.push_back(claim::knot_space_presentation);
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t nl = text.find('\n', start);
      r.lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
    return r;
  }

  namespace detail {
    inline void add_violation_lines(VerificationReport& r,
                                    std::string const&  prefix,
                                    CheckReport const&  c) {
      for (auto const& v : c.violated) {
        r.lines.push_back(prefix + "violated " + v.name + " (" + v.relator.to_string()
                          + ") -> " + v.value.to_string());
      }
    }
  }  // namespace detail

  inline VerificationReport report_verify_tables(unsigned j) {
    VerificationReport r;
    r.command = "verify-tables";
    r.inputs  = json{{"j", j}};
    CheckReport quotient = check_relators(kjss_presentation(j), phi_tables(j));
    CheckReport full     = check_relators(kj_presentation(j), phi_tables_on_kj(j));
    r.results["kjss"] = to_json(quotient);
    r.results["kj"]   = to_json(full);
    detail::add_violation_lines(r, "K_j**: ", quotient);
    detail::add_violation_lines(r, "K_j: ", full);
    record_check(r, "tables-kjss-j" + std::to_string(j), claim::tables_compatible,
                 quotient.ok(),
                 std::to_string(quotient.violated.size()) + " violated relators on K_"
                     + std::to_string(j) + "**");
    record_check(r, "tables-kj-j" + std::to_string(j), claim::tables_compatible, full.ok(),
                 std::to_string(full.violated.size()) + " violated relators on K_"
                     + std::to_string(j));
    r.claims.push_back(claim::tables_image);
    r.lines.push_back("image order " + std::to_string(quotient.image_order));
    if (!quotient.surjective_onto_A5) {
      std::string note = "j = " + std::to_string(j) + ": image order "
                         + std::to_string(quotient.image_order)
                         + ", the table assignment is not onto A5 at this j";
      r.results["notes"].push_back(note);
      r.lines.push_back("NOTE " + note);
    }
    return r;
  }

  inline VerificationReport report_check_hom(Presentation const& p, GenAssignment const& a) {
    VerificationReport r;
    r.command = "check-hom";
    r.inputs  = json{{"presentation", p.label()}, {"assignment", a.label()}};
    CheckReport c = check_relators(p, a);
    r.results     = to_json(c);
    detail::add_violation_lines(r, "", c);
    record_check(r, "relators", claim::tables_compatible, c.ok(),
                 std::to_string(c.violated.size()) + " of "
                     + std::to_string(p.relators().size()) + " relators violated");
    r.lines.push_back("image order " + std::to_string(c.image_order)
                      + (c.surjective_onto_A5 ? ", onto A5" : ""));
    return r;
  }

  inline VerificationReport report_search_hom(Presentation const& p, std::size_t limit) {
    VerificationReport r;
    r.command                 = "search-hom";
    r.inputs                  = json{{"presentation", p.label()}, {"limit", limit}};
    auto found                = search_surjections(p, limit);
    r.results["count"]        = found.size();
    r.results["surjections"]  = json::array();
    for (auto const& a : found) {
      json m = json::object();
      std::string line;
      for (auto const& g : p.generators()) {
        m[g.name()] = a.at(g).to_string();
        line += (line.empty() ? "" : ", ") + g.name() + " -> " + a.at(g).to_string();
      }
      r.results["surjections"].push_back(m);
      r.lines.push_back(line);
    }
    r.claims.push_back(claim::trefoil_onto_a5);
    return r;
  }

  inline VerificationReport report_sternfeld() {
    VerificationReport r;
    r.command = "reproduce-sternfeld-error";
    auto s    = sternfeld_error_repro();
    r.results = json{{"word", sternfeld_fragment().target.to_string()},
                     {"got", s.got.to_string()},
                     {"expected", s.expected.to_string()},
                     {"r_value", s.r_value.to_string()},
                     {"mismatch", s.mismatch}};
    record_check(r, "sternfeld-mismatch", claim::sternfeld_error,
                 s.mismatch && s.got == s.r_value,
                 "o^-1 h f^-1 q -> " + s.got.to_string() + " = image of r, but a -> "
                     + s.expected.to_string());
    return r;
  }

  struct CosetRequest {
    std::string                  mode;  // kernel | cyclic | subgroup
    std::optional<GenAssignment> assignment;
    std::optional<std::size_t>   k;
    std::vector<Word>            subgroup;
    std::size_t                  cap = default_coset_cap;
  };

  inline VerificationReport report_cosets(Presentation const& p, CosetRequest const& req) {
    VerificationReport r;
    r.command = "cosets";
    r.inputs  = json{{"presentation", p.label()}, {"mode", req.mode}, {"cap", req.cap}};
    std::optional<CosetTable> t;
    if (req.mode == "kernel") {
      if (!req.assignment) {
        throw DomainError("kernel mode needs an assignment");
      }
      t.emplace(kernel_coset_table(p, *req.assignment, req.cap));
    } else if (req.mode == "cyclic") {
      if (!req.k) {
        throw DomainError("cyclic mode needs k");
      }
      r.inputs["k"] = *req.k;
      t.emplace(cyclic_cover_table(p, *req.k));
    } else if (req.mode == "subgroup") {
      json gens = json::array();
      for (auto const& w : req.subgroup) {
        gens.push_back(w.to_string());
      }
      r.inputs["subgroup"] = gens;
      t.emplace(todd_coxeter(p, req.subgroup, req.cap));
    } else {
      throw DomainError("unknown coset mode '" + req.mode + "'");
    }
    r.results = to_json(p, *t);
    r.lines.push_back("index " + std::to_string(t->index()));
    return r;
  }

  inline VerificationReport report_abelianize(Presentation const& p) {
    VerificationReport r;
    r.command         = "abelianize";
    r.inputs          = json{{"presentation", p.label()}};
    AbelianInvariants a = abelianize(p);
    r.results         = to_json(a);
    r.lines.push_back(a.to_string());
    return r;
  }

  namespace detail {
    inline std::string invariants_line(AbelianInvariants const& a) {
      return a.to_string() + " (" + std::to_string(a.minimal_generators())
             + " generators)";
    }
  }  // namespace detail

  inline VerificationReport report_cover_quotient(std::size_t k,
                                                  std::size_t cap = default_coset_cap) {
    VerificationReport r;
    r.command               = "cover-quotient";
    r.inputs                = json{{"fold", k}, {"cap", cap}};
    Presentation      t     = trefoil_presentation();
    AbelianInvariants cover = cyclic_cover_homology(t, k);
    Presentation      q     = boundary_quotient(t, k, trefoil_longitude());
    AbelianInvariants qab   = abelianize(q);
    r.results["longitude"]        = trefoil_longitude().to_string();
    r.results["cover_homology"]   = to_json(cover);
    r.results["quotient_homology"] = to_json(qab);
    r.lines.push_back("H_1 of the " + std::to_string(k) + "-fold cover: "
                      + detail::invariants_line(cover));
    r.lines.push_back("H_1 of the quotient: " + detail::invariants_line(qab));
    try {
      std::size_t order         = todd_coxeter(q, {}, cap).index();
      r.results["quotient_order"] = order;
      r.lines.push_back("quotient order " + std::to_string(order));
      if (k == 1) {
        record_check(r, "quotient-k1-trivial", claim::two_fold_quotient, order == 1,
                     "order " + std::to_string(order));
      } else if (k == 2) {
        record_check(r, "quotient-k2-order-3", claim::two_fold_quotient, order == 3,
                     "order " + std::to_string(order));
      }
    } catch (CapacityError const& e) {
      r.results["quotient_order"] = nullptr;
      r.lines.push_back(std::string("quotient order not determined: ") + e.what());
      if (k <= 2) {
        r.status = Status::indeterminate;
      }
    }
    if (k == 3) {
      record_check(r, "quotient-k3-rank", claim::three_fold_rank,
                   qab.minimal_generators() >= 1,
                   std::to_string(qab.minimal_generators()) + " >= 1");
    }
    return r;
  }

  inline json to_json(KernelHomology const& kh) {
    return json{{"j", kh.j},
                {"index", kh.index},
                {"schreier_generators", kh.schreier_generators},
                {"relators", kh.relators},
                {"homology", to_json(kh.invariants)},
                {"minimal_generators", kh.minimal_generators()},
                {"rank_bound", kh.rank_bound.to_string()},
                {"rank_bound_ceiling", kh.rank_bound.ceiling}};
  }

  inline VerificationReport report_kernel_homology(unsigned j, bool force) {
    VerificationReport r;
    r.command         = "kernel-homology";
    r.inputs          = json{{"j", j}, {"force", force}};
    KernelHomology kh = kernel_homology(j, force);
    r.results         = to_json(kh);
    r.claims.push_back(claim::rank_growth);
    r.lines.push_back("index " + std::to_string(kh.index) + ", "
                      + std::to_string(kh.schreier_generators) + " Schreier generators, "
                      + std::to_string(kh.relators) + " relators");
    r.lines.push_back("H_1(kernel) needs " + std::to_string(kh.minimal_generators())
                      + " generators; rank of pi_1(K_" + std::to_string(j)
                      + ") >= " + kh.rank_bound.to_string() + ", so >= "
                      + std::to_string(kh.rank_bound.ceiling));
    return r;
  }

  inline VerificationReport report_rank_bound(std::int64_t m, std::int64_t i) {
    VerificationReport r;
    r.command   = "rank-bound";
    r.inputs    = json{{"m", m}, {"i", i}};
    RankBound b = schreier_rank_bound(m, i);
    r.results   = json{{"bound", b.to_string()},
                     {"numerator", b.numerator},
                     {"denominator", b.denominator},
                     {"ceiling", b.ceiling}};
    r.claims.push_back(claim::rank_bound);
    r.lines.push_back("rank >= " + b.to_string() + ", so >= " + std::to_string(b.ceiling));
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // run-all
  ////////////////////////////////////////////////////////////////////////

  inline VerificationReport run_all(unsigned jmax) {
    if (jmax < 1) {
      throw DomainError("run-all requires jmax >= 1");
    }
    VerificationReport r;
    r.command = "run-all";
    r.inputs  = json{{"jmax", jmax}};
    auto guarded = [&r](std::string const& id, std::string const& claim, auto&& body) {
      try {
        body();
      } catch (Error const& e) {
        record_check(r, id, claim, false, std::string("error: ") + e.what());
      }
    };

    // Table homomorphisms.
    json orders = json::array();
    for (unsigned j = 1; j <= jmax; ++j) {
      guarded("tables-j" + std::to_string(j), claim::tables_compatible, [&] {
        CheckReport quotient = check_relators(kjss_presentation(j), phi_tables(j));
        CheckReport full     = check_relators(kj_presentation(j), phi_tables_on_kj(j));
        detail::add_violation_lines(r, "K_" + std::to_string(j) + "**: ", quotient);
        detail::add_violation_lines(r, "K_" + std::to_string(j) + ": ", full);
        record_check(r, "tables-j" + std::to_string(j), claim::tables_compatible,
                     quotient.ok() && full.ok(),
                     std::to_string(quotient.violated.size() + full.violated.size())
                         + " violated relators");
        orders.push_back(quotient.image_order);
        if (j >= 5) {
          record_check(r, "image-j" + std::to_string(j), claim::tables_image,
                       quotient.surjective_onto_A5,
                       "image order " + std::to_string(quotient.image_order));
        } else if (!quotient.surjective_onto_A5) {
          std::string note = "j = " + std::to_string(j) + ": image order "
                             + std::to_string(quotient.image_order)
                             + ", the table assignment is not onto A5 at this j";
          r.results["notes"].push_back(note);
          r.lines.push_back("NOTE " + note);
        }
      });
    }
    r.results["image_orders"] = orders;

    guarded("sternfeld-mismatch", claim::sternfeld_error, [&] {
      auto s = sternfeld_error_repro();
      r.results["sternfeld"] = json{{"got", s.got.to_string()},
                                    {"expected", s.expected.to_string()},
                                    {"mismatch", s.mismatch}};
      record_check(r, "sternfeld-mismatch", claim::sternfeld_error,
                   s.mismatch && s.got == s.r_value,
                   "o^-1 h f^-1 q -> " + s.got.to_string() + ", a -> "
                       + s.expected.to_string());
    });

    Presentation const trefoil = trefoil_presentation();
    guarded("trefoil-onto-A5", claim::trefoil_onto_a5, [&] {
      GenAssignment a;
      a.set("a", parse_cycles("(1,3,5,4,2)"));
      a.set("b", parse_cycles("(1,2,3,4,5)"));
      CheckReport c     = check_relators(trefoil, a);
      auto        found = search_surjections(trefoil, 3600);
      bool rediscovered = std::find(found.begin(), found.end(), a) != found.end();
      r.results["trefoil_surjections"] = found.size();
      record_check(r, "trefoil-onto-A5", claim::trefoil_onto_a5,
                   c.ok() && c.surjective_onto_A5 && rediscovered,
                   "image order " + std::to_string(c.image_order) + ", "
                       + std::to_string(found.size()) + " surjective pairs found");
    });

    guarded("cover-homology", claim::cover_homology, [&] {
      AbelianInvariants h2 = cyclic_cover_homology(trefoil, 2);
      AbelianInvariants h3 = cyclic_cover_homology(trefoil, 3);
      r.results["cover_homology"] = json{{"2", to_json(h2)}, {"3", to_json(h3)}};
      record_check(r, "cover-homology-k2", claim::cover_homology,
                   h2 == AbelianInvariants{1, {3}}, h2.to_string());
      record_check(r, "cover-homology-k3", claim::cover_homology,
                   h3 == AbelianInvariants{1, {2, 2}}, h3.to_string());
    });

    guarded("boundary-quotient", claim::two_fold_quotient, [&] {
      Word        lambda = trefoil_longitude();
      std::size_t o1     = todd_coxeter(boundary_quotient(trefoil, 1, lambda), {}).index();
      Presentation q2    = boundary_quotient(trefoil, 2, lambda);
      std::size_t  o2    = todd_coxeter(q2, {}).index();
      AbelianInvariants a2 = abelianize(q2);
      AbelianInvariants a3 = abelianize(boundary_quotient(trefoil, 3, lambda));
      r.results["boundary_quotient"] = json{
          {"order_k1", o1}, {"order_k2", o2}, {"homology_k2", to_json(a2)},
          {"homology_k3", to_json(a3)}};
      record_check(r, "quotient-k1-trivial", claim::two_fold_quotient, o1 == 1,
                   "order " + std::to_string(o1));
      record_check(r, "quotient-k2-order-3", claim::two_fold_quotient,
                   o2 == 3 && a2 == AbelianInvariants{0, {3}},
                   "order " + std::to_string(o2) + ", H_1 " + a2.to_string());
      record_check(r, "quotient-k3-rank", claim::three_fold_rank,
                   a3.minimal_generators() >= 1, "H_1 " + a3.to_string());
    });

    guarded("boundary-connected", claim::boundary_connected, [&] {
      bool        all = true;
      std::vector<Word> boundary{Word::generator("a"), trefoil_longitude()};
      for (std::size_t k = 1; k <= 8; ++k) {
        all = all && orbit_transitive(trefoil, cyclic_cover_table(trefoil, k), boundary);
      }
      record_check(r, "boundary-connected", claim::boundary_connected, all,
                   "meridian and longitude transitive on cosets for k = 1..8");
    });

    guarded("knot-homology", claim::knot_homology, [&] {
      unsigned top = std::min(jmax, kernel_homology_max_j);
      bool     all = true;
      for (unsigned j = 1; j <= top; ++j) {
        all = all && abelianize(kj_presentation(j)) == AbelianInvariants{1, {}};
      }
      record_check(r, "knot-homology", claim::knot_homology, all,
                   "H_1(K_j) = Z for j = 1.." + std::to_string(top));
    });

    guarded("rank-growth", claim::rank_growth, [&] {
      unsigned                    top = std::min(jmax, kernel_homology_max_j);
      std::vector<KernelHomology> all;
      json                        rows = json::array();
      for (unsigned j = 1; j <= top; ++j) {
        all.push_back(kernel_homology(j));
        rows.push_back(to_json(all.back()));
        r.lines.push_back("j = " + std::to_string(j) + ": H_1(kernel) needs "
                          + std::to_string(all.back().minimal_generators())
                          + " generators, rank >= " + all.back().rank_bound.to_string());
      }
      r.results["kernel_homology"] = rows;
      for (unsigned j = 3; j <= std::min(top, 4u); ++j) {
        auto const& prev = all[j - 2];
        auto const& cur  = all[j - 1];
        bool        grows = cur.minimal_generators() > prev.minimal_generators()
                     && cur.rank_bound.numerator * prev.rank_bound.denominator
                            > prev.rank_bound.numerator * cur.rank_bound.denominator;
        record_check(r, "rank-growth-j" + std::to_string(j), claim::rank_growth, grows,
                     std::to_string(prev.minimal_generators()) + " -> "
                         + std::to_string(cur.minimal_generators()) + " generators, bound "
                         + prev.rank_bound.to_string() + " -> "
                         + cur.rank_bound.to_string());
      }
    });

    return r;
  }

}  // namespace knotcover
