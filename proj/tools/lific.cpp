#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "lific/generators.hpp"
#include "lific/io.hpp"
#include "lific/refuter.hpp"

using namespace lific;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

StructureTag parse_tag(const std::string& structure, const std::string& star) {
  return {kind_from_name(structure), flavor_from_name(star)};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

PlacementPlan resolve_plan(const std::string& sel, const StructureTag& tag, int d, int ell) {
  if (ends_with(sel, ".json")) return plan_from_json(read_text_file(sel));
  return find_plan(tag, d, ell, sel);
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void print_report(const VerificationReport& r) {
  std::cout << "is_lification: " << yes(r.is_lification) << "\n"
            << "is_strong:     " << yes(r.is_strong) << "\n"
            << "padding s:     " << r.padding << "\n"
            << "det ratio:     " << r.det_ratio_text() << "\n";
  if (r.singular) {
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return "[" + s + "]";
    };
    std::cout << "right indices: P " << list(r.right_indices_P) << "  L " << list(r.right_indices_L) << "\n"
              << "left indices:  P " << list(r.left_indices_P) << "  L " << list(r.left_indices_L) << "\n";
  }
  if (r.block_census) std::cout << "blocks:        " << *r.block_census << "\n";
}

struct Demo {
  std::string name;
  bool ok = true;
  void check(const std::string& what, bool pass) {
    std::cout << "  " << (pass ? "ok   " : "FAIL ") << what << "\n";
    ok = ok && pass;
  }
};

bool demo_examduplic(bool pretty) {
  struct Case {
    const char* label;
    StructureKind kind;
    const char* plan;
  };
  const Case cases[] = {{"L_S", StructureKind::Symmetric, "grade10-m1"},
                        {"L_O", StructureKind::Odd, "grade10-m2"},
                        {"L_P", StructureKind::Palindromic, "grade10-m3"}};
  bool all = true;
  for (const Case& c : cases) {
    // Conjugate-transpose tags keep all eleven coefficients distinct for every structure.
    StructureTag tag{c.kind, StarFlavor::ConjTranspose};
    MatrixPolynomial P = tagged_polynomial(tag, 10);
    LificationResult r = build_structured(P, tag, 2, find_plan(tag, 2, 2, c.plan));
    std::cout << c.label << " (" << tag.name() << ", grade 10, quadratic)\n" << r.L.pretty();
    Demo d;
    d.check("structured", check_structure(r.L.base, tag));
    d.check("registers match the numeric blocks", rescan(r.L, P));
    VerificationReport rep = certify_lification(r.L, P, 2, 10, {false, false, {}});
    d.check("strong quadratification", rep.is_strong);
    if (pretty) print_report(rep);
    all = all && d.ok;
  }
  return all;
}

bool demo_frobenius(Rng& rng) {
  MatrixPolynomial P = random_polynomial(rng, 2, 3, Backend::Rational);
  Demo d;
  for (int w : {1, 2}) {
    BlockPolynomial F = frobenius_pencil(P, w);
    std::cout << "F_" << w << " of a random cubic (n = 2)\n" << F.pretty();
    d.check("strong linearization", certify_lification(F, P, 1, 3).is_strong);
    d.check("companion", companion_predicate(F, CompanionMode::Companion));
  }
  return d.ok;
}

bool demo_quartic(Rng& rng) {
  StructureTag tag{StructureKind::Palindromic, StarFlavor::ConjTranspose};
  MatrixPolynomial P = random_regular_structured(rng, tag, 2, 4, Backend::Gaussian);
  BlockPolynomial L = palindromic_quartic_quadratification(P, tag.star);
  std::cout << "quadratification of a random *-palindromic quartic (n = 2)\n" << L.pretty();
  Demo d;
  d.check("strong quadratification", certify_lification(L, P, 2, 4).is_strong);
  d.check("*-palindromic", check_structure(L.base, tag));
  d.check("generalized companion", companion_predicate(L, CompanionMode::Generalized));
  d.check("not companion", !companion_predicate(L, CompanionMode::Companion));
  return d.ok;
}

bool demo_cayley(Rng& rng) {
  MatrixPolynomial P = random_polynomial(rng, 2, 3, Backend::Rational);
  CayleyExample ex = cayley_counterexample(P);
  std::cout << "L_P\n" << ex.LP.pretty() << "L_Q = C_{+1}(L_P)\n" << ex.LQ.pretty();
  Demo d;
  d.check("L_P strong linearization of P", certify_lification(ex.LP, P, 1, 3).is_strong);
  d.check("L_Q strong linearization of Q = C_{+1}(P)", certify_lification(ex.LQ, ex.Q, 1, 3).is_strong);
  d.check("L_P companion", companion_predicate(ex.LP, CompanionMode::Companion));
  d.check("L_Q not companion", !companion_predicate(ex.LQ, CompanionMode::Companion));
  return d.ok;
}

bool demo_cubification(Rng& rng) {
  StructureTag tag{StructureKind::Symmetric, StarFlavor::Transpose};
  MatrixPolynomial P = random_regular_structured(rng, tag, 1, 21, Backend::Rational);
  Mat<Scalar> X(1, 1), Y(1, 1);
  X(0, 0) = Scalar(2);
  Y(0, 0) = Scalar::rational(-1, 3);
  GeneralBmb g = invertible_blocks_cubification(P, X, Y, tag.star);
  std::cout << "grade-21 T-symmetric cubification with X = 2, Y = -1/3\n" << g.result.L.pretty();
  Demo d;
  d.check("T-symmetric", check_structure(g.result.L.base, tag));
  d.check("N2 M N1^T = P", g.recovered == P);
  d.check("strong cubification", certify_lification(g.result.L, P, 3, 21, {false, false, {}}).is_strong);
  return d.ok;
}

bool demo_sparse(Rng& rng) {
  Demo d;
  StructureTag pal{StructureKind::Palindromic, StarFlavor::Transpose};
  MatrixPolynomial P14 = random_structured(rng, pal, 2, 14, Backend::Rational);
  LificationResult r = build_structured(P14, pal, 2, find_plan(pal, 3, 2, "grade14-m5"));
  std::cout << "grade-14 T-palindromic sparse quadratification\n" << r.L.pretty();
  d.check("19 = 6d+1 nonzero blocks", sparsity_census(r.L, 3, 2, pal).count == 19);
  for (StructureKind kind : {StructureKind::Symmetric, StructureKind::Even, StructureKind::Palindromic}) {
    StructureTag tag{kind, StarFlavor::Transpose};
    MatrixPolynomial P7 = random_structured(rng, tag, 2, 7, Backend::Rational);
    LificationResult l = build_structured(P7, tag, 1, find_plan(tag, 3, 1, "sparse"));
    d.check("grade-7 " + tag.name() + " linearization has 16 = 5d+1 blocks",
            sparsity_census(l.L, 3, 1, tag).count == 16);
  }
  return d.ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured strong l-ifications of matrix polynomials"};
  app.require_subcommand(1);
  bool pretty = false;
  std::optional<uint64_t> seed;
  app.add_flag("--pretty", pretty, "Print block layouts and full reports");
  app.add_option("--seed", seed, "Seed for randomized inputs");

  std::string input, output, structure, star = "t", plan = "sparse", lpath, ppath, report, grid;
  int ell = 0, grade = 0, dsearch = 0;
  size_t size = 1, block_size = 0;
  bool allow_unstructured = false, no_indices = false, allow_products = false, search = false;
  std::string field = "rational", singular, demo_name;

  auto* build = app.add_subcommand("build", "Build a structured block-Kronecker l-ification");
  build->add_option("--input", input, "Matrix polynomial JSON")->required();
  build->add_option("--structure", structure, "sym|skew|even|odd|palin|antipalin")->required();
  build->add_option("--star", star, "t (transpose) or h (conjugate transpose)");
  build->add_option("--ell", ell, "Degree of the l-ification")->required();
  build->add_option("--plan", plan, "Builtin plan name or plan JSON file");
  build->add_option("--out", output, "Output JSON for L");
  build->add_flag("--allow-unstructured", allow_unstructured, "Build even if P is not structured");

  auto* verify = app.add_subcommand("verify", "Certify that L is a strong l-ification of P");
  verify->add_option("--lification", lpath, "L JSON")->required();
  verify->add_option("--poly", ppath, "P JSON")->required();
  verify->add_option("--ell", ell, "Degree of L (default: grade of L)");
  verify->add_option("--report", report, "Report JSON");
  verify->add_flag("--no-indices", no_indices, "Skip minimal index measurement");

  auto* sparse = app.add_subcommand("sparse", "Sparse plans, block census and the support search");
  sparse->add_option("--input", input, "Matrix polynomial JSON");
  sparse->add_option("--structure", structure, "sym|skew|even|odd|palin|antipalin")->required();
  sparse->add_option("--star", star, "t or h");
  sparse->add_option("--ell", ell, "Degree of the l-ification")->required();
  sparse->add_option("--out", output, "Output JSON for L");
  sparse->add_flag("--search", search, "Search symmetric supports of the (1,1) block");
  sparse->add_option("--d", dsearch, "d for --search");

  auto* recover = app.add_subcommand("recover", "Recover P from a structured block-Kronecker l-ification");
  recover->add_option("--lification", lpath, "L JSON")->required();
  recover->add_option("--structure", structure, "sym|skew|even|odd|palin|antipalin")->required();
  recover->add_option("--star", star, "t or h");
  recover->add_option("--ell", ell, "Degree of L (default: grade of L)");
  recover->add_option("--block-size", block_size, "n (default: block_size in the file)");
  recover->add_option("--out", output, "Output JSON for P");

  auto* refute_cmd = app.add_subcommand("refute-quartic", "Search structured companion quadratifications of quartics");
  refute_cmd->add_option("--structure", structure, "sym|skew|even|odd|palin|antipalin|all")->required();
  refute_cmd->add_option("--star", star, "t or h");
  refute_cmd->add_option("--grid", grid, "Comma-separated nonzero constants");
  refute_cmd->add_flag("--allow-products", allow_products, "Allow c + b p_j + g p_a p_b in the (1,1) linear slot");
  refute_cmd->add_option("--report", report, "Report JSON");

  auto* generate = app.add_subcommand("generate", "Write a seeded random structured matrix polynomial");
  generate->add_option("--structure", structure, "sym|skew|even|odd|palin|antipalin")->required();
  generate->add_option("--star", star, "t or h");
  generate->add_option("--grade", grade, "Grade k")->required();
  generate->add_option("--size", size, "n");
  generate->add_option("--field", field, "rational|gaussian");
  generate->add_option("--singular", singular, "Comma-separated right minimal indices");
  generate->add_option("--out", output, "Output JSON")->required();

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->add_option("name", demo_name, "examduplic|frobenius|quartic|cayley|cubification|sparse|all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Rng rng(seed.value_or(1));
  try {
    if (*build || (*sparse && !search)) {
      if (input.empty()) throw Error(ErrorKind::SchemaError, "--input is required");
      StructureTag tag = parse_tag(structure, star);
      MatrixPolynomial P = poly_from_json(read_json_file(input));
      int d = block_kronecker_d(P.grade, ell);
      PlacementPlan pl = resolve_plan(*sparse ? std::string("sparse") : plan, tag, d, ell);
      LificationResult r = build_structured(P, tag, ell, pl, {allow_unstructured});
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      Json out = block_to_json(r.L);
      out["lification"] = lification_to_json(r);
      out["lification"]["plan"] = pl.name;
      if (seed) out["lification"]["seed"] = *seed;
      SparsityReport sr = sparsity_census(r.L, d, ell, tag);
      if (*sparse) out["census"] = sparsity_to_json(sr);
      if (!output.empty()) write_json_file(output, out);
      std::cout << tag.name() << " l-ification: k = " << P.grade << ", l = " << ell << ", d = " << d
                << ", plan " << pl.name << ", " << r.L.block_rows() << "x" << r.L.block_cols() << " blocks of size "
                << r.n << ", " << sr.count << " nonzero\n";
      if (*sparse)
        std::cout << "sparse bound " << sr.sparse_bound << ", structured floor " << sr.structured_floor
                  << (sr.sparse ? " (sparse)" : "") << "\n";
      if (pretty) std::cout << r.L.pretty();
      return kOk;
    }
    if (*sparse) {
      StructureTag tag = parse_tag(structure, star);
      SupportSearch s = search_sparse_supports(tag, dsearch, ell);
      Json j = {{"structure", tag.name()},   {"d", dsearch},
                {"ell", ell},                {"supports_examined", s.supports_examined},
                {"admissible", s.admissible}, {"min_blocks", s.min_blocks},
                {"min_total", s.min_total},  {"minimal_supports", s.minimal_supports},
                {"realized", s.realized},    {"floor_7d_plus_1", 7 * dsearch + 1}};
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
    if (*verify) {
      BlockPolynomial L = block_from_json(read_json_file(lpath));
      MatrixPolynomial P = poly_from_json(read_json_file(ppath));
      CertifyOptions co;
      co.measure_indices = !no_indices;
      VerificationReport rep = certify_lification(L, P, ell > 0 ? ell : L.grade(), P.grade, co);
      print_report(rep);
      if (!report.empty()) {
        Json j = report_to_json(rep);
        if (seed) j["seed"] = *seed;
        write_json_file(report, j);
      }
      return rep.is_strong ? kOk : kFailed;
    }
    if (*recover) {
      StructureTag tag = parse_tag(structure, star);
      BlockPolynomial L = block_from_json(read_json_file(lpath));
      size_t n = block_size > 0 ? block_size : L.n;
      int l = ell > 0 ? ell : L.grade();
      if (L.base.rows != L.base.cols || L.base.rows % n != 0 || (L.base.rows / n) % 2 == 0)
        throw Error(ErrorKind::ShapeMismatch, "L must have (2d+1)n rows");
      int d = static_cast<int>((L.base.rows / n - 1) / 2);
      size_t m = static_cast<size_t>(d + 1) * n;
      MatrixPolynomial M = with_grade(L.base.block(0, 0, m, m), l);
      MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
      if (assemble_block_kronecker(M, A, tag.sign(), d, l, n) != with_grade(L.base, l))
        throw Error(ErrorKind::ShapeMismatch, "L is not a block-Kronecker l-ification for " + tag.name());
      Recovery rec = recover_P(M, A, tag.sign(), d, l, n);
      if (!output.empty()) write_json_file(output, poly_to_json(rec.P));
      std::cout << "recovered P of grade " << rec.P.grade << " (triple product equals "
                << (rec.sign > 0 ? "P" : "-P") << ")\n";
      if (pretty) std::cout << make_block(rec.P, n).pretty();
      return kOk;
    }
    if (*refute_cmd) {
      std::vector<Scalar> g = grid.empty() ? default_refuter_grid() : parse_grid(grid);
      std::vector<StructureTag> tags;
      if (structure == "all") {
        for (const char* s : {"sym", "skew", "even", "odd", "palin", "antipalin"})
          for (const char* f : {"t", "h"}) tags.push_back(parse_tag(s, f));
      } else {
        tags.push_back(parse_tag(structure, star));
      }
      Json reports = Json::array();
      for (const StructureTag& tag : tags) {
        Json j = {{"structure", tag.name()}};
        try {
          RefuterSpace sp = make_refuter_space(tag, g, allow_products);
          RefuteOptions ro;
          ro.shuffle_seed = seed;
          RefuteReport r = refute(sp, ro);
          j["grid"] = r.grid;
          j["allow_products"] = r.allow_products;
          j["templates_tested"] = r.templates_tested;
          j["satisfying_count"] = r.satisfying_count;
          j["outer_survivors"] = r.outer_survivors;
          j["inner_assignments"] = r.inner_assignments;
          j["full_checks"] = r.full_checks;
          j["examples"] = r.examples;
          std::cout << tag.name() << ": " << r.templates_tested << " templates, " << r.satisfying_count
                    << " satisfying\n";
          for (const auto& e : r.examples) std::cout << "  " << e << "\n";
          if (r.satisfying_count > 0 && !allow_products)
            std::cerr << "FINDING: " << tag.name() << " admits a structured companion quadratification on this grid\n";
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegenerateStructure || tags.size() == 1) throw;
          j["skipped"] = e.what();
          std::cout << tag.name() << ": skipped (" << e.what() << ")\n";
        }
        if (seed) j["seed"] = *seed;
        j["note"] = "finite-grid exhaustive search; alpha is solved exactly";
        reports.push_back(j);
      }
      if (!report.empty()) write_json_file(report, tags.size() == 1 ? reports[0] : reports);
      return kOk;
    }
    if (*generate) {
      StructureTag tag = parse_tag(structure, star);
      Backend b = backend_from_name(field);
      MatrixPolynomial P;
      Json extra;
      if (!singular.empty()) {
        std::vector<int> degs;
        for (const Scalar& s : parse_grid(singular)) degs.push_back(static_cast<int>(s.re().get_num().get_si()));
        SingularInstance si = singular_structured(rng, tag, degs, grade, b);
        P = si.P;
        extra["right_indices"] = si.right_indices;
        extra["left_indices"] = si.left_indices;
      } else {
        P = random_structured(rng, tag, size, grade, b);
      }
      Json j = poly_to_json(P);
      j["structure"] = tag.name();
      j["seed"] = seed.value_or(1);
      if (!extra.is_null()) j["expected"] = extra;
      write_json_file(output, j);
      std::cout << "wrote " << tag.name() << " polynomial of grade " << grade << " and size " << P.rows << "\n";
      return kOk;
    }
    if (*demo) {
      bool ok = true;
      auto run = [&](const std::string& name, const std::function<bool()>& f) {
        if (demo_name != name && demo_name != "all") return;
        std::cout << "== " << name << "\n";
        ok = f() && ok;
      };
      bool known = false;
      for (const char* n : {"examduplic", "frobenius", "quartic", "cayley", "cubification", "sparse", "all"})
        known = known || demo_name == n;
      if (!known) throw Error(ErrorKind::SchemaError, "unknown demo '" + demo_name + "'");
      run("examduplic", [&] { return demo_examduplic(pretty); });
      run("frobenius", [&] { return demo_frobenius(rng); });
      run("quartic", [&] { return demo_quartic(rng); });
      run("cayley", [&] { return demo_cayley(rng); });
      run("cubification", [&] { return demo_cubification(rng); });
      run("sparse", [&] { return demo_sparse(rng); });
      return ok ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "lific: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::SchemaError:
      case ErrorKind::GradeNotOddMultiple:
      case ErrorKind::PlanKindMismatch:
      case ErrorKind::EmptyGrid:
        return kUsage;
      default:
        return kFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "lific: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
