// Command-line front end. All functionality goes through the shared-library C
// interface; this file only parses arguments, renders reports, and maps
// statuses to exit codes (0 verdict, 1 usage/input error, 2 internal error).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "nctrace/nctrace.h"

namespace {

using nlohmann::json;

/// Owning wrapper for strings handed out by the library.
struct Str {
  char* p = nullptr;
  Str() = default;
  Str(const Str&) = delete;
  Str& operator=(const Str&) = delete;
  ~Str() { nct_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};

/// Owning wrapper for polynomial handles.
struct Poly {
  nct_poly* p = nullptr;
  Poly() = default;
  Poly(const Poly&) = delete;
  Poly& operator=(const Poly&) = delete;
  ~Poly() { nct_poly_free(p); }
};

int exit_code_for(nct_status st) {
  switch (st) {
    case NCT_OK:
      return 0;
    case NCT_ERR_INCONSISTENT:
    case NCT_ERR_NOMEM:
    case NCT_ERR_INTERNAL:
      return 2;
    default:
      return 1;
  }
}

int report_failure(nct_status st, const Str& err) {
  std::cerr << "error (" << nct_status_name(st) << "): "
            << (err.p ? err.p : "no details available") << "\n";
  return exit_code_for(st);
}

bool parse_inv(const std::string& name, nct_involution& out) {
  if (name == "none") out = NCT_INV_NONE;
  else if (name == "transpose") out = NCT_INV_TRANSPOSE;
  else if (name == "symplectic") out = NCT_INV_SYMPLECTIC;
  else if (name == "unitary") out = NCT_INV_UNITARY;
  else return false;
  return true;
}

/// Emits a report: raw JSON to --json target ("-" = stdout, suppressing the
/// human rendering), human text to stdout otherwise. The file receives the
/// library's bytes verbatim.
template <class Render>
int emit(const std::string& json_text, const std::string& json_path, Render render) {
  if (json_path == "-") {
    std::cout << json_text;
    return 0;
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error (invalid): cannot open " << json_path << " for writing\n";
      return 1;
    }
    out << json_text;
  }
  render(json::parse(json_text));
  return 0;
}

void print_string_rows(const json& rows, const std::string& indent) {
  for (const auto& row : rows) {
    std::string line = indent + "[ ";
    bool first = true;
    for (const auto& cell : row) {
      if (!first) line += ", ";
      line += cell.get<std::string>();
      first = false;
    }
    std::cout << line << " ]\n";
  }
}

void print_warnings(const json& j) {
  if (!j.contains("warnings")) return;
  for (const auto& w : j["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
}

void render_certificate(const json& c, const std::string& indent) {
  std::cout << indent << c["check"].get<std::string>() << ": "
            << (c["verdict"].get<bool>() ? "yes" : "no") << "  [rule "
            << c["theorem"].get<std::string>() << "]\n";
  std::cout << indent << "  " << c["statement"].get<std::string>() << "\n";
  const json& ev = c["evidence"];
  if (ev.contains("central_value"))
    std::cout << indent << "  central value: " << ev["central_value"].get<std::string>() << "\n";
  if (ev.contains("trace_poly"))
    std::cout << indent << "  trace polynomial: " << ev["trace_poly"].get<std::string>() << "\n";
  for (const auto& w : c["warnings"])
    std::cout << indent << "  note: " << w.get<std::string>() << "\n";
}

void render_classify(const json& j) {
  std::cout << "verdict: " << j["verdict"].get<std::string>() << "  [case "
            << j["paper_case"].get<std::string>() << "]\n";
  const json& span = j["span"];
  std::cout << "span: " << span["name"].get<std::string>() << ", dimension "
            << span["dimension"].get<int>() << " (sampled " << span["sampled_dimension"].get<int>()
            << " from " << j["samples_used"].get<int>() << " samples)\n";
  std::cout << "certificates:\n";
  for (const auto& c : j["certificates"]) render_certificate(c, "  ");
  print_warnings(j);
}

void render_cyc_equiv(const json& j) {
  std::cout << "lhs: " << j["lhs"].get<std::string>() << "\n";
  std::cout << "rhs: " << j["rhs"].get<std::string>() << "\n";
  std::cout << "cyclically equivalent: " << (j["equivalent"].get<bool>() ? "yes" : "no") << "\n";
}

void render_witness(const json& j) {
  std::cout << "polynomial: " << j["polynomial"].get<std::string>() << "\n";
  if (!j["exists"].get<bool>()) {
    std::cout << "not a sum of commutators\n";
    return;
  }
  std::cout << "sum of commutators, verified decomposition:\n";
  for (const auto& p : j["pairs"])
    std::cout << "  [" << p["left"].get<std::string>() << ", " << p["right"].get<std::string>()
              << "]\n";
}

void render_trace(const json& j) {
  std::cout << "polynomial: " << j["polynomial"].get<std::string>() << "\n";
  std::cout << "d: " << j["d"].get<int>() << ", involution: " << j["involution"].get<std::string>()
            << "\n";
  render_certificate(j["certificate"], "");
}

void render_eval(const json& j) {
  std::cout << "value:\n";
  print_string_rows(j["value"], "  ");
  std::cout << "trace: " << j["trace"].get<std::string>() << "\n";
}

void render_subspace(const json& j) {
  std::cout << "subspace " << j["name"].get<std::string>() << " at d=" << j["d"].get<int>()
            << ": dimension " << j["dimension"].get<int>() << "\n";
  std::cout << "basis:\n";
  for (const auto& b : j["basis"]) std::cout << "  " << b.get<std::string>() << "\n";
}

void render_closure(const json& j) {
  std::cout << "closure (" << j["closure"].get<std::string>() << ") of a "
            << j["input"]["dimension"].get<int>() << "-dimensional span at d=" << j["d"].get<int>()
            << ":\n";
  const json& c = j["closed"];
  std::cout << "name: " << c["name"].get<std::string>() << ", dimension "
            << c["dimension"].get<int>() << "\n";
  std::cout << "basis:\n";
  for (const auto& b : c["basis"]) std::cout << "  " << b.get<std::string>() << "\n";
}

int render_corpus(const json& j) {
  for (const auto& r : j["results"])
    std::cout << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << r["name"].get<std::string>()
              << "  (" << r["detail"].get<std::string>() << ")\n";
  bool ok = j["ok"].get<bool>();
  std::cout << (ok ? "corpus: all fixtures pass\n" : "corpus: FAILURES\n");
  return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"nctrace: exact classification of noncommutative polynomial values on d x d "
               "matrices, with cyclic-equivalence tests, trace certificates, and bracket "
               "closures"};
  app.require_subcommand(1);

  // shared option storage
  int d = 2;
  std::string inv_name = "none";
  std::uint64_t seed = 0;
  int budget = 512;
  std::string json_path;
  std::string poly_text, poly_text2, matrices_text, name_text, kind_text = "skew", at_text;

  auto add_common = [&](CLI::App* cmd, bool sampling) {
    cmd->add_option("--d", d, "matrix dimension")->capture_default_str();
    cmd->add_option("--inv", inv_name, "involution: none, transpose, symplectic, unitary")
        ->capture_default_str();
    if (sampling) {
      cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();
      cmd->add_option("--budget", budget, "sampling budget")->capture_default_str();
    }
    cmd->add_option("--json", json_path, "write the JSON report to this path ('-' = stdout)");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "classify the span of values of f");
  c_classify->add_option("poly", poly_text, "polynomial expression")->required();
  add_common(c_classify, true);

  CLI::App* c_cyc = app.add_subcommand("cyc-equiv", "test cyclic equivalence of two polynomials");
  c_cyc->add_option("lhs", poly_text, "left polynomial")->required();
  c_cyc->add_option("rhs", poly_text2, "right polynomial")->required();
  c_cyc->add_option("--json", json_path, "write the JSON report to this path ('-' = stdout)");

  CLI::App* c_wit = app.add_subcommand("witness", "decompose f into a sum of commutators");
  c_wit->add_option("poly", poly_text, "polynomial expression")->required();
  c_wit->add_option("--json", json_path, "write the JSON report to this path ('-' = stdout)");

  CLI::App* c_trace = app.add_subcommand("trace", "certify whether tr f vanishes symbolically");
  c_trace->add_option("poly", poly_text, "polynomial expression")->required();
  add_common(c_trace, false);

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate f on generic or concrete matrices");
  c_eval->add_option("poly", poly_text, "polynomial expression")->required();
  c_eval->add_option("--at", at_text,
                     "concrete matrices '[[..],[..]];[[..],[..]]', one per variable "
                     "(omit for the symbolic generic evaluation)");
  add_common(c_eval, false);

  CLI::App* c_clo = app.add_subcommand("closure", "bracket/congruence closure of a matrix span");
  c_clo->add_option("matrices", matrices_text, "seed matrices '[[..],[..]];[[..],[..]]'")
      ->required();
  c_clo->add_option("--kind", kind_text, "closure kind: lie, skew, congruence")
      ->capture_default_str();
  add_common(c_clo, false);

  CLI::App* c_sub = app.add_subcommand("subspace", "print a canonical subspace basis");
  c_sub->add_option("name", name_text, "one of: 0, Z, K, [S,K], S, Z+K, [A,A], A")->required();
  add_common(c_sub, false);

  CLI::App* c_corpus = app.add_subcommand("corpus", "run the bundled regression fixtures");
  c_corpus->add_option("--json", json_path, "write the JSON report to this path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  nct_involution inv = NCT_INV_NONE;
  if (!parse_inv(inv_name, inv)) {
    std::cerr << "error (invalid): unknown involution '" << inv_name
              << "' (expected none, transpose, symplectic, unitary)\n";
    return 1;
  }

  auto parse_poly_arg = [](const std::string& text, Poly& out) -> int {
    Str err;
    nct_status st = nct_poly_parse(text.c_str(), &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return 0;
  };

  if (app.got_subcommand(c_classify)) {
    Poly f;
    if (int rc = parse_poly_arg(poly_text, f)) return rc;
    Str out, err;
    nct_status st = nct_classify(f.p, d, inv, seed, budget, &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_classify);
  }

  if (app.got_subcommand(c_cyc)) {
    Poly f, g;
    if (int rc = parse_poly_arg(poly_text, f)) return rc;
    if (int rc = parse_poly_arg(poly_text2, g)) return rc;
    Str out, err;
    int eq = 0;
    nct_status st = nct_cyc_equiv(f.p, g.p, &eq, &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_cyc_equiv);
  }

  if (app.got_subcommand(c_wit)) {
    Poly f;
    if (int rc = parse_poly_arg(poly_text, f)) return rc;
    Str out, err;
    nct_status st = nct_commutator_witness(f.p, &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_witness);
  }

  if (app.got_subcommand(c_trace)) {
    Poly f;
    if (int rc = parse_poly_arg(poly_text, f)) return rc;
    Str out, err;
    nct_status st = nct_trace_certificate(f.p, d, inv, &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_trace);
  }

  if (app.got_subcommand(c_eval)) {
    Poly f;
    if (int rc = parse_poly_arg(poly_text, f)) return rc;
    Str out, err;
    nct_status st = at_text.empty()
                        ? nct_eval_generic(f.p, d, inv, &out.p, &err.p)
                        : nct_eval_at(f.p, d, inv, at_text.c_str(), &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_eval);
  }

  if (app.got_subcommand(c_clo)) {
    Str out, err;
    nct_status st = nct_closure(kind_text.c_str(), d, inv, matrices_text.c_str(), &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_closure);
  }

  if (app.got_subcommand(c_sub)) {
    Str out, err;
    nct_status st = nct_canonical_subspace(name_text.c_str(), d, inv, &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    return emit(out.view(), json_path, render_subspace);
  }

  if (app.got_subcommand(c_corpus)) {
    Str out, err;
    int ok = 0;
    nct_status st = nct_corpus_run(&ok, &out.p, &err.p);
    if (st != NCT_OK) return report_failure(st, err);
    int rc = 0;
    int emit_rc = emit(out.view(), json_path, [&rc](const json& j) { rc = render_corpus(j); });
    if (emit_rc != 0) return emit_rc;
    if (json_path == "-") rc = ok ? 0 : 2;
    return rc;
  }

  std::cerr << "error (invalid): no subcommand\n";
  return 1;
}
