#include "report.hpp"

namespace nct {

namespace {

Json cpoly_matrix_to_json(const Mat<CPoly>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json scalar_matrix_to_json(const Mat<Scalar>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json basis_to_json(const std::vector<Mat<Scalar>>& basis) {
  Json arr = Json::array();
  for (const auto& m : basis) arr.push_back(matrix_str(m));
  return arr;
}

} // namespace

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["check"] = c.check;
  j["verdict"] = c.verdict;
  j["theorem"] = c.theorem;
  j["statement"] = c.statement;
  Json ev = Json::object();
  if (c.zero_evidence) ev["zero"] = true;
  if (c.central_value) ev["central_value"] = c.central_value->str();
  if (c.trace_poly) ev["trace_poly"] = c.trace_poly->str();
  if (c.residue) ev["residue"] = cpoly_matrix_to_json(*c.residue);
  j["evidence"] = std::move(ev);
  j["warnings"] = c.warnings;
  return j;
}

Json class_report_to_json(const ClassReport& r) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "classification";
  j["verdict"] = r.verdict;
  j["paper_case"] = paper_case_label(r.paper_case);
  j["d"] = r.d;
  j["involution"] = inv_name(r.inv);
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  Json span;
  span["name"] = canonical_name_str(r.span_name);
  span["dimension"] = r.span_dim;
  span["sampled_dimension"] = r.sampled.dim();
  span["basis"] = basis_to_json(r.sampled.basis());
  j["span"] = std::move(span);
  j["samples_used"] = r.samples_used;
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
  j["certificates"] = std::move(certs);
  j["warnings"] = r.warnings;
  return j;
}

Json subspace_to_json(const Subspace& s, CanonicalName name) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "subspace";
  j["d"] = s.matrix_dim();
  j["name"] = canonical_name_str(name);
  j["dimension"] = s.dim();
  j["basis"] = basis_to_json(s.basis());
  return j;
}

Json closure_to_json(const Subspace& input, const Subspace& closed, CanonicalName name,
                     const std::string& kind) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "closure";
  j["closure"] = kind;
  j["d"] = closed.matrix_dim();
  Json in;
  in["dimension"] = input.dim();
  in["basis"] = basis_to_json(input.basis());
  j["input"] = std::move(in);
  Json out;
  out["name"] = canonical_name_str(name);
  out["dimension"] = closed.dim();
  out["basis"] = basis_to_json(closed.basis());
  j["closed"] = std::move(out);
  return j;
}

Json witness_to_json(const NcPoly& f, const std::optional<CommutatorWitness>& w) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "witness";
  j["polynomial"] = f.str();
  j["exists"] = w.has_value();
  if (w) {
    Json pairs = Json::array();
    for (const auto& [g, h] : w->pairs) {
      Json p;
      p["left"] = g.str();
      p["right"] = h.str();
      pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    j["verified"] = true;
  }
  return j;
}

Json cyc_equiv_to_json(const NcPoly& f, const NcPoly& g, bool equivalent) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "cyc-equiv";
  j["lhs"] = f.str();
  j["rhs"] = g.str();
  j["equivalent"] = equivalent;
  return j;
}

Json eval_to_json(const Mat<Scalar>& value) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "evaluation";
  j["d"] = value.dim();
  j["value"] = scalar_matrix_to_json(value);
  j["trace"] = value.trace().str();
  return j;
}

Json generic_eval_to_json(const Mat<CPoly>& value, InvKind inv) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "generic-evaluation";
  j["d"] = value.dim();
  j["involution"] = inv_name(inv);
  j["value"] = cpoly_matrix_to_json(value);
  j["trace"] = value.trace().str();
  return j;
}

Json corpus_to_json(const std::vector<CorpusResult>& results) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "corpus";
  j["ok"] = corpus_ok(results);
  Json arr = Json::array();
  for (const auto& r : results) {
    Json e;
    e["name"] = r.name;
    e["pass"] = r.pass;
    e["detail"] = r.detail;
    arr.push_back(std::move(e));
  }
  j["results"] = std::move(arr);
  return j;
}

Json trace_certificate_to_json(const NcPoly& f, const Certificate& c, int d, InvKind inv) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "trace-certificate";
  j["polynomial"] = f.str();
  j["d"] = d;
  j["involution"] = inv_name(inv);
  j["certificate"] = certificate_to_json(c);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace nct
