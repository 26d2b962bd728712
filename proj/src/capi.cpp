#include "nctrace/nctrace.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "classify.hpp"
#include "corpus.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "generic.hpp"
#include "ncpoly.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "subspace.hpp"

struct nct_poly {
  nct::NcPoly rep;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_string(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

void set_json(char** out, const nct::Json& j) {
  if (out) *out = dup_string(nct::dump_json(j));
}

nct_status status_of(nct::errc c) {
  switch (c) {
    case nct::errc::parse_error:
      return NCT_ERR_PARSE;
    case nct::errc::invalid_argument:
    case nct::errc::dimension_mismatch:
    case nct::errc::not_linear:
    case nct::errc::unassigned_variable:
      return NCT_ERR_INVALID;
    case nct::errc::unsupported:
      return NCT_ERR_UNSUPPORTED;
    case nct::errc::limit_exceeded:
    case nct::errc::underdetermined:
      return NCT_ERR_LIMIT;
    case nct::errc::internal_inconsistency:
      return NCT_ERR_INCONSISTENT;
  }
  return NCT_ERR_INTERNAL;
}

template <class Fn>
nct_status guard(char** errmsg, Fn&& fn) {
  if (errmsg) *errmsg = nullptr;
  try {
    fn();
    return NCT_OK;
  } catch (const nct::Error& e) {
    try {
      set_string(errmsg, e.what());
    } catch (...) {
    }
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    return NCT_ERR_NOMEM;
  } catch (const std::exception& e) {
    try {
      set_string(errmsg, e.what());
    } catch (...) {
    }
    return NCT_ERR_INTERNAL;
  }
}

nct::InvKind to_inv(nct_involution inv) {
  switch (inv) {
    case NCT_INV_NONE:
      return nct::InvKind::none;
    case NCT_INV_TRANSPOSE:
      return nct::InvKind::transpose;
    case NCT_INV_SYMPLECTIC:
      return nct::InvKind::symplectic;
    case NCT_INV_UNITARY:
      return nct::InvKind::conj_transpose;
  }
  nct::fail(nct::errc::invalid_argument, "unknown involution selector");
}

const nct::NcPoly& ref(const nct_poly* p) {
  if (!p) nct::fail(nct::errc::invalid_argument, "null polynomial handle");
  return p->rep;
}

const char* require(const char* s, const char* what) {
  if (!s) nct::fail(nct::errc::invalid_argument, std::string("null ") + what);
  return s;
}

} // namespace

extern "C" {

const char* nct_status_name(nct_status s) {
  switch (s) {
    case NCT_OK:
      return "ok";
    case NCT_ERR_PARSE:
      return "parse";
    case NCT_ERR_INVALID:
      return "invalid";
    case NCT_ERR_UNSUPPORTED:
      return "unsupported";
    case NCT_ERR_LIMIT:
      return "limit";
    case NCT_ERR_INCONSISTENT:
      return "inconsistent";
    case NCT_ERR_NOMEM:
      return "nomem";
    case NCT_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void nct_string_free(char* s) { std::free(s); }

nct_status nct_poly_parse(const char* text, nct_poly** out, char** errmsg) {
  return guard(errmsg, [&] {
    nct::NcPoly p = nct::parse_poly(require(text, "input text"));
    if (out) *out = new nct_poly{std::move(p)};
  });
}

void nct_poly_free(nct_poly* p) { delete p; }

nct_status nct_poly_print(const nct_poly* p, char** out, char** errmsg) {
  return guard(errmsg, [&] { set_string(out, ref(p).str()); });
}

nct_status nct_poly_star(const nct_poly* p, nct_poly** out, char** errmsg) {
  return guard(errmsg, [&] {
    nct::NcPoly s = ref(p).star();
    if (out) *out = new nct_poly{std::move(s)};
  });
}

nct_status nct_cyc_equiv(const nct_poly* f, const nct_poly* g, int* equivalent, char** json_out,
                         char** errmsg) {
  return guard(errmsg, [&] {
    bool eq = nct::cyc_equiv(ref(f), ref(g));
    if (equivalent) *equivalent = eq ? 1 : 0;
    set_json(json_out, nct::cyc_equiv_to_json(ref(f), ref(g), eq));
  });
}

nct_status nct_commutator_witness(const nct_poly* f, char** json_out, char** errmsg) {
  return guard(errmsg, [&] {
    auto w = nct::commutator_witness(ref(f));
    set_json(json_out, nct::witness_to_json(ref(f), w));
  });
}

nct_status nct_classify(const nct_poly* f, int d, nct_involution inv, uint64_t seed, int budget,
                        char** json_out, char** errmsg) {
  return guard(errmsg, [&] {
    int b = budget > 0 ? budget : nct::kDefaultSampleBudget;
    nct::ClassReport rep = nct::classify(ref(f), d, to_inv(inv), seed, b);
    set_json(json_out, nct::class_report_to_json(rep));
  });
}

nct_status nct_trace_certificate(const nct_poly* f, int d, nct_involution inv, char** json_out,
                                 char** errmsg) {
  return guard(errmsg, [&] {
    const nct::NcPoly& poly = ref(f);
    nct::InvKind kind = to_inv(inv);
    nct::GenericContext ctx(d, kind, poly.max_var_index());
    nct::Certificate cert = nct::trace_zero(poly, ctx);
    set_json(json_out, nct::trace_certificate_to_json(poly, cert, d, kind));
  });
}

nct_status nct_eval_generic(const nct_poly* f, int d, nct_involution inv, char** json_out,
                            char** errmsg) {
  return guard(errmsg, [&] {
    const nct::NcPoly& poly = ref(f);
    nct::InvKind kind = to_inv(inv);
    nct::GenericContext ctx(d, kind, poly.max_var_index());
    nct::Mat<nct::CPoly> value = nct::eval_generic(poly, ctx);
    set_json(json_out, nct::generic_eval_to_json(value, kind));
  });
}

nct_status nct_eval_at(const nct_poly* f, int d, nct_involution inv, const char* matrices,
                       char** json_out, char** errmsg) {
  return guard(errmsg, [&] {
    auto mats = nct::parse_matrix_list(require(matrices, "matrix list"));
    nct::Mat<nct::Scalar> value = nct::eval_numeric(ref(f), d, mats, to_inv(inv));
    set_json(json_out, nct::eval_to_json(value));
  });
}

nct_status nct_canonical_subspace(const char* name, int d, nct_involution inv, char** json_out,
                                  char** errmsg) {
  return guard(errmsg, [&] {
    nct::CanonicalName nm = nct::canonical_name_from_str(require(name, "subspace name"));
    nct::Subspace s = nct::canonical_subspace(d, to_inv(inv), nm);
    set_json(json_out, nct::subspace_to_json(s, nm));
  });
}

nct_status nct_closure(const char* kind, int d, nct_involution inv, const char* matrices,
                       char** json_out, char** errmsg) {
  return guard(errmsg, [&] {
    std::string k = require(kind, "closure kind");
    auto seeds = nct::parse_matrix_list(require(matrices, "matrix list"));
    for (const auto& m : seeds)
      if (m.dim() != d) nct::fail(nct::errc::dimension_mismatch, "seed matrices must be d x d");
    nct::InvKind kk = to_inv(inv);
    nct::Subspace input = nct::Subspace::span(d, seeds);
    nct::Subspace closed(d);
    nct::InvKind name_kind = kk;
    if (k == "lie") {
      closed = nct::lie_ideal_closure(d, seeds);
    } else if (k == "skew") {
      closed = nct::skew_ideal_closure(d, kk, seeds);
    } else if (k == "congruence") {
      closed = nct::congruence_closure(d, seeds);
      // the named fixed points of this closure live in the transpose family
      name_kind = nct::InvKind::transpose;
    } else {
      nct::fail(nct::errc::invalid_argument,
                "closure kind must be one of lie, skew, congruence");
    }
    nct::CanonicalName nm = nct::classify_subspace(closed, name_kind);
    set_json(json_out, nct::closure_to_json(input, closed, nm, k));
  });
}

nct_status nct_corpus_run(int* all_pass, char** json_out, char** errmsg) {
  return guard(errmsg, [&] {
    auto results = nct::run_corpus();
    if (all_pass) *all_pass = nct::corpus_ok(results) ? 1 : 0;
    set_json(json_out, nct::corpus_to_json(results));
  });
}

} // extern "C"
