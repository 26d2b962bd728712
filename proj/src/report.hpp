#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "corpus.hpp"
#include "cyclic.hpp"
#include "generic.hpp"
#include "subspace.hpp"

namespace nct {

using Json = nlohmann::ordered_json;

/// All builders produce documents with `"schema": 1`; serialization through
/// Json::dump is deterministic for a fixed document.

Json certificate_to_json(const Certificate& c);
Json class_report_to_json(const ClassReport& r);

Json subspace_to_json(const Subspace& s, CanonicalName name);
Json closure_to_json(const Subspace& input, const Subspace& closed, CanonicalName name,
                     const std::string& kind);
Json witness_to_json(const NcPoly& f, const std::optional<CommutatorWitness>& w);
Json cyc_equiv_to_json(const NcPoly& f, const NcPoly& g, bool equivalent);
Json eval_to_json(const Mat<Scalar>& value);
Json generic_eval_to_json(const Mat<CPoly>& value, InvKind inv);
Json trace_certificate_to_json(const NcPoly& f, const Certificate& c, int d, InvKind inv);
Json corpus_to_json(const std::vector<CorpusResult>& results);

/// Canonical serialized form: 2-space indentation, '\n' terminated.
std::string dump_json(const Json& j);

} // namespace nct
