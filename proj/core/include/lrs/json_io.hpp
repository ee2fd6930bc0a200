#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lrs/closed_form.hpp"
#include "lrs/genfunc.hpp"
#include "lrs/identities.hpp"
#include "lrs/irs_algebra.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

/// {"coefficients": ["1", "1"], "initials": ["0", "1"]}. Rationals are strings
/// ("p/q" or "p"); plain JSON integers are accepted on input.
/// Throws Error(parse_error) on malformed documents.
SequenceSpec spec_from_json(std::string_view text);
std::string spec_to_json(const SequenceSpec& spec);
SequenceSpec load_spec_file(const std::string& path);  // Error(io_error) if unreadable

std::string terms_to_json(long from, const std::vector<Rational>& terms);
std::string genfunc_to_json(const RationalGF& gf);
/// {"roots": [{"re", "im", "mult"}], "residuals": [...], "precision_bits": P}
std::string roots_to_json(const RootDecomposition& roots, int digits);
/// {"terms": [{"delta": 1, "c": "6/19"}, ...]}
std::string representation_to_json(const IrsRepresentation& rep);
/// {"identity", "ranges", "passed", "cases", "counterexample"?: {"parameters", "lhs", "rhs"}}
std::string verdict_to_json(const IdentityVerdict& verdict);
std::string cells_to_json(const std::vector<std::vector<std::string>>& cells);

}  // namespace lrs
