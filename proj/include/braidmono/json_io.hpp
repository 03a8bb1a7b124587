#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidmono/factorization.hpp"
#include "braidmono/generify.hpp"
#include "braidmono/singular.hpp"
#include "braidmono/zvk.hpp"

namespace braidmono {

// Key order is part of the output format, so files diff cleanly.
using Json = nlohmann::ordered_json;

// {"strands": d, "letters": [i, -j, ...]}
Json braid_to_json(const BraidWord& b);

// Accepts the object form above, or (when strands_hint > 0) the text form
// "s1 s2^-1" as printed by BraidWord::str(). The text form carries no strand
// count of its own, so a caller must supply one from context.
BraidWord braid_from_json(const Json& j, int strands_hint = 0);
BraidWord braid_from_text(const std::string& text, int strands);

// {"strands": d, "marked": bool, "entries": [braid, ...], "labels":
//  [string|null, ...]}. Entries are emitted in text form; both forms are
// accepted on input, and "labels" may be omitted (all entries unlabeled).
Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

// {"generators": [name, ...], "relators": [[letter, ...], ...]}
Json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

// {"type": 0|1, "milnor": n, "branches": [{"milnor": n, "axis_mult_1": n,
//  "axis_mult_2": n (type 0 only), "components": n}, ...],
//  "pairwise_intersections": [n, ...]}
Json local_point_to_json(const LocalPointData& d);
LocalPointData local_point_from_json(const Json& j);

// "p/q" in lowest terms, or a bare integer when the denominator is 1.
std::string rational_to_text(const Rational& r);
Rational rational_from_text(const std::string& text);

// Sidecar inputs; braids inside may use either accepted form.
// [{"conjugator": braid, "local": braid, "indices": [i, ...]}, ...]
std::vector<GenericFiberEntry> fiber_rows_from_json(const Json& j, int strands);
// {"lines": n, "entries": [{"tau": braid, "beta": braid, "cuts": [a, ...],
//  "label": string?}, ...], "vertical_indices": [i, ...]}
ArrangementInput arrangement_from_json(const Json& j);
// rule = cusp|node|inflection; fields "base", "conjugator", plus "order" for
// inflection and optional "mirror" for cusp.
TangencyModel tangency_model_from_json(const std::string& rule, const Json& j,
                                       int strands);

// Fixed rendering: two-space indent plus trailing newline. Identical values
// always serialize to identical bytes.
std::string dump_canonical(const Json& j);

// All three throw ValidationError on syntax errors or unreadable paths.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace braidmono
