#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kempkit/isoperimetry.hpp"
#include "kempkit/kemperman.hpp"

namespace kempkit {

using json = nlohmann::json;

inline constexpr const char* kCertificateSchema = "kcert/1";

/// Element as a residue tuple, e.g. [1,3].
json element_to_json(const Group& g, Element x);
/// Accepts a residue tuple or a flat index.
Element element_from_json(const Group& g, const json& j);

/// Sorted list of residue tuples.
json subset_to_json(const GroupSubset& a);
GroupSubset subset_from_json(const Group& g, const json& j);

/// Compact form: lowercase hex bitmask with "0x" prefix, bit i = element i.
std::string subset_to_hex(const GroupSubset& a);
GroupSubset subset_from_hex(const Group& g, std::string_view hex);

json pair_kind_to_json(const Group& g, const ElementaryPairKind& kind);
ElementaryPairKind pair_kind_from_json(const Group& g, const json& j);

/// kcert/1: schema, group, H, A0, A1, B0, B1, pair, quotient_element, branch.
json certificate_to_json(const KempermanCertificate& cert);
/// Throws Parse on schema or shape errors. Semantic checks are left to
/// verify_certificate.
KempermanCertificate certificate_from_json(const json& j);

json condition_to_json(const GroupSubset& a, const GroupSubset& b, const ConditionI& cond);
json kappa_report_to_json(const KappaReport& report);
json hyper_atom_report_to_json(const HyperAtomReport& report);
json dichotomy_to_json(const QuasiperiodDichotomy& d, const Group& g);

/// "7" or "(1,3)"; whitespace is ignored.
Element parse_element(const Group& g, std::string_view text);
/// "0,1,2", "(0,1),(1,3)", optionally wrapped in braces; "" or "{}" is empty.
/// Parse errors report the character position.
GroupSubset parse_subset(const Group& g, std::string_view text);

}  // namespace kempkit
