#pragma once

#include <json.hpp>

#include "haarcay/cayley.hpp"
#include "haarcay/families.hpp"
#include "haarcay/group.hpp"
#include "haarcay/transitivity.hpp"

namespace haarcay {

using Json = nlohmann::json;

/// Accepts {"family": "...", ...}. Family names are matched case-insensitively
/// with the aliases Z/Cyclic, D/Dihedral, Q8/Quaternion, MpMN, MpMN1,
/// MillerMoreno/MM, Presented, DirectProduct/Product.
/// Throws PreconditionError on unknown families or missing fields.
FamilySpec family_from_json(const Json& j);
Json family_to_json(const FamilySpec& spec);

/// Order, tag, generator labels and the full multiplication table.
Json group_to_json(const GroupTable& h);

Json perm_to_json(const Perm& p);
Json certificate_to_json(const Certificate& c);
Json basic_sets_to_json(const TransitivityModule& m);
Json law_report_to_json(const LawReport& r);

}  // namespace haarcay
