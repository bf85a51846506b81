#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "bisets/biset.hpp"
#include "bisets/category.hpp"
#include "bisets/group.hpp"
#include "bisets/mackey.hpp"

namespace bisets {

using nlohmann::json;

// Parse errors throw std::invalid_argument with a message naming the field.

GroupSpec group_spec_from_json(const json& j);
json group_spec_to_json(const GroupSpec& spec);

json subgroup_to_json(const Subgroup& h);
Subgroup subgroup_from_json(const FiniteGroup& g, const json& j);

json rep_to_json(const StandardRep& rep);
StandardRep rep_from_json(const FiniteGroup& g, const json& j);

json key_to_json(const CanonicalKey& key);

json morphism_to_json(const BisetMorphism& m);
BisetMorphism morphism_from_json(const FiniteGroup& g, const json& j);

json matrix_morphism_to_json(const MatrixMorphism& m);
json gmap_to_json(const GMap& f);
json check_report_to_json(const CheckReport& rep);
json explicit_biset_to_json(const ExplicitBiset& x);

// MackeyData travels with its group spec; the loaded group is owned by the
// returned handle.
struct LoadedMackey {
    std::shared_ptr<FiniteGroup> group;
    json spec;
    MackeyData data;
};

json mackey_to_json(const MackeyData& d, const json& group_spec);
LoadedMackey mackey_from_json(const json& j);

}  // namespace bisets
