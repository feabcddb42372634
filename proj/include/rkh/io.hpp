#ifndef RKH_IO_HPP
#define RKH_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rkh/checks.hpp"
#include "rkh/homology.hpp"
#include "rkh/quasitree.hpp"

namespace rkh {

using Json = nlohmann::json;

// [{"i":..,"j":..,"rank":..,"torsion":[..]}, ...] sorted by (j, i)
Json to_json(const BigradedGroup& g);
BigradedGroup group_from_json(const Json& j);

// edges are listed by label
Json to_json(const RibbonGraph& g, const std::vector<QuasiTreeRecord>& records);
std::string quasi_tree_csv(const RibbonGraph& g, const std::vector<QuasiTreeRecord>& records);
std::string quasi_tree_table(const RibbonGraph& g, const std::vector<QuasiTreeRecord>& records);

Json to_json(const CheckReport& r);
std::string format_report(const CheckReport& r);

// "{1,3}"
std::string edge_labels(const RibbonGraph& g, EdgeSet s);

}  // namespace rkh

#endif
