#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "partcat/category.hpp"
#include "partcat/morphism.hpp"
#include "partcat/partition.hpp"
#include "partcat/projectives.hpp"
#include "partcat/roots.hpp"

namespace partcat {

using Json = nlohmann::ordered_json;

// {"upper": k, "lower": l, "blocks": [[1,-3],[2],[-1,-2]]}, -j for j'.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"named": "P_even"} or {"generated": {"generators": [...], "bound": 8}}.
Json to_json(const Category& c);
Category category_from_json(const Json& j);

// {"source":k,"target":l,"terms":[{"partition":...,"coeff":{"0":"1","-1":"-1"}}]}
Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const RootReport& r);
Json to_json(const std::vector<ScanEntry>& scan);
Json to_json(const std::vector<CensusDegree>& census);

// One row per (k, root); columns k,basis,degree,root_re,root_im,multiplicity,exact,verdict.
void write_scan_csv(std::ostream& os, const std::vector<ScanEntry>& scan);
// One row per class; columns k,representative,through_blocks,group_order,class_count.
void write_census_csv(std::ostream& os, const std::vector<CensusDegree>& census);

std::string format_double(double x);

}  // namespace partcat
