#ifndef DMOD_REPORT_JSON_HPP
#define DMOD_REPORT_JSON_HPP

#include <json.hpp>

#include "dmod/bernstein.hpp"
#include "dmod/oracle.hpp"

namespace dmod {

// {
//   "n": 2, "m": 2,
//   "groebner": ["x1^2 d1^3 e1 + d1^5 e1", ...],
//   "chi_binomial": [15, -5, -5, 6],
//   "chi_monomial": ["11", "-3/2", "7/2", "1"],
//   "d": 3, "a_d": 6,
//   "multiplicity": 6, "literal_paper_multiplicity": 36,
//   "delta": 0,
//   "krull_type": "< 4", "krull_dim": "not determined"
// }
nlohmann::json report_to_json(const BernsteinReport& rep);

nlohmann::json table_to_json(const DimensionTable& table);

}  // namespace dmod

#endif
