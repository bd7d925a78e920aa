#ifndef DMOD_DETAIL_FORMAT_HPP
#define DMOD_DETAIL_FORMAT_HPP

#include <string>
#include <utility>
#include <vector>

#include "dmod/numeric.hpp"

namespace dmod {

struct WeylMonomial;

namespace detail {

// "|c| suffix" with the coefficient omitted when it is 1 and a suffix exists.
std::string term_body(const QQ& coeff, const std::string& suffix);

// Joins rendered term bodies with their signs: "a - b + c"; "0" when empty.
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces);

// "x1^2 x2 d1^3" (empty string for the unit monomial).
std::string power_list(const WeylMonomial& m);

}  // namespace detail
}  // namespace dmod

#endif
