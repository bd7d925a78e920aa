#include "dmod/report_json.hpp"

namespace dmod {

namespace {

long long to_int64(const ZZ& z) {
  if (!z.fits_slong_p()) throw std::logic_error("coefficient exceeds 64 bits in report");
  return z.get_si();
}

}  // namespace

nlohmann::json report_to_json(const BernsteinReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["groebner"] = nlohmann::json::array();
  for (const ModuleElement& g : rep.groebner) j["groebner"].push_back(to_string(g));
  j["chi_binomial"] = nlohmann::json::array();
  for (const ZZ& c : rep.chi.binom_coeffs()) j["chi_binomial"].push_back(to_int64(c));
  j["chi_monomial"] = nlohmann::json::array();
  for (const QQ& c : to_monomial(rep.chi)) j["chi_monomial"].push_back(to_string(c));
  j["d"] = rep.inv.d;
  j["a_d"] = to_int64(rep.inv.a_d);
  j["multiplicity"] = to_int64(rep.inv.multiplicity);
  j["literal_paper_multiplicity"] = to_int64(rep.inv.literal_paper_multiplicity);
  j["delta"] = to_int64(rep.inv.delta);
  j["krull_type"] = rep.krull.type_string();
  j["krull_dim"] = rep.krull.dim_string();
  return j;
}

nlohmann::json table_to_json(const DimensionTable& table) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const DimensionRow& row : table.rows) {
    j["rows"].push_back({{"r", row.r},
                         {"dim", row.dim},
                         {"chi", to_int64(row.chi)},
                         {"agree", row.agree}});
  }
  j["first_agreement_r"] = table.first_agreement_r;
  return j;
}

}  // namespace dmod
