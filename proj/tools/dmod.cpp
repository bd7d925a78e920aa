#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dmod/bernstein.hpp"
#include "dmod/oracle.hpp"
#include "dmod/parse.hpp"
#include "dmod/report_json.hpp"

namespace {

// 0 success, 1 bad input, 2 broken internal invariant, 3 verification mismatch.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInternal = 2;
constexpr int kExitMismatch = 3;

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dmod::ParseError("cannot open file: " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dmod::ModulePresentation load(const std::string& path) {
  return dmod::parse_presentation(read_file(path));
}

void print_basis(const dmod::Basis& g) {
  std::cout << "groebner basis (" << g.size() << " element" << (g.size() == 1 ? "" : "s")
            << "):\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    std::cout << "g" << (i + 1) << " = " << to_string(g[i]) << "\n";
}

void print_invariants(const dmod::BernsteinReport& rep) {
  std::cout << dmod::chi_string(rep.chi) << "\n";
  std::cout << "d = " << rep.inv.d << "\n";
  std::cout << "a_d = " << dmod::to_string(rep.inv.a_d) << "\n";
  std::cout << "multiplicity = " << dmod::to_string(rep.inv.multiplicity) << "\n";
  std::cout << "literal_paper_multiplicity = "
            << dmod::to_string(rep.inv.literal_paper_multiplicity) << "\n";
  std::cout << "delta = " << dmod::to_string(rep.inv.delta) << "\n";
  std::cout << "krull type " << rep.krull.type_string() << "\n";
  std::cout << "krull dim " << (rep.krull.dim ? "= " + rep.krull.dim_string()
                                              : rep.krull.dim_string())
            << "\n";
}

int default_rmax(const dmod::Basis& g) {
  int deg = 0;
  for (const auto& f : g) deg = std::max(deg, f.leading_monomial().degree());
  return std::max(10, 2 * deg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and Bernstein counting polynomials over the Weyl algebra"};
  app.require_subcommand(1);

  std::string file;
  std::string points_text;
  int point_dim = 0;
  int rmax = -1;
  bool json_out = false;
  bool reduce_basis = false;

  auto add_common = [&](CLI::App* cmd, bool with_file) {
    if (with_file)
      cmd->add_option("file", file, "presentation file")->required();
    cmd->add_flag("--json", json_out, "emit JSON");
    return cmd;
  };

  CLI::App* cmd_groebner =
      add_common(app.add_subcommand("groebner", "compute a Groebner basis of the relations"),
                 true);
  cmd_groebner->add_flag("--reduce-basis", reduce_basis, "drop leading-monomial-redundant elements");

  CLI::App* cmd_bernstein = add_common(
      app.add_subcommand("bernstein", "compute the counting polynomial chi"), true);
  cmd_bernstein->add_flag("--reduce-basis", reduce_basis,
                          "drop leading-monomial-redundant elements");

  CLI::App* cmd_invariants = add_common(
      app.add_subcommand("invariants", "chi plus the derived module invariants"), true);
  cmd_invariants->add_flag("--reduce-basis", reduce_basis,
                           "drop leading-monomial-redundant elements");

  CLI::App* cmd_verify = add_common(
      app.add_subcommand("verify", "check chi against enumerated dimensions"), true);
  cmd_verify->add_option("--rmax", rmax, "largest degree bound checked");

  CLI::App* cmd_kolchin =
      add_common(app.add_subcommand("kolchin", "counting polynomial of a point set"), false);
  cmd_kolchin->add_option("--points", points_text, "semicolon-separated points, e.g. \"(2,0);(0,3)\"");
  cmd_kolchin->add_option("--m", point_dim, "ambient dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (cmd_groebner->parsed()) {
      const dmod::BernsteinReport rep = dmod::full_report(load(file), reduce_basis);
      if (json_out)
        std::cout << dmod::report_to_json(rep).dump(2) << "\n";
      else
        print_basis(rep.groebner);
    } else if (cmd_bernstein->parsed()) {
      const dmod::BernsteinReport rep = dmod::full_report(load(file), reduce_basis);
      if (json_out)
        std::cout << dmod::report_to_json(rep).dump(2) << "\n";
      else
        std::cout << dmod::chi_string(rep.chi) << "\n";
    } else if (cmd_invariants->parsed()) {
      const dmod::BernsteinReport rep = dmod::full_report(load(file), reduce_basis);
      if (json_out)
        std::cout << dmod::report_to_json(rep).dump(2) << "\n";
      else
        print_invariants(rep);
    } else if (cmd_verify->parsed()) {
      const dmod::ModulePresentation p = load(file);
      const dmod::BernsteinReport rep = dmod::full_report(p);
      const int bound = rmax >= 0 ? rmax : default_rmax(rep.groebner);
      const dmod::DimensionTable table =
          dmod::dimension_table(rep.groebner, rep.chi, p.n, p.m, bound);
      if (json_out) {
        nlohmann::json j = dmod::report_to_json(rep);
        j["table"] = dmod::table_to_json(table);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << dmod::chi_string(rep.chi) << "\n";
        std::cout << "  r  dim(M_r)  chi(r)  agree\n";
        for (const auto& row : table.rows)
          std::cout << "  " << row.r << "  " << row.dim << "  " << dmod::to_string(row.chi)
                    << "  " << (row.agree ? "yes" : "no") << "\n";
        if (table.first_agreement_r >= 0)
          std::cout << "agreement from r = " << table.first_agreement_r << " through r = "
                    << bound << "\n";
      }
      if (table.first_agreement_r < 0)
        throw MismatchError("dimensions and chi disagree at r = " + std::to_string(bound));
    } else if (cmd_kolchin->parsed()) {
      const dmod::PointSet a = dmod::parse_point_set(points_text, point_dim);
      const dmod::NumericalPolynomial omega = dmod::kolchin_polynomial(a);
      if (json_out) {
        nlohmann::json j;
        j["m"] = a.dim;
        j["points"] = a.points;
        j["omega_binomial"] = nlohmann::json::array();
        for (const dmod::ZZ& c : omega.binom_coeffs())
          j["omega_binomial"].push_back(c.get_si());
        j["omega_monomial"] = nlohmann::json::array();
        for (const dmod::QQ& c : to_monomial(omega))
          j["omega_monomial"].push_back(dmod::to_string(c));
        std::cout << j.dump(2) << "\n";
      } else {
        const std::string b = dmod::binomial_string(omega);
        const std::string m = dmod::monomial_string(omega);
        std::cout << "omega = " << b << (b == m ? "" : " = " + m) << "\n";
      }
    }
  } catch (const MismatchError& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const dmod::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
