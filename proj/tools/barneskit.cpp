#include "barneskit/barnes.hpp"
#include "barneskit/bernoulli.hpp"
#include "barneskit/dedekind.hpp"
#include "barneskit/identities.hpp"
#include "barneskit/version.hpp"
#include "barneskit/zeta.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using barneskit::AVec;
using barneskit::CheckReport;
using barneskit::IdentityRegistry;
using barneskit::Poly;
using barneskit::Rational;
using nlohmann::json;

json poly_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

// Floats are printed with 15 significant digits.
json float_json(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return json::parse(buf);
}

void emit(const std::string& command, json inputs, json result, json metadata = json::object()) {
  metadata["version"] = barneskit::kVersion;
  const json record{{"command", command},
                    {"inputs", std::move(inputs)},
                    {"result", std::move(result)},
                    {"metadata", std::move(metadata)}};
  std::cout << record.dump() << "\n";
}

std::vector<long> parse_integer_list(const std::string& csv, const char* what) {
  std::vector<long> out;
  const AVec parsed = AVec::parse(csv);
  for (const auto& e : parsed.entries()) {
    if (!e.is_integer())
      throw std::invalid_argument(std::string(what) + " must be integers, got " + e.str());
    out.push_back(e.to_long());
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';  // RFC 4180: double any inner quote
    out += c;
  }
  out += "\"";
  return out;
}

int report_sweep(const std::string& id, const std::string& sweep_text, std::uint64_t seed,
                 bool csv) {
  const auto ranges = barneskit::SweepRanges::parse(sweep_text);
  const auto reports = IdentityRegistry::instance().sweep(id, ranges, seed);
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.status == barneskit::CheckStatus::Pass) ++passed;
    else if (r.status == barneskit::CheckStatus::Fail) ++failed;
    else ++skipped;
  }
  if (csv) {
    std::cout << "id,status,mode,params,lhs,rhs,detail\n";
    for (const auto& r : reports)
      std::cout << r.item.id << "," << to_string(r.status) << "," << to_string(r.item.mode) << ","
                << csv_escape(r.item.params.dump()) << "," << csv_escape(r.lhs) << ","
                << csv_escape(r.rhs) << "," << csv_escape(r.detail) << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit("verify", json{{"id", id}, {"sweep", sweep_text}},
         std::move(arr),
         json{{"seed", seed}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}});
  }
  return failed == 0 ? 0 : 1;
}

int report_all(std::uint64_t seed, bool csv) {
  const auto& reg = IdentityRegistry::instance();
  json rows = json::array();
  json failures = json::array();
  std::size_t failed_total = 0;
  for (const auto& id : reg.ids()) {
    const auto& entry = reg.entry(id);
    const auto reports = reg.sweep(id, barneskit::SweepRanges{}, seed);
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
      if (r.status == barneskit::CheckStatus::Pass) ++passed;
      else if (r.status == barneskit::CheckStatus::Fail) ++failed;
      else ++skipped;
      if (r.status == barneskit::CheckStatus::Fail && failures.size() < 50)
        failures.push_back(to_json(r));
    }
    failed_total += failed;
    rows.push_back(json{{"id", id},
                        {"statement", entry.statement},
                        {"mode", entry.mode_text},
                        {"cases", reports.size()},
                        {"passed", passed},
                        {"failed", failed},
                        {"skipped", skipped}});
  }
  if (csv) {
    std::cout << "id,statement,mode,cases,passed,failed,skipped\n";
    for (const auto& row : rows)
      std::cout << row.at("id").get<std::string>() << ","
                << csv_escape(row.at("statement").get<std::string>()) << ","
                << csv_escape(row.at("mode").get<std::string>()) << ","
                << row.at("cases") << "," << row.at("passed") << "," << row.at("failed") << ","
                << row.at("skipped") << "\n";
  } else {
    emit("verify", json{{"all", true}}, std::move(rows),
         json{{"seed", seed}, {"failed", failed_total}, {"failures", std::move(failures)}});
  }
  return failed_total == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bernoulli-Barnes numbers, Fourier-Dedekind sums, restricted partition "
               "counts and Barnes zeta values, with a registry of identity checks"};
  app.require_subcommand(1);

  // bernoulli K [--order N] [--poly]
  long bk = 0, border = 1;
  bool bpoly = false;
  auto* sub_bern = app.add_subcommand("bernoulli", "Bernoulli numbers/polynomials, any order");
  sub_bern->add_option("k", bk, "index k >= 0")->required()->check(CLI::NonNegativeNumber);
  sub_bern->add_option("--order", border, "order n >= 1 (default 1)")->check(CLI::PositiveNumber);
  sub_bern->add_flag("--poly", bpoly, "return the polynomial in x");

  // barnes-number K --a LIST
  long bnk = 0;
  std::string bna;
  auto* sub_bn = app.add_subcommand("barnes-number", "Bernoulli-Barnes number B_k(a)");
  sub_bn->add_option("k", bnk, "index k >= 0")->required()->check(CLI::NonNegativeNumber);
  sub_bn->add_option("--a", bna, "comma-separated positive rationals, e.g. 1,2,3/2")->required();

  // barnes-poly K --a LIST
  long bpk = 0;
  std::string bpa;
  auto* sub_bp = app.add_subcommand("barnes-poly", "Bernoulli-Barnes polynomial B_k(x;a)");
  sub_bp->add_option("k", bpk, "index k >= 0")->required()->check(CLI::NonNegativeNumber);
  sub_bp->add_option("--a", bpa, "comma-separated positive rationals")->required();

  // partition --parts LIST T [--method dp|closed|popoviciu]
  std::string pparts, pmethod = "dp";
  long pt = 0;
  auto* sub_part = app.add_subcommand("partition", "restricted partition count p_A(t)");
  sub_part->add_option("--parts", pparts, "comma-separated positive integers")->required();
  sub_part->add_option("t", pt, "t >= 0")->required()->check(CLI::NonNegativeNumber);
  sub_part->add_option("--method", pmethod, "dp | closed | popoviciu (default dp)")
      ->check(CLI::IsMember({"dp", "closed", "popoviciu"}));

  // fds R --others LIST --mod A [--float]
  long fr = 0, fmod = 0;
  std::string fothers;
  bool ffloat = false;
  auto* sub_fds = app.add_subcommand("fds", "Fourier-Dedekind sum sigma_r(others; mod)");
  sub_fds->add_option("r", fr, "residue class (any integer)")->required();
  sub_fds->add_option("--others", fothers, "comma-separated positive integers (may be omitted)");
  sub_fds->add_option("--mod", fmod, "modulus >= 1")->required()->check(CLI::PositiveNumber);
  sub_fds->add_flag("--float", ffloat, "evaluate by complex summation instead of exactly");

  // zeta --kind ... --s S --x X [--a LIST] [--n N] [--tol T]
  std::string zkind, za;
  double zs = 0, zx = 0, ztol = 1e-10;
  long zn = 1;
  auto* sub_zeta = app.add_subcommand("zeta", "Hurwitz / Barnes zeta evaluation");
  sub_zeta->add_option("--kind", zkind, "hurwitz | barnes-direct | barnes-decomposed | order-n")
      ->required()
      ->check(CLI::IsMember({"hurwitz", "barnes-direct", "barnes-decomposed", "order-n"}));
  sub_zeta->add_option("--s", zs, "evaluation point s")->required();
  sub_zeta->add_option("--x", zx, "shift x > 0")->required();
  sub_zeta->add_option("--a", za, "parameter vector for the barnes kinds");
  sub_zeta->add_option("--n", zn, "order for kind order-n")->check(CLI::PositiveNumber);
  sub_zeta->add_option("--tol", ztol, "absolute error target (default 1e-10)");

  // special-value K --x X --a LIST
  long svk = 0;
  std::string svx = "0", sva;
  auto* sub_sv = app.add_subcommand("special-value", "exact Barnes zeta value at s = -k");
  sub_sv->add_option("k", svk, "k >= 0")->required()->check(CLI::NonNegativeNumber);
  sub_sv->add_option("--x", svx, "rational x (default 0)");
  sub_sv->add_option("--a", sva, "comma-separated positive rationals")->required();

  // verify [ID] [--all] [--sweep RANGES] [--seed S] [--csv]
  std::string vid, vsweep;
  bool vall = false, vcsv = false;
  std::uint64_t vseed = barneskit::default_seed();
  auto* sub_verify = app.add_subcommand("verify", "run identity checks");
  sub_verify->add_option("id", vid, "registry id, e.g. THM1");
  sub_verify->add_flag("--all", vall, "run the default sweep of every registry entry");
  sub_verify->add_option("--sweep", vsweep, "ranges, e.g. n=3..6,m=1..15");
  sub_verify->add_option("--seed", vseed, "seed for the random parameter vectors");
  sub_verify->add_flag("--csv", vcsv, "tabular output instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sub_bern) {
      const unsigned k = static_cast<unsigned>(bk);
      const unsigned n = static_cast<unsigned>(border);
      json result = bpoly ? poly_json(barneskit::bernoulli_order_poly(k, n))
                          : json(barneskit::bernoulli_order(k, n).str());
      emit("bernoulli", json{{"k", bk}, {"order", border}, {"poly", bpoly}}, std::move(result));
      return 0;
    }
    if (*sub_bn) {
      const AVec a = AVec::parse(bna);
      emit("barnes-number", json{{"k", bnk}, {"a", bna}},
           json(barneskit::barnes_number(static_cast<unsigned>(bnk), a).str()));
      return 0;
    }
    if (*sub_bp) {
      const AVec a = AVec::parse(bpa);
      emit("barnes-poly", json{{"k", bpk}, {"a", bpa}},
           poly_json(barneskit::barnes_poly(static_cast<unsigned>(bpk), a).poly));
      return 0;
    }
    if (*sub_part) {
      const auto parts = parse_integer_list(pparts, "parts");
      const barneskit::PartitionSpec spec(parts);
      mpz_class count;
      if (pmethod == "dp") {
        count = barneskit::partition_count_dp(spec, pt);
      } else if (pmethod == "closed") {
        count = barneskit::partition_count_closed(spec, pt);
      } else {
        if (parts.size() != 2)
          throw std::domain_error("popoviciu needs exactly two coprime parts");
        count = barneskit::popoviciu(parts[0], parts[1], pt);
      }
      emit("partition", json{{"parts", pparts}, {"t", pt}, {"method", pmethod}},
           json(count.get_str()));
      return 0;
    }
    if (*sub_fds) {
      const std::vector<long> others =
          fothers.empty() ? std::vector<long>{} : parse_integer_list(fothers, "others");
      const barneskit::FdsKey key{fr, others, fmod};
      json result = ffloat ? float_json(barneskit::fourier_dedekind_float(key))
                           : json(barneskit::fourier_dedekind_exact(key).str());
      emit("fds", json{{"r", fr}, {"others", fothers}, {"mod", fmod}, {"float", ffloat}},
           std::move(result));
      return 0;
    }
    if (*sub_zeta) {
      double value = 0;
      if (zkind == "hurwitz") {
        value = barneskit::hurwitz_zeta(zs, zx, ztol);
      } else if (zkind == "order-n") {
        value = barneskit::hurwitz_order_n(zs, zx, static_cast<unsigned>(zn), ztol);
      } else {
        if (za.empty()) throw std::invalid_argument("zeta: the barnes kinds need --a");
        const barneskit::ZetaQuery q{zs, zx, AVec::parse(za), ztol};
        value = (zkind == "barnes-direct") ? barneskit::barnes_zeta_direct(q)
                                           : barneskit::barnes_zeta_decomposed(q);
      }
      emit("zeta",
           json{{"kind", zkind}, {"s", zs}, {"x", zx}, {"a", za}, {"n", zn}, {"tol", ztol}},
           float_json(value), json{{"tolerance", ztol}});
      return 0;
    }
    if (*sub_sv) {
      const AVec a = AVec::parse(sva);
      const Rational x = Rational::from_string(svx);
      emit("special-value", json{{"k", svk}, {"x", svx}, {"a", sva}},
           json(barneskit::barnes_zeta_special(static_cast<unsigned>(svk), x, a).str()));
      return 0;
    }
    if (*sub_verify) {
      if (vall) return report_all(vseed, vcsv);
      if (vid.empty()) throw std::invalid_argument("verify: give an id or --all");
      return report_sweep(vid, vsweep, vseed, vcsv);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
