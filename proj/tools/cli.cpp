#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "rotaperm/certify.hpp"
#include "rotaperm/error.hpp"
#include "rotaperm/family.hpp"
#include "rotaperm/invert.hpp"
#include "rotaperm/json_io.hpp"
#include "rotaperm/lift.hpp"
#include "rotaperm/mpoly.hpp"
#include "rotaperm/permcheck.hpp"
#include "rotaperm/search.hpp"

namespace rotaperm::cli {

namespace {

// Failures that reach the top level map onto the exit-code contract.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormulaInconsistent:
    case ErrorCode::kNoPreimage:
    case ErrorCode::kMultiplePreimages:
      return kInternal;
    case ErrorCode::kNotAPermutation:
      return kNegative;
    default:
      return kUsage;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Field make_field(unsigned m, const std::string& modulus) {
  if (m % 2 == 0) throw UsageError("m must be odd (got " + std::to_string(m) + ")");
  std::optional<std::uint32_t> mod;
  if (!modulus.empty()) mod = static_cast<std::uint32_t>(parse_hex(modulus));
  return Field(m, mod);
}

Coeffs pick_family(const std::string& family, const std::string& coeffs, std::string& label) {
  if (!family.empty() && !coeffs.empty()) throw UsageError("give --family or --coeffs, not both");
  if (!family.empty()) {
    label = family;
    return named_coeffs(family);
  }
  if (!coeffs.empty()) {
    label = coeffs;
    return Coeffs::parse(coeffs);
  }
  throw UsageError("one of --family or --coeffs is required");
}

Triple parse_target(const Field& f, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--target needs three comma-separated hex values");
  return {parse_elem(f, parts[0]), parse_elem(f, parts[1]), parse_elem(f, parts[2])};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

Vars vars_for(const std::string& f, const std::string& g, char var) {
  std::set<char> letters{var};
  for (char ch : f + g) {
    if (std::isalpha(static_cast<unsigned char>(ch))) letters.insert(ch);
  }
  const Vars& std_vars = Vars::standard();
  bool all_standard = true;
  for (char ch : letters) all_standard = all_standard && std_vars.index_of(ch).has_value();
  if (all_standard) return std_vars;
  if (letters.size() > Vars::kMax) throw UsageError("at most 9 distinct variables are supported");
  return Vars(std::string(letters.begin(), letters.end()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotatable permutations of GF(2^m)^3", "rotaperm"};
  app.require_subcommand(1);

  std::string family, coeffs, modulus, target, method = "auto", out_path, p_path, q_path, only;
  std::string var, f_text, g_text;
  std::vector<unsigned> m_list;
  unsigned m = 0;
  bool allow_m9 = false, allow_m5 = false;

  auto* verify = app.add_subcommand("verify", "Exhaustive permutation check");
  verify->add_option("--family", family, "T1..T5");
  verify->add_option("--coeffs", coeffs, "8-character bitstring a1..a8");
  verify->add_option("--m", m, "Extension degree")->required();
  verify->add_option("--modulus", modulus, "Hex modulus including the leading term");

  auto* inv = app.add_subcommand("invert", "Preimage of a point");
  inv->add_option("--family", family, "T1..T5")->required();
  inv->add_option("--m", m, "Extension degree")->required();
  inv->add_option("--target", target, "HEX,HEX,HEX")->required();
  inv->add_option("--method", method, "auto|closed|resolvent|table");
  inv->add_option("--modulus", modulus, "Hex modulus including the leading term");

  auto* lift = app.add_subcommand("lift", "Permutation polynomial of GF(2^3m)");
  lift->add_option("--family", family, "T1..T5");
  lift->add_option("--coeffs", coeffs, "8-character bitstring a1..a8");
  lift->add_option("--m", m, "Base extension degree (3, or 5 with --allow-m5)")->required();
  lift->add_option("--out", out_path, "Also write the polynomial here");
  lift->add_flag("--allow-m5", allow_m5, "Permit the slow m = 5 interpolation");

  auto* qm = app.add_subcommand("qm", "QM-equivalence of two lifted polynomials");
  qm->add_option("--p", p_path, "Polynomial JSON file")->required();
  qm->add_option("--q", q_path, "Polynomial JSON file")->required();

  auto* cert = app.add_subcommand("certify", "Run the proof certificates");
  cert->add_option("--only", only, "Run a single certificate");

  auto* search = app.add_subcommand("search", "Classify all 256 coefficient vectors");
  search->add_option("--m", m_list, "Comma-separated odd degrees")->required()->delimiter(',');
  search->add_option("--out", out_path, "Also write the report here");
  search->add_flag("--allow-m9", allow_m9, "Permit m = 9 (slow)");

  auto* res = app.add_subcommand("resultant", "Sylvester resultant over GF(2)");
  res->add_option("-v,--var", var, "Variable to eliminate")->required();
  res->add_option("-f", f_text, "First polynomial")->required();
  res->add_option("-g", g_text, "Second polynomial")->required();

  std::vector<const char*> argv{"rotaperm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()) + " s";
  };

  try {
    if (verify->parsed()) {
      std::string label;
      const Coeffs c = pick_family(family, coeffs, label);
      const Field f = make_field(m, modulus);
      const PermReport r = is_permutation(f, c);
      out << to_json(r).dump() << '\n';
      err << label << " at m=" << m << ": " << (r.is_permutation ? "permutation" : "not a permutation")
          << " (" << elapsed() << ")\n";
      return r.is_permutation ? kOk : kNegative;
    }

    if (inv->parsed()) {
      const Field f = make_field(m, modulus);
      const Inversion r = invert(f, family, parse_target(f, target), parse_invert_method(method));
      out << to_json(r).dump() << '\n';
      err << family << " preimage via " << to_string(r.method) << '\n';
      return kOk;
    }

    if (lift->parsed()) {
      std::string label;
      const Coeffs c = pick_family(family, coeffs, label);
      if (m != 3 && !(m == 5 && allow_m5)) throw UsageError("lift supports m = 3 (m = 5 with --allow-m5)");
      const Field f = make_field(m, "");
      const ExtField ext(f);
      const LiftedPoly p = lift_permutation(ext, c);
      const Json j = to_json(ext, p);
      if (!out_path.empty()) write_file(out_path, j);
      out << j.dump() << '\n';
      err << label << " lifts to " << p.term_count() << " terms (" << elapsed() << ")\n";
      return kOk;
    }

    if (qm->parsed()) {
      const Json pj = read_json_file(p_path), qj = read_json_file(q_path);
      unsigned pm = 0, qm_deg = 0;
      try {
        pm = pj.at("m").get<unsigned>();
        qm_deg = qj.at("m").get<unsigned>();
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("polynomial JSON needs \"m\": ") + e.what());
      }
      if (pm != qm_deg) throw UsageError("polynomials live over different fields");
      const ExtField ext{Field(pm)};
      const LiftedPoly p = lifted_from_json(ext, pj), q = lifted_from_json(ext, qj);
      const auto w = qm_equivalent(ext, p, q);
      Json j;
      j["m"] = pm;
      j["terms"] = Json::array({p.term_count(), q.term_count()});
      j["equivalent"] = w.has_value();
      if (w) j["witness"] = to_json(ext, *w);
      out << j.dump() << '\n';
      if (!w && p.term_count() != q.term_count()) err << "inequivalent: different numbers of terms\n";
      return w ? kOk : kNegative;
    }

    if (cert->parsed()) {
      std::optional<std::string_view> which;
      if (!only.empty()) which = only;
      const auto reports = certify_all(which);
      out << to_json(reports).dump() << '\n';
      bool ok = true;
      for (const auto& r : reports) {
        err << (r.pass ? "pass " : "FAIL ") << r.name << (r.mandatory ? "" : " (informational)") << ": "
            << r.notes << '\n';
        ok = ok && (r.pass || !r.mandatory);
      }
      return ok ? kOk : kNegative;
    }

    if (search->parsed()) {
      const SearchReport r = search_all(m_list, allow_m9);
      const Json j = to_json(r);
      if (!out_path.empty()) write_file(out_path, j);
      out << j.dump() << '\n';
      for (unsigned mm : r.ms) err << "m=" << mm << ": " << r.results.at(mm).size() << " permutations\n";
      err << "elapsed " << elapsed() << '\n';
      for (const auto& [mm, five] : r.contains_five_families) {
        if (!five) {
          err << "the five named families are not all present at m=" << mm << '\n';
          return kInternal;
        }
      }
      return kOk;
    }

    if (res->parsed()) {
      if (var.size() != 1) throw UsageError("-v takes a single variable letter");
      const Vars vars = vars_for(f_text, g_text, var[0]);
      const MPoly f = MPoly::parse(f_text, vars), g = MPoly::parse(g_text, vars);
      const MPoly r = resultant(f, g, var[0]);
      Json j;
      j["var"] = var;
      j["f"] = f.to_text();
      j["g"] = g.to_text();
      j["resultant"] = r.to_text();
      out << j.dump() << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace rotaperm::cli
