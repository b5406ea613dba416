#include "eiskern/io/commands.hpp"

#include <optional>

#include "eiskern/dbleis/dbleis.hpp"
#include "eiskern/error.hpp"
#include "eiskern/lfunc/lvalue.hpp"
#include "eiskern/lfunc/spectral.hpp"
#include "eiskern/modforms/eigenform.hpp"
#include "eiskern/modforms/modular_form.hpp"
#include "eiskern/nonhol/direct.hpp"
#include "eiskern/nonhol/eisenstein.hpp"
#include "eiskern/nonhol/kernel.hpp"
#include "eiskern/nonhol/maass.hpp"
#include "eiskern/periods/periods.hpp"
#include "eiskern/verify/suites.hpp"

namespace eiskern::io {

namespace {

using mp::Complex;
using nonhol::cd;

std::optional<std::string> param(const RunConfig& cfg, const std::string& key) {
  for (const auto& [k, v] : cfg.parameters)
    if (k == key) return v;
  return std::nullopt;
}

std::string need(const RunConfig& cfg, const std::string& key) {
  auto v = param(cfg, key);
  if (!v) throw UsageError("missing parameter --" + key);
  return *v;
}

long to_long(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long out = 0;
  try {
    out = std::stol(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw UsageError("--" + key + " expects an integer, got '" + v + "'");
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw UsageError("--" + key + " expects a number, got '" + v + "'");
  return out;
}

long long_or(const RunConfig& cfg, const std::string& key, long dflt) {
  auto v = param(cfg, key);
  return v ? to_long(key, *v) : dflt;
}

double double_or(const RunConfig& cfg, const std::string& key, double dflt) {
  auto v = param(cfg, key);
  return v ? to_double(key, *v) : dflt;
}

int weight_of(const RunConfig& cfg) {
  long k = to_long("weight", need(cfg, "weight"));
  if (k < 4 || k > 40 || k % 2) throw BadWeight("weight must be even in [4, 40], got " + std::to_string(k));
  return static_cast<int>(k);
}

Complex complex_param(const RunConfig& cfg, const std::string& key, mp::Bits prec) {
  return parse_complex(need(cfg, key), prec);
}

cd cd_param(const RunConfig& cfg, const std::string& key) {
  Complex z = parse_complex(need(cfg, key), 64);
  return {z.re().to_double(), z.im().to_double()};
}

Json cd_json(cd z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

std::string cd_string(cd z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + format_double(std::fabs(z.imag())) +
         "i";
}

Report make(const RunConfig& cfg) {
  Report r;
  r.config = cfg;
  return r;
}

Json certificate_json(const periods::FieldCertificate& c) {
  Json j;
  j["field"] = c.field;
  j["verdict"] = periods::to_string(c.verdict);
  Json coords = Json::array();
  for (const auto& rc : c.coords) coords.push_back(rc.reconstructed.to_string());
  j["coordinates"] = coords;
  return j;
}

std::string certificate_string(const periods::FieldCertificate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (i) out += " + ";
    out += c.coords[i].reconstructed.to_string();
    if (i == 1) out += " a(2)";
    if (i > 1) out += " a(2)^" + std::to_string(i);
  }
  return out;
}

mp::BigRational twist_param(const std::string& v) {
  try {
    return mp::BigRational::parse(v);
  } catch (const std::exception&) {
    throw UsageError("--twist expects p/q, got '" + v + "'");
  }
}

}  // namespace

Report cmd_qexp(const RunConfig& cfg) {
  Report r = make(cfg);
  long N = long_or(cfg, "N", 10);
  if (N < 1) throw UsageError("-N must be positive");
  auto ek = param(cfg, "ek");
  bool delta = param(cfg, "delta").has_value();
  if (ek.has_value() == delta) throw UsageError("give exactly one of --ek and --delta");
  modforms::ModularForm f =
      delta ? modforms::delta_qexp(N) : modforms::eisenstein_qexp(static_cast<int>(to_long("ek", *ek)), N);
  r.result["form"] = delta ? std::string("Delta") : "E_" + *ek;
  r.result["weight"] = f.weight();
  r.result["order"] = N;
  Json coeffs = Json::array();
  r.columns = {"n", "a(n)"};
  for (long n = 0; n <= N; ++n) {
    coeffs.push_back(f[n].to_string());
    r.rows.push_back({std::to_string(n), f[n].to_string()});
  }
  r.result["coefficients"] = coeffs;
  return r;
}

Report cmd_eigenforms(const RunConfig& cfg) {
  Report r = make(cfg);
  int k = weight_of(cfg);
  long N = long_or(cfg, "N", 10);
  if (N < 1) throw UsageError("-N must be positive");
  const auto& prof = cfg.profile;
  r.result["weight"] = k;
  r.result["dim_S_k"] = modforms::dim_cusp(k);
  Json cp = Json::array();
  if (modforms::dim_cusp(k) > 0)
    for (const auto& c : modforms::hecke_charpoly(k, 2)) cp.push_back(c.to_string());
  r.result["T2_charpoly"] = cp;
  Json forms = Json::array();
  r.columns = {"form", "n", "a(n)"};
  if (modforms::dim_cusp(k) > 0) {
    auto basis = lfunc::eigenbasis(k, prof, N);
    for (const auto& f : *basis) {
      Json jf;
      jf["label"] = f.label();
      Json a = Json::array();
      for (long n = 1; n <= N; ++n) {
        std::string v = format_real(f.a_real(n), prof.P);
        a.push_back(v);
        r.rows.push_back({f.label(), std::to_string(n), v});
      }
      jf["coefficients"] = a;
      forms.push_back(jf);
    }
  }
  r.result["eigenforms"] = forms;
  return r;
}

Report cmd_lvalue(const RunConfig& cfg) {
  Report r = make(cfg);
  int k = weight_of(cfg);
  const auto& prof = cfg.profile;
  Complex s = complex_param(cfg, "s", prof.work());
  int index = static_cast<int>(long_or(cfg, "index", 0));
  auto tw = param(cfg, "twist");
  mp::BigRational twist = tw ? twist_param(*tw) : mp::BigRational(0L);
  long q = twist.den().fits_slong_p() ? twist.den().get_si() : 0;
  if (q <= 0 || q > 1000000) throw OutOfDomain("twist denominator out of range");
  if (modforms::dim_cusp(k) == 0) throw OutOfDomain("S_" + std::to_string(k) + " = 0");
  if (index < 0 || index >= modforms::dim_cusp(k)) throw OutOfDomain("eigenform index out of range");
  auto f = lfunc::eigenform_for(k, index, s, q, prof);
  auto v = tw ? lfunc::lstar_twisted(*f, s, twist, prof) : lfunc::lstar(*f, s, prof);
  r.result["form"] = v.form;
  r.result["s"] = complex_json(s, prof.P);
  r.result["twist"] = v.twist.to_string();
  r.result["value"] = complex_json(v.value, prof.P);
  r.result["err_est"] = v.err_est.to_string(6);
  r.columns = {"form", "s", "twist", "L*", "err_est"};
  r.rows.push_back({v.form, format_complex(s, prof.P), v.twist.to_string(), format_complex(v.value, prof.P),
                    v.err_est.to_string(6)});
  return r;
}

Report cmd_periods(const RunConfig& cfg) {
  Report r = make(cfg);
  int k = weight_of(cfg);
  const auto& prof = cfg.profile;
  int index = static_cast<int>(long_or(cfg, "index", 0));
  long dmax = long_or(cfg, "dmax", periods::kDefaultDMax);
  auto t = periods::manin_table(k, index, prof, dmax);
  const auto& pp = t.periods;
  r.result["form"] = pp.form;
  r.result["omega_plus"] = format_real(pp.omega_plus, prof.P);
  r.result["omega_minus"] = format_real(pp.omega_minus, prof.P);
  r.result["c_f"] = format_real(pp.c_f, prof.P);
  r.result["petersson_norm"] = format_real(pp.norm, prof.P);
  r.result["product_residual"] = pp.product_residual.to_string(6);
  r.result["all_certified"] = t.all_certified;
  Json entries = Json::array();
  r.columns = {"s", "period", "ratio", "reconstruction", "verdict"};
  for (const auto& e : t.entries) {
    Json je;
    je["s"] = e.s;
    je["period"] = e.plus ? "omega_plus" : "omega_minus";
    je["ratio"] = format_real(e.ratio, prof.P);
    je["certificate"] = certificate_json(e.cert);
    entries.push_back(je);
    r.rows.push_back({std::to_string(e.s), e.plus ? "omega_plus" : "omega_minus", format_real(e.ratio, prof.P),
                      certificate_string(e.cert), periods::to_string(e.cert.verdict)});
  }
  r.result["entries"] = entries;
  return r;
}

Report cmd_dbleis(const RunConfig& cfg) {
  Report r = make(cfg);
  int k = weight_of(cfg);
  const auto& prof = cfg.profile;
  Complex s = complex_param(cfg, "s", prof.work());
  Complex w = complex_param(cfg, "w", prof.work());
  auto tw = param(cfg, "twist");
  auto c = tw ? dbleis::twisted_dbl_eis_coeffs(k, s, w, twist_param(*tw), prof)
              : dbleis::dbl_eis_coeffs(k, s, w, prof);
  r.result["weight"] = k;
  r.result["s"] = complex_json(s, prof.P);
  r.result["w"] = complex_json(w, prof.P);
  if (tw) r.result["twist"] = c.twist.to_string();
  r.result["empty"] = c.empty;
  r.result["method"] = c.method;
  r.result["u"] = complex_json(c.u(), prof.P);
  r.result["v"] = complex_json(c.v(), prof.P);
  r.result["err_est"] = c.err_est.to_string(6);
  Json coeffs = Json::array();
  r.columns = {"n", "a(n)"};
  for (long n = 1; n <= static_cast<long>(c.coeffs.size()); ++n) {
    coeffs.push_back(complex_json(c(n), prof.P));
    r.rows.push_back({std::to_string(n), format_complex(c(n), prof.P)});
  }
  r.result["coefficients"] = coeffs;
  return r;
}

Report cmd_nonhol(const RunConfig& cfg) {
  Report r = make(cfg);
  const auto& prof = cfg.profile;
  std::string sub = need(cfg, "sub");
  if (sub == "eisenstein") {
    Complex z = complex_param(cfg, "z", prof.work());
    Complex s = complex_param(cfg, "s", prof.work());
    std::string m = param(cfg, "method").value_or("fourier");
    if (m != "fourier" && m != "lattice") throw UsageError("--method must be fourier or lattice");
    auto v = nonhol::eisenstein_nonhol(z, s, m == "fourier" ? nonhol::EisensteinMethod::Fourier
                                                            : nonhol::EisensteinMethod::Lattice, prof);
    r.result["method"] = nonhol::to_string(v.method);
    r.result["value"] = complex_json(v.value, prof.P);
    r.result["err"] = v.err.to_string(6);
    r.result["terms"] = v.terms;
    r.columns = {"z", "s", "method", "E(z,s)", "err"};
    r.rows.push_back({format_complex(z, prof.P), format_complex(s, prof.P), nonhol::to_string(v.method),
                      format_complex(v.value, prof.P), v.err.to_string(6)});
    if (m == "fourier") {
      auto c = nonhol::eisenstein_completed(z, s, prof);
      r.result["completed"] = complex_json(c.value, prof.P);
    }
    return r;
  }
  if (sub == "kernel") {
    cd z = cd_param(cfg, "z"), s = cd_param(cfg, "s"), sp = cd_param(cfg, "sp");
    double H = double_or(cfg, "H", 16);
    auto v = nonhol::kernel_K(z, s, sp, H);
    r.result["value"] = cd_json(v.value);
    r.result["err"] = v.err;
    r.result["rho"] = v.rho;
    r.result["eis_part"] = cd_json(v.eis_part);
    r.result["sharp_part"] = cd_json(v.sharp_part);
    r.result["cosets"] = v.cosets;
    r.columns = {"z", "s", "s'", "K", "err"};
    r.rows.push_back({cd_string(z), cd_string(s), cd_string(sp), cd_string(v.value), format_double(v.err)});
    return r;
  }
  if (sub == "direct") {
    cd z = cd_param(cfg, "z"), w = cd_param(cfg, "w"), s = cd_param(cfg, "s"), sp = cd_param(cfg, "sp");
    std::string route = param(cfg, "route").value_or("pairs");
    if (route != "pairs" && route != "rearranged") throw UsageError("--route must be pairs or rearranged");
    double H = double_or(cfg, "H", route == "pairs" ? 12 : 24);
    auto v = route == "pairs" ? nonhol::nonhol_dbl_eis_direct(z, w, s, sp, H)
                              : nonhol::nonhol_dbl_eis_rearranged(z, w, s, sp, H);
    r.result["route"] = route;
    r.result["value"] = cd_json(v.value);
    r.result["err"] = v.err;
    r.result["cosets"] = v.cosets;
    r.result["pairs"] = v.pairs;
    r.result["worst_pair_ratio"] = v.worst_pair_ratio;
    r.columns = {"z", "w", "s", "s'", "route", "value", "err"};
    r.rows.push_back({cd_string(z), cd_string(w), cd_string(s), cd_string(sp), route, cd_string(v.value),
                      format_double(v.err)});
    return r;
  }
  if (sub == "maass-lstar" || sub == "cpl") {
    auto data = nonhol::maass_load(need(cfg, "data"));
    r.result["source"] = data.source;
    r.result["R"] = data.R.to_string(15);
    r.result["parity"] = nonhol::to_string(data.parity);
    r.result["coefficients"] = data.nu.size();
    if (sub == "maass-lstar") {
      Complex s = complex_param(cfg, "s", prof.work());
      auto v = nonhol::maass_lstar(data, s, prof);
      r.result["value"] = complex_json(v.value, prof.P);
      r.result["err"] = v.err.to_string(6);
      r.result["data_err"] = v.data_err.to_string(6);
      r.result["automorphy_defect"] = v.automorphy_defect;
      r.columns = {"s", "L*", "err"};
      r.rows.push_back({format_complex(s, prof.P), format_complex(v.value, prof.P), v.err.to_string(6)});
      return r;
    }
    Complex s = complex_param(cfg, "s", prof.work());
    Complex sp = complex_param(cfg, "sp", prof.work());
    nonhol::CplOptions o;
    o.nx = static_cast<int>(long_or(cfg, "nx", o.nx));
    o.ny = static_cast<int>(long_or(cfg, "ny", o.ny));
    o.H = double_or(cfg, "H", o.H);
    auto v = nonhol::cpl_inner_product_check(data, s, sp, prof, o);
    r.result["inner"] = v.inner;
    r.result["inner_imag"] = v.inner_imag;
    r.result["inner_swapped"] = v.inner_swapped;
    r.result["predicted"] = v.predicted;
    r.result["predicted_imag"] = v.predicted_imag;
    r.result["quad_err"] = v.quad_err;
    r.result["relative_gap"] = v.relative_gap;
    r.result["automorphy_defect"] = v.automorphy_defect;
    r.result["agrees"] = v.agrees;
    r.result["caveats"] = v.caveats;
    r.columns = {"inner", "predicted", "relative_gap", "agrees"};
    r.rows.push_back({format_double(v.inner), format_double(v.predicted), format_double(v.relative_gap),
                      v.agrees ? "yes" : "no"});
    return r;
  }
  throw UsageError("unknown nonhol subcommand '" + sub + "'");
}

Report cmd_verify(const RunConfig& cfg) {
  Report r = make(cfg);
  verify::Options opt;
  opt.quick = param(cfg, "quick").has_value();
  opt.seed = cfg.seed;
  auto suite = verify::parse_suite(param(cfg, "suite").value_or("all"));
  auto crit = verify::run_suite(suite, cfg.profile, opt);
  Json list = Json::array();
  r.columns = {"criterion", "check", "result", "residual", "tolerance", "note"};
  bool all = true;
  for (const auto& c : crit) {
    Json jc;
    jc["id"] = c.id;
    jc["suite"] = c.suite;
    jc["title"] = c.title;
    jc["pass"] = c.pass;
    jc["known_unattainable"] = verify::known_unattainable(c);
    jc["worst_ratio"] = c.worst_ratio;
    if (c.runtime_limit > 0) jc["runtime_limit_s"] = c.runtime_limit;
    if (!c.note.empty()) jc["note"] = c.note;
    Json items = Json::array();
    for (const auto& it : c.items) {
      Json ji;
      ji["check"] = it.label;
      ji["pass"] = it.pass;
      ji["residual"] = it.residual;
      ji["tolerance"] = it.tolerance;
      if (!it.note.empty()) ji["note"] = it.note;
      items.push_back(ji);
      r.rows.push_back({std::to_string(c.id), it.label, it.pass ? "PASS" : "FAIL", format_double(it.residual),
                        format_double(it.tolerance), it.note});
    }
    jc["items"] = items;
    list.push_back(jc);
    all = all && c.pass;
  }
  r.result["suite"] = verify::to_string(suite);
  r.result["quick"] = opt.quick;
  r.result["criteria"] = list;
  r.result["pass"] = all;
  r.status = all ? 0 : kExitVerifyFailed;
  return r;
}

Report run_command(const RunConfig& cfg) {
  if (cfg.command == "qexp") return cmd_qexp(cfg);
  if (cfg.command == "eigenforms") return cmd_eigenforms(cfg);
  if (cfg.command == "lvalue") return cmd_lvalue(cfg);
  if (cfg.command == "periods") return cmd_periods(cfg);
  if (cfg.command == "dbleis") return cmd_dbleis(cfg);
  if (cfg.command == "nonhol") return cmd_nonhol(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace eiskern::io
