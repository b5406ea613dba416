#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "eiskern/error.hpp"
#include "eiskern/io/commands.hpp"

using namespace eiskern;

namespace {

struct GlobalFlags {
  std::optional<long> bits, qexp_order, tail, height;
  std::optional<double> tol;
  std::optional<std::string> format;
  std::optional<unsigned long> seed;
};

void add_globals(CLI::App& app, GlobalFlags& g) {
  app.add_option("--precision-bits", g.bits, "working precision P in bits (default 256)");
  app.add_option("--qexp-order", g.qexp_order, "q-expansion order N_q (default 64)");
  app.add_option("--tail", g.tail, "L-series tail length M_tail (default derived from P)");
  app.add_option("--height", g.height, "group-sum box height H_group (default 200)");
  app.add_option("--tol", g.tol, "acceptance tolerance, rounded down to a power of two (default 2^(-P/2))");
  app.add_option("--format", g.format, "json, csv or md (default json; md for verify)");
  app.add_option("--seed", g.seed, "seed for randomized sample points");
}

PrecisionProfile build_profile(const GlobalFlags& g) {
  PrecisionProfile p = PrecisionProfile::defaults();
  if (const char* path = std::getenv("EISKERN_PROFILE"); path && *path) p = io::load_profile_file(path);
  if (g.bits) {
    p.P = *g.bits;
    p.M_tail = 0;
    p.tol_bits = 0;
  }
  if (g.qexp_order) p.N_q = *g.qexp_order;
  if (g.tail) p.M_tail = *g.tail;
  if (g.height) p.H_group = *g.height;
  if (g.tol) {
    if (!(*g.tol > 0.0 && *g.tol < 1.0)) throw io::UsageError("--tol must lie in (0, 1)");
    p.tol_bits = static_cast<long>(std::ceil(-std::log2(*g.tol)));
  }
  return p.normalized();
}

// Options given on `sub`, in declaration order; flags record "true".
void collect(const CLI::App* sub, io::RunConfig& cfg) {
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = !opt->get_lnames().empty()   ? opt->get_lnames().front()
                      : !opt->get_snames().empty() ? opt->get_snames().front()
                                                   : opt->get_name();
    if (key == "precision-bits" || key == "qexp-order" || key == "tail" || key == "height" || key == "tol" ||
        key == "format" || key == "seed")
      continue;
    std::string value = opt->get_expected_min() == 0 ? "true" : opt->as<std::string>();
    cfg.parameters.emplace_back(key, value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eiskern: modular forms, L-values, periods and double Eisenstein series"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  add_globals(app, g);

  std::string dummy;
  auto* qexp = app.add_subcommand("qexp", "exact q-expansion of E_k or Delta");
  qexp->add_option("--ek", dummy, "Eisenstein series E_k, even k >= 4");
  qexp->add_flag("--delta", "the discriminant form Delta");
  qexp->add_option("-N", dummy, "order (default 10)");

  auto* eig = app.add_subcommand("eigenforms", "normalized Hecke eigenforms of S_k");
  eig->add_option("--weight", dummy, "weight k")->required();
  eig->add_option("-N", dummy, "coefficients to print (default 10)");

  auto* lval = app.add_subcommand("lvalue", "completed L-value L*(f, s), optionally twisted");
  lval->add_option("--weight", dummy, "weight k")->required();
  lval->add_option("--s", dummy, "complex s, e.g. 6 or 3.5+2i")->required();
  lval->add_option("--index", dummy, "eigenform index ordered by a(2) (default 0)");
  lval->add_option("--twist", dummy, "additive twist p/q");

  auto* per = app.add_subcommand("periods", "periods and certified critical ratios");
  per->add_option("--weight", dummy, "weight k")->required();
  per->add_option("--index", dummy, "eigenform index (default 0)");
  per->add_option("--dmax", dummy, "denominator bound for reconstruction");

  auto* dbl = app.add_subcommand("dbleis", "coefficients of the completed double Eisenstein series");
  dbl->add_option("--weight", dummy, "weight k")->required();
  dbl->add_option("--s", dummy, "complex s")->required();
  dbl->add_option("--w", dummy, "complex w")->required();
  dbl->add_option("--twist", dummy, "additive twist p/q");

  auto* nh = app.add_subcommand("nonhol", "non-holomorphic Eisenstein series, kernels and Maass forms");
  nh->require_subcommand(1);
  auto* nh_e = nh->add_subcommand("eisenstein", "E(z, s)");
  nh_e->add_option("--z", dummy, "point in the upper half-plane")->required();
  nh_e->add_option("--s", dummy, "complex s")->required();
  nh_e->add_option("--method", dummy, "fourier (default) or lattice");
  auto* nh_k = nh->add_subcommand("kernel", "K(z; s, s')");
  nh_k->add_option("--z", dummy)->required();
  nh_k->add_option("--s", dummy)->required();
  nh_k->add_option("--sp", dummy, "s'")->required();
  nh_k->add_option("--H", dummy, "coset height (default 16)");
  auto* nh_d = nh->add_subcommand("direct", "non-holomorphic double Eisenstein series by direct summation");
  nh_d->add_option("--z", dummy)->required();
  nh_d->add_option("--w", dummy)->required();
  nh_d->add_option("--s", dummy)->required();
  nh_d->add_option("--sp", dummy, "s'")->required();
  nh_d->add_option("--route", dummy, "pairs (default) or rearranged");
  nh_d->add_option("--H", dummy, "coset height");
  auto* nh_m = nh->add_subcommand("maass-lstar", "L*(u, s) for Maass form data read from a file");
  nh_m->add_option("--data", dummy, "coefficient file")->required();
  nh_m->add_option("--s", dummy)->required();
  auto* nh_c = nh->add_subcommand("cpl", "inner product of the double series with a Maass form");
  nh_c->add_option("--data", dummy, "coefficient file")->required();
  nh_c->add_option("--s", dummy)->required();
  nh_c->add_option("--sp", dummy, "s'")->required();
  nh_c->add_option("--nx", dummy, "x nodes (default 16)");
  nh_c->add_option("--ny", dummy, "y nodes per unit height (default 12)");
  nh_c->add_option("--H", dummy, "coset height (default 8)");

  auto* ver = app.add_subcommand("verify", "run acceptance suites");
  ver->add_option("suite", dummy, "brackets, lvalues, dbleis, periods, nonhol or all")
      ->check(CLI::IsMember({"brackets", "lvalues", "dbleis", "periods", "nonhol", "all"}));
  ver->add_flag("--quick", "reduced sample counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : io::kExitUsage;
  }

  try {
    io::RunConfig cfg;
    cfg.profile = build_profile(g);
    const CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub == nh) {
      const CLI::App* leaf = nh->get_subcommands().front();
      cfg.parameters.emplace_back("sub", leaf->get_name());
      collect(leaf, cfg);
    } else {
      collect(sub, cfg);
    }
    if (g.seed) cfg.seed = *g.seed;
    cfg.format = g.format ? io::parse_format(*g.format) : (sub == ver ? io::Format::Md : io::Format::Json);
    io::Report r = io::run_command(cfg);
    std::cout << io::render(r);
    return r.status;
  } catch (const io::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io::kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io::kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io::kExitConvergence;
  }
}
