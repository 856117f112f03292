// nagell: command-line front end for x^2 + 7^(2k+1) = y^n.
//
//   nagell verify [--config F] [--box N] [--kmax N] [--nmax N] [--lmax N]
//                 [--lambda-max N] [--data F] [--out F] [--jobs N]
//   nagell search [--n N] [--xmax X] [--flavor A|B] ...
//   nagell sieve | symplectic | theorem N K | tate a1,a2,a3,a4,a6 p | ingest F

#include "nagell/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifndef NAGELL_DEFAULT_DATA
#define NAGELL_DEFAULT_DATA ""
#endif

namespace {

using nagell::Json;

struct Flags {
  std::string config;
  std::optional<long long> box, tm_box, lmax;
  std::optional<int> kmax, nmax, lambda_max, jobs;
  std::optional<std::string> data, out;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key=value config file; flags override it");
  sub->add_option("--box", f.box, "Thue box");
  sub->add_option("--tm-box", f.tm_box, "Thue-Mahler box");
  sub->add_option("--kmax", f.kmax, "largest k");
  sub->add_option("--nmax", f.nmax, "largest exponent for y = 2");
  sub->add_option("--lmax", f.lmax, "largest sieve prime");
  sub->add_option("--lambda-max", f.lambda_max, "largest family parameter");
  sub->add_option("--data", f.data, "newform data file");
  sub->add_option("--out", f.out, "write the JSON here instead of stdout");
  sub->add_option("--jobs", f.jobs, "worker threads");
}

nagell::RunConfig resolve(const Flags& f) {
  nagell::RunConfig c;
  c.data_path = NAGELL_DEFAULT_DATA;
  if (!f.config.empty()) c = nagell::load_config(f.config, c);
  if (f.box) c.box = *f.box;
  if (f.tm_box) c.tm_box = *f.tm_box;
  if (f.kmax) c.k_max = *f.kmax;
  if (f.nmax) c.n_max = *f.nmax;
  if (f.lmax) c.l_max = *f.lmax;
  if (f.lambda_max) c.lambda_max = *f.lambda_max;
  if (f.jobs) c.jobs = *f.jobs;
  if (f.data) c.data_path = *f.data;
  if (f.out) c.out_path = *f.out;
  c.validate();
  return c;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

const nagell::NewformDatabase& require_data(const nagell::LoadedData& d) {
  if (!d.full) throw std::runtime_error("newform data required: " + d.error);
  return *d.full;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lebesgue-Nagell x^2 + 7^(2k+1) = y^n: searches, Frey curves, sieve and verification"};
  app.require_subcommand(1);
  Flags f;

  auto* verify = app.add_subcommand("verify", "run every stage and report pass/fail per check");
  add_common(verify, f);

  auto* search = app.add_subcommand("search", "bounded searches for primitive solutions");
  add_common(search, f);
  int s_n = 0;
  std::string s_flavor = "A", s_xmax = "100000";
  search->add_option("--n", s_n, "exponent; 0 searches y = 2 only");
  search->add_option("--xmax", s_xmax, "bound on |x|");
  search->add_option("--flavor", s_flavor, "A: x^2 + 7^(2k+1) = y^n, B: 7x^2 + 1 = y^n")->check(CLI::IsMember({"A", "B"}));

  auto* sieve = app.add_subcommand("sieve", "multi-Frey sieve at levels 54, 882, 2646");
  add_common(sieve, f);

  auto* sympl = app.add_subcommand("symplectic", "symplectic criteria for the exceptional pairs");
  add_common(sympl, f);

  auto* theorem = app.add_subcommand("theorem", "status of (n, k) under the established results");
  add_common(theorem, f);
  int t_n = 0, t_k = 0;
  theorem->add_option("n", t_n)->required();
  theorem->add_option("k", t_k)->required();

  auto* tate = app.add_subcommand("tate", "local data of a curve at a prime");
  add_common(tate, f);
  std::string t_coeffs, t_p;
  tate->add_option("coefficients", t_coeffs, "a1,a2,a3,a4,a6")->required();
  tate->add_option("p", t_p)->required();

  auto* ingest = app.add_subcommand("ingest", "validate a newform data file");
  add_common(ingest, f);
  std::string i_path;
  ingest->add_option("file", i_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const nagell::RunConfig cfg = resolve(f);
    if (*verify) {
      const nagell::Report r = nagell::run_report(cfg);
      emit(r.doc, cfg.out_path);
      std::cerr << (r.pass ? "all checks pass" : "some checks FAIL") << "\n";
      return r.pass ? 0 : 1;
    }
    if (*search) {
      Json j = Json::array();
      if (s_n == 0) {
        for (const auto& p : nagell::search_pow2(cfg.n_max, cfg.k_max))
          j.push_back({{"x", p.x.str()}, {"k", p.k}, {"n", p.n}});
      } else {
        const auto fl = s_flavor == "A" ? nagell::Flavor::EqA : nagell::Flavor::EqB;
        for (const auto& p : nagell::search_primitive(s_n, nagell::Int(s_xmax), cfg.k_max, fl, nagell::Parity::Any))
          j.push_back(nagell::to_json(p));
      }
      emit(j, cfg.out_path);
      return 0;
    }
    if (*sieve) {
      const nagell::LoadedData d = nagell::load_data(cfg.data_path);
      const auto reports = nagell::run_sieve(require_data(d), {54, 882, 2646}, nagell::default_sieve_primes(cfg.l_max),
                                             cfg.n_witness_max);
      Json j = Json::array();
      for (const auto& p : reports) {
        Json w = Json::object();
        for (const auto& [n, l] : p.witnesses) w[std::to_string(n)] = l;
        j.push_back({{"f1", p.f1_label}, {"f1p", p.f1p_label}, {"level", p.level}, {"i", p.i}, {"eps3", p.eps3},
                     {"U", p.u_value.str()}, {"surviving", p.surviving}, {"inertia_note", p.inertia_note},
                     {"witnesses", w}});
      }
      emit(j, cfg.out_path);
      return 0;
    }
    if (*sympl) {
      Json j = Json::object();
      for (const auto& p : nagell::exceptional_pairs()) {
        const auto a = nagell::analyze_pair(p);
        j["pairs"].push_back({{"label", a.label}, {"i", a.i}, {"at2", a.at2.str()}, {"excluded", a.excluded}});
      }
      j["excluded_nonzero"] = nagell::excluded_classes(nagell::IClass::Nonzero);
      j["excluded_zero"] = nagell::excluded_classes(nagell::IClass::Zero);
      emit(j, cfg.out_path);
      return 0;
    }
    if (*theorem) {
      const nagell::Evidence ev = nagell::run_report(cfg).evidence;
      const auto v = nagell::theorem_check(t_n, t_k, ev);
      Json sol = Json::array();
      for (const auto& s : v.solutions) sol.push_back({{"x", s.x.str()}, {"y", s.y.str()}, {"family", s.family}});
      emit({{"n", v.n}, {"k", v.k}, {"k_class", v.k_class}, {"status", nagell::to_string(v.status)},
            {"witnesses", v.witnesses}, {"solutions", sol}, {"notes", v.notes},
            {"evidence", {{"sieve_bound", ev.sieve_bound}, {"level98", ev.level98},
                          {"small_exponents", ev.small_exponents}, {"n7_cited", ev.n7_external}}}},
           cfg.out_path);
      return 0;
    }
    if (*tate) {
      const auto parts = nagell::NewformDatabase::split(t_coeffs, ',');
      if (parts.size() != 5) throw std::invalid_argument("tate: need five coefficients");
      nagell::WeierstrassCurve::Coeffs a;
      for (std::size_t i = 0; i < 5; ++i) a[i] = nagell::NewformDatabase::parse_rational(parts[i]);
      const nagell::WeierstrassCurve e(a);
      const nagell::Int p(t_p);
      if (!nagell::is_prime(p)) throw std::invalid_argument("tate: p must be prime");
      const auto ld = nagell::tate(e, p);
      emit({{"curve", e.str()}, {"p", p.str()}, {"f", ld.f}, {"type", ld.kodaira.str()},
            {"v_disc_min", ld.vp_delta_min}, {"conductor", nagell::conductor(e).str()}},
           cfg.out_path);
      return 0;
    }
    if (*ingest) {
      nagell::NewformDatabase db = nagell::builtin_database();
      const auto issues = db.ingest_file(i_path);
      Json lv = Json::object();
      for (int l : db.levels()) lv[std::to_string(l)] = db.newforms(l).size();
      Json is = Json::array();
      for (const auto& i : issues) is.push_back({{"line", i.line}, {"message", i.message}});
      emit({{"levels", lv}, {"rejected", is}}, cfg.out_path);
      return issues.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
