// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "nagell/pipeline.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace nagell;

namespace {

int failures = 0;

void line(int id, bool pass, const std::string& what) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " | " << what << std::endl;
  if (!pass) ++failures;
}

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << "(";
    for (std::size_t j = 0; j < v[i].size(); ++j) os << (j ? "," : "") << v[i][j];
    os << ")";
  }
  os << "}";
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const NewformDatabase& data() {
  static const NewformDatabase db = [] {
    NewformDatabase d = builtin_database();
    const auto issues = d.ingest_file(NAGELL_DATA);
    if (!issues.empty()) throw std::runtime_error("data file line " + std::to_string(issues[0].line) + ": " + issues[0].message);
    return d;
  }();
  return db;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sols = search_pow2(60, 30);
  const double dt = seconds_since(t0);
  std::vector<std::array<int, 3>> got;
  for (const auto& p : sols) got.push_back({static_cast<int>(p.x), p.k, p.n});
  const std::vector<std::array<int, 3>> want = {{1, 0, 3}, {3, 0, 4}, {5, 0, 5}, {11, 0, 7}, {13, 1, 9}, {181, 0, 15}};
  line(1, got == want && dt < 1.0, "search_pow2(60,30) = " + show(got) + " in " + std::to_string(dt) + " s");
}

void criterion2() {
  const auto s31 = thue_mahler_setup(3, 1), s51 = thue_mahler_setup(5, 1);
  const auto s30 = thue_mahler_setup(3, 0), s50 = thue_mahler_setup(5, 0);
  const auto h31 = enumerate_thue_mahler(s31.form, s31.constant, 50, 12);
  const auto h51 = enumerate_thue_mahler(s51.form, s51.constant, 50, 12);
  const auto h30 = enumerate_thue_mahler(s30.form, s30.constant, 50, 12);
  const auto h50 = enumerate_thue_mahler(s50.form, s50.constant, 50, 12);

  std::vector<std::array<long long, 3>> want31 = {{-4, 1, 1}, {-1, 2, 1}, {5, 4, 1},  {4, -1, 1}, {1, -2, 1}, {-5, -4, 1},
                                                  {2, -3, 0}, {-1, 0, 0}, {-2, 1, 1}, {-2, 3, 0}, {1, 0, 0},  {2, -1, 1}};
  std::vector<std::array<long long, 3>> want51 = {{-1, 0, 0}, {2, -1, 0}};
  std::sort(want31.begin(), want31.end());
  // The n = 3 list carries both signs of 7^k; the n = 5 list only +7^k.
  const auto got31 = hit_triples(h31), got51 = hit_triples(h51, +1);
  const bool tuples_ok = got31 == want31 && got51 == want51;

  // The e = 0 equations only give a = 0.
  const bool e0_ok = eqA_from_thue_mahler(3, 0, h30).empty() && eqA_from_thue_mahler(5, 0, h50).empty();

  const auto d31 = primitive_pairs(eqA_from_thue_mahler(3, 1, h31));
  const auto d51 = primitive_pairs(eqA_from_thue_mahler(5, 1, h51));
  const std::vector<std::array<long long, 2>> want_a3 = {{1, 2}, {13, 8}, {147, 28}, {1911, 154}};
  const std::vector<std::array<long long, 2>> want_a5 = {{5, 2}, {181, 8}};
  line(2, tuples_ok && e0_ok && d31 == want_a3 && d51 == want_a5,
       "tuples n=3 " + std::to_string(got31.size()) + (got31 == want31 ? " match" : " differ") + ", n=5 " +
           std::to_string(got51.size()) + (got51 == want51 ? " match" : " differ") + "; e=0 " +
           (e0_ok ? "trivial" : "NONTRIVIAL") + "; eq-A n=3 " + show(d31) + " vs listed " + show(want_a3) +
           "; eq-A n=5 " + show(d51));
}

void criterion3() {
  std::vector<std::array<long long, 2>> got;
  for (int n : {3, 4, 5, 7})
    for (const auto& p : eqB_from_thue(n, 10000)) got.push_back({static_cast<long long>(p.x), n});
  std::sort(got.begin(), got.end());
  const std::vector<std::array<long long, 2>> want = {{1, 3}, {3, 3}, {39, 3}};
  line(3, got == want, "eq-B (|x|,n) in box 10^4 = " + show(got));
}

void criterion4() {
  const FamilyReport r = verify_families(5);
  int ids = 0, fails = 0;
  for (const auto& f : r.families) {
    ids += f.identities;
    fails += f.failures;
  }
  line(4, r.families.size() == 10 && ids == 60 && fails == 0,
       std::to_string(ids) + " identities over " + std::to_string(r.families.size()) + " families, " +
           std::to_string(fails) + " failures");
}

void criterion5() {
  std::mt19937_64 rng(2024);
  auto odd = [&rng] { return Int(static_cast<long long>(rng() % 5000000) * 2 + 1); };
  int nn2 = 0, s23 = 0, eqb = 0, bad = 0;
  while (nn2 < 100) {
    const int k = static_cast<int>(rng() % 6);
    const Int a = odd(), s = seven_pow(2 * k + 1), bn = a * a + s;
    if (mod(bn, Int(64)) != 0) continue;
    const FreyInstance f = frey_nn2(a, bn, k, 0);
    if (f.curve.disc() != -Rational(s * bn * bn) / 4096 ||
        f.curve.j() != 64 * Rational(pow(-4 * a * a + 3 * bn, 3)) / Rational(s * bn * bn))
      ++bad;
    ++nn2;
  }
  while (s23 < 100) {
    const int k = static_cast<int>(rng() % 8);
    const Int a0 = odd();
    if (a0 % 3 == 0 || a0 % 7 == 0) continue;
    const FreyInstance f = frey_23n(a0, k);
    const int lp = f.lambda_p, i = f.i;
    // Minimal model at 2: u = 2.
    const bool ok = f.curve.c4() / 16 == -9 * Rational(seven_pow(lp + i)) &&
                    f.curve.c6() / 64 == Rational((i % 2 ? -1 : 1) * 27 * seven_pow(i) * f.a) &&
                    f.curve.disc() / 4096 == -Rational(27 * seven_pow(2 * i) * f.bn) / 64 &&
                    f.curve.j() == Rational(64 * 27 * seven_pow(2 * k + 1)) / Rational(f.bn);
    if (!ok) ++bad;
    ++s23;
  }
  while (eqb < 100) {
    const Int a = odd(), bn = 7 * a * a + 1;
    if (mod(bn, Int(64)) != 0) continue;
    const FreyInstance f = frey_eqB(a, bn, 0);
    if (f.curve.disc() != -Rational(343 * bn * bn) / 4096 ||
        f.curve.j() != -64 * Rational(pow(7 * a * a - 3, 3)) / Rational(bn * bn))
      ++bad;
    ++eqb;
  }
  const Int n1 = conductor(frey_nn2(181, Int(1) << 15, 0, 5).curve);
  const Int n2 = conductor(frey_eqB(3, 64, 3).curve);
  line(5, bad == 0 && n1 == 14 && n2 == 98,
       "300 random instances, " + std::to_string(bad) + " mismatches; N(E1(181,2^15)) = " + n1.str() +
           ", N(E2(3,64)) = " + n2.str() + " (expected 14 and 98)");
}

void criterion6() {
  bool ok = true;
  std::string obs;
  for (const auto& p : exceptional_pairs()) {
    const LocalData ld = tate(p.curve, 3);
    const auto want = p.eps3 == 3 ? Kodaira::II : Kodaira::III;
    ok = ok && ld.f == p.eps3 && ld.kodaira.kind == want;
    obs += p.label + "=(" + std::to_string(ld.f) + "," + ld.kodaira.str() + ") ";
  }
  std::vector<int> at7, at3;
  for (int i : {0, 1, 2}) at7.push_back(inertia_order(representative_23n(i, i == 0 ? 3 : 2)->curve, 7).order);
  for (int e : {2, 3}) at3.push_back(inertia_order(representative_23n(1, e)->curve, 3).order);
  const WeierstrassCurve f2(1, 1, 0, -25, -111);
  const int v7 = valuation(f2.j(), 7);
  ok = ok && at7 == std::vector<int>{1, 6, 3} && at3 == std::vector<int>{4, 12} && v7 == -1;
  line(6, ok,
       obs + "; I_7 orders " + std::to_string(at7[0]) + "," + std::to_string(at7[1]) + "," + std::to_string(at7[2]) +
           "; I_3 orders " + std::to_string(at3[0]) + "," + std::to_string(at3[1]) + "; v7(j(E_f2)) = " +
           std::to_string(v7));
}

void criterion7() {
  const auto reports = run_sieve(data(), {54, 882, 2646}, default_sieve_primes(31), 100);
  bool bound_ok = true;
  std::set<std::pair<std::string, int>> surv;
  for (const auto& r : reports) {
    if (r.u_value != 0)
      for (const auto& q : r.exponent_bound) bound_ok = bound_ok && q <= 7;
    if (r.surviving) surv.insert({r.f1p_label, r.i});
  }
  std::set<std::pair<std::string, int>> table;
  for (const auto& p : exceptional_pairs()) table.insert({p.label, p.i});
  std::string names;
  for (const auto& [l, i] : surv) names += l + "(i=" + std::to_string(i) + ") ";
  line(7, bound_ok && surv == table,
       std::to_string(reports.size()) + " pairs; U != 0 primes <= 7: " + (bound_ok ? "yes" : "no") + "; survivors " +
           std::to_string(surv.size()) + ": " + names + "; quoted count six vs five listed curves");
}

void criterion8() {
  const auto nz = excluded_classes(IClass::Nonzero), z = excluded_classes(IClass::Zero);
  std::set<int> both;
  std::set_intersection(nz.begin(), nz.end(), z.begin(), z.end(), std::inserter(both, both.begin()));
  const bool symbolic = nz == std::set<int>{13, 17, 19, 23} && z == std::set<int>{5, 7, 13, 23} && both == std::set<int>{13, 23};

  // Brute force: real primes in each class, symbols by Euler's criterion.
  auto euler = [](const Int& a, const Int& p) {
    const Int r = pow_mod(mod(a, p), (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
  };
  std::map<int, std::vector<Int>> primes_by_class;
  for (auto p : primes_up_to(5000))
    if (p >= 11) primes_by_class[static_cast<int>(p % 24)].push_back(Int(p));
  std::set<int> bz, bnz;
  for (IClass cls : {IClass::Zero, IClass::Nonzero}) {
    for (const auto& [r, ps] : primes_by_class) {
      bool all = true;
      for (const auto& p : exceptional_pairs()) {
        if ((p.i == 0) != (cls == IClass::Zero)) continue;
        const Int d = squarefree_part(Int(kV2FreyMinimal) * tate(p.curve, 2).vp_delta_min);
        const LocalData inst = tate(representative_23n(p.i, p.eps3)->curve, 3), form = tate(p.curve, 3);
        for (const auto& n : ps) {
          const bool sym3 = symplectic_at_3(inst, form, p.eps3, euler(3, n)) == Verdict::Symplectic;
          all = all && sym3 && euler(d, n) == -1;
        }
      }
      if (all) (cls == IClass::Zero ? bz : bnz).insert(r);
    }
  }
  const bool brute = bz == z && bnz == nz;
  auto str = [](const std::set<int>& s) {
    std::string o = "{";
    for (int x : s) o += (o.size() > 1 ? "," : "") + std::to_string(x);
    return o + "}";
  };
  line(8, symbolic && brute,
       "nonzero " + str(nz) + ", zero " + str(z) + ", both " + str(both) + "; brute force " + str(bnz) + ", " + str(bz));
}

void criterion9() {
  const Level98Report r = eliminate_level98(data());
  bool ok = r.irrational.size() == 1 && r.rational.size() == 1 && r.no_solutions_n_ge_11;
  std::string obs;
  if (ok) {
    ok = r.irrational[0].bound == 14 && r.irrational[0].values.back() == 196 && r.rational[0].v7_j == -1 &&
         r.rational[0].e2_inertia_at_7 == 4 && r.rational[0].contradiction;
    obs = "irrational bound " + r.irrational[0].bound.str() + " via norm " + r.irrational[0].values.back().str() +
          "; rational v7(j) = " + std::to_string(r.rational[0].v7_j) + " vs #rho_E2(I_7) = " +
          std::to_string(r.rational[0].e2_inertia_at_7);
  }
  line(9, ok, obs + "; no eq-B solutions for n >= 11: " + (r.no_solutions_n_ge_11 ? "yes" : "no"));
}

void criterion10() {
  const Int want = -Int(4) * 9 * 121 * 23;
  const Int ru = resultant(x013_h1(), x013_h2(), Eliminate::U), rv = resultant(x013_h1(), x013_h2(), Eliminate::V);
  const X013Report r = x013_check(10000);
  std::vector<std::array<long long, 2>> hits;
  for (const auto& h : r.thue_hits) hits.push_back({static_cast<long long>(h.u), static_cast<long long>(h.v)});
  std::sort(hits.begin(), hits.end());
  line(10, ru == want && rv == want && r.thue_ok && r.valuations_ok && r.h2_nonzero_mod7,
       "resultants " + ru.str() + ", " + rv.str() + "; Thue " + show(hits) + "; v7 ok " +
           (r.valuations_ok ? "yes" : "no") + "; h2 mod 7 root-free " + (r.h2_nonzero_mod7 ? "yes" : "no"));
}

void criterion11() {
  // 181^2 + 7 = 8^5 with k = 0: i = 1, l' = 0. E1' has conductor 882 and matches 882g1.
  const NewformRecord& f1 = data().newforms(14)[0];
  const NewformRecord* g = data().find("882g1");
  const FreyInstance e1p = frey_23n(181, 0);
  bool ok = g != nullptr && conductor(e1p.curve) == 882;
  std::string ells;
  for (auto l : primes_up_to(31)) {
    if (l == 2 || l == 7 || !ok) continue;
    const ResidueTuple t{181 % l, 7 % l, 1, 7 % l, 7 % l};
    const auto ts = residue_tuples(l);
    const bool present = std::find(ts.begin(), ts.end(), t) != ts.end();
    const bool keeps = gcd(r1(f1, t, l), r1prime(*g, t, l)) % 5 == 0 && t_ell(f1, *g, l, 1) % 5 == 0;
    ok = ok && present && keeps;
    ells += std::to_string(l) + (present && keeps ? "" : "!") + " ";
  }
  line(11, ok, "5 | gcd(R1, R1') and 5 | T_l for (14a1, 882g1) at l = " + ells);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<void (*)()> all = {criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                       criterion7, criterion8, criterion9, criterion10, criterion11};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      line(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::cout << (11 - failures) << "/11 criteria pass in " << seconds_since(t0) << " s" << std::endl;
  return failures ? 1 : 0;
}
