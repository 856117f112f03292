#pragma once

// Weight-2 newforms of trivial character: records, a parser for the
// tab-separated data file and validation against Weil bounds and conductors.
//
// File format, one record per line, '#' starts a comment:
//
//   level  label  degree  minpoly  coefficients  curve
//
// minpoly is a comma-separated coefficient list, leading coefficient first,
// or '-' for rational forms. coefficients is "l:c0,c1,...;l:..." with each
// a_l in the power basis of a root theta of minpoly (a single rational for
// rational forms), or '-'. curve is "E=a1,a2,a3,a4,a6" or '-'. Trailing
// columns may be omitted.

#include "nagell/elliptic.hpp"
#include "nagell/number_field.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nagell {

struct NewformRecord {
  int level = 0;
  std::string label;
  std::shared_ptr<const NumberField> field;
  std::optional<WeierstrassCurve> curve;
  std::map<std::int64_t, FieldElem> coeffs;

  bool rational() const { return field->degree() == 1; }
  int degree() const { return field->degree(); }
};

class CoefficientUnavailable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// a_l(f) as an element of the Hecke field. Rational forms with a curve use
/// point counting at good primes; otherwise the stored table is used.
inline FieldElem af_ell(const NewformRecord& f, std::int64_t l) {
  if (f.curve && f.level % l != 0) return FieldElem::rational(f.field, Rational(ap(*f.curve, l)));
  auto it = f.coeffs.find(l);
  if (it == f.coeffs.end())
    throw CoefficientUnavailable("a_" + std::to_string(l) + " unavailable for " + f.label);
  return it->second;
}

struct ParseIssue {
  int line = 0;
  std::string message;
};

class NewformDatabase {
 public:
  bool has_level(int level) const { return by_level_.count(level) != 0; }

  const std::vector<NewformRecord>& newforms(int level) const {
    auto it = by_level_.find(level);
    if (it == by_level_.end()) throw std::out_of_range("level " + std::to_string(level) + " not in database");
    return it->second;
  }

  std::vector<int> levels() const {
    std::vector<int> out;
    for (const auto& [n, v] : by_level_) out.push_back(n);
    return out;
  }

  const NewformRecord* find(const std::string& label) const {
    for (const auto& [n, v] : by_level_)
      for (const auto& r : v)
        if (r.label == label) return &r;
    return nullptr;
  }

  void add(NewformRecord r) { by_level_[r.level].push_back(std::move(r)); }

  /// Reads records from a stream; malformed or invalid lines are reported
  /// and skipped. Levels already present are not overwritten.
  std::vector<ParseIssue> ingest(std::istream& in) {
    std::vector<ParseIssue> issues;
    std::map<int, std::vector<NewformRecord>> fresh;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        NewformRecord r = parse_line(line);
        validate(r);
        fresh[r.level].push_back(std::move(r));
      } catch (const std::exception& e) {
        issues.push_back({lineno, e.what()});
      }
    }
    for (auto& [level, recs] : fresh)
      if (!has_level(level)) by_level_[level] = std::move(recs);
    return issues;
  }

  std::vector<ParseIssue> ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open newform data file " + path);
    return ingest(in);
  }

  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
  }

  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \r\t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \r\t");
    return s.substr(b, e - b + 1);
  }

  static Rational parse_rational(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) throw std::invalid_argument("empty number");
    for (char ch : t)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
        throw std::invalid_argument("bad number '" + t + "'");
    return Rational(t);
  }

  static NewformRecord parse_line(const std::string& line) {
    auto col = split(line, '\t');
    if (col.size() < 4) throw std::invalid_argument("expected at least 4 tab-separated columns");
    NewformRecord r;
    r.level = std::stoi(trim(col[0]));
    if (r.level < 1) throw std::invalid_argument("level must be positive");
    r.label = trim(col[1]);
    if (r.label.empty()) throw std::invalid_argument("empty label");
    const int degree = std::stoi(trim(col[2]));
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    const std::string mp = trim(col[3]);
    if (degree == 1) {
      if (mp != "-" && !mp.empty()) throw std::invalid_argument("rational form must not carry a field polynomial");
      r.field = std::make_shared<NumberField>();
    } else {
      std::vector<Int> desc;
      for (const auto& x : split(mp, ',')) desc.push_back(checked_int(parse_rational(x)));
      std::vector<Int> asc(desc.rbegin(), desc.rend());
      IntPoly m(asc);
      if (m.degree() != degree) throw std::invalid_argument("field polynomial degree does not match");
      r.field = std::make_shared<NumberField>(m);
    }
    if (col.size() > 4 && trim(col[4]) != "-" && !trim(col[4]).empty()) {
      for (const auto& entry : split(trim(col[4]), ';')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("coefficient entry without ':'");
        const std::int64_t l = std::stoll(trim(entry.substr(0, colon)));
        if (l < 2 || !is_prime(Int(l))) throw std::invalid_argument("coefficient index is not prime");
        std::vector<Rational> c;
        for (const auto& x : split(entry.substr(colon + 1), ',')) c.push_back(parse_rational(x));
        if (static_cast<int>(c.size()) > degree) throw std::invalid_argument("too many coordinates");
        if (static_cast<int>(c.size()) < degree) throw std::invalid_argument("too few coordinates");
        r.coeffs.emplace(l, FieldElem(r.field, std::move(c)));
      }
    }
    if (col.size() > 5 && trim(col[5]) != "-" && !trim(col[5]).empty()) {
      const std::string e = trim(col[5]);
      if (e.rfind("E=", 0) != 0) throw std::invalid_argument("curve column must start with E=");
      auto parts = split(e.substr(2), ',');
      if (parts.size() != 5) throw std::invalid_argument("curve needs five coefficients");
      WeierstrassCurve::Coeffs a;
      for (std::size_t i = 0; i < 5; ++i) a[i] = parse_rational(parts[i]);
      if (degree != 1) throw std::invalid_argument("only rational forms carry a curve");
      r.curve = WeierstrassCurve(a);
    }
    if (r.coeffs.empty() && !r.curve) throw std::invalid_argument("record has neither coefficients nor a curve");
    return r;
  }

  /// Weil bound for every stored coefficient under every embedding; for a
  /// record with a curve, conductor equal to the level and traces equal to
  /// the stored coefficients at good primes.
  static void validate(const NewformRecord& r) {
    for (const auto& [l, c] : r.coeffs)
      if (!within_weil_bound(c, l))
        throw std::invalid_argument("a_" + std::to_string(l) + " = " + c.str() + " violates the Weil bound");
    if (r.curve) {
      const Int n = conductor(*r.curve);
      if (n != r.level) throw std::invalid_argument("curve conductor " + n.str() + " differs from level");
      for (const auto& [l, c] : r.coeffs) {
        if (r.level % l == 0) continue;
        if (c.coords()[0] != ap(*r.curve, l))
          throw std::invalid_argument("stored a_" + std::to_string(l) + " disagrees with the curve");
      }
    }
  }

 private:
  std::map<int, std::vector<NewformRecord>> by_level_;
};

/// Levels 14 and 98, built in.
inline const char* embedded_newform_data() {
  return "14\t14a1\t1\t-\t2:-1;3:-2;5:0;7:1;11:0;13:-4;17:6;19:2;23:0;29:-6;31:-4\tE=1,0,1,4,-6\n"
         "98\t98a1\t1\t-\t2:-1;3:2;5:0;7:0;11:0;13:4;17:-6;19:-2;23:0;29:-6;31:4\tE=1,1,0,-25,-111\n"
         "98\t98-i1\t2\t1,-2,-1\t2:1,0;3:-1,1;5:2,-2;7:0,0;11:-2,0;13:0,0;17:-1,1;19:-5,5;23:-4,0;29:2,0;31:6,-6\t-\n";
}

inline NewformDatabase builtin_database() {
  NewformDatabase db;
  std::istringstream in(embedded_newform_data());
  auto issues = db.ingest(in);
  if (!issues.empty()) throw std::logic_error("embedded newform data invalid: " + issues.front().message);
  return db;
}

}  // namespace nagell
