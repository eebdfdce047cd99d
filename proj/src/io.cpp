#include "circunit/io.hpp"

#include "circunit/errors.hpp"

namespace circunit {

namespace {

Json int_array(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

template <class T>
std::string num(T v) {
  return std::to_string(v);
}

Json num_array(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(num(x));
  return a;
}

std::int64_t read_int(const Json& x) { return x.is_string() ? std::stoll(x.get<std::string>()) : x.get<std::int64_t>(); }

Json labeled_words(const std::vector<LabeledWord>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) {
    a.push_back({{"label", g.label}, {"k", num(g.k)}, {"j", num(g.j)}, {"power", num(g.power)}, {"word", g.word.to_string()}});
  }
  return a;
}

}  // namespace

Json to_json(const CycInt& a) { return {{"n", num(a.level().n())}, {"coeffs", int_array(a.coeffs())}}; }

CycInt cycint_from_json(const Json& j) {
  const Level lv(static_cast<int>(read_int(j.at("n"))));
  std::vector<mpz_class> c;
  for (const auto& x : j.at("coeffs")) c.emplace_back(x.is_string() ? x.get<std::string>() : x.dump());
  return CycInt(lv, std::move(c));
}

Json to_json(const UnitWord& w) {
  Json d = Json::object();
  for (const auto& [j, e] : w.d_exps()) d[num(j)] = num(e);
  return {{"alpha", num(w.alpha_exp())}, {"d", d}};
}

UnitWord word_from_json(Level level, const Json& j) {
  std::map<std::int64_t, std::int64_t> exps;
  if (j.contains("d")) {
    for (const auto& [key, val] : j.at("d").items()) exps[std::stoll(key)] += read_int(val);
  }
  return UnitWord(level, j.contains("alpha") ? read_int(j.at("alpha")) : 0, exps);
}

Json to_json(const FunnelPartition& p) {
  Json a_sets = Json::array();
  for (const auto& s : p.A_sets) a_sets.push_back(num_array(s));
  Json b_sets = Json::array();
  for (const auto& s : p.B_sets) b_sets.push_back(num_array(s));
  return {{"n", num(p.level.n())}, {"A", num_array(p.A)}, {"A_sets", a_sets}, {"B_sets", b_sets}};
}

Json to_json(const GeneratorSystem& s) {
  return {{"n", num(s.level.n())}, {"f_gens", labeled_words(s.f_gens)}, {"sqrt_gens", labeled_words(s.sqrt_gens)}};
}

Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"k", num(c.k)}, {"j", num(c.j)}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {{"n", num(r.level.n())}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

Json to_json(const GroupRingElt& u, const std::string& word) {
  return {{"n", num(u.level().n())}, {"word", word}, {"gammas", int_array(u.coeffs())}};
}

Json to_json(const Certificate& c, bool timing) {
  Json gens = Json::array();
  for (const auto& g : c.generators) {
    gens.push_back({{"label", g.label}, {"coords_hex", g.coords.bits().to_hex()}, {"coords", g.coords.render()}});
  }
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.matrix.rows(); ++r) rows.push_back(c.matrix.row(r).to_hex());
  Json out = {{"n", num(c.level.n())},
              {"generators", gens},
              {"matrix_rows_hex", rows},
              {"rank", num(c.rank)},
              {"nullity", num(c.nullity)},
              {"verdict", {{"trivial_only", c.trivial_only}}},
              {"exhaustive", c.exhaustive},
              {"assignments_checked", num(c.assignments_checked)},
              {"exploratory", c.exploratory}};
  if (c.odd_r_subsystem) {
    const Subsystem& s = *c.odd_r_subsystem;
    Json srows = Json::array();
    for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
      std::string bits;
      for (std::size_t col = 0; col < s.matrix.cols(); ++col) bits += s.matrix.get(r, col) ? '1' : '0';
      srows.push_back(bits);
    }
    Json labels = Json::array();
    for (auto p : s.rows) labels.push_back(special_label(c.level, p));
    Json cols = Json::array();
    for (auto col : s.cols) cols.push_back(c.generators[col].label);
    out["odd_r_subsystem"] = {{"rows", labels}, {"cols", cols}, {"matrix", srows}, {"rank", num(s.rank)}};
  }
  out["tool_version"] = c.tool_version;
  out["elapsed_ms"] = timing ? c.elapsed_ms : 0.0;
  return out;
}

}  // namespace circunit
